#pragma once

#include <string>

#include "kron22/chambers.hpp"

namespace kron22 {

// Versioned JSON document for a chamber catalog: side sets, walls, closed-cell
// inequalities, and each chamber's quasipolynomial in the quarter-integer
// normal form.  The byte output is deterministic, and export(import(x)) == x
// for any exported document.
std::string export_catalog_json(const ChamberCatalog& catalog);

// Rebuilds a catalog from an exported document.  The result evaluates through
// the stored quasipolynomials.  Throws std::invalid_argument on malformed or
// version-mismatched input.
ChamberCatalog import_catalog_json(const std::string& text);

}  // namespace kron22
