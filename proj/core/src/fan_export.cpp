#include "kron22/fan_export.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

namespace kron22 {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

Json wall_to_json(const Wall& wall) {
  Json out;
  if (wall.kind == Wall::Kind::SwapRS) {
    out["type"] = "swap-rs";
  } else {
    out["type"] = "insert";
    out["inserted"] = wall.inserted;
    out["pred"] = wall.pred;
    out["succ"] = wall.succ;
  }
  return out;
}

Wall wall_from_json(const Json& j) {
  Wall wall;
  std::string type = j.at("type").get<std::string>();
  if (type == "swap-rs") {
    wall.kind = Wall::Kind::SwapRS;
  } else if (type == "insert") {
    wall.kind = Wall::Kind::Insert;
    wall.inserted = j.at("inserted").get<int>();
    wall.pred = j.at("pred").get<int>();
    wall.succ = j.at("succ").get<int>();
  } else {
    throw std::invalid_argument("catalog import: unknown wall type '" + type + "'");
  }
  return wall;
}

}  // namespace

std::string export_catalog_json(const ChamberCatalog& catalog) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = "chamber-catalog";
  doc["variables"] = Json::array({"r", "s", "g1", "g2"});
  doc["value_convention"] =
      "value = (sum(quadratic[q]*monomial[q]) + 2*sum(linear[i]*var[i]) + constants[coset]) / 4; "
      "coset bit i is set iff var[i] is odd";
  doc["quadratic_monomials"] = Json::array(
      {"r*r", "r*s", "r*g1", "r*g2", "s*s", "s*g1", "s*g2", "g1*g1", "g1*g2", "g2*g2"});

  doc["delta_prime_facets"] = Json::array();
  for (const DeltaPrimeFacet& facet : delta_prime_facets()) {
    Json f;
    f["name"] = facet.name;
    f["coeffs"] = facet.form.c;
    f["sign"] = facet.sign > 0 ? ">=0" : "<=0";
    f["chambers"] = facet.chambers;
    f["vanishing_offsets"] = facet.vanishing_offsets;
    doc["delta_prime_facets"].push_back(std::move(f));
  }

  doc["chambers"] = Json::array();
  for (const Chamber& c : catalog.chambers()) {
    Json jc;
    jc["sides"] = c.sides;
    jc["neighbors"] = Json::array();
    for (const Chamber::Neighbor& nb : c.neighbors) {
      Json jn;
      jn["sides"] = catalog.chambers()[static_cast<size_t>(nb.chamber)].sides;
      jn["wall"] = wall_to_json(nb.wall);
      jc["neighbors"].push_back(std::move(jn));
    }
    jc["inequalities"] = Json::array();
    for (const ChamberInequality& ineq : c.inequalities) {
      Json ji;
      ji["coeffs"] = ineq.form.c;
      ji["label"] = ineq.label;
      jc["inequalities"].push_back(std::move(ji));
    }
    auto nf = c.qp.normal_form();
    if (!nf)
      throw std::logic_error("export_catalog_json: chamber quasipolynomial has no normal form");
    jc["quasipolynomial"] = Json{{"quadratic", nf->quadratic},
                                 {"linear", nf->linear},
                                 {"constants", nf->constants}};
    doc["chambers"].push_back(std::move(jc));
  }
  return doc.dump(2) + "\n";
}

ChamberCatalog import_catalog_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("catalog import: not valid JSON: ") + e.what());
  }
  try {
    if (doc.at("schema_version").get<int>() != kSchemaVersion)
      throw std::invalid_argument("catalog import: unsupported schema_version");
    if (doc.at("kind").get<std::string>() != "chamber-catalog")
      throw std::invalid_argument("catalog import: wrong document kind");

    const Json& jchambers = doc.at("chambers");
    std::map<std::vector<int>, int> id_of;
    std::vector<Chamber> chambers(jchambers.size());
    for (size_t i = 0; i < jchambers.size(); ++i) {
      chambers[i].id = static_cast<int>(i);
      chambers[i].sides = jchambers[i].at("sides").get<std::vector<int>>();
      id_of[chambers[i].sides] = static_cast<int>(i);
    }
    for (size_t i = 0; i < jchambers.size(); ++i) {
      for (const Json& jn : jchambers[i].at("neighbors")) {
        auto sides = jn.at("sides").get<std::vector<int>>();
        auto it = id_of.find(sides);
        if (it == id_of.end())
          throw std::invalid_argument("catalog import: neighbor side set not in document");
        chambers[i].neighbors.push_back({it->second, wall_from_json(jn.at("wall"))});
      }
      for (const Json& ji : jchambers[i].at("inequalities")) {
        ChamberInequality ineq;
        auto coeffs = ji.at("coeffs").get<std::vector<long long>>();
        if (coeffs.size() != 4)
          throw std::invalid_argument("catalog import: inequality needs 4 coefficients");
        std::copy(coeffs.begin(), coeffs.end(), ineq.form.c.begin());
        ineq.label = ji.at("label").get<std::string>();
        chambers[i].inequalities.push_back(std::move(ineq));
      }
      const Json& jq = jchambers[i].at("quasipolynomial");
      Quasipolynomial::NormalForm nf;
      nf.quadratic = jq.at("quadratic").get<std::vector<long long>>();
      nf.linear = jq.at("linear").get<std::vector<long long>>();
      nf.constants = jq.at("constants").get<std::vector<long long>>();
      chambers[i].qp = Quasipolynomial::from_normal_form(4, nf);
    }
    return ChamberCatalog(std::move(chambers), ChamberCatalog::FromParts{});
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("catalog import: schema mismatch: ") + e.what());
  }
}

}  // namespace kron22
