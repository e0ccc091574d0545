// kron22 — exact Kronecker coefficients for two two-row shapes.
//
// Subcommands: g, gbar, verify, export-fan, counterexamples, stretch.
// Exit codes: 0 success, 1 user error, 2 internal inconsistency.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include "kron22/fan_export.hpp"
#include "kron22/kron.hpp"
#include "kron22/stretch.hpp"

using namespace kron22;
using Json = nlohmann::ordered_json;

namespace {

struct GlobalOptions {
  std::string engine = "chamber";
  std::string format = "table";
  std::string output;
  std::string cache_dir;
  long long cap = 20;
  int workers = 1;
};

std::optional<Oracle>& oracle_slot() {
  static std::optional<Oracle> slot;
  return slot;
}

Oracle& oracle_for(const GlobalOptions& opt) {
  if (!oracle_slot()) {
    OracleConfig cfg;
    cfg.cap = opt.cap;
    if (!opt.cache_dir.empty()) cfg.cache_dir = opt.cache_dir;
    oracle_slot().emplace(std::move(cfg));
  }
  return *oracle_slot();
}

void emit(const GlobalOptions& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output, std::ios::binary | std::ios::trunc);
  if (!out) throw std::invalid_argument("cannot open output file '" + opt.output + "'");
  out << text;
}

std::pair<long long, long long> parse_box(const std::string& box) {
  long long lo = 0, hi = 0;
  size_t colon = box.find(':');
  try {
    if (colon == std::string::npos) {
      hi = std::stoll(box);
    } else {
      lo = std::stoll(box.substr(0, colon));
      hi = std::stoll(box.substr(colon + 1));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("bad --box '" + box + "' (expected N or LO:HI)");
  }
  if (lo < 0 || hi < lo) throw std::invalid_argument("bad --box: bounds must be 0 <= lo <= hi");
  return {lo, hi};
}

Json index_json(const KronIndex& idx) {
  return Json{{"n", idx.n}, {"r", idx.r}, {"s", idx.s}, {"g1", idx.g1}, {"g2", idx.g2}};
}

int cmd_g(const GlobalOptions& opt, const std::string& ls, const std::string& ms,
          const std::string& ns, bool explain) {
  Partition lambda = parse_partition(ls), mu = parse_partition(ms), nu = parse_partition(ns);
  Engine engine = parse_engine(opt.engine);
  Oracle* oracle = engine == Engine::Oracle ? &oracle_for(opt) : nullptr;
  long long value = kron_full(lambda, mu, nu, engine, oracle);

  Json explain_doc;
  std::string explain_text;
  if (explain) {
    KronIndexOrZero norm = to_kron_index(lambda, mu, nu);
    if (std::holds_alternative<ZeroSignal>(norm)) {
      explain_text = "  normalization leaves the two-two-row family: coefficient is 0\n";
      explain_doc["normalized"] = nullptr;
    } else {
      KronIndex idx = std::get<KronIndex>(norm);
      Engine term_engine = engine == Engine::Oracle ? Engine::Chamber : engine;
      TwoRowTerms terms = kron_two_row_terms(idx, term_engine, nullptr);
      const auto& catalog = ChamberCatalog::standard();
      std::string sides = "outside support cone";
      if (in_delta_prime(terms.plain)) {
        int c = catalog.chambers_containing(terms.plain).front();
        sides = catalog.chambers()[static_cast<size_t>(c)].sides_string();
      }
      explain_text = "  normalized index " + to_string(idx) + "\n  chamber sides {" + sides +
                     "}\n  reduced terms " + to_string(terms.plain) + "=" +
                     std::to_string(terms.value_plain) + "  -" + to_string(terms.drop_mid) + "=" +
                     std::to_string(terms.value_drop_mid) + "  +" + to_string(terms.drop_low) +
                     "=" + std::to_string(terms.value_drop_low) + "\n";
      explain_doc["normalized"] = index_json(idx);
      explain_doc["chamber_sides"] = sides;
      explain_doc["reduced_terms"] = Json::array();
      for (auto [h, v] : {std::pair{terms.plain, terms.value_plain},
                          {terms.drop_mid, terms.value_drop_mid},
                          {terms.drop_low, terms.value_drop_low}})
        explain_doc["reduced_terms"].push_back(
            Json{{"r", h.r}, {"s", h.s}, {"g1", h.g1}, {"g2", h.g2}, {"value", v}});
    }
  }

  if (opt.format == "json") {
    Json doc{{"schema_version", 1},
             {"kind", "kron-value"},
             {"lambda", lambda.parts()},
             {"mu", mu.parts()},
             {"nu", nu.parts()},
             {"engine", opt.engine},
             {"value", value}};
    if (explain) doc["explain"] = explain_doc;
    emit(opt, doc.dump(2) + "\n");
  } else {
    emit(opt, std::to_string(value) + "\n" + explain_text);
  }
  return 0;
}

int cmd_gbar(const GlobalOptions& opt, long long r, long long s, long long g1, long long g2) {
  ReducedIndex h{r, s, g1, g2};
  Engine engine = parse_engine(opt.engine);
  long long value =
      reduced_engine_value(h, engine, engine == Engine::Oracle ? &oracle_for(opt) : nullptr);
  if (opt.format == "json") {
    Json doc{{"schema_version", 1},
             {"kind", "reduced-kron-value"},
             {"index", Json{{"r", r}, {"s", s}, {"g1", g1}, {"g2", g2}}},
             {"engine", opt.engine},
             {"value", value}};
    emit(opt, doc.dump(2) + "\n");
  } else {
    emit(opt, std::to_string(value) + "\n");
  }
  return 0;
}

int cmd_verify(const GlobalOptions& opt, const std::string& box, const std::string& engines_csv,
               const std::string& catalog_file) {
  auto [lo, hi] = parse_box(box);

  std::optional<ChamberCatalog> file_catalog;
  if (!catalog_file.empty()) {
    std::ifstream in(catalog_file, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read catalog file '" + catalog_file + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    file_catalog.emplace(import_catalog_json(text));
  }

  std::vector<std::string> engines;
  for (size_t pos = 0; pos <= engines_csv.size() && !engines_csv.empty();) {
    size_t comma = engines_csv.find(',', pos);
    engines.push_back(
        engines_csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (engines.size() < 2)
    throw std::invalid_argument("--engines must name at least two engines to compare");
  bool uses_oracle = false;
  for (const auto& e : engines) {
    parse_engine(e);
    uses_oracle |= (e == "oracle");
  }
  if (uses_oracle && hi > opt.cap)
    throw std::invalid_argument("--box " + std::to_string(hi) + " exceeds --cap " +
                                std::to_string(opt.cap) + " required by the oracle engine");

  auto catalog_value = [&](const KronIndex& idx) {
    auto t = two_row_reduced_indices(idx);
    return file_catalog->reduced_value(t[0]) - file_catalog->reduced_value(t[1]) +
           file_catalog->reduced_value(t[2]);
  };

  std::string stream_text;
  long long checked = 0, mismatches = 0;
  for (long long n = lo; n <= hi; ++n) {
    std::vector<KronIndex> idxs = valid_indices_of_weight(n);
    std::vector<std::vector<long long>> values(engines.size(),
                                               std::vector<long long>(idxs.size(), 0));
    if (uses_oracle) oracle_for(opt).kronecker_many(n, {});  // warm the table before threading

    auto run_range = [&](size_t begin, size_t end) {
      for (size_t i = begin; i < end; ++i)
        for (size_t e = 0; e < engines.size(); ++e) {
          Engine engine = parse_engine(engines[e]);
          if (engine == Engine::Chamber && file_catalog)
            values[e][i] = catalog_value(idxs[i]);
          else
            values[e][i] = kron_two_row(idxs[i], engine,
                                        engine == Engine::Oracle ? &oracle_for(opt) : nullptr);
        }
    };
    int workers = std::max(1, opt.workers);
    if (workers == 1 || idxs.size() < 64) {
      run_range(0, idxs.size());
    } else {
      std::vector<std::thread> pool;
      size_t chunk =
          (idxs.size() + static_cast<size_t>(workers) - 1) / static_cast<size_t>(workers);
      for (int w = 0; w < workers; ++w) {
        size_t begin = static_cast<size_t>(w) * chunk;
        size_t end = std::min(idxs.size(), begin + chunk);
        if (begin < end) pool.emplace_back(run_range, begin, end);
      }
      for (auto& t : pool) t.join();
    }

    for (size_t i = 0; i < idxs.size(); ++i) {
      ++checked;
      bool same = true;
      for (size_t e = 1; e < engines.size(); ++e) same &= (values[e][i] == values[0][i]);
      if (same) continue;
      ++mismatches;
      if (opt.format == "json") {
        Json rec{{"schema_version", 1}, {"kind", "verify-mismatch"}, {"index", index_json(idxs[i])}};
        Json vals;
        for (size_t e = 0; e < engines.size(); ++e) vals[engines[e]] = values[e][i];
        rec["values"] = vals;
        stream_text += rec.dump() + "\n";
      } else {
        stream_text += "mismatch " + to_string(idxs[i]) + ":";
        for (size_t e = 0; e < engines.size(); ++e)
          stream_text += " " + engines[e] + "=" + std::to_string(values[e][i]);
        stream_text += "\n";
      }
    }
  }

  if (opt.format == "json") {
    Json summary{{"schema_version", 1},
                 {"kind", "verify-report"},
                 {"box", Json{{"n_min", lo}, {"n_max", hi}}},
                 {"engines", engines},
                 {"checked", checked},
                 {"mismatches", mismatches}};
    stream_text += summary.dump() + "\n";
  } else {
    stream_text += "checked " + std::to_string(checked) + " indices, " +
                   std::to_string(mismatches) + " mismatches\n";
  }
  emit(opt, stream_text);
  return mismatches == 0 ? 0 : 2;
}

int cmd_export_fan(const GlobalOptions& opt) {
  emit(opt, export_catalog_json(ChamberCatalog::standard()));
  return 0;
}

int cmd_counterexamples(const GlobalOptions& opt, const std::string& box) {
  auto [lo, hi] = parse_box(box);
  Oracle& oracle = oracle_for(opt);
  Engine engine = parse_engine(opt.engine);
  if (engine == Engine::Oracle) engine = Engine::Chamber;
  auto certs = find_saturation_counterexamples(lo, hi, oracle, engine);
  emit(opt, counterexamples_json(certs, lo, hi));
  return 0;
}

int cmd_stretch(const GlobalOptions& opt, const std::string& ls, const std::string& ms,
                const std::string& ns, int scale_max) {
  Partition lambda = parse_partition(ls), mu = parse_partition(ms), nu = parse_partition(ns);
  TripleReport report = validate_triple(lambda, mu, nu);
  if (!report.ok()) {
    std::string msg = "invalid triple:";
    for (const auto& f : report.failures) msg += " " + f + ";";
    throw std::invalid_argument(msg);
  }
  KronIndexOrZero norm = to_kron_index(lambda, mu, nu);
  if (std::holds_alternative<ZeroSignal>(norm))
    throw std::invalid_argument(
        "stretch: the triple normalizes out of the two-two-row family (coefficient is 0)");
  KronIndex idx = std::get<KronIndex>(norm);
  Engine engine = parse_engine(opt.engine);
  if (engine == Engine::Oracle) engine = Engine::Chamber;
  auto result = stretch_profile(idx, scale_max, engine);

  if (opt.format == "json") {
    Json doc{{"schema_version", 1}, {"kind", "stretch-profile"}, {"index", index_json(idx)}};
    doc["samples"] = Json::array();
    if (const auto* profile = std::get_if<StretchProfile>(&result)) {
      for (const auto& s : profile->samples)
        doc["samples"].push_back(Json{{"scale", s.scale}, {"value", s.value}});
      auto nf = profile->fitted.normal_form();
      doc["fit"] = Json{{"status", "ok"}};
      if (nf)
        doc["fit"]["quasipolynomial"] = Json{
            {"quadratic", nf->quadratic}, {"linear", nf->linear}, {"constants", nf->constants}};
    } else {
      const auto& failure = std::get<FitFailure>(result);
      for (const auto& s : stretch_samples(idx, scale_max, engine))
        doc["samples"].push_back(Json{{"scale", s.scale}, {"value", s.value}});
      doc["fit"] = Json{{"status", "inconsistent"},
                        {"parity_class", failure.parity},
                        {"reason", failure.reason}};
    }
    emit(opt, doc.dump(2) + "\n");
  } else {
    std::string text = "index " + to_string(idx) + "\n";
    if (const auto* profile = std::get_if<StretchProfile>(&result)) {
      for (const auto& s : profile->samples)
        text += "  N=" + std::to_string(s.scale) + "  g=" + std::to_string(s.value) + "\n";
      if (auto nf = profile->fitted.normal_form()) {
        text += "fit: value(N) = (" + std::to_string(nf->quadratic[0]) + "*N^2 + 2*" +
                std::to_string(nf->linear[0]) + "*N + M)/4 with M(even)=" +
                std::to_string(nf->constants[0]) + ", M(odd)=" + std::to_string(nf->constants[1]) +
                "\n";
      }
    } else {
      text += "fit failed: " + std::get<FitFailure>(result).reason + "\n";
    }
    emit(opt, text);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Kronecker coefficients indexed by two two-row shapes"};
  app.require_subcommand(1);
  GlobalOptions opt;
  if (const char* env = std::getenv("KRON22_CACHE_DIR"); env && *env) opt.cache_dir = env;

  auto add_common = [&](CLI::App* cmd, bool with_engine = true) {
    if (with_engine)
      cmd->add_option("--engine", opt.engine, "Engine: count|chamber|oracle")
          ->default_val("chamber");
    cmd->add_option("--format", opt.format, "Output format: table|json")->default_val("table");
    cmd->add_option("--output,-o", opt.output, "Write output to a file instead of stdout");
    cmd->add_option("--cap", opt.cap, "Oracle symmetric-group size ceiling")->default_val(20);
    cmd->add_option("--cache-dir", opt.cache_dir,
                    "Character table cache directory (default: KRON22_CACHE_DIR or user cache)");
  };

  std::string lambda_arg, mu_arg, nu_arg, box = "14", engines_csv = "count,chamber,oracle";
  std::string catalog_file;
  long long r = 0, s = 0, g1 = 0, g2 = 0;
  int scale_max = 12;
  bool explain = false;

  CLI::App* g_cmd = app.add_subcommand("g", "One Kronecker coefficient g_{mu,nu}^{lambda}");
  g_cmd->add_option("lambda", lambda_arg, "Partition, comma separated (e.g. 2,2)")->required();
  g_cmd->add_option("mu", mu_arg, "Partition with at most two parts")->required();
  g_cmd->add_option("nu", nu_arg, "Partition with at most two parts")->required();
  g_cmd->add_flag("--explain", explain, "Show the chamber and the three reduced terms");
  add_common(g_cmd);

  CLI::App* gbar_cmd =
      app.add_subcommand("gbar", "One reduced coefficient gbar_{(r)(s)}^{(g1,g2)}");
  gbar_cmd->add_option("r", r)->required();
  gbar_cmd->add_option("s", s)->required();
  gbar_cmd->add_option("g1", g1)->required();
  gbar_cmd->add_option("g2", g2)->required();
  add_common(gbar_cmd);

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Cross-check engines on every valid index in a box");
  verify_cmd->add_option("--box", box, "Weight range: N or LO:HI")->default_val("14");
  verify_cmd->add_option("--engines", engines_csv, "Comma-separated engines to compare")
      ->default_val("count,chamber,oracle");
  verify_cmd->add_option("--catalog", catalog_file,
                         "Load the chamber engine from an exported catalog JSON file");
  verify_cmd->add_option("--workers", opt.workers, "Worker threads for the sweep")->default_val(1);
  add_common(verify_cmd, false);

  CLI::App* export_cmd = app.add_subcommand("export-fan", "Export the 26-chamber catalog as JSON");
  add_common(export_cmd, false);

  CLI::App* ce_cmd = app.add_subcommand(
      "counterexamples", "Sweep for saturation counterexamples (g=0 but g(2*idx)>0)");
  ce_cmd->add_option("--box", box, "Weight range: N or LO:HI")->default_val("12");
  add_common(ce_cmd);

  CLI::App* stretch_cmd =
      app.add_subcommand("stretch", "Stretching function samples and quasipolynomial fit");
  stretch_cmd->add_option("lambda", lambda_arg)->required();
  stretch_cmd->add_option("mu", mu_arg)->required();
  stretch_cmd->add_option("nu", nu_arg)->required();
  stretch_cmd->add_option("--nmax", scale_max, "Largest stretching factor")->default_val(12);
  add_common(stretch_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (g_cmd->parsed()) return cmd_g(opt, lambda_arg, mu_arg, nu_arg, explain);
    if (gbar_cmd->parsed()) return cmd_gbar(opt, r, s, g1, g2);
    if (verify_cmd->parsed()) return cmd_verify(opt, box, engines_csv, catalog_file);
    if (export_cmd->parsed()) return cmd_export_fan(opt);
    if (ce_cmd->parsed()) return cmd_counterexamples(opt, box);
    if (stretch_cmd->parsed()) return cmd_stretch(opt, lambda_arg, mu_arg, nu_arg, scale_max);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 2;
  } catch (const std::overflow_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
