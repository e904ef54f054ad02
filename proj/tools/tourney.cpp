#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tourney/analysis.hpp"
#include "tourney/canonical.hpp"
#include "tourney/census.hpp"
#include "tourney/constructions.hpp"
#include "tourney/diagnostics.hpp"
#include "tourney/parallel.hpp"
#include "tourney/search.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace tourney;

constexpr const char* kVersion = "0.1.0";

json json_count(i128 v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return to_string(v);
}

json json_rational(const Rational& r) {
  return json{{"exact", r.str()}, {"approx", r.approx()}};
}

json json_density(const DensityEntry& e) {
  return json{{"exact", e.exact.str()}, {"approx", e.approx}};
}

json json_tournament(const Tournament& t) {
  return json{{"n", t.size()}, {"bits", t.to_bits()}};
}

json census_json(const Tournament& t, const Census& c) {
  json counts{{"tt3", json_count(c.tt3)}, {"c3", json_count(c.c3)}};
  DensityReport d = densities(c);
  json dens{{"tt3", json_density(d.tt3)}, {"c3", json_density(d.c3)}};
  if (c.has_quads) {
    counts["tt4"] = json_count(c.tt4);
    counts["c3plus"] = json_count(c.c3plus);
    counts["c3minus"] = json_count(c.c3minus);
    counts["c4"] = json_count(c.c4);
    dens["tt4"] = json_density(d.tt4);
    dens["c3plus"] = json_density(d.c3plus);
    dens["c3minus"] = json_density(d.c3minus);
    dens["c4"] = json_density(d.c4);
  }
  json out{{"n", t.size()}, {"counts", counts}, {"densities", dens}};
  if (c.has_quads) out["identities_ok"] = lifting_identities_hold(c);
  return out;
}

// Primary output is everything under "result"; identical configurations
// produce byte-identical "result" subtrees. Timing lives in "meta" only.
struct Emitter {
  std::string command;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void emit(const json& result, int threads) const {
    json doc;
    doc["tool"] = "tourney";
    doc["version"] = kVersion;
    doc["command"] = command;
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    doc["meta"] = json{{"threads", resolve_threads(threads)},
                       {"elapsed_ms", elapsed}};
    doc["result"] = result;
    std::cout << doc.dump(2) << "\n";
  }
};

PatternId parse_pattern_or_throw(const std::string& name,
                                 const std::string& pattern_file) {
  if (!pattern_file.empty()) {
    auto ts = read_tour_file(pattern_file);
    if (ts.empty()) throw MalformedInputError(pattern_file + ": no tournaments");
    return PatternId::custom(ts.front());
  }
  auto p = PatternId::parse(name);
  if (!p) throw MalformedInputError("unknown pattern '" + name + "'");
  return *p;
}

int run_construct(const std::string& kind, int n, std::uint64_t seed,
                  const std::string& alpha_str, int base_cutoff,
                  const std::string& out_path, int threads, Emitter& em) {
  json result;
  result["kind"] = kind;
  result["n"] = n;
  std::vector<Tournament> produced;
  if (kind == "transitive") {
    produced.push_back(transitive(n));
  } else if (kind == "carousel") {
    produced.push_back(carousel(n));
  } else if (kind == "carousel-class") {
    auto members = carousel_class(n);
    json arr = json::array();
    for (const Tournament& t : members) arr.push_back(json_tournament(t));
    result["members"] = arr;
    result["member_count"] = members.size();
    produced = std::move(members);
  } else if (kind == "random") {
    result["seed"] = seed;
    produced.push_back(random_tournament(n, seed));
  } else if (kind == "iterated") {
    BlowupSpec spec;
    spec.n = n;
    spec.seed = seed;
    spec.base_cutoff = base_cutoff;
    if (alpha_str != "auto") spec.alpha = std::stod(alpha_str);
    spec.validate();
    result["seed"] = seed;
    result["alpha"] = alpha_str;
    result["alpha_resolved"] = spec.resolved_alpha();
    result["base_cutoff"] = base_cutoff;
    BlowupLayout layout = blowup_layout(spec);
    json blocks = json::array();
    for (const auto& b : layout.blocks)
      blocks.push_back(json{{"start", b.start},
                            {"len", b.len},
                            {"random", b.random},
                            {"level", b.level}});
    result["blocks"] = blocks;
    produced.push_back(iterated_blowup(spec));
    json levels = json::array();
    for (int lv : layout.level_of_vertex) levels.push_back(lv);
    if (!out_path.empty()) {
      std::string sidecar = out_path + ".levels.json";
      std::ofstream side(sidecar);
      if (!side) throw MalformedInputError("cannot write " + sidecar);
      side << json{{"n", n}, {"alpha", spec.resolved_alpha()}, {"levels", levels}}.dump(2)
           << "\n";
      result["sidecar"] = sidecar;
    } else {
      result["levels"] = levels;
    }
  } else {
    throw MalformedInputError("unknown construction kind '" + kind + "'");
  }

  if (kind != "carousel-class" && !produced.empty())
    result["tournament"] = json_tournament(produced.front());
  if (!out_path.empty()) {
    write_tour_file(out_path, produced);
    result["output"] = out_path;
  }
  em.emit(result, threads);
  return 0;
}

int run_count(const std::string& input, const std::string& method, int threads,
              Emitter& em) {
  auto ts = read_tour_file(input);
  if (ts.empty()) throw MalformedInputError(input + ": no tournaments");
  auto one = [&](const Tournament& t) {
    Census c = method == "brute" ? census_bruteforce(t) : census_fast(t, threads);
    json j = census_json(t, c);
    j["method"] = method;
    return j;
  };
  if (ts.size() == 1) {
    em.emit(one(ts.front()), threads);
  } else {
    json arr = json::array();
    for (const Tournament& t : ts) arr.push_back(one(t));
    em.emit(json{{"tournaments", arr}}, threads);
  }
  return 0;
}

int run_maximize(const PatternId& pattern, int n, int n_hi, bool local,
                 const LocalSearchOptions& opts, const std::string& witness_dir,
                 const std::string& format, int threads, Emitter& em) {
  if (n_hi > n) {
    auto rows = max_table(pattern, n, n_hi, threads);
    if (format == "csv") {
      std::cout << "n,best_count,density_exact,density_approx\n";
      for (const auto& r : rows)
        std::cout << r.n << "," << to_string(r.best_count) << ","
                  << r.density.str() << "," << r.density.approx()
                  << "\n";
      return 0;
    }
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back(json{{"n", r.n},
                         {"best_count", json_count(r.best_count)},
                         {"density", json_rational(r.density)}});
    em.emit(json{{"pattern", pattern.name()}, {"rows", arr}}, threads);
    return 0;
  }

  SearchResult r = local ? local_search(pattern, n, opts, threads)
                         : exhaustive_max(pattern, n, threads);
  json result;
  result["pattern"] = pattern.name();
  result["n"] = n;
  result["mode"] = local ? "local" : "exhaustive";
  result["best_count"] = json_count(r.best_count);
  result["density"] = json_rational(r.density());
  std::vector<Tournament> witnesses;
  if (r.mode == SearchMode::Exhaustive) {
    json arr = json::array();
    for (const CanonicalForm& cf : r.maximizers) {
      Tournament t = from_canonical(cf);
      arr.push_back(t.to_bits());
      witnesses.push_back(std::move(t));
    }
    result["maximizer_count"] = r.maximizers.size();
    result["maximizers"] = arr;
  } else {
    result["witness"] = json_tournament(*r.witness);
    witnesses.push_back(*r.witness);
    result["stats"] = json{{"restarts", r.stats->restarts},
                           {"improving_moves", r.stats->improving_moves},
                           {"plateau_moves", r.stats->plateau_moves},
                           {"best_restart", r.stats->best_restart}};
  }
  if (!witness_dir.empty()) {
    std::filesystem::create_directories(witness_dir);
    std::vector<std::string> files;
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
      std::string path = witness_dir + "/maximizer_" + std::to_string(n) + "_" +
                         std::to_string(i) + ".tour";
      write_tour_file(path, {&witnesses[i], 1});
      files.push_back(path);
    }
    json arr = json::array();
    for (const auto& f : files) arr.push_back(f);
    result["witness_files"] = arr;
  }
  em.emit(result, threads);
  return 0;
}

int run_enumerate(int n, bool count_only, const std::string& out_path, int threads,
                  Emitter& em) {
  auto reps = enumerate_tournaments(n, threads);
  json result;
  result["n"] = n;
  result["class_count"] = reps.size();
  if (!count_only) {
    json arr = json::array();
    for (const Tournament& t : reps) arr.push_back(t.to_bits());
    result["tournaments"] = arr;
  }
  if (!out_path.empty()) {
    write_tour_file(out_path, reps);
    result["output"] = out_path;
  }
  em.emit(result, threads);
  return 0;
}

int run_diagnose(const std::string& input, std::optional<double> tol,
                 const std::string& format, int threads, Emitter& em) {
  auto ts = read_tour_file(input);
  if (ts.empty()) throw MalformedInputError(input + ": no tournaments");
  const Tournament& t = ts.front();
  DegreeHistogram h = degree_report(t);
  if (format == "csv") {
    std::cout << "bin_lo,count\n";
    for (std::size_t b = 0; b < h.bin_counts.size(); ++b)
      std::cout << (static_cast<double>(b) * h.bin_width) << "," << h.bin_counts[b]
                << "\n";
    return 0;
  }
  Census c = census_fast(t, threads);
  json result = census_json(t, c);

  QRScore qr = qr_score(t, tol, threads);
  result["qr"] = json{{"deviations",
                       json{{"c3", json_rational(qr.c3_dev)},
                            {"c3plus", json_rational(qr.c3plus_dev)},
                            {"c4", json_rational(qr.c4_dev)},
                            {"c3minus", json_rational(qr.c3minus_dev)}}},
                      {"tol", qr.tol},
                      {"quasirandom", qr.quasirandom}};

  json bands{{"low_forbidden", h.band_counts[0]},
             {"low_allowed", h.band_counts[1]},
             {"mid_forbidden", h.band_counts[2]},
             {"high_allowed", h.band_counts[3]}};
  json hist = json::array();
  for (int b : h.bin_counts) hist.push_back(b);
  result["degrees"] = json{{"bin_width", h.bin_width},
                           {"bands", bands},
                           {"outside_forbidden_fraction", h.outside_forbidden_fraction()},
                           {"histogram", hist}};

  Partition p = detect_cut(t);
  json violations = json::array();
  for (auto [x, y] : p.cut_violations) violations.push_back(json::array({x, y}));
  result["cut"] = json{{"threshold", p.threshold.str()},
                       {"high_size", p.high.size()},
                       {"low_size", p.low.size()},
                       {"low_fraction", json_rational(p.low_fraction)},
                       {"below_six_sevenths", p.low_fraction_below_six_sevenths()},
                       {"violation_count", p.cut_violations.size()},
                       {"violations", violations}};

  InequalityAudit a = audit_inequalities(t, tol, threads);
  result["inequalities"] = json{{"main_combo", json_rational(a.main_combo)},
                                {"main_margin", json_rational(a.main_margin)},
                                {"main_within", a.main_within},
                                {"c3plus_density", json_rational(a.c3plus_density)},
                                {"upper_margin", json_rational(a.upper_margin)},
                                {"upper_within", a.upper_within},
                                {"tol", a.tol}};
  em.emit(result, threads);
  return 0;
}

int run_optimize_alpha(double tol, Emitter& em) {
  AlphaResult r = optimize_alpha(tol);
  em.emit(json{{"alpha_star", r.alpha_star},
               {"value", r.value},
               {"closed_alpha", r.closed_alpha},
               {"closed_value", r.closed_value},
               {"iterations", r.iterations},
               {"bracket_width", r.bracket_width},
               {"tol", tol}},
          1);
  return 0;
}

int run_verify(const std::string& suite, int n_max, int threads, Emitter& em) {
  if (suite != "theorem1")
    throw MalformedInputError("unknown verify suite '" + suite + "'");
  auto rows = theorem1_verify(n_max, threads);
  json arr = json::array();
  bool all = true;
  for (const auto& r : rows) {
    arr.push_back(json{{"n", r.n},
                       {"formula", json_count(r.formula)},
                       {"best_count", json_count(r.best_count)},
                       {"count_match", r.count_match},
                       {"set_match", r.set_match},
                       {"maximizer_count", r.maximizer_count},
                       {"class_size", r.class_size}});
    all = all && r.count_match && r.set_match;
  }
  em.emit(json{{"suite", suite}, {"n_max", n_max}, {"rows", arr}, {"all_pass", all}},
          threads);
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact induced-subtournament censuses, extremal constructions, "
               "search, and structure audits"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = auto, env TOURNEY_THREADS)");

  // construct
  auto* construct = app.add_subcommand("construct", "generate a tournament");
  std::string kind;
  construct->add_option("kind", kind, "transitive|carousel|carousel-class|random|iterated")
      ->required();
  int c_n = 0;
  construct->add_option("--n", c_n, "vertex count")->required();
  std::uint64_t c_seed = 1;
  construct->add_option("--seed", c_seed, "random seed");
  std::string c_alpha = "auto";
  construct->add_option("--alpha", c_alpha, "blow-up mix in [0,1) or 'auto'");
  int c_cutoff = 4;
  construct->add_option("--base-cutoff", c_cutoff, "blow-up recursion cutoff");
  std::string c_out;
  construct->add_option("-o,--output", c_out, "write tour/1 file");

  // count
  auto* count = app.add_subcommand("count", "exact 3/4-vertex census of a tour/1 file");
  std::string n_input;
  count->add_option("--input", n_input, "tour/1 file")->required();
  std::string n_method = "fast";
  count->add_option("--method", n_method, "fast|brute")
      ->check(CLI::IsMember({"fast", "brute"}));

  // maximize
  auto* maximize = app.add_subcommand("maximize", "maximize induced copies of a pattern");
  std::string m_pattern = "C4", m_pattern_file;
  maximize->add_option("--pattern", m_pattern, "TT3|C3|TT4|C3+|C3-|C4");
  maximize->add_option("--pattern-file", m_pattern_file, "custom pattern (tour/1, n <= 8)");
  int m_n = 0;
  maximize->add_option("--n", m_n, "host size")->required();
  int m_n_hi = 0;
  maximize->add_option("--n-hi", m_n_hi, "table mode: exhaustive maxima for n..n-hi");
  bool m_exhaustive = false, m_local = false;
  maximize->add_flag("--exhaustive", m_exhaustive, "exact search over all classes");
  maximize->add_flag("--local", m_local, "seeded hill climbing");
  std::uint64_t m_seed = 1;
  maximize->add_option("--seed", m_seed, "local search seed");
  int m_restarts = 20;
  maximize->add_option("--restarts", m_restarts, "local search restarts");
  std::string m_moves = "arc_flip,duplicate_delete";
  maximize->add_option("--moves", m_moves, "comma list of arc_flip,duplicate_delete");
  bool m_first = false;
  maximize->add_flag("--first-improvement", m_first, "take the first improving move");
  int m_plateau = -1;
  maximize->add_option("--plateau-budget", m_plateau, "equal-value moves allowed (default 2n)");
  std::string m_witness_dir;
  maximize->add_option("--emit-witnesses", m_witness_dir, "write maximizers as tour/1 files");
  std::string m_format = "json";
  maximize->add_option("--format", m_format, "json|csv (csv for table mode)")
      ->check(CLI::IsMember({"json", "csv"}));

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "all isomorphism classes (n <= 9)");
  int e_n = 0;
  enumerate->add_option("--n", e_n, "vertex count")->required();
  bool e_count_only = false;
  enumerate->add_flag("--count-only", e_count_only, "emit only the class count");
  std::string e_out;
  enumerate->add_option("-o,--output", e_out, "write representatives as tour/1");

  // diagnose
  auto* diagnose = app.add_subcommand("diagnose", "structure audits of a tour/1 file");
  std::string d_input;
  diagnose->add_option("--input", d_input, "tour/1 file")->required();
  double d_tol = -1.0;
  diagnose->add_option("--tol", d_tol, "audit tolerance (default 4/sqrt(n))");
  std::string d_format = "json";
  diagnose->add_option("--format", d_format, "json|csv (csv = degree histogram)")
      ->check(CLI::IsMember({"json", "csv"}));

  // optimize-alpha
  auto* opt_alpha = app.add_subcommand("optimize-alpha", "maximize the blow-up objective");
  double a_tol = 1e-9;
  opt_alpha->add_option("--tol", a_tol, "bracket tolerance");

  // verify
  auto* verify = app.add_subcommand("verify", "named verification suites");
  std::string v_suite = "theorem1";
  verify->add_option("--suite", v_suite, "theorem1");
  int v_n_max = 7;
  verify->add_option("--n-max", v_n_max, "largest n to check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help exits clean, usage errors exit 2
  }

  try {
    if (construct->parsed()) {
      Emitter em{"construct"};
      return run_construct(kind, c_n, c_seed, c_alpha, c_cutoff, c_out, threads, em);
    }
    if (count->parsed()) {
      Emitter em{"count"};
      return run_count(n_input, n_method, threads, em);
    }
    if (maximize->parsed()) {
      Emitter em{"maximize"};
      if (m_exhaustive && m_local)
        throw MalformedInputError("choose one of --exhaustive / --local");
      PatternId pattern = parse_pattern_or_throw(m_pattern, m_pattern_file);
      LocalSearchOptions opts;
      opts.seed = m_seed;
      opts.restarts = m_restarts;
      opts.first_improvement = m_first;
      opts.plateau_budget = m_plateau;
      opts.use_arc_flip = m_moves.find("arc_flip") != std::string::npos;
      opts.use_duplicate_delete = m_moves.find("duplicate_delete") != std::string::npos;
      if (!opts.use_arc_flip && !opts.use_duplicate_delete)
        throw MalformedInputError("--moves needs arc_flip and/or duplicate_delete");
      return run_maximize(pattern, m_n, m_n_hi, m_local, opts, m_witness_dir,
                          m_format, threads, em);
    }
    if (enumerate->parsed()) {
      Emitter em{"enumerate"};
      return run_enumerate(e_n, e_count_only, e_out, threads, em);
    }
    if (diagnose->parsed()) {
      Emitter em{"diagnose"};
      std::optional<double> tol;
      if (d_tol >= 0.0) tol = d_tol;
      return run_diagnose(d_input, tol, d_format, threads, em);
    }
    if (opt_alpha->parsed()) {
      Emitter em{"optimize-alpha"};
      return run_optimize_alpha(a_tol, em);
    }
    if (verify->parsed()) {
      Emitter em{"verify"};
      return run_verify(v_suite, v_n_max, threads, em);
    }
  } catch (const std::exception& e) {
    std::cerr << nlohmann::ordered_json{{"error", e.what()}}.dump() << "\n";
    return 1;
  }
  return 2;
}
