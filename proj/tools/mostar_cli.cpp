#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "mostar/bfs_tree.hpp"
#include "mostar/extremal.hpp"
#include "mostar/graph.hpp"
#include "mostar/mostar.hpp"
#include "mostar/oracle.hpp"
#include "mostar/parallel.hpp"
#include "mostar/serialize.hpp"

namespace {

using namespace mostar;

enum Exit : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kParse = 3 };

// Failures that map straight to an exit code.
struct CliError {
  int code;
  std::string message;
};

struct RunConfig {
  std::string format = "json";
  std::string output;
  std::optional<unsigned> threads;
  unsigned workers = 1;

  std::string input;
  std::string meta;
  bool per_edge = false;
  bool all_roots = false;
  std::optional<Vertex> root;
  bool connected_only = false;
  bool force_large = false;
  bool table = false;
  bool gh = false;
  std::uint32_t delta = 0;
  std::uint32_t height = 0;
  std::uint64_t n = 0;
  std::string edges_out;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kUsage, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw CliError{kUsage, "cannot write " + path};
}

Graph load_graph(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_graph(text);
  } catch (const ParseError& e) {
    throw CliError{kParse, path + ": " + e.what()};
  }
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
  } else {
    write_file(cfg.output, text);
  }
}

// Generic "key: value" rendering, one line per top-level field.
std::string as_text(const Json& j) {
  std::string out;
  for (const auto& [key, value] : j.items()) {
    out += key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
  }
  return out;
}

void emit_json_or_text(const RunConfig& cfg, const Json& j, const char* what) {
  if (cfg.format == "json") {
    emit(cfg, dump(j));
  } else if (cfg.format == "text") {
    emit(cfg, as_text(j));
  } else {
    throw CliError{kUsage, std::string("csv output is not available for ") + what};
  }
}

int cmd_compute(const RunConfig& cfg) {
  const Graph g = load_graph(cfg.input);
  const bool keep = cfg.per_edge || cfg.format == "csv";
  const MostarResult r = mostar_index(g, keep, cfg.workers);
  if (cfg.format == "csv") {
    emit(cfg, to_csv(r));
  } else if (cfg.format == "text") {
    std::string out = "n: " + std::to_string(r.n) + "\nm: " + std::to_string(r.m) +
                      "\nmostar: " + std::to_string(r.total) + "\n";
    if (r.per_edge) {
      for (const auto& c : *r.per_edge) {
        out += std::to_string(c.u) + " " + std::to_string(c.v) + " " + std::to_string(c.n_uv) + " " +
               std::to_string(c.n_vu) + " " + std::to_string(c.equidistant) + "\n";
      }
    }
    emit(cfg, out);
  } else {
    emit(cfg, dump(to_json(r)));
  }
  return kOk;
}

int cmd_generate(const RunConfig& cfg) {
  if (cfg.delta < 3) throw CliError{kUsage, "--delta must be at least 3"};
  if (cfg.height < 2) throw CliError{kUsage, "--height must be at least 2"};
  LabeledExtremalGraph lg;
  try {
    lg = build_gh(cfg.delta, cfg.height);
  } catch (const std::overflow_error& e) {
    throw CliError{kUsage, e.what()};
  }
  const std::string meta = cfg.meta.empty() ? cfg.edges_out + ".meta.json" : cfg.meta;
  write_file(cfg.edges_out, to_edge_list(lg.graph));
  write_file(meta, dump(to_sidecar(lg)));

  Json j;
  j["delta"] = cfg.delta;
  j["H"] = cfg.height;
  j["n"] = lg.graph.order();
  j["m"] = lg.graph.size();
  j["regular"] = validate_degree(lg.graph, cfg.delta).regular;
  j["edges"] = cfg.edges_out;
  j["meta"] = meta;
  emit_json_or_text(cfg, j, "generate");
  return kOk;
}

// One formula row; status is ok, vacuous, guarded or invalid.
Json formula_row(const std::string& name, const std::function<double()>& eval, bool lower_bound) {
  Json row;
  row["name"] = name;
  try {
    const double v = eval();
    row["value"] = v;
    row["status"] = lower_bound && v <= 0 ? "vacuous" : "ok";
  } catch (const std::exception& e) {
    row["value"] = nullptr;
    row["status"] = "invalid";
    row["note"] = e.what();
  }
  return row;
}

int cmd_bounds(const RunConfig& cfg) {
  const std::uint32_t d = cfg.delta;
  const std::uint64_t n = cfg.n;
  Json rows = Json::array();

  Json trivial = formula_row("trivial_upper", [&] { return trivial_upper_bound(n, d).value(); }, false);
  if (trivial["status"] == "ok") {
    const Rational q = trivial_upper_bound(n, d);
    trivial["exact"] = q.is_integer() ? std::to_string(q.numerator)
                                      : std::to_string(q.numerator) + "/" + std::to_string(q.denominator);
  }
  rows.push_back(trivial);
  rows.push_back(formula_row("theorem1_lower", [&] { return theorem1_bound(d, n); }, true));
  rows.push_back(formula_row("lemma2_upper", [&] { return lemma2_bound(d, n); }, false));
  rows.push_back(formula_row("lemma3_lower", [&] { return lemma3_bound(d, n); }, true));

  Json t2 = formula_row("theorem2_upper", [&] { return theorem2_bound(d, n).value; }, false);
  if (t2["status"] == "ok" && theorem2_bound(d, n).guarded) {
    t2["status"] = "guarded";
    t2["note"] = "log n <= 1: subtracted term dropped";
  }
  rows.push_back(t2);

  bool any = false;
  for (const auto& r : rows) any = any || r["status"] != "invalid";

  if (cfg.format == "csv") {
    std::string out = "name,value,status\n";
    for (const auto& r : rows) {
      out += r["name"].get<std::string>() + "," + (r["value"].is_null() ? "" : r["value"].dump()) + "," +
             r["status"].get<std::string>() + "\n";
    }
    emit(cfg, out);
  } else if (cfg.format == "text") {
    std::string out;
    for (const auto& r : rows) {
      out += r["name"].get<std::string>() + " " + (r["value"].is_null() ? "-" : r["value"].dump()) + " " +
             r["status"].get<std::string>() + "\n";
    }
    emit(cfg, out);
  } else {
    Json j;
    j["delta"] = d;
    j["n"] = n;
    j["formulas"] = rows;
    emit(cfg, dump(j));
  }
  return any ? kOk : kUsage;
}

int cmd_certify(const RunConfig& cfg) {
  const Graph g = load_graph(cfg.input);
  if (g.order() == 0) {
    emit_json_or_text(cfg, to_json(empty_certificate()), "certify");
    return kOk;
  }
  if (cfg.root && *cfg.root >= g.order()) throw CliError{kUsage, "--root out of range"};
  const auto per_edge = compare_all_edges(g, cfg.workers);

  if (cfg.all_roots) {
    const auto roots = largest_component(g).vertices;
    const auto sweep = sweep_certificates(g, roots, per_edge, cfg.workers);
    Json j = to_json(sweep.best);
    j["roots_examined"] = sweep.roots_examined;
    j["all_passed"] = sweep.all_passed;
    emit_json_or_text(cfg, j, "certify");
    return sweep.all_passed ? kOk : kVerifyFailed;
  }
  const Vertex r = cfg.root ? *cfg.root : largest_component(g).vertices.front();
  const auto rep = mostar_upper_certificate(g, r, per_edge);
  emit_json_or_text(cfg, to_json(rep), "certify");
  return rep.passed() ? kOk : kVerifyFailed;
}

int cmd_search(const RunConfig& cfg) {
  if (cfg.n > oracle::kEnumerationMaxOrder) throw CliError{kUsage, "--n above 10 is out of exhaustive reach"};
  if (cfg.n > 8 && !cfg.force_large) throw CliError{kUsage, "--n above 8 needs --force-large"};
  if (cfg.n < 2) throw CliError{kUsage, "--n must be at least 2"};
  if (cfg.delta < 2) throw CliError{kUsage, "--delta must be at least 2"};
  if (cfg.n > 8) std::cerr << "warning: exhaustive search at n=" << cfg.n << " may take a long time\n";

  if (cfg.table) {
    std::string out = "n,delta,max_mostar\n";
    for (std::size_t k = 2; k <= cfg.n; ++k) {
      const auto r = oracle::max_mostar(k, cfg.delta, cfg.connected_only, cfg.workers);
      out += std::to_string(k) + "," + std::to_string(cfg.delta) + "," + std::to_string(r.max_mostar) + "\n";
    }
    emit(cfg, out);
    return kOk;
  }
  const auto r = oracle::max_mostar(cfg.n, cfg.delta, cfg.connected_only, cfg.workers);
  emit_json_or_text(cfg, to_json(r), "search");
  return kOk;
}

Json check(const std::string& name, bool pass, const std::string& detail) {
  Json c;
  c["name"] = name;
  c["pass"] = pass;
  c["detail"] = detail;
  return c;
}

int cmd_verify(const RunConfig& cfg) {
  const Graph g = load_graph(cfg.input);
  std::string meta_path = cfg.meta;
  if (meta_path.empty() && std::filesystem::exists(cfg.input + ".meta.json")) meta_path = cfg.input + ".meta.json";
  if (cfg.gh && meta_path.empty()) throw CliError{kUsage, "--gh needs a metadata sidecar (--meta)"};

  const std::size_t n = g.order();
  const std::size_t m = g.size();
  const auto per_edge = compare_all_edges(g, cfg.workers);
  std::int64_t mo = 0;
  std::int64_t min_sum = 0;
  std::int64_t eq = 0;
  for (const auto& c : per_edge) {
    mo += c.contribution();
    min_sum += std::min(c.at_least_as_close(c.u, c.v), c.at_least_as_close(c.v, c.u));
    eq += c.equidistant;
  }
  Json checks = Json::array();
  const std::int64_t nm = static_cast<std::int64_t>(n * m);
  checks.push_back(check("mostar_identity", mo == nm - 2 * min_sum + eq,
                         "Mo=" + std::to_string(mo) + " nm-2*min_sum+equidistant=" +
                             std::to_string(nm - 2 * min_sum + eq)));

  // Best orientation plus a fixed pseudo-random sample.
  bool orient_ok = optimal_orientation_bound(g, per_edge).value <= mo;
  std::mt19937_64 rng(1);
  std::bernoulli_distribution flip(0.5);
  for (int k = 0; k < 20 && orient_ok; ++k) {
    Orientation o;
    for (const Edge& e : g.edges()) o.arcs.push_back(flip(rng) ? Arc{e.u, e.v} : Arc{e.v, e.u});
    orient_ok = orientation_lower_bound(g, o, per_edge) <= mo;
  }
  checks.push_back(check("orientation_lower_bound", orient_ok, "optimal and 20 sampled orientations"));

  if (n >= 2) {
    const std::uint64_t delta = g.max_degree();
    checks.push_back(check("trivial_upper_bound", trivial_upper_bound(n, delta).bounds(mo),
                           "delta=" + std::to_string(delta)));
  }

  std::vector<Vertex> roots;
  const std::size_t samples = std::min<std::size_t>(n, 20);
  for (std::size_t i = 0; i < samples; ++i) roots.push_back(static_cast<Vertex>(i * n / samples));
  const auto sweep = sweep_certificates(g, roots, per_edge, cfg.workers);
  checks.push_back(check("certificates", sweep.all_passed,
                         std::to_string(sweep.roots_examined) + " roots, best " +
                             std::to_string(n == 0 ? 0 : sweep.best.certificate_value)));

  if (!meta_path.empty()) {
    LabeledExtremalGraph lg;
    try {
      lg = from_sidecar(g, Json::parse(read_file(meta_path)));
    } catch (const Json::exception& e) {
      throw CliError{kUsage, meta_path + ": " + e.what()};
    } catch (const std::invalid_argument& e) {
      throw CliError{kUsage, meta_path + ": " + e.what()};
    }
    const auto report = verify_gh_structure(lg);
    for (const auto& c : report.checks) checks.push_back(check("gh_" + c.name, c.pass, c.detail));
    if (report.passed() && lg.delta >= 3) {
      const std::uint64_t sum = canonical_orientation_sum(lg, per_edge);
      const double rhs = lemma2_bound(lg.delta, n);
      checks.push_back(check("lemma2_aggregate", within_bound(static_cast<double>(sum), rhs),
                             std::to_string(sum) + " <= " + Json(rhs).dump()));
      const double t1 = theorem1_bound(lg.delta, n);
      checks.push_back(check("theorem1_lower", at_least_bound(static_cast<double>(mo), t1),
                             std::to_string(mo) + " >= " + Json(t1).dump()));
    }
  }

  bool all = true;
  for (const auto& c : checks) all = all && c["pass"].get<bool>();
  Json j;
  j["passed"] = all;
  j["checks"] = checks;
  emit_json_or_text(cfg, j, "verify");
  return all ? kOk : kVerifyFailed;
}

unsigned resolve_thread_count(const RunConfig& cfg) {
  if (cfg.threads) {
    if (*cfg.threads == 0) throw CliError{kUsage, "--threads must be at least 1"};
    return *cfg.threads;
  }
  if (const char* env = std::getenv("MOSTAR_THREADS"); env && *env) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0' || v == 0 || v > 4096) throw CliError{kUsage, "MOSTAR_THREADS must be a positive integer"};
    return static_cast<unsigned>(v);
  }
  return resolve_workers(0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mostar index toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("-o,--output", cfg.output, "Write the report here instead of stdout");
  app.add_option("--threads", cfg.threads, "Worker threads (overrides MOSTAR_THREADS)");

  auto* compute = app.add_subcommand("compute", "Mostar index of a graph");
  compute->add_option("input", cfg.input, "Edge-list file")->required();
  compute->add_flag("--per-edge", cfg.per_edge, "Include the per-edge breakdown");

  auto* generate = app.add_subcommand("generate", "Write the extremal graph G_H and its sidecar");
  generate->add_option("--delta", cfg.delta)->required();
  generate->add_option("--height", cfg.height)->required();
  generate->add_option("--edges", cfg.edges_out, "Edge-list output file")->required();
  generate->add_option("--meta", cfg.meta, "Sidecar output (default <edges>.meta.json)");

  auto* bounds = app.add_subcommand("bounds", "Evaluate the bound formulas at (delta, n)");
  bounds->add_option("--delta", cfg.delta)->required();
  bounds->add_option("--n", cfg.n)->required();

  auto* certify = app.add_subcommand("certify", "BFS-tree upper-bound certificate");
  certify->add_option("input", cfg.input, "Edge-list file")->required();
  certify->add_option("--root", cfg.root, "Root vertex (default: smallest id of the largest component)");
  certify->add_flag("--all-roots", cfg.all_roots, "Best certificate over the largest component")
      ->excludes("--root");

  auto* search = app.add_subcommand("search", "Exhaustive maximum Mostar index");
  search->add_option("--n", cfg.n)->required();
  search->add_option("--delta", cfg.delta)->required();
  search->add_flag("--connected-only", cfg.connected_only);
  search->add_flag("--force-large", cfg.force_large, "Allow n of 9 or 10");
  search->add_flag("--table", cfg.table, "CSV rows for every order from 2 to n");

  auto* verify = app.add_subcommand("verify", "Run the invariant suite on a graph");
  verify->add_option("input", cfg.input, "Edge-list file")->required();
  verify->add_option("--meta", cfg.meta, "G_H sidecar (default: <input>.meta.json when present)");
  verify->add_flag("--gh", cfg.gh, "Require the G_H checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    cfg.workers = resolve_thread_count(cfg);
    if (*compute) return cmd_compute(cfg);
    if (*generate) return cmd_generate(cfg);
    if (*bounds) return cmd_bounds(cfg);
    if (*certify) return cmd_certify(cfg);
    if (*search) return cmd_search(cfg);
    return cmd_verify(cfg);
  } catch (const CliError& e) {
    std::cerr << "mostar: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "mostar: " << e.what() << "\n";
    return kUsage;
  }
}
