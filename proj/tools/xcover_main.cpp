// Command-line front end: solve / verify / deficiency / alpha / hunt / gen /
// convert over the bigraph library. Standard output carries JSON, standard
// error carries logs. Exit codes: 0 success (including hunt runs that find
// counterexamples), 1 failed verification, 2 parse or flag error, 3 no
// applicable solver, 4 precondition or invariant failure, 5 size cap.

#include <atomic>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "xcover/bigraph.hpp"
#include "xcover/cover.hpp"
#include "xcover/cubic_solver.hpp"
#include "xcover/cycles.hpp"
#include "xcover/deficiency.hpp"
#include "xcover/forest_solver.hpp"
#include "xcover/generators.hpp"
#include "xcover/girth_solver.hpp"
#include "xcover/hypergraph.hpp"
#include "xcover/json_io.hpp"
#include "xcover/maxdeg3_solver.hpp"

namespace {

using nlohmann::ordered_json;
using namespace xcover;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitNoSolver = 3;
constexpr int kExitContract = 4;
constexpr int kExitCap = 5;

void print_json(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

std::string fnv1a_hex(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct SolveFlags {
  std::string input, solver = "auto";
  uint64_t seed = 0;
  int d = 0;  // 0: use max_degree(g)
  bool force = false, trace = false;
};

int run_solve(const SolveFlags& f) {
  BiGraph g = graph_from_string(read_file_or_stdin(f.input));
  std::string chosen = f.solver;
  if (chosen == "auto") {
    if (!girth(g).has_value())
      chosen = "forest";
    else if (is_regular(g) == std::optional<int>(3))
      chosen = "cubic";
    else if (max_degree(g) <= 3)
      chosen = "maxdeg3";
    else if (check_girth_condition(g, f.d > 0 ? f.d : max_degree(g)).valid)
      chosen = "girth";
    else {
      std::cerr << "no applicable solver: graph is cyclic, not 3-regular, has maximum degree "
                << max_degree(g) << " > 3, and fails the girth condition\n";
      return kExitNoSolver;
    }
  }

  PathXCover cover;
  DeficiencyCertificate cert;
  if (chosen == "forest") {
    std::tie(cover, cert) = solve_forest(g);
  } else if (chosen == "cubic") {
    std::vector<std::string> lines;
    auto [c, witness] = solve_cubic(g, f.trace ? &lines : nullptr);
    for (const auto& l : lines) std::cerr << l << '\n';
    cover = std::move(c);
    cert = certificate_for(g, witness);
  } else if (chosen == "maxdeg3") {
    Maxdeg3Trace tr;
    std::tie(cover, cert) = solve_maxdeg3(g, f.trace ? &tr : nullptr);
    if (f.trace) {
      for (const auto& l : tr.lines) std::cerr << l << '\n';
      ordered_json aux{{"aux_forest", graph_to_json(tr.aux_forest)},
                       {"origin_x", tr.aux_origin_x},
                       {"origin_y", tr.aux_origin_y}};
      std::cerr << aux.dump(2) << '\n';
    }
  } else if (chosen == "girth") {
    int d = f.d > 0 ? f.d : max_degree(g);
    auto reg = is_regular(g);
    CyclePacking packing =
        (reg && *reg >= 2) ? two_factor(g) : optimal_cycle_packing(g).packing;
    HighGirthOptions opts;
    opts.seed = f.seed;
    opts.force = f.force;
    auto [c, witness] = solve_high_girth(g, d, packing, opts);
    cover = std::move(c);
    cert = certificate_for(g, witness);
  } else {
    fail(errc::argument, "unknown solver \"" + chosen + "\"");
  }

  print_json(ordered_json{{"solver", chosen},
                          {"cover", cover_to_json(cover)},
                          {"certificate", certificate_to_json(cert)}});
  return 0;
}

int run_verify(const std::string& input, const std::string& cover_file,
               const std::string& cert_file) {
  BiGraph g = graph_from_string(read_file_or_stdin(input));
  nlohmann::json cj = nlohmann::json::parse(read_file_or_stdin(cover_file), nullptr, false);
  if (cj.is_discarded()) fail(errc::parse, "malformed cover JSON");
  // Accept either a bare cover object or a full `solve` output.
  PathXCover cover = cover_from_json(cj.contains("cover") ? cj["cover"] : cj);
  Verdict v;
  if (!cert_file.empty()) {
    nlohmann::json certj = nlohmann::json::parse(read_file_or_stdin(cert_file), nullptr, false);
    if (certj.is_discarded()) fail(errc::parse, "malformed certificate JSON");
    DeficiencyCertificate cert =
        certificate_from_json(certj.contains("certificate") ? certj["certificate"] : certj);
    v = certify(g, cover, cert);
  } else if (cj.contains("cover") && cj.contains("certificate")) {
    v = certify(g, cover, certificate_from_json(cj["certificate"]));
  } else {
    v = verify_cover(g, cover);
  }
  print_json(ordered_json{{"valid", v.valid}, {"violations", v.violations}});
  return v.valid ? 0 : kExitVerifyFailed;
}

int run_deficiency(const std::string& input, bool alpha) {
  BiGraph g = graph_from_string(read_file_or_stdin(input));
  DeficiencyCertificate cert =
      alpha ? certificate_for(g, alpha_lambda(g)) : max_deficiency(g);
  print_json(certificate_to_json(cert));
  return 0;
}

struct HuntFlags {
  std::string family = "random";
  int max_x = 3, max_y = 3, count = 100, jobs = 1;
  uint64_t seed = 0;
};

struct HuntRecord {
  ordered_json record;
  std::vector<ordered_json> findings;
};

// One hunt instance: exact deficiency, exact oracle cover size, and a solver
// cross-check when one applies. The hunted inequality is oracle_k <= def.
HuntRecord hunt_instance(const BiGraph& g, int index, uint64_t instance_seed) {
  HuntRecord out;
  DeficiencyCertificate def = max_deficiency(g);
  OracleResult oracle = min_cover_oracle(g);

  std::string solver_name;
  int solver_k = -1;
  try {
    if (!girth(g).has_value()) {
      auto [cov, cert] = solve_forest(g);
      solver_name = "forest";
      solver_k = static_cast<int>(cov.paths.size());
      if (!verify_cover(g, cov).valid) solver_k = -2;
    } else if (is_regular(g) == std::optional<int>(3)) {
      auto [cov, witness] = solve_cubic(g);
      solver_name = "cubic";
      solver_k = static_cast<int>(cov.paths.size());
      if (!verify_cover(g, cov).valid) solver_k = -2;
    } else if (max_degree(g) <= 3) {
      auto [cov, cert] = solve_maxdeg3(g);
      solver_name = "maxdeg3";
      solver_k = static_cast<int>(cov.paths.size());
      if (!verify_cover(g, cov).valid) solver_k = -2;
    }
  } catch (const error& e) {
    out.findings.push_back(ordered_json{{"kind", "solver_error"},
                                        {"index", index},
                                        {"seed", instance_seed},
                                        {"message", e.what()},
                                        {"graph", graph_to_json(g)}});
  }

  out.record = ordered_json{{"index", index},
                            {"x_count", g.x_count()},
                            {"y_count", g.y_count()},
                            {"graph_hash", fnv1a_hex(graph_to_text(g))},
                            {"def", def.value},
                            {"oracle_k", oracle.k}};
  if (!solver_name.empty()) {
    out.record["solver"] = solver_name;
    out.record["solver_k"] = solver_k;
  }

  if (oracle.k > def.value)
    out.findings.push_back(ordered_json{{"kind", "oracle_exceeds_deficiency"},
                                        {"index", index},
                                        {"seed", instance_seed},
                                        {"def", def.value},
                                        {"oracle_k", oracle.k},
                                        {"graph", graph_to_json(g)}});
  if (solver_k == -2)
    out.findings.push_back(ordered_json{{"kind", "solver_invalid_cover"},
                                        {"index", index},
                                        {"seed", instance_seed},
                                        {"solver", solver_name},
                                        {"graph", graph_to_json(g)}});
  if (solver_k >= 0 && solver_k < oracle.k)
    out.findings.push_back(ordered_json{{"kind", "solver_below_exact_minimum"},
                                        {"index", index},
                                        {"seed", instance_seed},
                                        {"solver", solver_name},
                                        {"solver_k", solver_k},
                                        {"oracle_k", oracle.k},
                                        {"graph", graph_to_json(g)}});
  return out;
}

int run_hunt(const HuntFlags& f) {
  if (f.family != "random" && f.family != "exhaustive" && f.family != "forests")
    fail(errc::argument, "unknown family \"" + f.family + "\"");
  if (f.max_x < 0 || f.max_y < 0 || f.count < 0 || f.jobs < 1)
    fail(errc::argument, "negative bounds make no sense");
  if (f.max_x + f.max_y > 18)
    fail(errc::argument, "max-x + max-y must stay within the exact oracle cap of 18");

  // Build the instance list up front; each instance is generated and solved
  // independently, so jobs only split the index range.
  std::vector<BiGraph> instances;
  std::vector<uint64_t> seeds;
  if (f.family == "exhaustive") {
    for (int nx = 0; nx <= f.max_x; ++nx)
      for (int ny = 0; ny <= f.max_y; ++ny) {
        uint64_t cells = static_cast<uint64_t>(nx) * ny;
        for (uint64_t mask = 0; mask < (1ULL << cells); ++mask) {
          std::vector<std::pair<int, int>> edges;
          for (uint64_t b = 0; b < cells; ++b)
            if (mask >> b & 1)
              edges.emplace_back(static_cast<int>(b / ny), static_cast<int>(b % ny));
          instances.push_back(BiGraph::build(nx, ny, edges));
          seeds.push_back(0);
        }
      }
  } else {
    for (int i = 0; i < f.count; ++i) {
      uint64_t s = f.seed + static_cast<uint64_t>(i);
      std::mt19937_64 rng(s);
      if (f.family == "random") {
        int nx = 1 + static_cast<int>(uniform_below(rng, std::max(f.max_x, 1)));
        int ny = static_cast<int>(uniform_below(rng, f.max_y + 1));
        double p = uniform_unit(rng);
        instances.push_back(gen_random_bigraph(nx, ny, p, s));
      } else {
        int max_n = f.max_x + f.max_y;
        int n = 1 + static_cast<int>(uniform_below(rng, std::max(max_n, 1)));
        instances.push_back(gen_random_forest(n, s));
      }
      seeds.push_back(s);
    }
  }

  const int total = static_cast<int>(instances.size());
  std::vector<HuntRecord> results(total);
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (int i = next.fetch_add(1); i < total; i = next.fetch_add(1))
      results[i] = hunt_instance(instances[i], i, seeds[i]);
  };
  if (f.jobs == 1 || total <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < std::min(f.jobs, total); ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  ordered_json records = ordered_json::array();
  ordered_json counterexamples = ordered_json::array();
  for (const HuntRecord& r : results) {
    records.push_back(r.record);
    for (const auto& c : r.findings) counterexamples.push_back(c);
  }
  if (!counterexamples.empty())
    std::cerr << "COUNTEREXAMPLE FOUND: " << counterexamples.size()
              << " finding(s); see the counterexamples array in the report\n";
  print_json(ordered_json{{"family", f.family},
                          {"max_x", f.max_x},
                          {"max_y", f.max_y},
                          {"count", f.count},
                          {"seed", f.seed},
                          {"instances_tested", total},
                          {"counterexample_count", counterexamples.size()},
                          {"counterexamples", std::move(counterexamples)},
                          {"records", std::move(records)}});
  return 0;
}

struct GenFlags {
  std::string family = "fam", format = "json";
  int n = 5, k = 2, d = 3, length = 6, nx = 4, ny = 4;
  double p = 0.5;
  uint64_t seed = 0;
};

int run_gen(const GenFlags& f) {
  BiGraph g;
  if (f.family == "fam")
    g = gen_fam(f.n, f.k);
  else if (f.family == "cycle")
    g = gen_cycle(f.length);
  else if (f.family == "regular")
    g = gen_random_regular(f.n, f.d, f.seed);
  else if (f.family == "forest")
    g = gen_random_forest(f.n, f.seed);
  else if (f.family == "random")
    g = gen_random_bigraph(f.nx, f.ny, f.p, f.seed);
  else
    fail(errc::argument, "unknown family \"" + f.family + "\"");
  if (f.format == "json")
    print_json(graph_to_json(g));
  else if (f.format == "text")
    std::cout << graph_to_text(g);
  else
    fail(errc::argument, "unknown format \"" + f.format + "\"");
  return 0;
}

int run_convert(const std::string& input, const std::string& from_hypergraph,
                const std::string& format) {
  BiGraph g;
  if (!from_hypergraph.empty())
    g = incidence_graph(hypergraph_from_string(read_file_or_stdin(from_hypergraph)));
  else if (!input.empty())
    g = graph_from_string(read_file_or_stdin(input));
  else
    fail(errc::argument, "convert needs --input or --from-hypergraph");
  if (format == "json")
    print_json(graph_to_json(g));
  else if (format == "text")
    std::cout << graph_to_text(g);
  else
    fail(errc::argument, "unknown format \"" + format + "\"");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"path X-cover toolkit for bipartite graphs"};
  app.require_subcommand(1);

  SolveFlags sf;
  CLI::App* solve = app.add_subcommand("solve", "compute a cover and certificate");
  solve->add_option("--input", sf.input, "graph file (JSON or text), - for stdin")->required();
  solve->add_option("--solver", sf.solver, "auto|forest|cubic|maxdeg3|girth")
      ->check(CLI::IsMember({"auto", "forest", "cubic", "maxdeg3", "girth"}));
  solve->add_option("--seed", sf.seed, "seed for randomized solvers");
  solve->add_option("--d", sf.d, "degree bound for the girth condition");
  solve->add_flag("--force", sf.force, "skip the girth condition check");
  solve->add_flag("--trace", sf.trace, "write solver trace to standard error");

  std::string v_input, v_cover, v_cert;
  CLI::App* verify = app.add_subcommand("verify", "check a cover (and certificate)");
  verify->add_option("--input", v_input, "graph file, - for stdin")->required();
  verify->add_option("--cover", v_cover, "cover JSON (bare or solve output), - for stdin")
      ->required();
  verify->add_option("--cert", v_cert, "certificate JSON");

  std::string d_input;
  CLI::App* deficiency = app.add_subcommand("deficiency", "exact maximum deficiency");
  deficiency->add_option("--input", d_input, "graph file, - for stdin")->required();
  std::string a_input;
  CLI::App* alpha = app.add_subcommand("alpha", "exact maximum Lambda-independent set");
  alpha->add_option("--input", a_input, "graph file, - for stdin")->required();

  HuntFlags hf;
  CLI::App* hunt = app.add_subcommand("hunt", "search for conjecture counterexamples");
  hunt->add_option("--family", hf.family, "random|exhaustive|forests");
  hunt->add_option("--max-x", hf.max_x, "largest X side");
  hunt->add_option("--max-y", hf.max_y, "largest Y side");
  hunt->add_option("--count", hf.count, "instances for randomized families");
  hunt->add_option("--seed", hf.seed, "base seed");
  hunt->add_option("--jobs", hf.jobs, "instance-level worker threads");

  GenFlags gf;
  CLI::App* gen = app.add_subcommand("gen", "generate a graph to standard output");
  gen->add_option("--family", gf.family, "fam|cycle|regular|forest|random");
  gen->add_option("--n", gf.n, "size parameter (fam, regular, forest)");
  gen->add_option("--k", gf.k, "fam threshold parameter");
  gen->add_option("--d", gf.d, "regular degree");
  gen->add_option("--length", gf.length, "cycle length");
  gen->add_option("--nx", gf.nx, "random family X size");
  gen->add_option("--ny", gf.ny, "random family Y size");
  gen->add_option("--p", gf.p, "random family edge probability");
  gen->add_option("--seed", gf.seed, "generator seed");
  gen->add_option("--format", gf.format, "json|text");

  std::string c_input, c_hyper, c_format = "json";
  CLI::App* convert = app.add_subcommand("convert", "convert between graph formats");
  convert->add_option("--input", c_input, "graph file, - for stdin");
  convert->add_option("--from-hypergraph", c_hyper, "hypergraph JSON to expand");
  convert->add_option("--format", c_format, "json|text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (app.got_subcommand(solve)) return run_solve(sf);
    if (app.got_subcommand(verify)) return run_verify(v_input, v_cover, v_cert);
    if (app.got_subcommand(deficiency)) return run_deficiency(d_input, false);
    if (app.got_subcommand(alpha)) return run_deficiency(a_input, true);
    if (app.got_subcommand(hunt)) return run_hunt(hf);
    if (app.got_subcommand(gen)) return run_gen(gf);
    if (app.got_subcommand(convert)) return run_convert(c_input, c_hyper, c_format);
    return kExitParse;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case errc::parse:
      case errc::argument:
        return kExitParse;
      case errc::cap:
        return kExitCap;
      default:
        return kExitContract;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitContract;
  }
}
