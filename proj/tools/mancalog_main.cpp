// mancalog command line front end: run / entail / check / validate / gen / bench.
//
// Exit codes: 0 ok (or entailment true), 1 usage or parse error,
// 2 inconsistent program, 3 entailment false.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mancalog/fixpoint.hpp"
#include "mancalog/generator.hpp"
#include "mancalog/json_io.hpp"
#include "mancalog/parser.hpp"
#include "mancalog/semantics.hpp"

namespace {

using namespace mancalog;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInconsistent = 2;
constexpr int kExitNotEntailed = 3;

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void print_diags(const std::vector<Diagnostic>& diags) {
  for (const auto& d : diags) std::cerr << d.to_string() << "\n";
}

int default_workers() {
  if (const char* env = std::getenv("MANCALOG_WORKERS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 0;  // engine resolves to hardware concurrency
}

std::optional<Program> load_inputs(const std::string& net_path,
                                   const std::string& prog_path) {
  auto net_text = read_file(net_path);
  if (!net_text) {
    std::cerr << "cannot read network file: " << net_path << "\n";
    return std::nullopt;
  }
  auto prog_text = read_file(prog_path);
  if (!prog_text) {
    std::cerr << "cannot read program file: " << prog_path << "\n";
    return std::nullopt;
  }
  LoadResult net = load_network(*net_text, net_path);
  if (!net.data) {
    print_diags(net.diagnostics);
    return std::nullopt;
  }
  ParseResult parsed = parse_program(*prog_text, *net.data, prog_path);
  if (!parsed.program) {
    print_diags(parsed.diagnostics);
    return std::nullopt;
  }
  return std::move(parsed.program);
}

void print_stats(const fixpoint::EngineResult& res) {
  std::cerr << "iterations: " << res.stats.iterations
            << "\ntightenings: " << res.stats.tightenings
            << "\nconvergence runs: " << res.stats.gamma_star_runs
            << "\nwall ms: " << res.stats.wall_ms << "\n";
}

int cmd_run(const std::string& net_path, const std::string& prog_path,
            bool canonical, const std::string& out_path, const std::string& format,
            bool sparse, int workers) {
  auto program = load_inputs(net_path, prog_path);
  if (!program) return kExitUsage;
  fixpoint::EngineOptions opts{workers};
  fixpoint::EngineResult res =
      canonical ? fixpoint::canon_proc(*program, opts)
                : fixpoint::minimal_model(*program, opts);
  print_stats(res);
  if (res.status == fixpoint::Status::Inconsistent) {
    std::cerr << "inconsistent program\n";
    for (const auto& note : res.notes) std::cerr << "  " << note << "\n";
    return kExitInconsistent;
  }
  TimelineFormat fmt = format == "json" ? TimelineFormat::Json : TimelineFormat::Csv;
  std::string text = export_timeline(res.model, *program, fmt, sparse);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write: " << out_path << "\n";
      return kExitUsage;
    }
    out << text;
  }
  return kExitOk;
}

int cmd_entail(const std::string& net_path, const std::string& prog_path,
               const std::string& fact_text, bool canonical, int workers) {
  auto program = load_inputs(net_path, prog_path);
  if (!program) return kExitUsage;
  FactParseResult fact = parse_fact_text(fact_text, *program);
  if (!fact.fact) {
    print_diags(fact.diagnostics);
    return kExitUsage;
  }
  switch (fixpoint::entails(*program, *fact.fact, canonical,
                            fixpoint::EngineOptions{workers})) {
    case fixpoint::Entailment::True:
      std::cout << "true\n";
      return kExitOk;
    case fixpoint::Entailment::False:
      std::cout << "false\n";
      return kExitNotEntailed;
    case fixpoint::Entailment::InconsistentProgram:
      std::cout << "inconsistent-program\n";
      return kExitInconsistent;
  }
  return kExitUsage;
}

int cmd_check(const std::string& net_path, const std::string& prog_path,
              bool canonical, int workers) {
  auto program = load_inputs(net_path, prog_path);
  if (!program) return kExitUsage;
  bool ok = fixpoint::check_consistency(*program, canonical,
                                        fixpoint::EngineOptions{workers});
  std::cout << (ok ? "consistent" : "inconsistent") << "\n";
  return ok ? kExitOk : kExitInconsistent;
}

int cmd_validate(const std::string& net_path, const std::string& prog_path) {
  auto program = load_inputs(net_path, prog_path);
  if (!program) return kExitUsage;
  std::cout << "valid\n";
  return kExitOk;
}

int cmd_gen(const GenParams& params, const std::string& prefix) {
  std::string err;
  auto gen = generate(params, &err);
  if (!gen) {
    std::cerr << "generation failed: " << err << "\n";
    return kExitUsage;
  }
  std::ofstream net(prefix + ".json", std::ios::binary);
  std::ofstream prog(prefix + ".mcl", std::ios::binary);
  if (!net || !prog) {
    std::cerr << "cannot write output files with prefix: " << prefix << "\n";
    return kExitUsage;
  }
  net << gen->network_json;
  prog << gen->program_dsl;
  std::cerr << "wrote " << prefix << ".json and " << prefix << ".mcl\n";
  return kExitOk;
}

int cmd_bench(const std::vector<int>& sizes, int reps, int t_max, int n_rules,
              std::uint64_t seed, int workers) {
  nlohmann::json report = nlohmann::json::array();
  for (int n : sizes) {
    nlohmann::json entry;
    entry["nodes"] = n;
    std::vector<double> walls;
    nlohmann::json runs = nlohmann::json::array();
    for (int rep = 0; rep < reps; ++rep) {
      GenParams params;
      params.seed = seed + static_cast<std::uint64_t>(rep);
      params.n_nodes = n;
      params.avg_degree = std::min(5.0, n / 2.0);
      params.t_max = t_max;
      params.n_rules = n_rules;
      std::string err;
      auto gen = generate(params, &err);
      if (!gen) {
        std::cerr << "generation failed: " << err << "\n";
        return kExitUsage;
      }
      LoadResult net = load_network(gen->network_json);
      ParseResult parsed = parse_program(gen->program_dsl, *net.data);
      if (!parsed.program) {
        print_diags(parsed.diagnostics);
        return kExitUsage;
      }
      const Program& p = *parsed.program;
      auto res = fixpoint::minimal_model(p, fixpoint::EngineOptions{workers});
      long long bound = static_cast<long long>(p.size()) *
                        (p.network.max_in_degree() + 1) * p.t_max *
                        p.network.num_edges();
      walls.push_back(res.stats.wall_ms);
      runs.push_back({{"seed", params.seed},
                      {"edges", p.network.num_edges()},
                      {"iterations", res.stats.iterations},
                      {"bound", bound},
                      {"within_bound", res.stats.iterations <= bound},
                      {"consistent", res.status == fixpoint::Status::Consistent},
                      {"wall_ms", res.stats.wall_ms}});
    }
    std::sort(walls.begin(), walls.end());
    entry["runs"] = runs;
    entry["wall_ms_min"] = walls.front();
    entry["wall_ms_median"] = walls[walls.size() / 2];
    entry["wall_ms_max"] = walls.back();
    report.push_back(entry);
    std::cerr << "bench: n=" << n << " done\n";
  }
  std::cout << report.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MANCaLog network cascade engine"};
  app.require_subcommand(1);
  int workers = default_workers();
  app.add_option("--workers", workers, "engine worker threads (0 = all cores)");

  std::string net_path, prog_path, out_path, format = "csv", fact_text, prefix = "instance";
  bool canonical = false, sparse = false;

  auto* run = app.add_subcommand("run", "compute the (canonical) minimal model timeline");
  run->add_option("network", net_path)->required();
  run->add_option("program", prog_path)->required();
  run->add_flag("--canonical", canonical);
  run->add_option("--out", out_path);
  run->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  run->add_flag("--sparse", sparse);

  auto* entail = app.add_subcommand("entail", "decide entailment of a single fact");
  entail->add_option("network", net_path)->required();
  entail->add_option("program", prog_path)->required();
  entail->add_option("--fact", fact_text, "fact, e.g. 'watchesA:[0.8,1] @ node 1 in [0,0]'")->required();
  entail->add_flag("--canonical", canonical);

  auto* check = app.add_subcommand("check", "decide (canonical) consistency");
  check->add_option("network", net_path)->required();
  check->add_option("program", prog_path)->required();
  check->add_flag("--canonical", canonical);

  auto* val = app.add_subcommand("validate", "parse and validate without solving");
  val->add_option("network", net_path)->required();
  val->add_option("program", prog_path)->required();

  GenParams gp;
  std::string model = "erdos";
  auto* gen = app.add_subcommand("gen", "generate a synthetic instance");
  gen->add_option("--seed", gp.seed);
  gen->add_option("--nodes", gp.n_nodes);
  gen->add_option("--degree", gp.avg_degree);
  gen->add_option("--tmax", gp.t_max);
  gen->add_option("--rules", gp.n_rules);
  gen->add_option("--constraints", gp.n_constraints);
  gen->add_option("--model", model)->check(CLI::IsMember({"erdos", "preferential"}));
  gen->add_option("--out-prefix", prefix);

  std::vector<int> sizes{250, 500, 1000, 2000};
  int reps = 3, bench_tmax = 10, bench_rules = 5;
  std::uint64_t bench_seed = 42;
  auto* bench = app.add_subcommand("bench", "iteration-count and scaling report");
  bench->add_option("--sizes", sizes, "node counts (doubling by default)");
  bench->add_option("--reps", reps);
  bench->add_option("--tmax", bench_tmax);
  bench->add_option("--rules", bench_rules);
  bench->add_option("--seed", bench_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (run->parsed())
    return cmd_run(net_path, prog_path, canonical, out_path, format, sparse, workers);
  if (entail->parsed())
    return cmd_entail(net_path, prog_path, fact_text, canonical, workers);
  if (check->parsed()) return cmd_check(net_path, prog_path, canonical, workers);
  if (val->parsed()) return cmd_validate(net_path, prog_path);
  if (gen->parsed()) {
    gp.model = model == "preferential" ? GenParams::Model::Preferential
                                       : GenParams::Model::Erdos;
    return cmd_gen(gp, prefix);
  }
  if (bench->parsed())
    return cmd_bench(sizes, reps, bench_tmax, bench_rules, bench_seed, workers);
  return kExitUsage;
}
