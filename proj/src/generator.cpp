#include "mancalog/generator.hpp"

#include <random>
#include <set>
#include <sstream>
#include <vector>

namespace mancalog {

namespace {

// Bounded draw that avoids std::uniform_int_distribution, whose output
// sequence is implementation-defined.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  std::uint64_t pick(std::uint64_t n) { return gen() % n; }
  bool chance(int percent) { return pick(100) < static_cast<std::uint64_t>(percent); }
};

std::string node_name(int i) { return "n" + std::to_string(i); }

// Tenths literal in [lo,hi] (inclusive, units of 0.1).
std::string tenths(Rng& rng, int lo, int hi) {
  int v = lo + static_cast<int>(rng.pick(hi - lo + 1));
  if (v == 0) return "0";
  if (v == 10) return "1";
  return "0." + std::to_string(v);
}

}  // namespace

std::optional<Generated> generate(const GenParams& params, std::string* error) {
  auto fail = [&](const std::string& msg) {
    if (error) *error = msg;
    return std::nullopt;
  };
  if (params.n_nodes < 2) return fail("n_nodes must be at least 2");
  if (params.t_max < 1) return fail("t_max must be at least 1");
  if (params.avg_degree <= 0) return fail("avg_degree must be positive");
  if (params.avg_degree >= params.n_nodes)
    return fail("avg_degree must be smaller than n_nodes");
  if (params.n_rules < 0 || params.n_constraints < 0)
    return fail("rule and constraint counts must be non-negative");

  Rng rng(params.seed);
  const int n = params.n_nodes;
  long long target_edges =
      std::max<long long>(1, static_cast<long long>(params.avg_degree * n + 0.5));
  const long long max_edges = static_cast<long long>(n) * (n - 1);
  if (target_edges > max_edges) target_edges = max_edges;

  std::set<std::pair<int, int>> edges;
  if (params.model == GenParams::Model::Erdos) {
    long long attempts = 0;
    while (static_cast<long long>(edges.size()) < target_edges &&
           attempts < 50 * target_edges + 1000) {
      ++attempts;
      int u = static_cast<int>(rng.pick(n));
      int v = static_cast<int>(rng.pick(n));
      if (u == v) continue;
      edges.emplace(u, v);
    }
  } else {
    // Preferential attachment on the target endpoint.
    std::vector<int> bag;
    for (int i = 0; i < n; ++i) bag.push_back(i);
    long long attempts = 0;
    while (static_cast<long long>(edges.size()) < target_edges &&
           attempts < 50 * target_edges + 1000) {
      ++attempts;
      int u = static_cast<int>(rng.pick(n));
      int v = bag[rng.pick(bag.size())];
      if (u == v) continue;
      if (edges.emplace(u, v).second) bag.push_back(v);
    }
  }

  std::ostringstream net;
  net << "{\n  \"t_max\": " << params.t_max << ",\n";
  net << "  \"nonfluent\": [\"classA\", \"classB\", \"strongTie\", \"weakTie\"],\n";
  net << "  \"fluent\": [\"adopted\", \"blocked\"],\n";
  net << "  \"nodes\": [";
  for (int i = 0; i < n; ++i) net << (i ? ", " : "") << '"' << node_name(i) << '"';
  net << "],\n  \"edges\": [";
  bool first = true;
  for (const auto& [u, v] : edges) {
    net << (first ? "" : ", ") << "[\"" << node_name(u) << "\", \"" << node_name(v)
        << "\"]";
    first = false;
  }
  net << "]\n}\n";

  std::ostringstream prog;
  prog << "// generated instance: seed=" << params.seed << " nodes=" << n
       << " edges=" << edges.size() << "\n";
  for (int i = 0; i < n; ++i) {
    const char* cls = rng.chance(50) ? "classA" : "classB";
    prog << "fact " << cls << ":[1,1] @ node " << node_name(i) << " in [0,"
         << params.t_max << "];\n";
  }
  for (const auto& [u, v] : edges) {
    const char* tie = rng.chance(60) ? "strongTie" : "weakTie";
    prog << "fact " << tie << ":[1,1] @ edge " << node_name(u) << " -> "
         << node_name(v) << " in [0," << params.t_max << "];\n";
  }
  // Fluent seed facts.
  int n_seeds = std::max(1, n / 5);
  for (int i = 0; i < n_seeds; ++i) {
    int v = static_cast<int>(rng.pick(n));
    const char* label = rng.chance(80) ? "adopted" : "blocked";
    int lo = static_cast<int>(rng.pick(7));
    int hi = lo + 3 + static_cast<int>(rng.pick(10 - lo - 2));
    if (hi > 10) hi = 10;
    int w = static_cast<int>(rng.pick(params.t_max));
    prog << "fact " << label << ":[" << tenths(rng, lo, lo) << ","
         << tenths(rng, hi, hi) << "] @ node " << node_name(v) << " in [0," << w
         << "];\n";
  }
  static const char* kThetas[] = {"0.3", "0.5", "0.7"};
  for (int i = 0; i < params.n_rules; ++i) {
    const char* head = rng.chance(75) ? "adopted" : "blocked";
    int dt = 1 + static_cast<int>(rng.pick(std::min(3, params.t_max)));
    std::string target = rng.chance(40) ? "true"
                         : rng.chance(50) ? "classA:[1,1]"
                                          : "classB:[1,1]";
    std::string g_edge = rng.chance(50) ? "true"
                         : rng.chance(50) ? "strongTie:[1,1]"
                                          : "weakTie:[1,1]";
    std::string g_node = rng.chance(60) ? "true"
                         : rng.chance(50) ? "classA:[1,1]"
                                          : "classB:[1,1]";
    std::string h = "adopted:[" + std::string(rng.chance(50) ? "0.5" : "0.7") + ",1]";
    std::string infl;
    switch (rng.pick(4)) {
      case 0:
        infl = "tip(" + std::string(kThetas[rng.pick(3)]) + ")";
        break;
      case 1:
        infl = "softtip(" + std::string(kThetas[rng.pick(3)]) + ",[" +
               tenths(rng, 5, 8) + ",1])";
        break;
      case 2:
        infl = "negtip([0," + tenths(rng, 2, 4) + "])";
        break;
      default:
        infl = "const([" + tenths(rng, 0, 3) + ",1])";
        break;
    }
    prog << "rule " << head << " <- " << dt << " : " << target << ", (" << g_edge
         << ", " << g_node << ", " << h << ") : " << infl << ";\n";
  }
  for (int i = 0; i < params.n_constraints; ++i) {
    prog << "constraint blocked:[0," << tenths(rng, 2, 5)
         << "] <~ adopted:[" << tenths(rng, 6, 8) << ",1];\n";
  }

  return Generated{net.str(), prog.str()};
}

}  // namespace mancalog
