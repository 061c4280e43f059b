#ifndef MANCALOG_GENERATOR_HPP
#define MANCALOG_GENERATOR_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace mancalog {

struct GenParams {
  std::uint64_t seed = 0;
  int n_nodes = 10;
  double avg_degree = 2.0;
  int t_max = 5;
  int n_rules = 2;
  int n_constraints = 1;
  enum class Model { Erdos, Preferential } model = Model::Erdos;
};

struct Generated {
  std::string network_json;
  std::string program_dsl;
};

/// Deterministic-for-seed synthetic instance: random digraph, two node
/// classes and two tie classes as non-fluent labels, threshold rules from
/// the builtin influence family, and sprinkled fluent seed facts.
/// Generated instances always validate.  Returns nullopt (with a message)
/// for infeasible parameters.
std::optional<Generated> generate(const GenParams& params,
                                  std::string* error = nullptr);

}  // namespace mancalog

#endif
