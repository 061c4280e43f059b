#ifndef MANCALOG_FIXPOINT_HPP
#define MANCALOG_FIXPOINT_HPP

#include <string>
#include <vector>

#include "mancalog/interpretation.hpp"
#include "mancalog/program.hpp"

namespace mancalog::fixpoint {

struct EngineOptions {
  int workers = 1;  // 0 = hardware concurrency
};

struct EngineStats {
  int iterations = 0;        // operator applications across all runs
  long long tightenings = 0; // cell updates applied
  int gamma_star_runs = 0;   // convergence computations (canonical runs)
  double wall_ms = 0;
};

enum class Status { Consistent, Inconsistent };

struct Witness {
  int t;
  CompId comp;
  LabelId label;
};

struct EngineResult {
  Status status = Status::Inconsistent;
  Interpretation model;
  std::vector<Witness> witnesses;  // empty-bound cells when inconsistent
  std::vector<std::string> notes;  // violated-definition diagnostics
  EngineStats stats;
};

/// Fact bound: intersection of fact bounds for (c,L) whose windows cover t;
/// [0,1] when none match.
Bound fb(const Program& p, CompId c, int t, LabelId label);
/// Constraint bound: intersection of triggered constraint head bounds.
Bound ib(const Program& p, const Interpretation& i, CompId c, int t, LabelId label);
/// Rule bound: intersection of applicable rule bounds at node v (rules with
/// head label whose target time set contains t).
Bound rb(const Program& p, const Interpretation& i, NodeId v, int t, LabelId label);

/// One synchronous tightening pass; reads only the input interpretation.
Interpretation gamma(const Program& p, const Interpretation& i,
                     const EngineOptions& opts = {});

/// Definition-literal single application used as the engine oracle: walks
/// every (t, component, label) cell through the semantics module.
Interpretation gamma_naive(const Program& p, const Interpretation& i);

/// Iterates gamma to its least fixed point above start.  Returns the
/// fixed point and the number of applications performed (the application
/// that observes no change is counted).
std::pair<Interpretation, int> gamma_star(const Program& p, Interpretation start,
                                          const EngineOptions& opts = {},
                                          EngineStats* stats = nullptr);

/// Least fixed point from bottom, checked against the model definition.
EngineResult minimal_model(const Program& p, const EngineOptions& opts = {});

/// The canonical sweep: frame-rule carry-forward interleaved with
/// re-convergence, yielding the minimal canonical model.
EngineResult canon_proc(const Program& p, const EngineOptions& opts = {});

bool check_consistency(const Program& p, bool canonical = false,
                       const EngineOptions& opts = {});

enum class Entailment { True, False, InconsistentProgram };

Entailment entails(const Program& p, const Fact& f, bool canonical = false,
                   const EngineOptions& opts = {});

}  // namespace mancalog::fixpoint

#endif
