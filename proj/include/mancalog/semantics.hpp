#ifndef MANCALOG_SEMANTICS_HPP
#define MANCALOG_SEMANTICS_HPP

#include <span>
#include <vector>

#include "mancalog/interpretation.hpp"
#include "mancalog/program.hpp"

// Definition-literal satisfaction semantics.  This module is the slow
// reference oracle; the fixpoint engine is cross-checked against it.
namespace mancalog::semantics {

/// One time slice of an interpretation (a network interpretation).
struct Slice {
  const Interpretation* interp;
  int t;
  const World& world(CompId c) const { return interp->world(t, c); }
};

bool world_satisfies(const World& w, const Atom& a);
bool world_satisfies(const World& w, const Formula& f);
bool world_satisfies(const World& w, std::span<const Atom> conjunction);

bool satisfies_fact(const Interpretation& i, const Fact& f);
bool strictly_satisfies_fact(const Interpretation& i, const Fact& f);
bool satisfies_ic(const Interpretation& i, const IntegrityConstraint& ic,
                  const Program& p);

/// Inbound neighbors of v passing the non-fluent edge/node criteria.
std::vector<NodeId> eligible(NodeId v, const NeighborCriterion& nc,
                             const Slice& ni, const Network& net);
/// The eligible subset additionally satisfying the trigger conjunction.
std::vector<NodeId> qualifying(NodeId v, const NeighborCriterion& nc,
                               const Slice& ni, const Network& net);
Bound bound_of(const Rule& r, NodeId v, const Slice& ni, const Network& net);

/// Times t with t - delta_t inside the horizon and the target criteria
/// satisfied at t - delta_t.
std::vector<int> rule_tts(const Interpretation& i, NodeId v, const Rule& r);
/// TTS(I,c,L,P): union of rule TTSs for head L (nodes only), fact windows
/// for L on c, and constraint-triggered times.
std::vector<int> program_tts(const Interpretation& i, CompId c, LabelId label,
                             const Program& p);

bool satisfies_rule(const Interpretation& i, const Rule& r, const Program& p);

bool is_model(const Interpretation& i, const Program& p);
bool is_canonical_model(const Interpretation& i, const Program& p);

/// True iff b is everywhere at least as tight as a (a precedes b).
bool leq(const Interpretation& a, const Interpretation& b);

}  // namespace mancalog::semantics

#endif
