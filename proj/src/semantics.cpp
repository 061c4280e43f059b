#include "mancalog/semantics.hpp"

#include <algorithm>

namespace mancalog::semantics {

bool world_satisfies(const World& w, const Atom& a) {
  // The three atom cases of world satisfaction, in order.
  if (a.bound.is_full()) return true;
  if (a.bound.is_empty()) return false;
  return is_subset(w.get(a.label), a.bound);
}

bool world_satisfies(const World& w, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::True:
      return true;
    case Formula::Kind::Atom:
      return world_satisfies(w, f.atom());
    case Formula::Kind::Not:
      return !world_satisfies(w, f.child(0));
    case Formula::Kind::And:
      return world_satisfies(w, f.child(0)) && world_satisfies(w, f.child(1));
    case Formula::Kind::Or:
      return world_satisfies(w, f.child(0)) || world_satisfies(w, f.child(1));
  }
  return false;
}

bool world_satisfies(const World& w, std::span<const Atom> conjunction) {
  for (const Atom& a : conjunction)
    if (!world_satisfies(w, a)) return false;
  return true;
}

bool satisfies_fact(const Interpretation& i, const Fact& f) {
  for (int t = f.t1; t <= f.t2; ++t)
    if (!world_satisfies(i.world(t, f.comp), f.atom)) return false;
  return true;
}

bool strictly_satisfies_fact(const Interpretation& i, const Fact& f) {
  for (int t = f.t1; t <= f.t2; ++t)
    if (!(i.get(t, f.comp, f.atom.label) == f.atom.bound)) return false;
  return true;
}

bool satisfies_ic(const Interpretation& i, const IntegrityConstraint& ic,
                  const Program& p) {
  for (int t = 0; t <= p.t_max; ++t) {
    for (CompId c = 0; c < p.network.num_components(); ++c) {
      const World& w = i.world(t, c);
      if (world_satisfies(w, std::span<const Atom>(ic.body)) &&
          !world_satisfies(w, ic.head))
        return false;
    }
  }
  return true;
}

std::vector<NodeId> eligible(NodeId v, const NeighborCriterion& nc,
                             const Slice& ni, const Network& net) {
  std::vector<NodeId> out;
  for (const auto& [src, e] : net.in_edges(v)) {
    if (world_satisfies(ni.world(net.node_comp(src)), nc.node_formula) &&
        world_satisfies(ni.world(net.edge_comp(e)), nc.edge_formula))
      out.push_back(src);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NodeId> qualifying(NodeId v, const NeighborCriterion& nc,
                               const Slice& ni, const Network& net) {
  std::vector<NodeId> out;
  for (NodeId src : eligible(v, nc, ni, net)) {
    if (world_satisfies(ni.world(net.node_comp(src)),
                        std::span<const Atom>(nc.trigger)))
      out.push_back(src);
  }
  return out;
}

Bound bound_of(const Rule& r, NodeId v, const Slice& ni, const Network& net) {
  const auto elig = eligible(v, r.neighbor, ni, net);
  size_t qual = 0;
  for (NodeId src : elig) {
    if (world_satisfies(ni.world(net.node_comp(src)),
                        std::span<const Atom>(r.neighbor.trigger)))
      ++qual;
  }
  return r.neighbor.influence.eval(qual, elig.size());
}

std::vector<int> rule_tts(const Interpretation& i, NodeId v, const Rule& r) {
  std::vector<int> out;
  for (int t = 0; t <= i.t_max(); ++t) {
    int prev = t - r.delta_t;
    if (prev < 0 || prev > i.t_max()) continue;
    if (world_satisfies(i.world(prev, v), r.target)) out.push_back(t);
  }
  return out;
}

std::vector<int> program_tts(const Interpretation& i, CompId c, LabelId label,
                             const Program& p) {
  std::vector<bool> in(p.t_max + 1, false);
  if (p.network.comp_is_node(c)) {
    for (const Rule& r : p.rules) {
      if (r.head != label) continue;
      for (int t : rule_tts(i, p.network.comp_node(c), r)) in[t] = true;
    }
  }
  for (const Fact& f : p.facts) {
    if (f.comp != c || f.atom.label != label) continue;
    for (int t = f.t1; t <= f.t2; ++t) in[t] = true;
  }
  for (const IntegrityConstraint& ic : p.constraints) {
    if (ic.head.label != label) continue;
    for (int t = 0; t <= p.t_max; ++t)
      if (world_satisfies(i.world(t, c), std::span<const Atom>(ic.body)))
        in[t] = true;
  }
  std::vector<int> out;
  for (int t = 0; t <= p.t_max; ++t)
    if (in[t]) out.push_back(t);
  return out;
}

bool satisfies_rule(const Interpretation& i, const Rule& r, const Program& p) {
  for (NodeId v = 0; v < p.network.num_nodes(); ++v) {
    for (int t : rule_tts(i, v, r)) {
      Slice prev{&i, t - r.delta_t};
      Atom required{r.head, bound_of(r, v, prev, p.network)};
      if (!world_satisfies(i.world(t, p.network.node_comp(v)), required))
        return false;
    }
  }
  return true;
}

namespace {

enum class FrameKind { Model, Canonical };

bool check_model(const Interpretation& i, const Program& p, FrameKind frame) {
  for (const Rule& r : p.rules)
    if (!satisfies_rule(i, r, p)) return false;
  for (const IntegrityConstraint& ic : p.constraints)
    if (!satisfies_ic(i, ic, p)) return false;
  for (const Fact& f : p.facts) {
    if (p.registry.is_fluent(f.atom.label)) {
      if (!satisfies_fact(i, f)) return false;
    } else {
      if (!strictly_satisfies_fact(i, f)) return false;
    }
  }
  // Frame condition over every label, component, and non-target time.
  for (CompId c = 0; c < p.network.num_components(); ++c) {
    for (LabelId l = 0; l < p.registry.size(); ++l) {
      auto tts = program_tts(i, c, l, p);
      std::vector<bool> target(p.t_max + 1, false);
      for (int t : tts) target[t] = true;
      for (int t = 0; t <= p.t_max; ++t) {
        if (target[t]) continue;
        const Bound& b = i.get(t, c, l);
        if (frame == FrameKind::Model || t == 0) {
          if (!b.is_full()) return false;
        } else {
          if (!(b == i.get(t - 1, c, l))) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

bool is_model(const Interpretation& i, const Program& p) {
  return check_model(i, p, FrameKind::Model);
}

bool is_canonical_model(const Interpretation& i, const Program& p) {
  return check_model(i, p, FrameKind::Canonical);
}

bool leq(const Interpretation& a, const Interpretation& b) {
  if (a.t_max() != b.t_max() || a.num_components() != b.num_components())
    return false;
  for (int t = 0; t <= a.t_max(); ++t) {
    for (CompId c = 0; c < a.num_components(); ++c) {
      const World& wa = a.world(t, c);
      const World& wb = b.world(t, c);
      for (const auto& [label, bound] : wa.entries())
        if (!is_subset(wb.get(label), bound)) return false;
    }
  }
  return true;
}

}  // namespace mancalog::semantics
