#include "mancalog/fixpoint.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <thread>

#include "mancalog/semantics.hpp"

namespace mancalog::fixpoint {

namespace {

using semantics::Slice;
using semantics::world_satisfies;

int resolve_workers(const EngineOptions& opts) {
  if (opts.workers > 0) return opts.workers;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

struct Change {
  int t;
  CompId comp;
  LabelId label;
  Bound bound;
};

// Precomputed per-program evaluation structures.
struct Engine {
  const Program& p;
  // (comp,label) -> facts covering it.
  std::map<std::pair<CompId, LabelId>, std::vector<const Fact*>> fact_index;
  // label -> constraints with that head.
  std::map<LabelId, std::vector<const IntegrityConstraint*>> ics_by_head;
  // label -> rules with that head.
  std::map<LabelId, std::vector<const Rule*>> rules_by_head;
  // Labels that can ever tighten, per component.
  std::vector<std::vector<LabelId>> comp_labels;
  std::vector<int> deltas;  // distinct rule delta_t values

  explicit Engine(const Program& prog) : p(prog) {
    const Network& net = p.network;
    std::vector<std::set<LabelId>> labels(net.num_components());
    for (const Fact& f : p.facts) {
      fact_index[{f.comp, f.atom.label}].push_back(&f);
      labels[f.comp].insert(f.atom.label);
    }
    for (const IntegrityConstraint& ic : p.constraints) {
      ics_by_head[ic.head.label].push_back(&ic);
      // A constraint can fire on any component.
      for (CompId c = 0; c < net.num_components(); ++c)
        labels[c].insert(ic.head.label);
    }
    std::set<int> ds;
    for (const Rule& r : p.rules) {
      rules_by_head[r.head].push_back(&r);
      ds.insert(r.delta_t);
      for (NodeId v = 0; v < net.num_nodes(); ++v)
        labels[net.node_comp(v)].insert(r.head);
    }
    deltas.assign(ds.begin(), ds.end());
    comp_labels.resize(net.num_components());
    for (CompId c = 0; c < net.num_components(); ++c)
      comp_labels[c].assign(labels[c].begin(), labels[c].end());
  }

  Bound fact_bound(CompId c, int t, LabelId l) const {
    auto it = fact_index.find({c, l});
    Bound b = Bound::full();
    if (it == fact_index.end()) return b;
    for (const Fact* f : it->second)
      if (f->t1 <= t && t <= f->t2) b = intersect(b, f->atom.bound);
    return b;
  }

  Bound rule_bound(const Rule& r, NodeId v, const Interpretation& i, int prev_t) const {
    const Network& net = p.network;
    size_t elig = 0, qual = 0;
    for (const auto& [src, e] : net.in_edges(v)) {
      const World& wsrc = i.world(prev_t, net.node_comp(src));
      if (!world_satisfies(wsrc, r.neighbor.node_formula)) continue;
      if (!world_satisfies(i.world(prev_t, net.edge_comp(e)), r.neighbor.edge_formula))
        continue;
      ++elig;
      if (world_satisfies(wsrc, std::span<const Atom>(r.neighbor.trigger))) ++qual;
    }
    return r.neighbor.influence.eval(qual, elig);
  }

  Bound cell(const Interpretation& i, int t, CompId c, LabelId l) const {
    Bound b = intersect(i.get(t, c, l), fact_bound(c, t, l));
    if (auto it = ics_by_head.find(l); it != ics_by_head.end()) {
      const World& w = i.world(t, c);
      for (const IntegrityConstraint* ic : it->second) {
        if (world_satisfies(w, std::span<const Atom>(ic->body)))
          b = intersect(b, ic->head.bound);
      }
    }
    if (p.network.comp_is_node(c)) {
      NodeId v = p.network.comp_node(c);
      if (auto it = rules_by_head.find(l); it != rules_by_head.end()) {
        for (const Rule* r : it->second) {
          int prev_t = t - r->delta_t;
          if (prev_t < 0 || prev_t > p.t_max) continue;
          if (!world_satisfies(i.world(prev_t, p.network.node_comp(v)), r->target))
            continue;
          b = intersect(b, rule_bound(*r, v, i, prev_t));
          if (b.is_empty()) break;
        }
      }
    }
    return b;
  }

  // One synchronous pass over the times flagged in `need`; reads only
  // `cur`.  Results are deterministic regardless of the worker count: each
  // worker covers a fixed component range and partial results concatenate
  // in range order.
  std::vector<Change> pass(const Interpretation& cur, const std::vector<bool>& need,
                           int workers) const {
    std::vector<Change> changes;
    const int ncomp = p.network.num_components();
    std::vector<int> times;
    for (int t = 0; t <= p.t_max; ++t)
      if (need[t]) times.push_back(t);
    if (times.empty()) return changes;

    auto scan = [&](int t, int lo, int hi, std::vector<Change>& out) {
      for (CompId c = lo; c < hi; ++c) {
        for (LabelId l : comp_labels[c]) {
          Bound b = cell(cur, t, c, l);
          if (!(b == cur.get(t, c, l))) out.push_back({t, c, l, std::move(b)});
        }
      }
    };

    if (workers <= 1 || ncomp < 256) {
      for (int t : times) scan(t, 0, ncomp, changes);
      return changes;
    }
    const int chunk = (ncomp + workers - 1) / workers;
    for (int t : times) {
      std::vector<std::vector<Change>> local(workers);
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) {
        int lo = w * chunk, hi = std::min(ncomp, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, t, lo, hi, w] { scan(t, lo, hi, local[w]); });
      }
      for (auto& th : pool) th.join();
      for (auto& part : local)
        changes.insert(changes.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
    }
    return changes;
  }
};

void apply_changes(Interpretation& i, const std::vector<Change>& changes) {
  for (const Change& ch : changes) i.set(ch.t, ch.comp, ch.label, ch.bound);
}

std::vector<Witness> empty_witnesses(const Interpretation& i) {
  std::vector<Witness> out;
  for (int t = 0; t <= i.t_max(); ++t) {
    for (CompId c = 0; c < i.num_components(); ++c) {
      for (const auto& [l, b] : i.world(t, c).entries())
        if (b.is_empty()) out.push_back({t, c, l});
    }
  }
  return out;
}

// In-place convergence loop with per-time dirty tracking.
int converge(const Engine& eng, Interpretation& cur, int workers,
             EngineStats* stats) {
  const int tm = eng.p.t_max;
  std::vector<bool> need(tm + 1, true);
  int iterations = 0;
  for (;;) {
    ++iterations;
    auto changes = eng.pass(cur, need, workers);
    if (changes.empty()) break;
    apply_changes(cur, changes);
    if (stats) stats->tightenings += static_cast<long long>(changes.size());
    std::vector<bool> changed(tm + 1, false);
    for (const Change& ch : changes) changed[ch.t] = true;
    for (int t = 0; t <= tm; ++t) {
      bool n = changed[t];
      for (int d : eng.deltas)
        if (!n && t - d >= 0) n = changed[t - d];
      need[t] = n;
    }
  }
  if (stats) stats->iterations += iterations;
  return iterations;
}

}  // namespace

Bound fb(const Program& p, CompId c, int t, LabelId label) {
  Bound b = Bound::full();
  for (const Fact& f : p.facts) {
    if (f.comp == c && f.atom.label == label && f.t1 <= t && t <= f.t2)
      b = intersect(b, f.atom.bound);
  }
  return b;
}

Bound ib(const Program& p, const Interpretation& i, CompId c, int t, LabelId label) {
  Bound b = Bound::full();
  for (const IntegrityConstraint& ic : p.constraints) {
    if (ic.head.label != label) continue;
    if (world_satisfies(i.world(t, c), std::span<const Atom>(ic.body)))
      b = intersect(b, ic.head.bound);
  }
  return b;
}

Bound rb(const Program& p, const Interpretation& i, NodeId v, int t, LabelId label) {
  Bound b = Bound::full();
  auto tts_l = semantics::program_tts(i, p.network.node_comp(v), label, p);
  if (!std::binary_search(tts_l.begin(), tts_l.end(), t)) return b;
  for (const Rule& r : p.rules) {
    if (r.head != label) continue;
    auto tts_r = semantics::rule_tts(i, v, r);
    if (!std::binary_search(tts_r.begin(), tts_r.end(), t)) continue;
    Slice prev{&i, t - r.delta_t};
    b = intersect(b, semantics::bound_of(r, v, prev, p.network));
  }
  return b;
}

Interpretation gamma(const Program& p, const Interpretation& i,
                     const EngineOptions& opts) {
  Engine eng(p);
  std::vector<bool> need(p.t_max + 1, true);
  auto changes = eng.pass(i, need, resolve_workers(opts));
  Interpretation next = i;
  apply_changes(next, changes);
  return next;
}

Interpretation gamma_naive(const Program& p, const Interpretation& i) {
  Interpretation next = i;
  for (int t = 0; t <= p.t_max; ++t) {
    for (CompId c = 0; c < p.network.num_components(); ++c) {
      for (LabelId l = 0; l < p.registry.size(); ++l) {
        Bound b = intersect(i.get(t, c, l), fb(p, c, t, l));
        b = intersect(b, ib(p, i, c, t, l));
        if (p.network.comp_is_node(c))
          b = intersect(b, rb(p, i, p.network.comp_node(c), t, l));
        next.set(t, c, l, b);
      }
    }
  }
  return next;
}

std::pair<Interpretation, int> gamma_star(const Program& p, Interpretation start,
                                          const EngineOptions& opts,
                                          EngineStats* stats) {
  Engine eng(p);
  int k = converge(eng, start, resolve_workers(opts), stats);
  return {std::move(start), k};
}

namespace {

EngineResult finish(const Program& p, Interpretation model, EngineStats stats,
                    bool canonical,
                    std::chrono::steady_clock::time_point t0) {
  EngineResult res;
  res.witnesses = empty_witnesses(model);
  // An empty bound anywhere means every interpretation above the fixed
  // point carries the contradiction too, so no model can exist.
  bool ok = res.witnesses.empty() &&
            (canonical ? semantics::is_canonical_model(model, p)
                       : semantics::is_model(model, p));
  res.status = ok ? Status::Consistent : Status::Inconsistent;
  if (!ok && res.witnesses.empty())
    res.notes.push_back("fixed point violates a satisfaction definition");
  for (const Witness& w : res.witnesses)
    res.notes.push_back("empty bound at t=" + std::to_string(w.t) + " " +
                        p.network.comp_name(w.comp) + " label " +
                        p.registry.name(w.label));
  res.model = std::move(model);
  stats.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  res.stats = stats;
  return res;
}

}  // namespace

EngineResult minimal_model(const Program& p, const EngineOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  EngineStats stats;
  Engine eng(p);
  Interpretation cur(p.t_max, p.network.num_components());
  converge(eng, cur, resolve_workers(opts), &stats);
  stats.gamma_star_runs = 1;
  return finish(p, std::move(cur), stats, /*canonical=*/false, t0);
}

EngineResult canon_proc(const Program& p, const EngineOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  EngineStats stats;
  Engine eng(p);
  const int workers = resolve_workers(opts);
  Interpretation cur(p.t_max, p.network.num_components());
  converge(eng, cur, workers, &stats);
  stats.gamma_star_runs = 1;

  // Pairs that can ever hold a non-[0,1] bound; carry-forward on any other
  // pair is a no-op.
  std::vector<std::pair<CompId, LabelId>> pairs;
  for (CompId c = 0; c < p.network.num_components(); ++c)
    for (LabelId l : eng.comp_labels[c]) pairs.emplace_back(c, l);

  // free[i][t]: t is not in the pair's target time set (and t > 0).
  std::vector<std::vector<bool>> free_at(pairs.size());
  auto recompute_free = [&](int through_t) {
    for (size_t i = 0; i < pairs.size(); ++i) {
      auto [c, l] = pairs[i];
      std::vector<bool> fr(p.t_max + 1, true);
      for (int t = 0; t <= through_t && t <= p.t_max; ++t) fr[t] = false;
      for (int t : semantics::program_tts(cur, c, l, p)) fr[t] = false;
      free_at[i] = std::move(fr);
    }
  };
  recompute_free(0);

  for (int t = 1; t <= p.t_max; ++t) {
    bool any = false;
    for (size_t i = 0; i < pairs.size(); ++i) {
      if (!free_at[i][t]) continue;
      any = true;
      auto [c, l] = pairs[i];
      cur.set(t, c, l, cur.get(t - 1, c, l));
    }
    if (any) {
      converge(eng, cur, workers, &stats);
      ++stats.gamma_star_runs;
      recompute_free(t);
    }
  }
  return finish(p, std::move(cur), stats, /*canonical=*/true, t0);
}

bool check_consistency(const Program& p, bool canonical, const EngineOptions& opts) {
  EngineResult res = canonical ? canon_proc(p, opts) : minimal_model(p, opts);
  return res.status == Status::Consistent;
}

Entailment entails(const Program& p, const Fact& f, bool canonical,
                   const EngineOptions& opts) {
  EngineResult res = canonical ? canon_proc(p, opts) : minimal_model(p, opts);
  if (res.status == Status::Inconsistent) return Entailment::InconsistentProgram;
  return semantics::satisfies_fact(res.model, f) ? Entailment::True
                                                 : Entailment::False;
}

}  // namespace mancalog::fixpoint
