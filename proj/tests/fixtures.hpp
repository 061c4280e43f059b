// Shared test fixture: the five-node social network, its label set, the
// reference worlds, and the fact/rule/constraint inventory used across the
// test files.
#ifndef MANCALOG_TESTS_FIXTURES_HPP
#define MANCALOG_TESTS_FIXTURES_HPP

#include <string>

#include "mancalog/bound.hpp"
#include "mancalog/interpretation.hpp"
#include "mancalog/program.hpp"

namespace fixtures {

using namespace mancalog;

inline Bound B(const std::string& text) { return *parse_bound_text(text); }
inline Rational R(const std::string& text) { return *parse_rational(text); }

/// Five agents; agents 1, 3, 5 male and 2, 4 female.  Strong ties
/// 1<->2, 3->4, 4->3, 4->5; weak ties 1->3, 2->3.  Fluent labels model
/// which of two webpages each agent watches.
struct Social {
  Program p;
  LabelId male, female, strongTie, weakTie, watchesA, watchesB;
  NodeId n1, n2, n3, n4, n5;
  CompId e12, e21, e13, e23, e34, e43, e45;

  explicit Social(int t_max = 1) {
    p.t_max = t_max;
    male = *p.registry.add("male", false);
    female = *p.registry.add("female", false);
    strongTie = *p.registry.add("strongTie", false);
    weakTie = *p.registry.add("weakTie", false);
    watchesA = *p.registry.add("watchesA", true);
    watchesB = *p.registry.add("watchesB", true);
    n1 = *p.network.add_node("1");
    n2 = *p.network.add_node("2");
    n3 = *p.network.add_node("3");
    n4 = *p.network.add_node("4");
    n5 = *p.network.add_node("5");
    e12 = p.network.edge_comp(*p.network.add_edge(n1, n2));
    e21 = p.network.edge_comp(*p.network.add_edge(n2, n1));
    e13 = p.network.edge_comp(*p.network.add_edge(n1, n3));
    e23 = p.network.edge_comp(*p.network.add_edge(n2, n3));
    e34 = p.network.edge_comp(*p.network.add_edge(n3, n4));
    e43 = p.network.edge_comp(*p.network.add_edge(n4, n3));
    e45 = p.network.edge_comp(*p.network.add_edge(n4, n5));
  }

  Fact fact(LabelId l, const std::string& bnd, CompId c, int t1, int t2) const {
    return Fact{Atom{l, B(bnd)}, c, t1, t2, {}};
  }

  // The reference fact inventory (male/female/tie declarations for agents
  // 1 and 3, plus the two watchesA seeds).
  Fact f1() const { return fact(male, "[1,1]", n1, 0, p.t_max); }
  Fact f2() const { return fact(female, "[1,1]", n1, 0, p.t_max); }
  Fact f3() const { return fact(male, "[1,1]", n3, 0, p.t_max); }
  Fact f4() const { return fact(strongTie, "[1,1]", e12, 0, p.t_max); }
  Fact f5() const { return fact(strongTie, "[1,1]", e21, 0, p.t_max); }
  Fact f6() const { return fact(weakTie, "[1,1]", e23, 0, p.t_max); }
  Fact f7() const { return fact(watchesA, "[0.8,1]", n1, 0, p.t_max); }
  Fact f8() const { return fact(watchesA, "[0.5,1]", n2, 0, p.t_max); }

  // watchesA tightens for females whose strong ties mostly watched A two
  // steps earlier.
  Rule r1() const {
    Rule r;
    r.head = watchesA;
    r.delta_t = 2;
    r.target = Formula::atom(female, B("[1,1]"));
    r.neighbor.edge_formula = Formula::atom(strongTie, B("[0.9,1]"));
    r.neighbor.node_formula = Formula::top();
    r.neighbor.trigger = {Atom{watchesA, B("[0.9,1]")}};
    r.neighbor.influence = *make_softtip(R("0.5"), B("[0.7,1]"));
    return r;
  }

  // watchesB tightens for males whose neighbors mostly watched B.
  Rule r2() const {
    Rule r;
    r.head = watchesB;
    r.delta_t = 1;
    r.target = Formula::atom(male, B("[1,1]"));
    r.neighbor.edge_formula = Formula::top();
    r.neighbor.node_formula = Formula::top();
    r.neighbor.trigger = {Atom{watchesB, B("[0.8,1]")}};
    r.neighbor.influence = *make_softtip(R("0.5"), B("[0.7,1]"));
    return r;
  }

  // Note: the head label is non-fluent, so this constraint is exercised
  // only by satisfaction-level tests; validation rejects it.
  IntegrityConstraint gender_ic() const {
    IntegrityConstraint ic;
    ic.head = Atom{male, B("[0,0]")};
    ic.body = {Atom{female, B("[1,1]")}};
    return ic;
  }

  // Fluent-headed constraint usable in validated programs: devoted A
  // watchers keep their B weight low.
  IntegrityConstraint watch_ic() const {
    IntegrityConstraint ic;
    ic.head = Atom{watchesB, B("[0,0.3]")};
    ic.body = {Atom{watchesA, B("[0.8,1]")}};
    return ic;
  }

  /// Writes the reference network interpretation into time slice t of i.
  void fill_reference_slice(Interpretation& i, int t) const {
    auto set = [&](CompId c, LabelId l, const std::string& b) {
      i.set(t, c, l, B(b));
    };
    const struct { NodeId v; const char *a, *b; } nodes[] = {
        {n1, "[0.9,1]", "[0.8,1]"},
        {n2, "[0,0.3]", "[0,0.2]"},
        {n3, "[0.6,1]", "[0,0.2]"},
        {n4, "[0,0.2]", "[0.9,1]"},
        {n5, "[0,0.2]", "[0.7,1]"},
    };
    for (auto& row : nodes) {
      bool is_male = row.v == n1 || row.v == n3 || row.v == n5;
      set(row.v, male, is_male ? "[1,1]" : "[0,0]");
      set(row.v, female, is_male ? "[0,0]" : "[1,1]");
      set(row.v, watchesA, row.a);
      set(row.v, watchesB, row.b);
    }
    for (CompId e : {e12, e21, e34, e43, e45}) {
      set(e, strongTie, "[1,1]");
      set(e, weakTie, "[0,0]");
    }
    for (CompId e : {e13, e23}) {
      set(e, strongTie, "[0,0]");
      set(e, weakTie, "[1,1]");
    }
  }

  /// Reference interpretation with the table worlds at t=0 and the t=1
  /// slice adjusted so that the watchesB cascade rule is satisfied
  /// (agents 3 and 5 pick up at least the tipped bound).
  Interpretation reference_interp() const {
    Interpretation i(p.t_max, p.network.num_components());
    for (int t = 0; t <= p.t_max; ++t) fill_reference_slice(i, t);
    if (p.t_max >= 1) {
      i.set(1, n5, watchesB, B("[0.8,1]"));
      i.set(1, n3, watchesB, B("[0.7,1]"));
    }
    return i;
  }

  /// Fluent seed facts pinning the table's watchesA/watchesB values at
  /// t=0, plus the non-fluent class and tie facts over the horizon.
  void add_reference_facts(Program& prog) const {
    auto nf = [&](LabelId l, const std::string& b, CompId c) {
      prog.facts.push_back(fact(l, b, c, 0, p.t_max));
    };
    auto seed = [&](LabelId l, const std::string& b, CompId c) {
      prog.facts.push_back(fact(l, b, c, 0, 0));
    };
    for (NodeId v : {n1, n3, n5}) {
      nf(male, "[1,1]", v);
      nf(female, "[0,0]", v);
    }
    for (NodeId v : {n2, n4}) {
      nf(male, "[0,0]", v);
      nf(female, "[1,1]", v);
    }
    for (CompId e : {e12, e21, e34, e43, e45}) {
      nf(strongTie, "[1,1]", e);
      nf(weakTie, "[0,0]", e);
    }
    for (CompId e : {e13, e23}) {
      nf(strongTie, "[0,0]", e);
      nf(weakTie, "[1,1]", e);
    }
    seed(watchesA, "[0.9,1]", n1);
    seed(watchesA, "[0,0.3]", n2);
    seed(watchesA, "[0.6,1]", n3);
    seed(watchesA, "[0,0.2]", n4);
    seed(watchesA, "[0,0.2]", n5);
    seed(watchesB, "[0.8,1]", n1);
    seed(watchesB, "[0,0.2]", n2);
    seed(watchesB, "[0,0.2]", n3);
    seed(watchesB, "[0.9,1]", n4);
    seed(watchesB, "[0.7,1]", n5);
  }

  /// The cascade program used by the canonical-sweep checks: the table
  /// worlds as facts, the watchesA seed on agent 1 over the horizon, and
  /// the watchesB cascade rule.
  Program cascade_program() const {
    Program prog = p;
    add_reference_facts(prog);
    prog.facts.push_back(f7());
    prog.rules.push_back(r2());
    return prog;
  }
};

}  // namespace fixtures

#endif
