#include <doctest.h>

#include "fixtures.hpp"
#include "mancalog/program.hpp"

using namespace mancalog;
using fixtures::B;
using fixtures::R;
using fixtures::Social;

TEST_CASE("label registry partitions fluency") {
  LabelRegistry reg;
  auto a = reg.add("adopted", true);
  REQUIRE(a);
  CHECK(reg.add("adopted", true) == a);          // re-adding is idempotent
  CHECK(!reg.add("adopted", false));             // fluency clash
  CHECK(reg.is_fluent(*a));
  CHECK(*reg.find("adopted") == *a);
  CHECK(!reg.find("missing"));
}

TEST_CASE("network components and in-edges") {
  Social s;
  Network& net = s.p.network;
  CHECK(net.num_nodes() == 5);
  CHECK(net.num_edges() == 7);
  CHECK(net.num_components() == 12);
  CHECK(!net.add_edge(s.n1, s.n2));  // duplicate edge rejected
  CHECK(net.comp_name(s.n1) == "node:1");
  CHECK(net.comp_name(s.e12) == "edge:1->2");
  // In-neighbors of node 3: 1 (weak), 2 (weak), 4 (strong).
  std::vector<NodeId> in;
  for (auto [src, e] : net.in_edges(s.n3)) in.push_back(src);
  std::sort(in.begin(), in.end());
  CHECK(in == std::vector<NodeId>{s.n1, s.n2, s.n4});
  CHECK(net.max_in_degree() == 3);
}

TEST_CASE("formula classification") {
  Social s;
  Formula f = Formula::conj(Formula::atom(s.female, B("[1,1]")),
                            Formula::negate(Formula::atom(s.watchesA, B("[0.5,0.9]"))));
  CHECK(f.contains_fluent(s.p.registry));
  CHECK(f.contains_nonfluent(s.p.registry));
  CHECK(!f.is_positive());
  Formula g = Formula::atom(s.male, B("[1,1]"));
  CHECK(!g.contains_fluent(s.p.registry));
  CHECK(g.is_positive());
  CHECK(Formula::top().is_positive());
  CHECK(f == f);
  CHECK(!(f == g));
}

TEST_CASE("builtin influence literals") {
  auto tip = *make_tip();
  auto soft = *make_softtip();
  auto neg = *make_negtip();
  CHECK(tip.eval(1, 2) == B("[1,1]"));
  CHECK(tip.eval(0, 2) == B("[0,1]"));
  CHECK(soft.eval(2, 3) == B("[0.7,1]"));
  CHECK(soft.eval(1, 3) == B("[0,1]"));
  CHECK(neg.eval(3, 3) == B("[0,0.2]"));
  CHECK(neg.eval(2, 3) == B("[0,1]"));
  CHECK(tip.eval(0, 0) == B("[0,1]"));
  CHECK(soft.eval(0, 0) == B("[0,1]"));
  CHECK(neg.eval(0, 0) == B("[0,1]"));
  auto c = *make_constant(B("[0.3,0.6]"));
  CHECK(c.eval(5, 9) == B("[0.3,0.6]"));
  CHECK(c.eval(0, 0) == B("[0,1]"));
}

TEST_CASE("builtin influence lookup and parameter validation") {
  CHECK(builtin_influence("tip", R("0.3"), std::nullopt));
  CHECK(builtin_influence("softtip", R("0.5"), B("[0.7,1]")));
  CHECK(builtin_influence("negtip", std::nullopt, B("[0,0.2]")));
  CHECK(builtin_influence("const", std::nullopt, B("[0.4,0.8]")));
  CHECK(!builtin_influence("unknown"));
  CHECK(!make_tip(R("3/2")));  // threshold outside [0,1]
  auto soft = builtin_influence("softtip", R("0.5"), B("[0.7,1]"));
  REQUIRE(soft);
  CHECK(soft->text() == "softtip(0.5,[0.7,1])");
  CHECK(*soft == *make_softtip());
}

TEST_CASE("influence functions honor the tightening axiom") {
  std::vector<InfluenceSpec> builtins = {
      *make_tip(), *make_tip(R("0.3")), *make_softtip(),
      *make_softtip(R("0.7"), B("[0.6,0.9]")), *make_negtip(),
      *make_negtip(B("[0,0.5]")), *make_constant(B("[0.2,0.8]"))};
  for (const auto& ifl : builtins) {
    for (std::size_t y = 1; y <= 64; ++y)
      for (std::size_t x = 1; x <= y; ++x)
        CHECK(is_subset(ifl.eval(x, y), ifl.eval(x - 1, y)));
  }
}

TEST_CASE("validate accepts the reference program") {
  Social s(2);
  Program p = s.p;
  p.facts = {s.f1(), s.f3(), s.f4(), s.f5(), s.f6(), s.f7(), s.f8()};
  p.rules = {s.r1(), s.r2()};
  p.constraints = {s.watch_ic()};
  CHECK(validate(p).empty());
}

TEST_CASE("validate flags invariant breaches") {
  Social s(2);

  SUBCASE("duplicate non-fluent fact per label and component") {
    Program p = s.p;
    p.facts = {s.fact(s.male, "[1,1]", s.n1, 0, 2),
               s.fact(s.male, "[0,0]", s.n1, 0, 2)};
    CHECK(validate(p).size() == 1);
  }
  SUBCASE("non-fluent fact must span the horizon") {
    Program p = s.p;
    p.facts = {s.fact(s.male, "[1,1]", s.n1, 0, 1)};
    CHECK(!validate(p).empty());
  }
  SUBCASE("fact window outside the horizon") {
    Program p = s.p;
    p.facts = {s.fact(s.watchesA, "[0,1]", s.n1, 1, 3)};
    CHECK(!validate(p).empty());
  }
  SUBCASE("fluent label in target criteria") {
    Program p = s.p;
    Rule r = s.r1();
    r.target = Formula::atom(s.watchesA, B("[1,1]"));
    p.rules = {r};
    CHECK(!validate(p).empty());
  }
  SUBCASE("fluent label in neighbor node criteria") {
    Program p = s.p;
    Rule r = s.r1();
    r.neighbor.node_formula = Formula::atom(s.watchesB, B("[1,1]"));
    p.rules = {r};
    CHECK(!validate(p).empty());
  }
  SUBCASE("non-fluent rule head") {
    Program p = s.p;
    Rule r = s.r1();
    r.head = s.male;
    p.rules = {r};
    CHECK(!validate(p).empty());
  }
  SUBCASE("zero delta_t") {
    Program p = s.p;
    Rule r = s.r2();
    r.delta_t = 0;
    p.rules = {r};
    CHECK(!validate(p).empty());
  }
  SUBCASE("non-fluent constraint head") {
    Program p = s.p;
    IntegrityConstraint ic = s.gender_ic();
    ic.head = Atom{s.female, B("[0,0]")};
    ic.body = {Atom{s.watchesA, B("[1,1]")}};
    p.constraints = {ic};
    CHECK(!validate(p).empty());
  }
  SUBCASE("validate is pure and repeatable") {
    Program p = s.p;
    p.facts = {s.f7()};
    CHECK(validate(p).empty());
    CHECK(validate(p).empty());
  }
}
