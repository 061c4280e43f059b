#ifndef MANCALOG_PROGRAM_HPP
#define MANCALOG_PROGRAM_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mancalog/bound.hpp"
#include "mancalog/network.hpp"

namespace mancalog {

/// Source position attached to parsed program elements; (0,0) for
/// programmatically constructed ones.
struct SourceSpan {
  int line = 0;
  int column = 0;
  int length = 0;
  bool operator==(const SourceSpan&) const = default;
};

struct Atom {
  LabelId label = -1;
  Bound bound;
  bool operator==(const Atom&) const = default;
};

/// Immutable formula tree over network atoms.  True is the tautology
/// (the arbitrary-label <L,[0,1]> of the abstract syntax).
class Formula {
public:
  enum class Kind { True, Atom, Not, And, Or };

  Formula() : Formula(top()) {}

  static Formula top();
  static Formula atom(LabelId label, Bound bound);
  static Formula negate(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);

  Kind kind() const { return node_->kind; }
  const Atom& atom() const { return node_->atom; }
  const Formula& child(int i) const { return node_->kids[i]; }
  int num_children() const { return static_cast<int>(node_->kids.size()); }

  bool is_top() const { return node_->kind == Kind::True; }

  // Applies fn to every atom leaf.
  void for_each_atom(const std::function<void(const Atom&)>& fn) const;
  bool contains_fluent(const LabelRegistry& reg) const;
  bool contains_nonfluent(const LabelRegistry& reg) const;
  // True when the formula has no negation (used by monotonicity tests).
  bool is_positive() const;

  bool operator==(const Formula& o) const;

private:
  struct Node {
    Kind kind;
    Atom atom;
    std::vector<Formula> kids;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Fact {
  Atom atom;
  CompId comp = -1;
  int t1 = 0;
  int t2 = 0;
  SourceSpan span;
  bool operator==(const Fact& o) const {
    return atom == o.atom && comp == o.comp && t1 == o.t1 && t2 == o.t2;
  }
};

struct IntegrityConstraint {
  Atom head;
  std::vector<Atom> body;  // conjunction; empty = tautological body
  SourceSpan span;
  bool operator==(const IntegrityConstraint& o) const {
    return head == o.head && body == o.body;
  }
};

/// A named influence function (qualifying count, eligible count) -> Bound.
/// All influence functions return [0,1] when the eligible count is zero.
class InfluenceSpec {
public:
  InfluenceSpec() = default;
  InfluenceSpec(std::string text, std::function<Bound(std::size_t, std::size_t)> fn)
      : text_(std::move(text)), fn_(std::move(fn)) {}

  Bound eval(std::size_t qualifying, std::size_t eligible) const {
    if (eligible == 0) return Bound::full();
    return fn_(qualifying, eligible);
  }

  // Canonical textual form, e.g. "softtip(0.5,[0.7,1])"; also the
  // identity used for program equality.
  const std::string& text() const { return text_; }

  bool operator==(const InfluenceSpec& o) const { return text_ == o.text_; }

private:
  std::string text_ = "const([0,1])";
  std::function<Bound(std::size_t, std::size_t)> fn_ =
      [](std::size_t, std::size_t) { return Bound::full(); };
};

// Builtin influence functions, defaults per the standard tipping family.
// Each returns nullopt when the parameters are rejected (threshold outside
// [0,1]).
std::optional<InfluenceSpec> make_tip(const Rational& theta = Rational(1, 2));
std::optional<InfluenceSpec> make_softtip(const Rational& theta = Rational(1, 2),
                                          const Bound& success = *parse_bound_text("[0.7,1]"));
std::optional<InfluenceSpec> make_negtip(const Bound& success = *parse_bound_text("[0,0.2]"));
std::optional<InfluenceSpec> make_constant(const Bound& b);

// Builtin lookup by name with optional threshold/bound parameters; used by
// the DSL parser.  Names: tip, softtip, negtip, const.
std::optional<InfluenceSpec> builtin_influence(
    const std::string& name,
    const std::optional<Rational>& theta = std::nullopt,
    const std::optional<Bound>& bound = std::nullopt);

struct NeighborCriterion {
  Formula edge_formula;   // non-fluent, over the inbound edge
  Formula node_formula;   // non-fluent, over the neighbor node
  std::vector<Atom> trigger;  // conjunction h; may mix fluencies
  InfluenceSpec influence;
  bool operator==(const NeighborCriterion&) const = default;
};

struct Rule {
  LabelId head = -1;      // fluent label
  int delta_t = 1;
  Formula target;         // non-fluent target criteria f
  NeighborCriterion neighbor;
  SourceSpan span;
  bool operator==(const Rule& o) const {
    return head == o.head && delta_t == o.delta_t && target == o.target &&
           neighbor == o.neighbor;
  }
};

struct Program {
  LabelRegistry registry;
  Network network;
  int t_max = 0;
  std::vector<Fact> facts;
  std::vector<Rule> rules;
  std::vector<IntegrityConstraint> constraints;

  // |P|: the number of facts, rules, and constraints.
  int size() const {
    return static_cast<int>(facts.size() + rules.size() + constraints.size());
  }

  bool operator==(const Program& o) const {
    return registry == o.registry && network == o.network && t_max == o.t_max &&
           facts == o.facts && rules == o.rules && constraints == o.constraints;
  }
};

struct Violation {
  std::string where;    // e.g. "fact 3", "rule 1"
  std::string message;
  SourceSpan span;
};

/// Checks every structural invariant of a program; returns one entry per
/// violation (empty means valid).  Pure; never throws.
std::vector<Violation> validate(const Program& p);

}  // namespace mancalog

#endif
