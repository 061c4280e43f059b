#include "mancalog/program.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mancalog {

Formula Formula::top() {
  static const auto node = std::make_shared<const Node>(Node{Kind::True, {}, {}});
  return Formula(node);
}

Formula Formula::atom(LabelId label, Bound bound) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Atom, Atom{label, std::move(bound)}, {}}));
}

Formula Formula::negate(Formula f) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Not, {}, {std::move(f)}}));
}

Formula Formula::conj(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::And, {}, {std::move(a), std::move(b)}}));
}

Formula Formula::disj(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Or, {}, {std::move(a), std::move(b)}}));
}

void Formula::for_each_atom(const std::function<void(const Atom&)>& fn) const {
  if (node_->kind == Kind::Atom) {
    fn(node_->atom);
    return;
  }
  for (const auto& k : node_->kids) k.for_each_atom(fn);
}

bool Formula::contains_fluent(const LabelRegistry& reg) const {
  bool found = false;
  for_each_atom([&](const Atom& a) {
    if (a.label >= 0 && a.label < reg.size() && reg.is_fluent(a.label)) found = true;
  });
  return found;
}

bool Formula::contains_nonfluent(const LabelRegistry& reg) const {
  bool found = false;
  for_each_atom([&](const Atom& a) {
    if (a.label >= 0 && a.label < reg.size() && !reg.is_fluent(a.label)) found = true;
  });
  return found;
}

bool Formula::is_positive() const {
  if (node_->kind == Kind::Not) return false;
  for (const auto& k : node_->kids)
    if (!k.is_positive()) return false;
  return true;
}

bool Formula::operator==(const Formula& o) const {
  if (node_ == o.node_) return true;
  if (node_->kind != o.node_->kind) return false;
  if (node_->kind == Kind::Atom) return node_->atom == o.node_->atom;
  if (node_->kids.size() != o.node_->kids.size()) return false;
  for (size_t i = 0; i < node_->kids.size(); ++i)
    if (!(node_->kids[i] == o.node_->kids[i])) return false;
  return true;
}

namespace {

bool theta_ok(const Rational& theta) { return theta >= 0 && theta <= 1; }

// x/y >= theta over exact rationals: x*den >= y*num.
bool crosses(std::size_t x, std::size_t y, const Rational& theta) {
  using boost::multiprecision::cpp_int;
  return cpp_int(x) * denominator(theta) >= cpp_int(y) * numerator(theta);
}

}  // namespace

std::optional<InfluenceSpec> make_tip(const Rational& theta) {
  if (!theta_ok(theta)) return std::nullopt;
  std::string text = "tip(" + format_rational(theta) + ")";
  return InfluenceSpec(text, [theta](std::size_t x, std::size_t y) {
    return crosses(x, y, theta) ? Bound::closed(1, 1) : Bound::full();
  });
}

std::optional<InfluenceSpec> make_softtip(const Rational& theta, const Bound& success) {
  if (!theta_ok(theta)) return std::nullopt;
  std::string text = "softtip(" + format_rational(theta) + "," + success.to_string() + ")";
  return InfluenceSpec(text, [theta, success](std::size_t x, std::size_t y) {
    return crosses(x, y, theta) ? success : Bound::full();
  });
}

std::optional<InfluenceSpec> make_negtip(const Bound& success) {
  std::string text = "negtip(" + success.to_string() + ")";
  return InfluenceSpec(text, [success](std::size_t x, std::size_t y) {
    return x == y ? success : Bound::full();
  });
}

std::optional<InfluenceSpec> make_constant(const Bound& b) {
  std::string text = "const(" + b.to_string() + ")";
  return InfluenceSpec(text, [b](std::size_t, std::size_t) { return b; });
}

std::optional<InfluenceSpec> builtin_influence(const std::string& name,
                                               const std::optional<Rational>& theta,
                                               const std::optional<Bound>& bound) {
  if (name == "tip") {
    if (bound) return std::nullopt;
    return make_tip(theta.value_or(Rational(1, 2)));
  }
  if (name == "softtip") {
    return make_softtip(theta.value_or(Rational(1, 2)),
                        bound.value_or(*parse_bound_text("[0.7,1]")));
  }
  if (name == "negtip") {
    if (theta) return std::nullopt;
    return make_negtip(bound.value_or(*parse_bound_text("[0,0.2]")));
  }
  if (name == "const") {
    if (theta || !bound) return std::nullopt;
    return make_constant(*bound);
  }
  return std::nullopt;
}

namespace {

bool label_ok(const Atom& a, const LabelRegistry& reg) {
  return a.label >= 0 && a.label < reg.size();
}

void check_formula_labels(const Formula& f, const LabelRegistry& reg,
                          const std::string& where, const SourceSpan& span,
                          std::vector<Violation>& out) {
  f.for_each_atom([&](const Atom& a) {
    if (!label_ok(a, reg))
      out.push_back({where, "unregistered label in formula", span});
  });
}

}  // namespace

std::vector<Violation> validate(const Program& p) {
  std::vector<Violation> out;
  const auto& reg = p.registry;
  const auto& net = p.network;

  if (p.t_max < 0)
    out.push_back({"program", "t_max must be non-negative", {}});

  std::map<std::pair<LabelId, CompId>, int> nonfluent_seen;
  for (size_t i = 0; i < p.facts.size(); ++i) {
    const Fact& f = p.facts[i];
    std::string where = "fact " + std::to_string(i + 1);
    if (!label_ok(f.atom, reg)) {
      out.push_back({where, "unregistered label", f.span});
      continue;
    }
    if (f.comp < 0 || f.comp >= net.num_components()) {
      out.push_back({where, "component does not exist in the network", f.span});
      continue;
    }
    if (f.t1 < 0 || f.t2 > p.t_max || f.t1 > f.t2)
      out.push_back({where, "fact window outside [0,t_max]", f.span});
    if (!reg.is_fluent(f.atom.label)) {
      if (f.t1 != 0 || f.t2 != p.t_max)
        out.push_back({where, "non-fluent fact must span [0,t_max]", f.span});
      auto key = std::make_pair(f.atom.label, f.comp);
      auto [it, fresh] = nonfluent_seen.emplace(key, static_cast<int>(i));
      if (!fresh)
        out.push_back({where,
                       "duplicate non-fluent fact for label '" + reg.name(f.atom.label) +
                           "' on " + net.comp_name(f.comp) + " (also fact " +
                           std::to_string(it->second + 1) + ")",
                       f.span});
    }
  }

  for (size_t i = 0; i < p.constraints.size(); ++i) {
    const IntegrityConstraint& ic = p.constraints[i];
    std::string where = "constraint " + std::to_string(i + 1);
    if (!label_ok(ic.head, reg)) {
      out.push_back({where, "unregistered head label", ic.span});
    } else if (!reg.is_fluent(ic.head.label)) {
      out.push_back({where, "constraint head label must be fluent", ic.span});
    }
    for (const Atom& a : ic.body)
      if (!label_ok(a, reg))
        out.push_back({where, "unregistered label in body", ic.span});
  }

  // The tightening property is swept over eligible counts up to the max
  // in-degree.
  const int sweep_y = std::min(net.max_in_degree(), 64);
  for (size_t i = 0; i < p.rules.size(); ++i) {
    const Rule& r = p.rules[i];
    std::string where = "rule " + std::to_string(i + 1);
    if (r.head < 0 || r.head >= reg.size()) {
      out.push_back({where, "unregistered head label", r.span});
      continue;
    }
    if (!reg.is_fluent(r.head))
      out.push_back({where, "rule head label must be fluent", r.span});
    if (r.delta_t <= 0)
      out.push_back({where, "delta_t must be at least 1", r.span});
    check_formula_labels(r.target, reg, where, r.span, out);
    check_formula_labels(r.neighbor.edge_formula, reg, where, r.span, out);
    check_formula_labels(r.neighbor.node_formula, reg, where, r.span, out);
    for (const Atom& a : r.neighbor.trigger)
      if (!label_ok(a, reg))
        out.push_back({where, "unregistered label in trigger", r.span});
    if (r.target.contains_fluent(reg))
      out.push_back({where, "target criteria must be non-fluent", r.span});
    if (r.neighbor.edge_formula.contains_fluent(reg))
      out.push_back({where, "edge criteria must be non-fluent", r.span});
    if (r.neighbor.node_formula.contains_fluent(reg))
      out.push_back({where, "node criteria must be non-fluent", r.span});
    for (int y = 1; y <= sweep_y; ++y) {
      Bound prev = r.neighbor.influence.eval(0, y);
      for (int x = 1; x <= y; ++x) {
        Bound cur = r.neighbor.influence.eval(x, y);
        if (!is_subset(cur, prev)) {
          out.push_back({where,
                         "influence function violates the subset axiom at x=" +
                             std::to_string(x) + ", y=" + std::to_string(y),
                         r.span});
          y = sweep_y;  // one report per rule is enough
          break;
        }
        prev = cur;
      }
    }
  }
  return out;
}

}  // namespace mancalog
