#ifndef MANCALOG_BOUND_HPP
#define MANCALOG_BOUND_HPP

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace mancalog {

using Rational = boost::multiprecision::cpp_rational;

/// Parses a non-negative decimal literal ("1", "0.75") or a fraction
/// ("3/4") into an exact rational.  Returns nullopt on malformed input.
std::optional<Rational> parse_rational(std::string_view text);

/// Exact textual form: decimal when the denominator divides a power of
/// ten, "num/den" otherwise.  parse_rational inverts this exactly.
std::string format_rational(const Rational& r);

/// A sub-interval of [0,1] with independently open/closed endpoints, or
/// the distinguished empty bound.  Values are normalized on construction:
/// every representation of the empty set collapses to the one Empty value,
/// so equality is structural.  The full interval [0,1] (closed on both
/// sides) is the lattice bottom element.
class Bound {
public:
  // Defaults to the full interval [0,1].
  Bound() = default;

  static Bound full() { return Bound(); }
  static Bound empty();
  static Bound closed(Rational lo, Rational hi);
  // General constructor; normalizes degenerate intervals to Empty.
  // Endpoints must already lie in [0,1] (callers validate ranges).
  static Bound make(Rational lo, bool lo_open, Rational hi, bool hi_open);

  bool is_empty() const { return empty_; }
  bool is_full() const;

  // Accessors are meaningless on Empty; they return the canonical 0/0
  // closed endpoints stored for structural equality.
  const Rational& lower() const { return lo_; }
  const Rational& upper() const { return hi_; }
  bool lower_open() const { return lo_open_; }
  bool upper_open() const { return hi_open_; }

  bool operator==(const Bound& o) const = default;

  std::string to_string() const;

private:
  Rational lo_{0};
  Rational hi_{1};
  bool lo_open_ = false;
  bool hi_open_ = false;
  bool empty_ = false;
};

/// Set intersection (the lattice join in the tightening order).
/// [0,1] is the identity, Empty is absorbing.
Bound intersect(const Bound& a, const Bound& b);

/// Smallest interval containing both arguments (the lattice meet).
/// Empty is the identity, [0,1] is absorbing.
Bound hull(const Bound& a, const Bound& b);

/// True iff every point of a lies in b, honoring openness.
/// Empty is a subset of everything; everything is a subset of [0,1].
bool is_subset(const Bound& a, const Bound& b);

inline bool is_empty(const Bound& a) { return a.is_empty(); }

/// Parses the textual interval form: "[l,u]", "(l,u]", "[l,u)", "(l,u)",
/// "empty", or "true" (alias for [0,1]).  Rejects endpoints outside [0,1].
std::optional<Bound> parse_bound_text(std::string_view text);

}  // namespace mancalog

#endif
