#include "mancalog/bound.hpp"

#include <cctype>

namespace mancalog {

namespace {

// Order on lower endpoints: an open lower endpoint at the same value is
// strictly "greater" (tighter) than a closed one.
bool lower_greater(const Rational& a, bool a_open, const Rational& b, bool b_open) {
  if (a != b) return a > b;
  return a_open && !b_open;
}

// Order on upper endpoints: an open upper endpoint at the same value is
// strictly "less" (tighter) than a closed one.
bool upper_less(const Rational& a, bool a_open, const Rational& b, bool b_open) {
  if (a != b) return a < b;
  return a_open && !b_open;
}

}  // namespace

Bound Bound::empty() {
  Bound b;
  b.lo_ = 0;
  b.hi_ = 0;
  b.lo_open_ = false;
  b.hi_open_ = false;
  b.empty_ = true;
  return b;
}

Bound Bound::closed(Rational lo, Rational hi) {
  return make(std::move(lo), false, std::move(hi), false);
}

Bound Bound::make(Rational lo, bool lo_open, Rational hi, bool hi_open) {
  if (lo > hi) return empty();
  if (lo == hi && (lo_open || hi_open)) return empty();
  Bound b;
  b.lo_ = std::move(lo);
  b.hi_ = std::move(hi);
  b.lo_open_ = lo_open;
  b.hi_open_ = hi_open;
  return b;
}

bool Bound::is_full() const {
  return !empty_ && !lo_open_ && !hi_open_ && lo_ == 0 && hi_ == 1;
}

std::string Bound::to_string() const {
  if (empty_) return "empty";
  std::string s;
  s += lo_open_ ? '(' : '[';
  s += format_rational(lo_);
  s += ',';
  s += format_rational(hi_);
  s += hi_open_ ? ')' : ']';
  return s;
}

Bound intersect(const Bound& a, const Bound& b) {
  if (a.is_empty() || b.is_empty()) return Bound::empty();
  const bool a_lo = lower_greater(a.lower(), a.lower_open(), b.lower(), b.lower_open());
  const bool a_hi = upper_less(a.upper(), a.upper_open(), b.upper(), b.upper_open());
  const Rational& lo = a_lo ? a.lower() : b.lower();
  const bool lo_open = a_lo ? a.lower_open() : b.lower_open();
  const Rational& hi = a_hi ? a.upper() : b.upper();
  const bool hi_open = a_hi ? a.upper_open() : b.upper_open();
  return Bound::make(lo, lo_open, hi, hi_open);
}

Bound hull(const Bound& a, const Bound& b) {
  if (a.is_empty()) return b;
  if (b.is_empty()) return a;
  const bool a_lo = lower_greater(a.lower(), a.lower_open(), b.lower(), b.lower_open());
  const bool a_hi = upper_less(a.upper(), a.upper_open(), b.upper(), b.upper_open());
  // Hull takes the lesser lower endpoint and the greater upper endpoint.
  const Rational& lo = a_lo ? b.lower() : a.lower();
  const bool lo_open = a_lo ? b.lower_open() : a.lower_open();
  const Rational& hi = a_hi ? b.upper() : a.upper();
  const bool hi_open = a_hi ? b.upper_open() : a.upper_open();
  return Bound::make(lo, lo_open, hi, hi_open);
}

bool is_subset(const Bound& a, const Bound& b) {
  if (a.is_empty()) return true;
  if (b.is_empty()) return false;
  // a's lower endpoint must be at or above b's, a's upper at or below b's.
  const bool lo_ok =
      a.lower() > b.lower() ||
      (a.lower() == b.lower() && !(b.lower_open() && !a.lower_open()));
  const bool hi_ok =
      a.upper() < b.upper() ||
      (a.upper() == b.upper() && !(b.upper_open() && !a.upper_open()));
  return lo_ok && hi_ok;
}

std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    auto num = parse_rational(text.substr(0, slash));
    auto den = parse_rational(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return *num / *den;
  }
  boost::multiprecision::cpp_int ipart = 0;
  boost::multiprecision::cpp_int scale = 1;
  size_t i = 0;
  bool any_digit = false;
  for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
    ipart = ipart * 10 + (text[i] - '0');
    any_digit = true;
  }
  if (i < text.size()) {
    if (text[i] != '.') return std::nullopt;
    ++i;
    bool frac_digit = false;
    for (; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
      ipart = ipart * 10 + (text[i] - '0');
      scale *= 10;
      frac_digit = true;
    }
    if (!frac_digit || !any_digit) return std::nullopt;
  }
  if (!any_digit) return std::nullopt;
  return Rational(ipart, scale);
}

std::string format_rational(const Rational& r) {
  using boost::multiprecision::cpp_int;
  cpp_int num = numerator(r);
  cpp_int den = denominator(r);
  // Decimal form exists iff den = 2^a * 5^b; scale to a power of ten.
  cpp_int d = den;
  int twos = 0, fives = 0;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  if (d != 1) return num.str() + "/" + den.str();
  int k = std::max(twos, fives);
  for (int i = twos; i < k; ++i) num *= 2;
  for (int i = fives; i < k; ++i) num *= 5;
  if (k == 0) return num.str();
  std::string digits = num.str();
  if (static_cast<int>(digits.size()) <= k)
    digits.insert(0, k + 1 - digits.size(), '0');
  digits.insert(digits.size() - k, ".");
  return digits;
}

std::optional<Bound> parse_bound_text(std::string_view text) {
  // Trim surrounding whitespace.
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text == "empty") return Bound::empty();
  if (text == "true") return Bound::full();
  if (text.size() < 5) return std::nullopt;
  bool lo_open, hi_open;
  if (text.front() == '[') lo_open = false;
  else if (text.front() == '(') lo_open = true;
  else return std::nullopt;
  if (text.back() == ']') hi_open = false;
  else if (text.back() == ')') hi_open = true;
  else return std::nullopt;
  std::string_view body = text.substr(1, text.size() - 2);
  auto comma = body.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto lo = parse_rational(trim(body.substr(0, comma)));
  auto hi = parse_rational(trim(body.substr(comma + 1)));
  if (!lo || !hi) return std::nullopt;
  if (*lo < 0 || *lo > 1 || *hi < 0 || *hi > 1) return std::nullopt;
  return Bound::make(*lo, lo_open, *hi, hi_open);
}

}  // namespace mancalog
