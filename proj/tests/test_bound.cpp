#include <doctest.h>

#include <random>

#include "mancalog/bound.hpp"

using namespace mancalog;

namespace {
Bound B(const char* text) { return *parse_bound_text(text); }
}

TEST_CASE("rational parsing and exact round trip") {
  CHECK(*parse_rational("0.7") == Rational(7, 10));
  CHECK(*parse_rational("1") == Rational(1));
  CHECK(*parse_rational("0.75") == Rational(3, 4));
  CHECK(*parse_rational("3/4") == Rational(3, 4));
  CHECK(!parse_rational(""));
  CHECK(!parse_rational("1.2.3"));
  CHECK(!parse_rational("-0.5"));
  CHECK(format_rational(Rational(7, 10)) == "0.7");
  CHECK(format_rational(Rational(1)) == "1");
  CHECK(format_rational(Rational(1, 3)) == "1/3");
  for (const char* s : {"0", "1", "0.5", "0.125", "2/7", "19/20"}) {
    auto r = parse_rational(s);
    REQUIRE(r);
    CHECK(*parse_rational(format_rational(*r)) == *r);
  }
}

TEST_CASE("bound parsing and normalization") {
  CHECK(B("[0,1]") == Bound::full());
  CHECK(B("true") == Bound::full());
  CHECK(B("empty").is_empty());
  CHECK(B("[0.3,0.2]").is_empty());   // lower above upper
  CHECK(B("(0.4,0.4)").is_empty());   // degenerate open
  CHECK(B("(0.5,0.5]").is_empty());
  CHECK(!B("[0.5,0.5]").is_empty());
  CHECK(!parse_bound_text("[0,2]"));   // endpoint outside [0,1]
  CHECK(!parse_bound_text("[0.5]"));
  CHECK(!parse_bound_text("0.5,1"));
  Bound half_open = B("(0.2,0.7]");
  CHECK(half_open.lower_open());
  CHECK(!half_open.upper_open());
  CHECK(half_open.lower() == Rational(1, 5));
  CHECK(half_open.to_string() == "(0.2,0.7]");
  CHECK(B("empty").to_string() == "empty");
  CHECK(B("[0,1]").to_string() == "[0,1]");
}

TEST_CASE("intersect") {
  CHECK(intersect(B("[0.8,1]"), B("[0,1]")) == B("[0.8,1]"));
  CHECK(intersect(B("(0.2,0.7]"), B("[0.5,0.9)")) == B("[0.5,0.7]"));
  CHECK(intersect(B("[0,0.3]"), B("[0.5,1]")).is_empty());
  CHECK(intersect(B("(0.5,0.5]"), B("[0,1]")).is_empty());
  CHECK(intersect(B("[0,0.5]"), B("[0.5,1]")) == B("[0.5,0.5]"));
  CHECK(intersect(B("[0,0.5)"), B("[0.5,1]")).is_empty());
  CHECK(intersect(B("[0,0.5]"), B("(0.5,1]")).is_empty());
  CHECK(intersect(Bound::empty(), B("[0.3,0.4]")).is_empty());
}

TEST_CASE("hull") {
  CHECK(hull(B("[0,0.2]"), B("[0.9,1]")) == B("[0,1]"));
  CHECK(hull(Bound::empty(), B("(0.3,0.6)")) == B("(0.3,0.6)"));
  CHECK(hull(B("[0.1,0.4)"), B("(0.2,0.5]")) == B("[0.1,0.5]"));
  CHECK(hull(B("(0.1,0.4)"), B("(0.1,0.2)")) == B("(0.1,0.4)"));
  CHECK(hull(B("[0,1]"), B("empty")) == B("[0,1]"));
}

TEST_CASE("is_subset") {
  CHECK(is_subset(B("[0.9,1]"), B("[0.8,1]")));
  CHECK(is_subset(Bound::empty(), B("[0.3,0.4]")));
  CHECK(!is_subset(B("[0.5,1]"), B("(0.5,1]")));
  CHECK(is_subset(B("(0.5,1]"), B("[0.5,1]")));
  CHECK(is_subset(B("[0.5,0.5]"), B("[0.5,1]")));
  CHECK(!is_subset(B("[0,1]"), B("[0,1)")));
  CHECK(is_subset(B("[0.2,0.4]"), B("[0,1]")));
  CHECK(!is_subset(B("[0.2,0.4]"), Bound::empty()));
  CHECK(is_subset(Bound::empty(), Bound::empty()));
}

namespace {

Bound random_bound(std::mt19937_64& gen) {
  auto digit = [&](int n) { return static_cast<int>(gen() % n); };
  if (digit(20) == 0) return Bound::empty();
  int lo = digit(11), hi = digit(11);
  return Bound::make(Rational(lo, 10), gen() % 2 == 0, Rational(hi, 10),
                     gen() % 2 == 0);
}

}  // namespace

TEST_CASE("lattice laws on random bounds") {
  std::mt19937_64 gen(7);
  for (int i = 0; i < 5000; ++i) {
    Bound a = random_bound(gen), b = random_bound(gen), c = random_bound(gen);
    CHECK(intersect(a, b) == intersect(b, a));
    CHECK(hull(a, b) == hull(b, a));
    CHECK(intersect(a, intersect(b, c)) == intersect(intersect(a, b), c));
    CHECK(hull(a, hull(b, c)) == hull(hull(a, b), c));
    CHECK(intersect(a, a) == a);
    CHECK(hull(a, a) == a);
    CHECK(intersect(a, hull(a, b)) == a);
    CHECK(hull(a, intersect(a, b)) == a);
    // Order coherence.
    bool sub = is_subset(a, b);
    CHECK(sub == (intersect(a, b) == a));
    CHECK(sub == (hull(a, b) == b));
    // Normalization: results never misrepresent emptiness.
    for (const Bound& r : {intersect(a, b), hull(a, b)}) {
      if (!r.is_empty()) {
        CHECK(r.lower() <= r.upper());
        if (r.lower() == r.upper()) {
          CHECK(!r.lower_open());
          CHECK(!r.upper_open());
        }
      }
    }
  }
}

TEST_CASE("bound text round trip") {
  std::mt19937_64 gen(11);
  for (int i = 0; i < 500; ++i) {
    Bound a = random_bound(gen);
    CHECK(*parse_bound_text(a.to_string()) == a);
  }
}
