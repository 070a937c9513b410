#include <random>

#include "doctest.h"
#include "mdt/interval.hpp"
#include "mdt/rational.hpp"

using namespace mdt;

namespace {
bool encloses(const Interval& iv, const Rational& v) {
  return rational_of(iv.lo) <= v && v <= rational_of(iv.hi);
}
}  // namespace

TEST_SUITE("interval") {

TEST_CASE("arithmetic encloses the exact rational result") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 20000; ++i) {
    double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
    Interval x = widened(std::min(a, b), std::max(a, b));
    Interval y = widened(std::min(c, d), std::max(c, d));
    Rational qa = rational_of(std::min(a, b)), qc = rational_of(std::min(c, d));
    CHECK(encloses(x + y, qa + qc));
    CHECK(encloses(x - y, qa - qc));
    CHECK(encloses(x * y, qa * qc));
    CHECK(encloses(square(x), qa * qa));
    if (!y.contains_zero()) CHECK(encloses(x / y, qa / qc));
  }
}

TEST_CASE("sqrt enclosure") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1e9);
  for (int i = 0; i < 20000; ++i) {
    double a = u(rng);
    Interval s = sqrt(Interval::exact(a));
    CHECK(s.lo >= 0.0);
    Rational qa = rational_of(a);
    // lo^2 <= a <= hi^2 proves sqrt(a) is inside [lo, hi].
    CHECK(rational_of(s.lo) * rational_of(s.lo) <= qa);
    CHECK(qa <= rational_of(s.hi) * rational_of(s.hi));
  }
}

TEST_CASE("exact values and zero behave") {
  Interval z = Interval::exact(0.0);
  CHECK(z.is_zero());
  Interval one = Interval::exact(1.0);
  CHECK((one + z).contains(1.0));
  CHECK((one - one).contains_zero());
  CHECK(!(one + one).contains_zero());
  CHECK(sqrt(z).is_zero());
}

TEST_CASE("rational conversion is a sound enclosure") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000000);
  for (int i = 0; i < 20000; ++i) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    CHECK(encloses(to_interval(q), q));
  }
  // Values no double can represent exactly.
  Rational third(1, 3);
  Interval t = to_interval(third);
  CHECK(encloses(t, third));
  CHECK(t.width() < 1e-15);
}

TEST_CASE("perfect square detection") {
  CHECK(exact_sqrt(Rational(4)).has_value());
  CHECK(*exact_sqrt(Rational(4)) == 2);
  CHECK(*exact_sqrt(Rational(9, 16)) == Rational(3, 4));
  CHECK(!exact_sqrt(Rational(2)).has_value());
  CHECK(!exact_sqrt(Rational(4, 3)).has_value());
  CHECK(!exact_sqrt(Rational(-4)).has_value());
  CHECK(*exact_sqrt(Rational(0)) == 0);
}

TEST_CASE("definite comparisons require separation") {
  Interval a = widened(1.0, 2.0);
  Interval b = widened(3.0, 4.0);
  CHECK(a.certainly_lt(b));
  CHECK(b.certainly_gt(a));
  CHECK(!a.certainly_lt(a));
  CHECK(a.overlaps(a));
  CHECK(!a.overlaps(b));
}

}  // TEST_SUITE
