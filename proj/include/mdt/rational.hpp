#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "mdt/interval.hpp"

namespace mdt {

// Exact rationals are GMP rationals; mpq_class keeps them canonical
// (reduced, positive denominator) which is all the representation invariant
// we need. Doubles convert losslessly.
using Rational = mpq_class;

inline Rational rational_of(double v) {
  Rational q;
  mpq_set_d(q.get_mpq_t(), v);
  return q;
}

inline int sign(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

// Sound double enclosure. mpq_get_d truncates toward zero with error < 1 ulp;
// widening both ways by more than an ulp covers either direction.
Interval to_interval(const Rational& q);

// Exact square root when the value is a perfect square of a rational.
std::optional<Rational> exact_sqrt(const Rational& q);

bool is_perfect_square(const mpz_class& z, mpz_class* root = nullptr);

std::string to_string(const Rational& q);

}  // namespace mdt
