#pragma once

#include <cstdint>
#include <vector>

#include "mdt/big_float.hpp"
#include "mdt/interval.hpp"
#include "mdt/rational.hpp"

namespace mdt {

enum class Ordering { Less, Equal, Greater };

// Sum of a rational and terms c*sqrt(r) with rational c != 0 and rational
// r > 0. Terms are kept sorted by radicand with equal radicands merged and
// perfect-square radicands folded into the rational part, so structurally
// equal sums have identical representations. Value equality across different
// radicand multisets (e.g. sqrt(2)+sqrt(8) vs sqrt(18)) is the comparator's
// job, not the representation's.
class SqrtSum {
 public:
  struct Term {
    Rational coeff;
    Rational radicand;
  };

  SqrtSum() = default;
  explicit SqrtSum(Rational rational_part) : rational_(std::move(rational_part)) {}

  static SqrtSum sqrt_term(const Rational& radicand, const Rational& coeff = Rational(1));

  void add_rational(const Rational& c) { rational_ += c; }
  // Adds c*sqrt(r); r must be >= 0.
  void add_sqrt(const Rational& radicand, const Rational& coeff);
  void add(const SqrtSum& o);
  void negate();

  // Multiply the whole sum by sqrt(q), q > 0: each term lands back in
  // radical form (c*sqrt(r) -> c*sqrt(r*q), rational a -> a*sqrt(q)).
  SqrtSum times_sqrt(const Rational& q) const;
  SqrtSum scaled(const Rational& c) const;

  const Rational& rational_part() const { return rational_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool trivially_zero() const { return terms_.empty() && sign(rational_) == 0; }

  Interval to_interval() const;
  BigInterval to_big_interval(mpfr_prec_t prec) const;

 private:
  Rational rational_;
  std::vector<Term> terms_;
};

// Staged comparison: (i) cancel equal radicands rationally, (ii) machine
// interval sum in order of increasing magnitude, (iii) one extended-precision
// interval retry, (iv) exact decision. Always terminates.
Ordering compare_sqrt_sums(const SqrtSum& a, const SqrtSum& b);

// Sign of a sum with the same staged pipeline.
Ordering sign_of(const SqrtSum& s);

enum class SumPrecision : std::uint8_t { Machine, Extended };

// Extended precision of the retry stage; configurable upward from 1024 bits.
inline constexpr mpfr_prec_t kExtendedPrec = 1024;

Interval interval_of(const SqrtSum& s, SumPrecision precision);

}  // namespace mdt
