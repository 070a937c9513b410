#pragma once

#include <mpfr.h>

#include <utility>

#include "mdt/interval.hpp"
#include "mdt/rational.hpp"

namespace mdt {

// Thin RAII wrapper over mpfr_t. Every operation states its rounding mode at
// the call site; nothing here depends on a global rounding state.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, 2);
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(BigFloat o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  double to_double(mpfr_rnd_t rnd) const { return mpfr_get_d(v_, rnd); }
  int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
  int sgn() const { return mpfr_sgn(v_); }

 private:
  mpfr_t v_;
};

// Directed-rounding interval over BigFloat endpoints at a fixed precision.
class BigInterval {
 public:
  explicit BigInterval(mpfr_prec_t prec = 128) : lo_(prec), hi_(prec) {
    mpfr_set_zero(lo_.get(), 1);
    mpfr_set_zero(hi_.get(), 1);
  }

  static BigInterval of_rational(const Rational& q, mpfr_prec_t prec);
  static BigInterval of_double(double d, mpfr_prec_t prec);
  static BigInterval pi(mpfr_prec_t prec);

  mpfr_prec_t prec() const { return lo_.prec(); }
  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  BigFloat& lo() { return lo_; }
  BigFloat& hi() { return hi_; }

  void add(const BigInterval& o);
  void sub(const BigInterval& o);
  void mul(const BigInterval& o);
  void div(const BigInterval& o);  // o must not straddle zero
  void sqrt_inplace();             // clamps a negative lower endpoint to zero
  void neg();

  // sin/cos of this interval via endpoint evaluation plus Lipschitz slack,
  // sound even when the interval brackets an extremum.
  BigInterval sin_enclosure() const;
  BigInterval cos_enclosure() const;

  bool contains_zero() const { return lo_.sgn() <= 0 && hi_.sgn() >= 0; }
  int sign() const {  // +1 / -1 when provable, 0 otherwise
    if (lo_.sgn() > 0) return 1;
    if (hi_.sgn() < 0) return -1;
    return 0;
  }
  Interval to_interval() const {
    return {lo_.to_double(MPFR_RNDD), hi_.to_double(MPFR_RNDU)};
  }

 private:
  BigFloat lo_, hi_;
};

}  // namespace mdt
