#include "mdt/big_float.hpp"

#include <algorithm>

namespace mdt {

BigInterval BigInterval::of_rational(const Rational& q, mpfr_prec_t prec) {
  BigInterval r(prec);
  mpfr_set_q(r.lo_.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_.get(), q.get_mpq_t(), MPFR_RNDU);
  return r;
}

BigInterval BigInterval::of_double(double d, mpfr_prec_t prec) {
  BigInterval r(prec);
  mpfr_set_d(r.lo_.get(), d, MPFR_RNDD);
  mpfr_set_d(r.hi_.get(), d, MPFR_RNDU);
  return r;
}

BigInterval BigInterval::pi(mpfr_prec_t prec) {
  BigInterval r(prec);
  mpfr_const_pi(r.lo_.get(), MPFR_RNDD);
  mpfr_const_pi(r.hi_.get(), MPFR_RNDU);
  return r;
}

void BigInterval::add(const BigInterval& o) {
  mpfr_add(lo_.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
  mpfr_add(hi_.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
}

void BigInterval::sub(const BigInterval& o) {
  mpfr_sub(lo_.get(), lo_.get(), o.hi_.get(), MPFR_RNDD);
  mpfr_sub(hi_.get(), hi_.get(), o.lo_.get(), MPFR_RNDU);
}

void BigInterval::neg() {
  mpfr_swap(lo_.get(), hi_.get());
  mpfr_neg(lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_neg(hi_.get(), hi_.get(), MPFR_RNDU);
}

void BigInterval::mul(const BigInterval& o) {
  mpfr_prec_t p = prec();
  BigFloat c[4] = {BigFloat(p), BigFloat(p), BigFloat(p), BigFloat(p)};
  BigFloat d[4] = {BigFloat(p), BigFloat(p), BigFloat(p), BigFloat(p)};
  mpfr_mul(c[0].get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
  mpfr_mul(c[1].get(), lo_.get(), o.hi_.get(), MPFR_RNDD);
  mpfr_mul(c[2].get(), hi_.get(), o.lo_.get(), MPFR_RNDD);
  mpfr_mul(c[3].get(), hi_.get(), o.hi_.get(), MPFR_RNDD);
  mpfr_mul(d[0].get(), lo_.get(), o.lo_.get(), MPFR_RNDU);
  mpfr_mul(d[1].get(), lo_.get(), o.hi_.get(), MPFR_RNDU);
  mpfr_mul(d[2].get(), hi_.get(), o.lo_.get(), MPFR_RNDU);
  mpfr_mul(d[3].get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
  int lo_i = 0, hi_i = 0;
  for (int i = 1; i < 4; ++i) {
    if (c[i].cmp(c[lo_i]) < 0) lo_i = i;
    if (d[i].cmp(d[hi_i]) > 0) hi_i = i;
  }
  BigFloat nl = c[lo_i], nh = d[hi_i];
  lo_ = std::move(nl);
  hi_ = std::move(nh);
}

void BigInterval::div(const BigInterval& o) {
  mpfr_prec_t p = prec();
  BigFloat c[4] = {BigFloat(p), BigFloat(p), BigFloat(p), BigFloat(p)};
  BigFloat d[4] = {BigFloat(p), BigFloat(p), BigFloat(p), BigFloat(p)};
  mpfr_div(c[0].get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
  mpfr_div(c[1].get(), lo_.get(), o.hi_.get(), MPFR_RNDD);
  mpfr_div(c[2].get(), hi_.get(), o.lo_.get(), MPFR_RNDD);
  mpfr_div(c[3].get(), hi_.get(), o.hi_.get(), MPFR_RNDD);
  mpfr_div(d[0].get(), lo_.get(), o.lo_.get(), MPFR_RNDU);
  mpfr_div(d[1].get(), lo_.get(), o.hi_.get(), MPFR_RNDU);
  mpfr_div(d[2].get(), hi_.get(), o.lo_.get(), MPFR_RNDU);
  mpfr_div(d[3].get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
  int lo_i = 0, hi_i = 0;
  for (int i = 1; i < 4; ++i) {
    if (c[i].cmp(c[lo_i]) < 0) lo_i = i;
    if (d[i].cmp(d[hi_i]) > 0) hi_i = i;
  }
  BigFloat nl = c[lo_i], nh = d[hi_i];
  lo_ = std::move(nl);
  hi_ = std::move(nh);
}

void BigInterval::sqrt_inplace() {
  if (lo_.sgn() <= 0)
    mpfr_set_zero(lo_.get(), 1);
  else
    mpfr_sqrt(lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_sqrt(hi_.get(), hi_.get(), MPFR_RNDU);
}

namespace {
BigInterval lipschitz_trig(const BigInterval& x, bool is_sin) {
  mpfr_prec_t p = x.prec();
  BigInterval r(p);
  if (is_sin) {
    mpfr_sin(r.lo().get(), x.lo().get(), MPFR_RNDD);
    mpfr_sin(r.hi().get(), x.lo().get(), MPFR_RNDU);
  } else {
    mpfr_cos(r.lo().get(), x.lo().get(), MPFR_RNDD);
    mpfr_cos(r.hi().get(), x.lo().get(), MPFR_RNDU);
  }
  // |f(b) - f(a)| <= b - a for sin/cos; pad by the argument width.
  BigFloat w(p);
  mpfr_sub(w.get(), x.hi().get(), x.lo().get(), MPFR_RNDU);
  mpfr_sub(r.lo().get(), r.lo().get(), w.get(), MPFR_RNDD);
  mpfr_add(r.hi().get(), r.hi().get(), w.get(), MPFR_RNDU);
  if (mpfr_cmp_si(r.lo().get(), -1) < 0) mpfr_set_si(r.lo().get(), -1, MPFR_RNDD);
  if (mpfr_cmp_si(r.hi().get(), 1) > 0) mpfr_set_si(r.hi().get(), 1, MPFR_RNDU);
  return r;
}
}  // namespace

BigInterval BigInterval::sin_enclosure() const { return lipschitz_trig(*this, true); }
BigInterval BigInterval::cos_enclosure() const { return lipschitz_trig(*this, false); }

}  // namespace mdt
