#include "mdt/sqrt_sum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mdt {

SqrtSum SqrtSum::sqrt_term(const Rational& radicand, const Rational& coeff) {
  SqrtSum s;
  s.add_sqrt(radicand, coeff);
  return s;
}

void SqrtSum::add_sqrt(const Rational& radicand, const Rational& coeff) {
  if (sign(radicand) < 0) throw std::invalid_argument("negative radicand");
  if (sign(radicand) == 0 || sign(coeff) == 0) return;
  if (auto root = exact_sqrt(radicand)) {
    rational_ += coeff * *root;
    return;
  }
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), radicand,
      [](const Term& t, const Rational& r) { return t.radicand < r; });
  if (it != terms_.end() && it->radicand == radicand) {
    it->coeff += coeff;
    if (sign(it->coeff) == 0) terms_.erase(it);
  } else {
    terms_.insert(it, Term{coeff, radicand});
  }
}

void SqrtSum::add(const SqrtSum& o) {
  rational_ += o.rational_;
  for (const Term& t : o.terms_) add_sqrt(t.radicand, t.coeff);
}

void SqrtSum::negate() {
  rational_ = -rational_;
  for (Term& t : terms_) t.coeff = -t.coeff;
}

SqrtSum SqrtSum::times_sqrt(const Rational& q) const {
  if (sign(q) <= 0) throw std::invalid_argument("times_sqrt needs q > 0");
  SqrtSum r;
  r.add_sqrt(q, rational_);
  for (const Term& t : terms_) r.add_sqrt(t.radicand * q, t.coeff);
  return r;
}

SqrtSum SqrtSum::scaled(const Rational& c) const {
  SqrtSum r;
  if (sign(c) == 0) return r;
  r.rational_ = rational_ * c;
  r.terms_ = terms_;
  for (Term& t : r.terms_) t.coeff = t.coeff * c;
  return r;
}

namespace {

struct DiffTerm {
  Rational coeff;
  Rational radicand;  // radicand 1 encodes the rational part
  double approx = 0.0;
};

// Signed difference a - b as a flat term list with equal radicands cancelled.
std::vector<DiffTerm> difference_terms(const SqrtSum& a, const SqrtSum& b) {
  std::vector<DiffTerm> d;
  Rational r0 = a.rational_part() - b.rational_part();
  if (sign(r0) != 0) d.push_back({std::move(r0), Rational(1), 0.0});
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t i = 0, j = 0;
  while (i < ta.size() || j < tb.size()) {
    if (j == tb.size() || (i < ta.size() && ta[i].radicand < tb[j].radicand)) {
      d.push_back({ta[i].coeff, ta[i].radicand, 0.0});
      ++i;
    } else if (i == ta.size() || tb[j].radicand < ta[i].radicand) {
      d.push_back({-tb[j].coeff, tb[j].radicand, 0.0});
      ++j;
    } else {
      Rational c = ta[i].coeff - tb[j].coeff;
      if (sign(c) != 0) d.push_back({std::move(c), ta[i].radicand, 0.0});
      ++i;
      ++j;
    }
  }
  return d;
}

Interval term_interval(const DiffTerm& t) {
  Interval c = to_interval(t.coeff);
  if (t.radicand == 1) return c;
  return c * sqrt(to_interval(t.radicand));
}

// Stage (ii): machine interval sum, smallest magnitudes first.
Interval machine_sum(std::vector<DiffTerm>& d) {
  for (DiffTerm& t : d) {
    Interval iv = term_interval(t);
    t.approx = std::max(std::fabs(iv.lo), std::fabs(iv.hi));
  }
  std::sort(d.begin(), d.end(), [](const DiffTerm& x, const DiffTerm& y) {
    return x.approx < y.approx;
  });
  Interval sum = Interval::exact(0.0);
  for (const DiffTerm& t : d) sum = sum + term_interval(t);
  return sum;
}

BigInterval big_sum(const std::vector<DiffTerm>& d, mpfr_prec_t prec) {
  BigInterval sum(prec);
  for (const DiffTerm& t : d) {
    BigInterval term = BigInterval::of_rational(t.radicand, prec);
    term.sqrt_inplace();
    BigInterval c = BigInterval::of_rational(t.coeff, prec);
    term.mul(c);
    sum.add(term);
  }
  return sum;
}

// Stage (iv) part one: rewrite sum(c_i sqrt(r_i)) with integer radicands and
// fold radicands whose pairwise product is a perfect square into a common
// representative. Afterwards the remaining radicands are pairwise
// inequivalent modulo squares, so their roots are linearly independent over
// the rationals and the value is zero iff every coefficient is zero.
struct ReducedForm {
  Rational rational;
  std::vector<DiffTerm> terms;  // integer radicands, pairwise inequivalent
};

ReducedForm reduce_square_classes(const std::vector<DiffTerm>& d) {
  ReducedForm rf;
  rf.rational = 0;
  std::vector<std::pair<Rational, mpz_class>> scaled;  // (coeff, radicand)
  for (const DiffTerm& t : d) {
    if (t.radicand == 1) {
      rf.rational += t.coeff;
      continue;
    }
    // c*sqrt(p/q) = (c/q)*sqrt(p*q)
    mpz_class m = t.radicand.get_num() * t.radicand.get_den();
    Rational c = t.coeff / Rational(t.radicand.get_den());
    mpz_class root;
    if (is_perfect_square(m, &root)) {
      rf.rational += c * Rational(root);
      continue;
    }
    scaled.emplace_back(std::move(c), std::move(m));
  }
  std::vector<bool> used(scaled.size(), false);
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    Rational coeff = scaled[i].first;
    const mpz_class& rep = scaled[i].second;
    for (std::size_t j = i + 1; j < scaled.size(); ++j) {
      if (used[j]) continue;
      mpz_class prod = rep * scaled[j].second;
      mpz_class root;
      if (is_perfect_square(prod, &root)) {
        // sqrt(m_j) = (root/rep) * sqrt(rep)
        coeff += scaled[j].first * Rational(root) / Rational(rep);
        used[j] = true;
      }
    }
    if (sign(coeff) != 0)
      rf.terms.push_back({std::move(coeff), Rational(rep), 0.0});
  }
  return rf;
}

Ordering from_sign(int s) {
  if (s > 0) return Ordering::Greater;
  if (s < 0) return Ordering::Less;
  return Ordering::Equal;
}

Ordering decide_sign(std::vector<DiffTerm> d) {
  if (d.empty()) return Ordering::Equal;
  // Quick win: uniform coefficient signs decide immediately.
  int first = sign(d.front().coeff);
  bool uniform = true;
  for (const DiffTerm& t : d)
    if (sign(t.coeff) != first) {
      uniform = false;
      break;
    }
  if (uniform) return from_sign(first);

  Interval m = machine_sum(d);
  if (m.certainly_positive()) return Ordering::Greater;
  if (m.certainly_negative()) return Ordering::Less;
  if (m.is_zero()) return Ordering::Equal;

  BigInterval e = big_sum(d, kExtendedPrec);
  if (int s = e.sign()) return from_sign(s);

  ReducedForm rf = reduce_square_classes(d);
  if (rf.terms.empty()) return from_sign(sign(rf.rational));
  if (sign(rf.rational) == 0 && rf.terms.size() == 1)
    return from_sign(sign(rf.terms.front().coeff));
  // The reduced value is provably nonzero; escalate precision until the
  // enclosure separates from zero.
  std::vector<DiffTerm> reduced = rf.terms;
  if (sign(rf.rational) != 0)
    reduced.push_back({rf.rational, Rational(1), 0.0});
  for (mpfr_prec_t prec = 2 * kExtendedPrec;; prec *= 2) {
    BigInterval r = big_sum(reduced, prec);
    if (int s = r.sign()) return from_sign(s);
  }
}

}  // namespace

Ordering compare_sqrt_sums(const SqrtSum& a, const SqrtSum& b) {
  return decide_sign(difference_terms(a, b));
}

Ordering sign_of(const SqrtSum& s) {
  return compare_sqrt_sums(s, SqrtSum());
}

Interval SqrtSum::to_interval() const {
  Interval sum = mdt::to_interval(rational_);
  for (const Term& t : terms_)
    sum = sum + mdt::to_interval(t.coeff) * sqrt(mdt::to_interval(t.radicand));
  return sum;
}

BigInterval SqrtSum::to_big_interval(mpfr_prec_t prec) const {
  BigInterval sum = BigInterval::of_rational(rational_, prec);
  for (const Term& t : terms_) {
    BigInterval term = BigInterval::of_rational(t.radicand, prec);
    term.sqrt_inplace();
    BigInterval c = BigInterval::of_rational(t.coeff, prec);
    term.mul(c);
    sum.add(term);
  }
  return sum;
}

Interval interval_of(const SqrtSum& s, SumPrecision precision) {
  if (precision == SumPrecision::Machine) return s.to_interval();
  return s.to_big_interval(kExtendedPrec).to_interval();
}

}  // namespace mdt
