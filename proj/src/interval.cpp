#include "mdt/rational.hpp"

namespace mdt {

Interval to_interval(const Rational& q) {
  double d = mpq_get_d(q.get_mpq_t());
  return widened(d, d);
}

bool is_perfect_square(const mpz_class& z, mpz_class* root) {
  if (sgn(z) < 0) return false;
  if (!mpz_perfect_square_p(z.get_mpz_t())) return false;
  if (root) mpz_sqrt(root->get_mpz_t(), z.get_mpz_t());
  return true;
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class num_root, den_root;
  if (!is_perfect_square(q.get_num(), &num_root)) return std::nullopt;
  if (!is_perfect_square(q.get_den(), &den_root)) return std::nullopt;
  return Rational(num_root, den_root);
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace mdt
