#include "treeprof/rational.hpp"

#include <stdexcept>

namespace treeprof {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

Integer factorial(unsigned long n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Integer int_pow(const Integer& base, unsigned long exp) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exp);
  return result;
}

Rational rational_pow(const Rational& base, unsigned long exp) {
  return make_rational(int_pow(base.get_num(), exp),
                       int_pow(base.get_den(), exp));
}

std::string decimal(const Integer& value) { return value.get_str(10); }

}  // namespace treeprof
