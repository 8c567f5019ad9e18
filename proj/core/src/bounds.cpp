#include "treeprof/bounds.hpp"

#include <stdexcept>

namespace treeprof {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

void check_host_args(int k, long long n, long long L) {
  require(k >= 4, "host identities need k >= 4");
  require(n >= 1, "host identities need n >= 1");
  require(L >= 0, "host identities need L >= 0");
}

}  // namespace

Integer sparkler_copy_count(int k, long long n, long long L) {
  check_host_args(k, n, L);
  return 2 * Integer(static_cast<long>(n)) *
         binomial(static_cast<unsigned long>(L) + 1,
                  static_cast<unsigned long>(k - 2));
}

Integer sparkler_total_count(int k, long long n, long long L) {
  check_host_args(k, n, L);
  Integer per_vertebra = 0;
  for (int j = 0; j <= k; ++j) {
    per_vertebra += (j + 1) * binomial(static_cast<unsigned long>(L),
                                       static_cast<unsigned long>(k - j));
  }
  return Integer(static_cast<long>(n)) * per_vertebra;
}

Rational sparkler_host_density(int k, long long L) {
  return make_rational(sparkler_copy_count(k, 1, L),
                       sparkler_total_count(k, 1, L));
}

Rational sparkler_density_bound(int k) {
  require(k >= 4, "density bound needs k >= 4");
  const Integer kk(k);
  return make_rational((3 * kk + 1) * kk * (kk - 1),
                       2 * (2 * kk + 3) * (2 * kk + 2) * (2 * kk + 1));
}

Rational inducibility_upper_bound(int k) {
  require(k >= 5, "upper bound needs k >= 5");
  return 1 - make_rational(1, int_pow(k, 2 * k - 3));
}

Rational uniform_inducibility_bound() {
  return 1 - make_rational(1, int_pow(10, 35));
}

Rational universal_density_bound(int k, const Integer& zk_tk) {
  require(k >= 3, "universal bound needs k >= 3");
  require(zk_tk >= 0, "subtree count must be nonnegative");
  // Rational upper bound on e, so the denominator overstates and the bound
  // understates the true guarantee.
  const Rational e_upper =
      make_rational(Integer("2718281828459045236"), int_pow(10, 18));
  const Rational e_pow = rational_pow(e_upper, 2 * k);
  const Rational denom =
      Rational(2 * factorial(k) * factorial(k) * int_pow(k, k - 1)) * e_pow +
      Rational(zk_tk);
  return 1 / denom;
}

Integer glue_upper_slack(int k, int max_degree) {
  require(k >= 2, "gluing slack needs k >= 2");
  require(max_degree >= 1, "maximum degree must be positive");
  return int_pow(Integer(k) * (max_degree - 1), k - 1);
}

long long best_leaf_count(int k, long long lo, long long hi) {
  require(k >= 4, "leaf scan needs k >= 4");
  require(lo >= 0 && lo <= hi, "leaf scan needs 0 <= lo <= hi");
  long long best = lo;
  Rational best_value = sparkler_host_density(k, lo);
  for (long long L = lo + 1; L <= hi; ++L) {
    Rational value = sparkler_host_density(k, L);
    if (value > best_value) {
      best_value = value;
      best = L;
    }
  }
  return best;
}

}  // namespace treeprof
