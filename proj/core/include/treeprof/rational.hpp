#pragma once

#include <gmpxx.h>

#include <string>

namespace treeprof {

// Counting never touches machine-width overflow: all counts are arbitrary
// precision from the start, and every density is an exact rational kept in
// lowest terms with a positive denominator.
using Integer = mpz_class;
using Rational = mpq_class;

// num/den reduced to lowest terms; den must be nonzero.
Rational make_rational(const Integer& num, const Integer& den);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);
Integer int_pow(const Integer& base, unsigned long exp);
Rational rational_pow(const Rational& base, unsigned long exp);

std::string decimal(const Integer& value);

}  // namespace treeprof
