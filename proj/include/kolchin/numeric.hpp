#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace kolchin {

// Exact arbitrary-precision integers and rationals.
using Int = mpz_class;
using Rat = mpq_class;

// C(n, k) with choose semantics: zero whenever n < k, in particular for
// every negative n.
Int binomial(const Int& n, unsigned long k);

Int factorial(unsigned long n);

// num/den in lowest terms with positive denominator.
Rat make_rat(const Int& num, const Int& den);

// Throws std::overflow_error when the value does not fit.
std::int64_t to_int64(const Int& v);

std::string rat_to_string(const Rat& q);

}  // namespace kolchin
