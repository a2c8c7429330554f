#pragma once

#include <gmpxx.h>

#include <string>

namespace modstab {

// Character values and class sizes outgrow 64 bits quickly (21! already does),
// so everything exact goes through GMP.
using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& value);

/// Renders "p" for integers and "p/q" otherwise.
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

Integer factorial(int n);

/// C(x, k) for integer x and k >= 0; zero when 0 <= x < k.
Integer binomial(long x, int k);

}  // namespace modstab
