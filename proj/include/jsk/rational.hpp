#pragma once

#include <gmpxx.h>

#include <string>

namespace jsk {

// Exact rational scalar.  Every coefficient in the library is one of these;
// no floating point is used anywhere.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "a" or "a/b" with optional leading minus.
Rational rational_from_string(const std::string& text);

// Canonical text: "a" for integers, "a/b" otherwise, b > 0.
std::string to_string(const Rational& q);

inline int sign_of(const Rational& q) { return sgn(q); }

Integer binomial(int n, int k);

// gcd of two rationals is only defined here up to units; we use it to pull
// common integer content out of coefficient vectors, so the convention is
// gcd(a/b, c/d) = gcd(a*d, c*b) / (b*d), always non-negative.
Rational rational_content_gcd(const Rational& a, const Rational& b);

}  // namespace jsk
