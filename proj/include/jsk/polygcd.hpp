#pragma once

#include "jsk/polynomial.hpp"

namespace jsk {

// Exact quotient a / b; throws SingularError when b is zero or does not
// divide a exactly.
Polynomial polynomial_divide_exact(const Polynomial& a, const Polynomial& b);

// Multivariate gcd via a primitive pseudo-remainder sequence.  The result is
// normalized to have coprime integer coefficients and a positive leading
// (grevlex) coefficient; gcd(0, 0) = 0, and any nonzero constant input makes
// the gcd 1 since rationals are units here.
Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b);

}  // namespace jsk
