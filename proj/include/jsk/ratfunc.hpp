#pragma once

#include <string>
#include <vector>

#include "jsk/polynomial.hpp"

namespace jsk {

// Quotient of two polynomials over the same symbol family, kept in lowest
// terms with an integer-primitive, positive-leading denominator so equal
// functions compare equal componentwise.
class RationalFunction {
  public:
    RationalFunction() : num_(VarFamily::Position, 0),
                         den_(Polynomial::constant(VarFamily::Position, 0, 1)) {}
    RationalFunction(Polynomial num, Polynomial den);
    explicit RationalFunction(const Polynomial& num)
        : RationalFunction(num, Polynomial::constant(num.family(), num.vars(), 1)) {}

    static RationalFunction zero(VarFamily family, int n) {
        return RationalFunction(Polynomial::zero(family, n));
    }
    static RationalFunction constant(VarFamily family, int n, const Rational& c) {
        return RationalFunction(Polynomial::constant(family, n, c));
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    VarFamily family() const { return num_.family(); }
    int vars() const { return num_.vars(); }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    // Partial derivative by the quotient rule, renormalized.
    RationalFunction differentiate(int axis) const;

    std::string str() const;

  private:
    // Tag constructor for results already known to be in lowest terms; skips
    // the numerator/denominator gcd and only renormalizes the denominator.
    struct Reduced {};
    RationalFunction(Polynomial num, Polynomial den, Reduced);

    Polynomial num_, den_;
};

// Gauss-Jordan inverse of a square matrix of rational functions; throws
// SingularError when the matrix is not invertible.
std::vector<std::vector<RationalFunction>> ratfunc_matrix_inverse(
    const std::vector<std::vector<RationalFunction>>& m);

std::vector<std::vector<RationalFunction>> ratfunc_matrix_product(
    const std::vector<std::vector<RationalFunction>>& a,
    const std::vector<std::vector<RationalFunction>>& b);

}  // namespace jsk
