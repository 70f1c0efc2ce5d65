#include "jsk/ratfunc.hpp"

#include "jsk/errors.hpp"
#include "jsk/polygcd.hpp"

namespace jsk {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.family() != den_.family() || num_.vars() != den_.vars())
        throw DimensionMismatch("rational function num/den mismatch");
    if (den_.is_zero()) throw SingularError("zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial::constant(num_.family(), num_.vars(), 1);
        return;
    }
    Polynomial g = polynomial_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = polynomial_divide_exact(num_, g);
        den_ = polynomial_divide_exact(den_, g);
    }
    // Make the denominator integer-primitive with positive leading
    // coefficient; the numerator absorbs the scale.
    Rational c = den_.content();
    den_ = den_.primitive_part();
    num_ = num_ * (1 / c);
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den, Reduced)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw SingularError("zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial::constant(num_.family(), num_.vars(), 1);
        return;
    }
    Rational c = den_.content();
    den_ = den_.primitive_part();
    num_ = num_ * (1 / c);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

// Henrici's scheme: with both operands in lowest terms, any common factor of
// the cross-multiplied sum and the combined denominator divides gcd of the
// denominators, so only small gcds are ever taken.
RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    if (num_.family() != o.num_.family() || num_.vars() != o.num_.vars())
        throw DimensionMismatch("rational function arithmetic mismatch");
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    Polynomial g = polynomial_gcd(den_, o.den_);
    if (g.is_constant()) {
        // Coprime denominators: num_*o.den_ + o.num_*den_ is automatically
        // coprime to den_*o.den_.
        return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_,
                                Reduced{});
    }
    Polynomial d1r = polynomial_divide_exact(den_, g);
    Polynomial d2r = polynomial_divide_exact(o.den_, g);
    Polynomial num = num_ * d2r + o.num_ * d1r;
    if (num.is_zero()) return zero(num_.family(), num_.vars());
    Polynomial h = polynomial_gcd(num, g);
    if (!h.is_constant())
        return RationalFunction(polynomial_divide_exact(num, h),
                                polynomial_divide_exact(den_, h) * d2r,
                                Reduced{});
    return RationalFunction(std::move(num), den_ * d2r, Reduced{});
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    if (num_.family() != o.num_.family() || num_.vars() != o.num_.vars())
        throw DimensionMismatch("rational function arithmetic mismatch");
    if (is_zero() || o.is_zero()) return zero(num_.family(), num_.vars());
    // Cross-cancel before multiplying; the product of the reduced pieces is
    // again in lowest terms.
    Polynomial n1 = num_, d2 = o.den_;
    Polynomial g1 = polynomial_gcd(n1, d2);
    if (!g1.is_constant()) {
        n1 = polynomial_divide_exact(n1, g1);
        d2 = polynomial_divide_exact(d2, g1);
    }
    Polynomial n2 = o.num_, d1 = den_;
    Polynomial g2 = polynomial_gcd(n2, d1);
    if (!g2.is_constant()) {
        n2 = polynomial_divide_exact(n2, g2);
        d1 = polynomial_divide_exact(d1, g2);
    }
    return RationalFunction(n1 * n2, d1 * d2, Reduced{});
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw SingularError("division by zero rational function");
    // The reciprocal of a reduced fraction is reduced.
    return *this * RationalFunction(o.den_, o.num_, Reduced{});
}

RationalFunction RationalFunction::differentiate(int axis) const {
    if (num_.is_zero()) return *this;
    // (n/d)' = n'/d - (n/d)*(d'/d); both constructor gcds stay within the
    // degrees of the operands instead of gcd(n d' - n' d, d^2).
    RationalFunction lead(num_.differentiate(axis), den_);
    if (den_.is_constant()) return lead;
    Polynomial dden = den_.differentiate(axis);
    if (dden.is_zero()) return lead;
    return lead - *this * RationalFunction(dden, den_);
}

std::string RationalFunction::str() const {
    if (den_ == Polynomial::constant(den_.family(), den_.vars(), 1))
        return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::vector<std::vector<RationalFunction>> ratfunc_matrix_inverse(
    const std::vector<std::vector<RationalFunction>>& m) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw DimensionMismatch("inverse of non-square matrix");
    if (n == 0) return {};
    VarFamily family = m[0][0].family();
    int vars = m[0][0].vars();

    std::vector<std::vector<RationalFunction>> a = m;
    std::vector<std::vector<RationalFunction>> inv(
        n, std::vector<RationalFunction>(n, RationalFunction::zero(family, vars)));
    for (size_t i = 0; i < n; ++i)
        inv[i][i] = RationalFunction::constant(family, vars, 1);

    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw SingularError("matrix is singular");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        RationalFunction d = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] = a[col][j] / d;
            inv[col][j] = inv[col][j] / d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col].is_zero()) continue;
            RationalFunction f = a[i][col];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] = a[i][j] - f * a[col][j];
                inv[i][j] = inv[i][j] - f * inv[col][j];
            }
        }
    }
    return inv;
}

std::vector<std::vector<RationalFunction>> ratfunc_matrix_product(
    const std::vector<std::vector<RationalFunction>>& a,
    const std::vector<std::vector<RationalFunction>>& b) {
    if (a.empty() || b.empty()) return {};
    size_t rows = a.size(), inner = b.size(), cols = b[0].size();
    for (const auto& row : a)
        if (row.size() != inner) throw DimensionMismatch("matrix product shape");
    VarFamily family = b[0][0].family();
    int vars = b[0][0].vars();
    std::vector<std::vector<RationalFunction>> r(
        rows, std::vector<RationalFunction>(cols,
                                            RationalFunction::zero(family, vars)));
    for (size_t i = 0; i < rows; ++i)
        for (size_t k = 0; k < inner; ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < cols; ++j)
                r[i][j] = r[i][j] + a[i][k] * b[k][j];
        }
    return r;
}

}  // namespace jsk
