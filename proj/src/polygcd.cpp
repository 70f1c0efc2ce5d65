#include "jsk/polygcd.hpp"

#include "jsk/errors.hpp"

namespace jsk {

Polynomial polynomial_divide_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw SingularError("division by zero polynomial");
    Polynomial q(a.family(), a.vars());
    Polynomial r = a;
    auto [bm, bc] = b.leading_term();
    while (!r.is_zero()) {
        auto [rm, rc] = r.leading_term();
        if (!bm.divides(rm))
            throw SingularError("polynomial division is not exact");
        Polynomial t = Polynomial::monomial(a.family(), a.vars(), rm - bm,
                                            rc / bc);
        q += t;
        r -= t * b;
    }
    return q;
}

namespace {

// Componentwise minimum of the exponent vectors: the largest monomial
// dividing every term.
MultiIndex monomial_content(const Polynomial& p) {
    MultiIndex mu(p.vars());
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (first) {
            mu = m;
            first = false;
            continue;
        }
        for (int i = 0; i < mu.size(); ++i)
            if (m[i] < mu[i]) mu[i] = m[i];
        if (mu.is_zero()) break;
    }
    return mu;
}

Polynomial divide_by_monomial(const Polynomial& p, const MultiIndex& mu) {
    if (mu.is_zero()) return p;
    Polynomial q(p.family(), p.vars());
    for (const auto& [m, c] : p.terms()) q.add_term(m - mu, c);
    return q;
}

// Pseudo-remainder of a by b viewed as univariate polynomials in `axis`.
// Multiplies by the leading coefficient of b as often as needed, which is
// harmless because the caller only uses the result up to content; rational
// content is stripped every step to keep coefficient sizes bounded.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, int axis) {
    int db = b.degree_in(axis);
    Polynomial lb = b.coefficients_in(axis)[static_cast<size_t>(db)];
    while (!a.is_zero() && a.degree_in(axis) >= db) {
        int da = a.degree_in(axis);
        Polynomial la = a.coefficients_in(axis)[static_cast<size_t>(da)];
        Polynomial shift =
            Polynomial::variable(a.family(), a.vars(), axis, da - db);
        a = lb * a - la * shift * b;
        if (!a.is_zero()) a = a.primitive_part();
    }
    return a;
}

// gcd of the univariate-in-`axis` coefficient polynomials (none involve
// `axis` itself), i.e. the content of p with respect to that symbol.
Polynomial content_in(const Polynomial& p, int axis) {
    Polynomial g(p.family(), p.vars());
    for (const Polynomial& c : p.coefficients_in(axis)) {
        if (c.is_zero()) continue;
        g = polynomial_gcd(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

Polynomial unit_normalize(const Polynomial& p) {
    return p.is_zero() ? p : p.primitive_part();
}

// The symbol to run the remainder sequence on.  Prefer one where both
// operands have positive degree (otherwise the step degenerates into a
// content computation) and where the smaller of the two degrees is least,
// which keeps the sequence short.
int working_axis(const Polynomial& a, const Polynomial& b) {
    int best = -1, bestMin = 0, bestMax = 0;
    int fallback = -1;
    for (int axis = 0; axis < a.vars(); ++axis) {
        int da = a.degree_in(axis), db = b.degree_in(axis);
        if (fallback < 0 && (da > 0 || db > 0)) fallback = axis;
        if (da <= 0 || db <= 0) continue;
        int lo = std::min(da, db), hi = std::max(da, db);
        if (best < 0 || lo < bestMin || (lo == bestMin && hi < bestMax)) {
            best = axis;
            bestMin = lo;
            bestMax = hi;
        }
    }
    return best >= 0 ? best : fallback;
}

}  // namespace

Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.family() != b.family() || a.vars() != b.vars())
        throw DimensionMismatch("gcd of incompatible polynomials");
    if (a.is_zero()) return unit_normalize(b);
    if (b.is_zero()) return unit_normalize(a);
    if (a.is_constant() || b.is_constant())
        return Polynomial::constant(a.family(), a.vars(), 1);

    // Split off monomial factors first; they are cheap to find and make the
    // remainder sequence below start from smaller inputs.
    MultiIndex ma = monomial_content(a);
    MultiIndex mb = monomial_content(b);
    MultiIndex common(a.vars());
    for (int i = 0; i < common.size(); ++i)
        common[i] = std::min(ma[i], mb[i]);
    if (!ma.is_zero() || !mb.is_zero()) {
        Polynomial g = polynomial_gcd(divide_by_monomial(a, ma),
                                      divide_by_monomial(b, mb));
        return unit_normalize(
            g * Polynomial::monomial(a.family(), a.vars(), common, 1));
    }

    if (a == b) return unit_normalize(a);

    int axis = working_axis(a, b);

    Polynomial ca = content_in(a, axis);
    Polynomial cb = content_in(b, axis);
    Polynomial cg = polynomial_gcd(ca, cb);
    Polynomial A = polynomial_divide_exact(a, ca);
    Polynomial B = polynomial_divide_exact(b, cb);
    if (A.degree_in(axis) < B.degree_in(axis)) std::swap(A, B);

    while (!B.is_zero()) {
        Polynomial R = pseudo_remainder(A, B, axis);
        A = B;
        if (R.is_zero()) {
            B = R;
        } else {
            B = polynomial_divide_exact(R, content_in(R, axis));
        }
    }
    return unit_normalize(cg * A);
}

}  // namespace jsk
