#pragma once

#include <cstdint>
#include <random>

#include "jsk/diffop.hpp"
#include "jsk/polynomial.hpp"
#include "jsk/ratfunc.hpp"

namespace jsk {

// Deterministic source of small random test data.  Same seed, same stream,
// on every platform (mt19937_64 is fully specified by the standard).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    int uniform(int lo, int hi) {  // inclusive
        return static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1)) + lo;
    }

    Rational small_rational(int maxAbs = 9, int maxDen = 4) {
        long num = uniform(-maxAbs, maxAbs);
        long den = uniform(1, maxDen);
        return rational(num, den);
    }

    Rational nonzero_rational(int maxAbs = 9, int maxDen = 4) {
        Rational q = small_rational(maxAbs, maxDen);
        while (q == 0) q = small_rational(maxAbs, maxDen);
        return q;
    }

    MultiIndex monomial(int n, int maxDeg) {
        MultiIndex mu(n);
        int budget = uniform(0, maxDeg);
        for (int i = 0; i < n && budget > 0; ++i) {
            int k = uniform(0, budget);
            mu[i] = k;
            budget -= k;
        }
        return mu;
    }

    Polynomial polynomial(VarFamily family, int n, int maxDeg, int terms) {
        Polynomial p(family, n);
        for (int t = 0; t < terms; ++t)
            p.add_term(monomial(n, maxDeg), small_rational());
        return p;
    }

    Polynomial nonzero_polynomial(VarFamily family, int n, int maxDeg, int terms) {
        Polynomial p = polynomial(family, n, maxDeg, terms);
        while (p.is_zero()) p = polynomial(family, n, maxDeg, terms);
        return p;
    }

    RationalFunction ratfunc(VarFamily family, int n, int maxDeg, int terms) {
        return RationalFunction(polynomial(family, n, maxDeg, terms),
                                nonzero_polynomial(family, n, maxDeg, terms));
    }

    LinearDiffOp diffop(int n, int sourceComps, int targetComps, int maxOrder,
                        int termsPerEntry) {
        LinearDiffOp op(n, sourceComps, targetComps);
        for (int i = 0; i < targetComps; ++i)
            for (int j = 0; j < sourceComps; ++j)
                op.entry(i, j) =
                    polynomial(VarFamily::Derivative, n, maxOrder, termsPerEntry);
        return op;
    }

    Section section(int n, int comps, int maxDeg, int termsPerComp) {
        Section s(n, comps);
        for (int j = 0; j < comps; ++j)
            s.comps[static_cast<size_t>(j)] =
                polynomial(VarFamily::Position, n, maxDeg, termsPerComp);
        return s;
    }

  private:
    std::mt19937_64 gen_;
};

}  // namespace jsk
