#pragma once

#include <map>
#include <vector>

#include "jsk/diffop.hpp"
#include "jsk/multiindex.hpp"

namespace jsk {

// Fiber dimension of the order-q jet bundle of an m-component bundle over an
// n-dimensional base: m * C(n+q, q).
long jet_dim(int n, int m, int q);

// Jets of exact order r only: m * C(n+r-1, r).
long strict_jet_dim(int n, int m, int r);

struct JetKey {
    int comp;
    MultiIndex mu;
    bool operator==(const JetKey& o) const {
        return comp == o.comp && mu == o.mu;
    }
};

struct JetKeyLess {
    bool operator()(const JetKey& a, const JetKey& b) const {
        if (a.comp != b.comp) return a.comp < b.comp;
        return grevlex_less(a.mu, b.mu);
    }
};

// Formal jet of order q: one position polynomial per (component, multi-index
// up to order q).  Entries need not be compatible derivatives of each other;
// that is exactly what the Spencer operator measures.
struct JetSection {
    int n = 0, m = 0, q = 0;
    std::map<JetKey, Polynomial, JetKeyLess> entries;

    JetSection() = default;
    JetSection(int n, int m, int q);

    const Polynomial& at(int comp, const MultiIndex& mu) const;
    Polynomial& at(int comp, const MultiIndex& mu);
    // Order-0 part as a plain section.
    Section order0() const;

    bool operator==(const JetSection& o) const {
        return n == o.n && m == o.m && q == o.q && entries == o.entries;
    }
};

// True derivatives: entry (k, mu) = d^mu f^k.
JetSection prolong(const Section& f, int q);

struct SpencerKey {
    int axis;
    int comp;
    MultiIndex mu;
    bool operator==(const SpencerKey& o) const {
        return axis == o.axis && comp == o.comp && mu == o.mu;
    }
};

struct SpencerKeyLess {
    bool operator()(const SpencerKey& a, const SpencerKey& b) const {
        if (a.axis != b.axis) return a.axis < b.axis;
        if (a.comp != b.comp) return a.comp < b.comp;
        return grevlex_less(a.mu, b.mu);
    }
};

// One-form with values in order-q jets: entries indexed (axis, comp, mu).
struct SpencerImage {
    int n = 0, m = 0, q = 0;
    std::map<SpencerKey, Polynomial, SpencerKeyLess> entries;

    const Polynomial& at(int axis, int comp, const MultiIndex& mu) const;
    bool is_zero() const;
};

// entry (i, k, mu) = d_i f^k_mu - f^k_{mu + e_i} for |mu| <= q where f has
// order q+1.  Vanishes exactly on prolongations.
SpencerImage spencer(const JetSection& f);

// Same formula on an order-q jet whose order-(q+1) extension is declared to
// be zero (finite-type systems); image entries run over all |mu| <= q.
SpencerImage restricted_spencer(const JetSection& f);

// Exact rank data for the r-th prolongation of the principal (top-order)
// symbol, acting from strict-order (q+r+1) source jets to strict-order (r+1)
// target jets.  Target components that are identically a constant combination
// of the others (e.g. a built-in trace relation) are discounted in
// targetJets; the raw count is kept alongside.
struct ProlongationCount {
    int r = 0;
    long sourceJets = 0;
    long targetJets = 0;      // effective
    long targetJetsRaw = 0;
    int effectiveTargetComps = 0;
    long rank = 0;

    long cc_by_difference() const { return targetJets - rank; }
};

ProlongationCount symbol_prolongation_rank(const LinearDiffOp& op, int r);

// One row of a diagram: `dims` are the fiber dimensions ("circled numbers"),
// `sourceDim` the dimension of the bundle feeding the row (0 when the row
// starts at its first listed node).  A formally exact row has eulerSum 0.
struct SequenceDims {
    int sourceDim = 0;
    std::vector<long> dims;

    long euler_sum() const {
        long s = sourceDim;
        long sign = -1;
        for (long d : dims) {
            s += sign * d;
            sign = -sign;
        }
        return s;
    }
};

// Dimensions of the full Spencer bundles C_r = Λ^r T* ⊗ J_q / δ(Λ^{r-1} T* ⊗
// S_{q+1}) for r = 0..n, via exact ranks of the Koszul maps δ.  For q >= 1
// the row 0 -> E -> C_0 -> ... -> C_n -> 0 is a resolution, so sourceDim is
// m and euler_sum() is 0; for q = 0 the row collapses to the plain form
// bundles m*C(n,r).
SequenceDims spencer_bundle_dims(int n, int m, int q);

struct SolutionBasis {
    int degreeBound = 0;
    std::vector<Section> basis;
};

// Canonical basis of { s polynomial section, deg <= degreeBound : op s = 0 }.
SolutionBasis polynomial_solutions(const LinearDiffOp& op, int degreeBound);

// Lie bracket of vector fields (comps = n): [xi, eta]^k = xi^r d_r eta^k -
// eta^r d_r xi^k.
Section vector_bracket(const Section& xi, const Section& eta);

// Q-linear membership in the span of a finite list of sections.
bool section_in_span(const std::vector<Section>& basis, const Section& s);

}  // namespace jsk
