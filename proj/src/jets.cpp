#include "jsk/jets.hpp"

#include <algorithm>

#include "jsk/errors.hpp"
#include "jsk/ratmatrix.hpp"

namespace jsk {

long jet_dim(int n, int m, int q) {
    if (n < 1 || m < 1 || q < 0) throw Error("jet_dim needs n, m >= 1 and q >= 0");
    return m * binomial(n + q, q).get_si();
}

long strict_jet_dim(int n, int m, int r) {
    if (n < 1 || m < 1 || r < 0)
        throw Error("strict_jet_dim needs n, m >= 1 and r >= 0");
    return m * binomial(n + r - 1, r).get_si();
}

JetSection::JetSection(int n, int m, int q) : n(n), m(m), q(q) {
    for (int comp = 0; comp < m; ++comp)
        for (const MultiIndex& mu : multi_indices_up_to(n, q))
            entries.emplace(JetKey{comp, mu},
                            Polynomial::zero(VarFamily::Position, n));
}

const Polynomial& JetSection::at(int comp, const MultiIndex& mu) const {
    auto it = entries.find(JetKey{comp, mu});
    if (it == entries.end()) throw Error("jet entry out of range");
    return it->second;
}

Polynomial& JetSection::at(int comp, const MultiIndex& mu) {
    auto it = entries.find(JetKey{comp, mu});
    if (it == entries.end()) throw Error("jet entry out of range");
    return it->second;
}

Section JetSection::order0() const {
    Section s(n, m);
    for (int comp = 0; comp < m; ++comp)
        s.comps[static_cast<size_t>(comp)] = at(comp, MultiIndex(n));
    return s;
}

JetSection prolong(const Section& f, int q) {
    if (q < 0) throw Error("prolongation order must be >= 0");
    JetSection j(f.n, f.size(), q);
    for (int comp = 0; comp < f.size(); ++comp)
        for (const MultiIndex& mu : multi_indices_up_to(f.n, q)) {
            Polynomial d = f.comps[static_cast<size_t>(comp)];
            for (int axis = 0; axis < f.n; ++axis)
                for (int k = 0; k < mu[axis]; ++k) d = d.differentiate(axis);
            j.at(comp, mu) = d;
        }
    return j;
}

const Polynomial& SpencerImage::at(int axis, int comp, const MultiIndex& mu) const {
    auto it = entries.find(SpencerKey{axis, comp, mu});
    if (it == entries.end()) throw Error("spencer entry out of range");
    return it->second;
}

bool SpencerImage::is_zero() const {
    for (const auto& [key, p] : entries)
        if (!p.is_zero()) return false;
    return true;
}

namespace {

SpencerImage spencer_impl(const JetSection& f, int imageOrder, bool zeroExtend) {
    SpencerImage out;
    out.n = f.n;
    out.m = f.m;
    out.q = imageOrder;
    for (int axis = 0; axis < f.n; ++axis)
        for (int comp = 0; comp < f.m; ++comp)
            for (const MultiIndex& mu : multi_indices_up_to(f.n, imageOrder)) {
                Polynomial v = f.at(comp, mu).differentiate(axis);
                MultiIndex up = mu.plus(axis);
                if (!zeroExtend || up.degree() <= f.q) v -= f.at(comp, up);
                out.entries.emplace(SpencerKey{axis, comp, mu}, std::move(v));
            }
    return out;
}

}  // namespace

SpencerImage spencer(const JetSection& f) {
    if (f.q < 1) throw Error("spencer needs a jet of order >= 1");
    return spencer_impl(f, f.q - 1, false);
}

SpencerImage restricted_spencer(const JetSection& f) {
    return spencer_impl(f, f.q, true);
}

ProlongationCount symbol_prolongation_rank(const LinearDiffOp& op, int r) {
    if (r < 0) throw Error("prolongation index must be >= 0");
    int n = op.vars();
    int q = std::max(op.order(), 0);
    std::vector<MultiIndex> alphas = multi_indices_of_degree(n, q + r + 1);
    std::vector<MultiIndex> betas = multi_indices_of_degree(n, r + 1);

    auto alphaIndex = [&](const MultiIndex& a) {
        for (size_t k = 0; k < alphas.size(); ++k)
            if (alphas[k] == a) return static_cast<int>(k);
        throw Error("internal: missing source jet index");
    };

    // Top-order symbol, prolonged: row (i, beta), column (j, alpha = gamma +
    // beta) carries the coefficient of d^gamma in entry (i, j), |gamma| = q.
    RatMatrix mat(op.target_comps() * static_cast<int>(betas.size()),
                  op.source_comps() * static_cast<int>(alphas.size()));
    for (int i = 0; i < op.target_comps(); ++i)
        for (int j = 0; j < op.source_comps(); ++j)
            for (const auto& [gamma, c] : op.entry(i, j).terms()) {
                if (gamma.degree() != q) continue;
                for (size_t b = 0; b < betas.size(); ++b) {
                    int row = i * static_cast<int>(betas.size()) + static_cast<int>(b);
                    int col = j * static_cast<int>(alphas.size()) +
                              alphaIndex(gamma + betas[b]);
                    mat.at(row, col) += c;
                }
            }

    // Constant relations among the target components (all orders, not just
    // the top symbol): rows of the full coefficient matrix.
    std::map<std::pair<int, MultiIndex>, int, bool (*)(const std::pair<int, MultiIndex>&,
                                                       const std::pair<int, MultiIndex>&)>
        colIndex([](const std::pair<int, MultiIndex>& a,
                    const std::pair<int, MultiIndex>& b) {
            if (a.first != b.first) return a.first < b.first;
            return grevlex_less(a.second, b.second);
        });
    for (int i = 0; i < op.target_comps(); ++i)
        for (int j = 0; j < op.source_comps(); ++j)
            for (const auto& [gamma, c] : op.entry(i, j).terms())
                colIndex.emplace(std::make_pair(j, gamma),
                                 static_cast<int>(colIndex.size()));
    RatMatrix coeffs(op.target_comps(), std::max<int>(1, static_cast<int>(colIndex.size())));
    for (int i = 0; i < op.target_comps(); ++i)
        for (int j = 0; j < op.source_comps(); ++j)
            for (const auto& [gamma, c] : op.entry(i, j).terms())
                coeffs.at(i, colIndex.at(std::make_pair(j, gamma))) += c;
    int degenerate = op.target_comps() - rank_exact(coeffs);

    ProlongationCount out;
    out.r = r;
    out.sourceJets = strict_jet_dim(n, op.source_comps(), q + r + 1);
    out.targetJetsRaw = strict_jet_dim(n, op.target_comps(), r + 1);
    out.effectiveTargetComps = op.target_comps() - degenerate;
    out.targetJets = out.effectiveTargetComps == 0
                         ? 0
                         : strict_jet_dim(n, out.effectiveTargetComps, r + 1);
    out.rank = rank_exact(mat);
    return out;
}

namespace {

// Rank of the Koszul map Λ^{r-1} ⊗ S_{q+1} ⊗ E -> Λ^r ⊗ S_q ⊗ E,
//   δ(e_T ⊗ x^α ⊗ e) = Σ_i sign(T, i) e_{T∪i} ⊗ α_i x^{α-e_i} ⊗ e.
long koszul_rank(int n, int m, int q, int r) {
    std::vector<std::vector<int>> sourceSubsets, targetSubsets;
    // Enumerate k-subsets of {0..n-1} in lexicographic order.
    auto subsets = [&](int k) {
        std::vector<std::vector<int>> out;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int start) -> void {
            if (static_cast<int>(cur.size()) == k) {
                out.push_back(cur);
                return;
            }
            for (int i = start; i < n; ++i) {
                cur.push_back(i);
                self(self, i + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
        return out;
    };
    sourceSubsets = subsets(r - 1);
    targetSubsets = subsets(r);

    std::vector<MultiIndex> alphas = multi_indices_of_degree(n, q + 1);
    std::vector<MultiIndex> betas = multi_indices_of_degree(n, q);

    auto findIn = [](const auto& list, const auto& x) {
        for (size_t k = 0; k < list.size(); ++k)
            if (list[k] == x) return static_cast<int>(k);
        throw Error("internal: missing basis element");
    };

    int sourceDim = static_cast<int>(sourceSubsets.size() * alphas.size()) * m;
    int targetDim = static_cast<int>(targetSubsets.size() * betas.size()) * m;
    RatMatrix mat(targetDim, sourceDim);

    for (size_t ts = 0; ts < sourceSubsets.size(); ++ts) {
        const std::vector<int>& T = sourceSubsets[ts];
        for (size_t a = 0; a < alphas.size(); ++a) {
            const MultiIndex& alpha = alphas[a];
            for (int e = 0; e < m; ++e) {
                int col = (static_cast<int>(ts) * static_cast<int>(alphas.size()) +
                           static_cast<int>(a)) * m + e;
                for (int i = 0; i < n; ++i) {
                    if (alpha[i] == 0) continue;
                    if (std::find(T.begin(), T.end(), i) != T.end()) continue;
                    std::vector<int> S = T;
                    S.insert(std::upper_bound(S.begin(), S.end(), i), i);
                    int pos = static_cast<int>(
                        std::lower_bound(S.begin(), S.end(), i) - S.begin());
                    int sign = pos % 2 == 0 ? 1 : -1;
                    int row = (findIn(targetSubsets, S) * static_cast<int>(betas.size()) +
                               findIn(betas, alpha.minus(i))) * m + e;
                    mat.at(row, col) += Rational(sign * alpha[i]);
                }
            }
        }
    }
    return rank_exact(mat);
}

}  // namespace

SequenceDims spencer_bundle_dims(int n, int m, int q) {
    if (n < 1 || m < 1 || q < 0)
        throw Error("spencer_bundle_dims needs n, m >= 1 and q >= 0");
    SequenceDims out;
    out.sourceDim = q >= 1 ? m : 0;
    out.dims.push_back(jet_dim(n, m, q));
    for (int r = 1; r <= n; ++r) {
        long full = binomial(n, r).get_si() * jet_dim(n, m, q);
        long rk = q >= 1 ? koszul_rank(n, m, q, r) : 0;
        out.dims.push_back(full - rk);
    }
    return out;
}

SolutionBasis polynomial_solutions(const LinearDiffOp& op, int degreeBound) {
    if (degreeBound < 0) throw Error("degree bound must be >= 0");
    int n = op.vars();
    std::vector<MultiIndex> monos = multi_indices_up_to(n, degreeBound);
    int m = static_cast<int>(monos.size());

    auto monoIndex = [&](const MultiIndex& mu) {
        for (size_t k = 0; k < monos.size(); ++k)
            if (monos[k] == mu) return static_cast<int>(k);
        throw Error("internal: missing monomial");
    };

    // Row (i, nu): coefficient of x^nu in component i of op applied to the
    // generic section with unknown coefficients.
    RatMatrix mat(op.target_comps() * m, op.source_comps() * m);
    for (int i = 0; i < op.target_comps(); ++i)
        for (int j = 0; j < op.source_comps(); ++j)
            for (const auto& [gamma, c] : op.entry(i, j).terms())
                for (int k = 0; k < m; ++k) {
                    const MultiIndex& mu = monos[static_cast<size_t>(k)];
                    if (!gamma.divides(mu)) continue;
                    // d^gamma x^mu = falling-factorial(mu, gamma) x^{mu-gamma}
                    Rational fall = 1;
                    for (int axis = 0; axis < n; ++axis)
                        for (int t = 0; t < gamma[axis]; ++t)
                            fall *= (mu[axis] - t);
                    int row = i * m + monoIndex(mu - gamma);
                    mat.at(row, j * m + k) += c * fall;
                }

    SolutionBasis out;
    out.degreeBound = degreeBound;
    for (const auto& v : kernel_basis(mat)) {
        Section s(n, op.source_comps());
        for (int j = 0; j < op.source_comps(); ++j)
            for (int k = 0; k < m; ++k) {
                const Rational& c = v[static_cast<size_t>(j * m + k)];
                if (c != 0)
                    s.comps[static_cast<size_t>(j)].add_term(monos[static_cast<size_t>(k)], c);
            }
        out.basis.push_back(std::move(s));
    }
    return out;
}

Section vector_bracket(const Section& xi, const Section& eta) {
    if (xi.n != eta.n || xi.size() != xi.n || eta.size() != eta.n)
        throw DimensionMismatch("vector fields need comps = n");
    int n = xi.n;
    Section out(n, n);
    for (int k = 0; k < n; ++k) {
        Polynomial v = Polynomial::zero(VarFamily::Position, n);
        for (int r = 0; r < n; ++r) {
            v += xi.comps[static_cast<size_t>(r)] *
                 eta.comps[static_cast<size_t>(k)].differentiate(r);
            v -= eta.comps[static_cast<size_t>(r)] *
                 xi.comps[static_cast<size_t>(k)].differentiate(r);
        }
        out.comps[static_cast<size_t>(k)] = v;
    }
    return out;
}

bool section_in_span(const std::vector<Section>& basis, const Section& s) {
    // Common coefficient coordinates over every monomial that occurs.
    int deg = 0;
    for (const Section& b : basis)
        for (const Polynomial& p : b.comps) deg = std::max(deg, p.degree());
    for (const Polynomial& p : s.comps) deg = std::max(deg, p.degree());
    if (deg < 0) return true;  // everything is zero
    std::vector<MultiIndex> monos = multi_indices_up_to(s.n, deg);

    auto toRow = [&](const Section& sec, RatMatrix& m, int row) {
        int col = 0;
        for (const Polynomial& p : sec.comps) {
            for (const MultiIndex& mu : monos) m.at(row, col++) = p.coeff(mu);
        }
    };
    int cols = s.size() * static_cast<int>(monos.size());
    RatMatrix without(static_cast<int>(basis.size()), cols);
    RatMatrix with(static_cast<int>(basis.size()) + 1, cols);
    for (size_t i = 0; i < basis.size(); ++i) {
        toRow(basis[i], without, static_cast<int>(i));
        toRow(basis[i], with, static_cast<int>(i));
    }
    toRow(s, with, static_cast<int>(basis.size()));
    return rank_exact(without) == rank_exact(with);
}

}  // namespace jsk
