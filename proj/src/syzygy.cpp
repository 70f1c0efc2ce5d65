#include "jsk/syzygy.hpp"

#include <algorithm>

#include "jsk/errors.hpp"
#include "jsk/ratmatrix.hpp"

namespace jsk {

std::vector<ModuleElement> operator_rows(const LinearDiffOp& op) {
    std::vector<ModuleElement> rows;
    for (int i = 0; i < op.target_comps(); ++i) {
        ModuleElement e(op.vars(), op.source_comps());
        for (int j = 0; j < op.source_comps(); ++j)
            e.comps[static_cast<size_t>(j)] = op.entry(i, j);
        rows.push_back(std::move(e));
    }
    return rows;
}

LinearDiffOp rows_to_operator(int n, int sourceComps,
                              const std::vector<ModuleElement>& rows,
                              std::string label) {
    LinearDiffOp op(n, sourceComps, static_cast<int>(rows.size()),
                    std::move(label));
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != sourceComps)
            throw DimensionMismatch("row length does not match sourceComps");
        for (int j = 0; j < sourceComps; ++j)
            op.entry(static_cast<int>(i), j) = rows[i].comps[static_cast<size_t>(j)];
    }
    return op;
}

namespace {

// Deterministic ordering used to present generator lists: by degree, then by
// leading term, then lexicographically on the printed form as a last resort.
bool element_presentation_less(const ModuleElement& a, const ModuleElement& b) {
    if (a.max_degree() != b.max_degree()) return a.max_degree() < b.max_degree();
    auto la = leading_term(a, OrderKind::PositionOverTerm);
    auto lb = leading_term(b, OrderKind::PositionOverTerm);
    if (!(la->first == lb->first))
        return module_term_less(OrderKind::PositionOverTerm, lb->first, la->first);
    std::string sa, sb;
    for (const Polynomial& p : a.comps) sa += p.str() + ";";
    for (const Polynomial& p : b.comps) sb += p.str() + ";";
    return sa < sb;
}

}  // namespace

std::vector<ModuleElement> syzygy_generators(const std::vector<ModuleElement>& gens) {
    if (gens.empty()) return {};
    int c = gens[0].size();
    int t = static_cast<int>(gens.size());
    int n = 0;
    for (const Polynomial& p : gens[0].comps) n = p.vars();

    // Tag each generator: (g_i | e_i) in R^(c+t); with the position-first
    // order, basis elements supported only on the tag block are exactly a
    // generating set of the syzygies.
    std::vector<ModuleElement> extended;
    for (int i = 0; i < t; ++i) {
        ModuleElement e(n, c + t);
        for (int j = 0; j < c; ++j)
            e.comps[static_cast<size_t>(j)] = gens[static_cast<size_t>(i)].comps[static_cast<size_t>(j)];
        e.comps[static_cast<size_t>(c + i)] =
            Polynomial::constant(VarFamily::Derivative, n, 1);
        extended.push_back(std::move(e));
    }

    std::vector<ModuleElement> gb =
        module_groebner(extended, OrderKind::PositionOverTerm);

    std::vector<ModuleElement> syz;
    for (const ModuleElement& e : gb) {
        bool leadingBlockZero = true;
        for (int j = 0; j < c && leadingBlockZero; ++j)
            if (!e.comps[static_cast<size_t>(j)].is_zero()) leadingBlockZero = false;
        if (!leadingBlockZero) continue;
        ModuleElement s(n, t);
        for (int i = 0; i < t; ++i)
            s.comps[static_cast<size_t>(i)] = e.comps[static_cast<size_t>(c + i)];
        syz.push_back(primitive_scaled(s));
    }

    // Prune generators that lie in the span of the remaining ones, highest
    // degree first, until stable.
    std::sort(syz.begin(), syz.end(), element_presentation_less);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t idx = syz.size(); idx-- > 0;) {
            std::vector<ModuleElement> others;
            for (size_t k = 0; k < syz.size(); ++k)
                if (k != idx) others.push_back(syz[k]);
            if (others.empty()) break;
            std::vector<ModuleElement> gbOthers =
                module_groebner(others, OrderKind::PositionOverTerm);
            if (module_contains(gbOthers, syz[idx], OrderKind::PositionOverTerm)) {
                syz.erase(syz.begin() + static_cast<long>(idx));
                changed = true;
            }
        }
    }
    return syz;
}

CompatibilityResult compatibility_conditions(const LinearDiffOp& op) {
    CompatibilityResult out;
    out.generators = syzygy_generators(operator_rows(op));
    out.cc = rows_to_operator(op.vars(), op.target_comps(), out.generators,
                              op.label().empty() ? "cc" : "cc(" + op.label() + ")");
    if (!out.generators.empty()) {
        LinearDiffOp zeroCheck = compose(out.cc, op);
        if (!zeroCheck.is_zero())
            throw Error("internal: compatibility conditions fail to annihilate");
    }
    return out;
}

std::vector<ModuleElement> syzygy_space_basis(const LinearDiffOp& op, int maxOrder) {
    int n = op.vars();
    int t = op.target_comps();
    int s = op.source_comps();
    std::vector<MultiIndex> monos = multi_indices_up_to(n, maxOrder);
    int m = static_cast<int>(monos.size());
    int opOrder = std::max(op.order(), 0);
    std::vector<MultiIndex> rowMonos = multi_indices_up_to(n, maxOrder + opOrder);

    // Index lookup for equation rows.
    auto rowIndex = [&](int j, const MultiIndex& nu) {
        for (size_t k = 0; k < rowMonos.size(); ++k)
            if (rowMonos[k] == nu) return j * static_cast<int>(rowMonos.size()) +
                                          static_cast<int>(k);
        throw Error("internal: missing row monomial");
    };

    RatMatrix mat(s * static_cast<int>(rowMonos.size()), t * m);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < s; ++j)
            for (const auto& [gamma, cg] : op.entry(i, j).terms())
                for (int k = 0; k < m; ++k) {
                    MultiIndex nu = monos[static_cast<size_t>(k)] + gamma;
                    mat.at(rowIndex(j, nu), i * m + k) += cg;
                }

    std::vector<ModuleElement> basis;
    for (const auto& v : kernel_basis(mat)) {
        ModuleElement e(n, t);
        for (int i = 0; i < t; ++i)
            for (int k = 0; k < m; ++k) {
                const Rational& c = v[static_cast<size_t>(i * m + k)];
                if (c != 0) e.comps[static_cast<size_t>(i)].add_term(
                    monos[static_cast<size_t>(k)], c);
            }
        basis.push_back(primitive_scaled(e));
    }
    return basis;
}

long syzygy_dim_up_to(const LinearDiffOp& op, int maxDeg) {
    std::vector<ModuleElement> gens = syzygy_generators(operator_rows(op));
    if (gens.empty()) return 0;
    return bounded_degree_dim(gens, maxDeg);
}

bool is_complex(const std::vector<LinearDiffOp>& seq) {
    for (size_t i = 0; i + 1 < seq.size(); ++i)
        if (!compose(seq[i + 1], seq[i]).is_zero()) return false;
    return true;
}

bool rows_module_equal(const LinearDiffOp& a, const LinearDiffOp& b) {
    if (a.vars() != b.vars() || a.source_comps() != b.source_comps())
        return false;
    return modules_equal(operator_rows(a), operator_rows(b));
}

bool check_parametrization(const LinearDiffOp& op, const LinearDiffOp& param) {
    if (!compose(op, param).is_zero()) return false;
    std::vector<ModuleElement> paramSyz = syzygy_generators(operator_rows(param));
    return modules_equal(operator_rows(op), paramSyz);
}

bool check_exactness_pair(const LinearDiffOp& a, const LinearDiffOp& b) {
    return check_parametrization(b, a);
}

}  // namespace jsk
