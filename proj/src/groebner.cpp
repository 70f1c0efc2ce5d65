#include "jsk/groebner.hpp"

#include <algorithm>
#include <set>

#include "jsk/errors.hpp"
#include "jsk/ratmatrix.hpp"

namespace jsk {

bool ModuleElement::is_zero() const {
    for (const Polynomial& p : comps)
        if (!p.is_zero()) return false;
    return true;
}

int ModuleElement::max_degree() const {
    int d = -1;
    for (const Polynomial& p : comps) d = std::max(d, p.degree());
    return d;
}

ModuleElement ModuleElement::operator+(const ModuleElement& o) const {
    ModuleElement r = *this;
    for (size_t i = 0; i < comps.size(); ++i) r.comps[i] += o.comps[i];
    return r;
}

ModuleElement ModuleElement::operator-(const ModuleElement& o) const {
    ModuleElement r = *this;
    r -= o;
    return r;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& o) {
    if (comps.size() != o.comps.size())
        throw DimensionMismatch("module elements of different rank");
    for (size_t i = 0; i < comps.size(); ++i) comps[i] -= o.comps[i];
    return *this;
}

ModuleElement mono_scaled(const ModuleElement& e, const MultiIndex& mu,
                          const Rational& c) {
    ModuleElement r = e;
    if (e.is_zero()) return r;
    int n = 0;
    for (const Polynomial& p : e.comps) n = p.vars();
    Polynomial m = Polynomial::monomial(VarFamily::Derivative, n, mu, c);
    for (Polynomial& p : r.comps) p = p * m;
    return r;
}

ModuleElement primitive_scaled(const ModuleElement& e) {
    Rational g = 0;
    for (const Polynomial& p : e.comps)
        for (const auto& [mu, c] : p.terms()) g = rational_content_gcd(g, c);
    if (g == 0) return e;
    for (const Polynomial& p : e.comps) {
        if (p.is_zero()) continue;
        if (sign_of(p.leading_term().second) < 0) g = -g;
        break;
    }
    ModuleElement r = e;
    for (Polynomial& p : r.comps) p = p * (1 / g);
    return r;
}

bool module_term_less(OrderKind kind, const ModuleTerm& a, const ModuleTerm& b) {
    if (kind == OrderKind::PositionOverTerm) {
        if (a.pos != b.pos) return a.pos > b.pos;  // lower position ranks higher
        return grevlex_less(a.mono, b.mono);
    }
    if (a.mono != b.mono) return grevlex_less(a.mono, b.mono);
    return a.pos > b.pos;
}

std::optional<std::pair<ModuleTerm, Rational>> leading_term(
    const ModuleElement& e, OrderKind kind) {
    std::optional<std::pair<ModuleTerm, Rational>> best;
    for (int pos = 0; pos < e.size(); ++pos) {
        const Polynomial& p = e.comps[static_cast<size_t>(pos)];
        if (p.is_zero()) continue;
        auto [mono, coef] = p.leading_term();
        ModuleTerm t{pos, mono};
        if (!best || module_term_less(kind, best->first, t)) best = {t, coef};
        if (kind == OrderKind::PositionOverTerm) break;  // first nonzero wins
    }
    return best;
}

namespace {

ModuleElement monic(const ModuleElement& e, OrderKind kind) {
    auto lt = leading_term(e, kind);
    if (!lt) return e;
    ModuleElement r = e;
    Rational inv = 1 / lt->second;
    for (Polynomial& p : r.comps) p = p * inv;
    return r;
}

struct Reducer {
    ModuleElement elem;
    ModuleTerm lead;
    Rational leadCoef;
};

std::vector<Reducer> make_reducers(const std::vector<ModuleElement>& basis,
                                   OrderKind kind) {
    std::vector<Reducer> out;
    for (const ModuleElement& g : basis) {
        auto lt = leading_term(g, kind);
        if (!lt) continue;
        out.push_back({g, lt->first, lt->second});
    }
    return out;
}

ModuleElement normal_form_impl(ModuleElement work,
                               const std::vector<Reducer>& reducers,
                               OrderKind kind) {
    if (work.is_zero()) return work;
    ModuleElement rem(0, 0);
    rem.comps.assign(work.comps.size(),
                     Polynomial::zero(VarFamily::Derivative,
                                      work.comps.empty() ? 0 : work.comps[0].vars()));
    while (!work.is_zero()) {
        auto lt = leading_term(work, kind);
        const ModuleTerm& t = lt->first;
        bool reduced = false;
        for (const Reducer& r : reducers) {
            if (r.lead.pos == t.pos && r.lead.mono.divides(t.mono)) {
                work -= mono_scaled(r.elem, t.mono - r.lead.mono,
                                    lt->second / r.leadCoef);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.comps[static_cast<size_t>(t.pos)].add_term(t.mono, lt->second);
            work.comps[static_cast<size_t>(t.pos)].add_term(t.mono, -lt->second);
        }
    }
    return rem;
}

}  // namespace

ModuleElement normal_form(const ModuleElement& e,
                          const std::vector<ModuleElement>& basis,
                          OrderKind kind) {
    return normal_form_impl(e, make_reducers(basis, kind), kind);
}

std::vector<ModuleElement> module_groebner(const std::vector<ModuleElement>& gens,
                                           OrderKind kind) {
    std::vector<Reducer> g;
    for (const ModuleElement& e : gens) {
        if (e.is_zero()) continue;
        ModuleElement m = monic(e, kind);
        auto lt = leading_term(m, kind);
        g.push_back({m, lt->first, lt->second});
    }

    // Pair queue keyed (lcm degree, i, j); chain criterion consults the set
    // of pairs already handled.
    std::set<std::pair<int, int>> processed;
    std::vector<std::pair<int, int>> queue;
    auto push_pairs_for = [&](size_t jnew) {
        for (size_t i = 0; i < jnew; ++i)
            if (g[i].lead.pos == g[jnew].lead.pos)
                queue.emplace_back(static_cast<int>(i), static_cast<int>(jnew));
    };
    for (size_t j = 1; j < g.size(); ++j) push_pairs_for(j);

    while (!queue.empty()) {
        size_t bestIdx = 0;
        int bestDeg =
            multiindex_lcm(g[static_cast<size_t>(queue[0].first)].lead.mono,
                           g[static_cast<size_t>(queue[0].second)].lead.mono)
                .degree();
        for (size_t k = 1; k < queue.size(); ++k) {
            int deg =
                multiindex_lcm(g[static_cast<size_t>(queue[k].first)].lead.mono,
                               g[static_cast<size_t>(queue[k].second)].lead.mono)
                    .degree();
            if (deg < bestDeg ||
                (deg == bestDeg && queue[k] < queue[bestIdx])) {
                bestDeg = deg;
                bestIdx = k;
            }
        }
        auto [i, j] = queue[bestIdx];
        queue.erase(queue.begin() + static_cast<long>(bestIdx));
        processed.insert({i, j});

        const Reducer& gi = g[static_cast<size_t>(i)];
        const Reducer& gj = g[static_cast<size_t>(j)];
        MultiIndex lcm = multiindex_lcm(gi.lead.mono, gj.lead.mono);

        // Chain criterion: some third leading term divides the lcm and both
        // side pairs were already handled.
        bool skip = false;
        for (size_t k = 0; k < g.size() && !skip; ++k) {
            if (static_cast<int>(k) == i || static_cast<int>(k) == j) continue;
            if (g[k].lead.pos != gi.lead.pos) continue;
            if (!g[k].lead.mono.divides(lcm)) continue;
            auto key = [&](int a, int b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (processed.count(key(i, static_cast<int>(k))) &&
                processed.count(key(j, static_cast<int>(k))))
                skip = true;
        }
        if (skip) continue;

        ModuleElement s = mono_scaled(gi.elem, lcm - gi.lead.mono, 1) -
                          mono_scaled(gj.elem, lcm - gj.lead.mono, 1);
        ModuleElement r = normal_form_impl(std::move(s), g, kind);
        if (r.is_zero()) continue;
        ModuleElement m = monic(r, kind);
        auto lt = leading_term(m, kind);
        g.push_back({m, lt->first, lt->second});
        push_pairs_for(g.size() - 1);
    }

    // Inter-reduce to the unique reduced basis.
    std::vector<ModuleElement> basis;
    for (const Reducer& r : g) basis.push_back(r.elem);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t idx = 0; idx < basis.size(); ++idx) {
            std::vector<ModuleElement> others;
            for (size_t k = 0; k < basis.size(); ++k)
                if (k != idx) others.push_back(basis[k]);
            ModuleElement h = normal_form(basis[idx], others, kind);
            if (h == basis[idx]) continue;
            changed = true;
            if (h.is_zero()) {
                basis.erase(basis.begin() + static_cast<long>(idx));
            } else {
                basis[idx] = monic(h, kind);
            }
            break;
        }
    }
    std::sort(basis.begin(), basis.end(),
              [kind](const ModuleElement& a, const ModuleElement& b) {
                  return module_term_less(kind, leading_term(a, kind)->first,
                                          leading_term(b, kind)->first);
              });
    return basis;
}

bool module_contains(const std::vector<ModuleElement>& groebner,
                     const ModuleElement& e, OrderKind kind) {
    return normal_form(e, groebner, kind).is_zero();
}

bool modules_equal(const std::vector<ModuleElement>& gensA,
                   const std::vector<ModuleElement>& gensB) {
    return module_groebner(gensA, OrderKind::PositionOverTerm) ==
           module_groebner(gensB, OrderKind::PositionOverTerm);
}

long bounded_degree_dim(const std::vector<ModuleElement>& gens, int maxDeg) {
    std::vector<ModuleElement> gb =
        module_groebner(gens, OrderKind::TermOverPosition);
    if (gb.empty()) return 0;
    int c = gb[0].size();
    int n = 0;
    for (const Polynomial& p : gb[0].comps) n = p.vars();

    std::vector<ModuleTerm> leads;
    for (const ModuleElement& e : gb)
        leads.push_back(leading_term(e, OrderKind::TermOverPosition)->first);

    long count = 0;
    std::vector<MultiIndex> monos = multi_indices_up_to(n, maxDeg);
    for (int pos = 0; pos < c; ++pos)
        for (const MultiIndex& mu : monos)
            for (const ModuleTerm& lt : leads)
                if (lt.pos == pos && lt.mono.divides(mu)) {
                    ++count;
                    break;
                }
    return count;
}

}  // namespace jsk
