#pragma once

#include <optional>
#include <vector>

#include "jsk/polynomial.hpp"

namespace jsk {

// Element of a free module R^c over R = Q[d1..dn].  Components are
// derivative-family polynomials of a common n.
struct ModuleElement {
    std::vector<Polynomial> comps;

    ModuleElement() = default;
    ModuleElement(int n, int c)
        : comps(static_cast<size_t>(c), Polynomial::zero(VarFamily::Derivative, n)) {}

    int size() const { return static_cast<int>(comps.size()); }
    bool is_zero() const;
    // Max total degree across components; -1 when zero.
    int max_degree() const;

    ModuleElement operator+(const ModuleElement& o) const;
    ModuleElement operator-(const ModuleElement& o) const;
    ModuleElement& operator-=(const ModuleElement& o);
    bool operator==(const ModuleElement& o) const { return comps == o.comps; }
    bool operator!=(const ModuleElement& o) const { return comps != o.comps; }
};

// e scaled by the one-term polynomial c * d^mu.
ModuleElement mono_scaled(const ModuleElement& e, const MultiIndex& mu,
                          const Rational& c);

// Scale to coprime integer coefficients, first nonzero leading coefficient
// positive.  Canonical representative of the ray through e.
ModuleElement primitive_scaled(const ModuleElement& e);

// Module monomial: position (component index) plus monomial.
struct ModuleTerm {
    int pos;
    MultiIndex mono;
    bool operator==(const ModuleTerm& o) const {
        return pos == o.pos && mono == o.mono;
    }
};

// Both orders refine grevlex on the polynomial part.
//  - PositionOverTerm: lower component index always wins; this is an
//    elimination order for leading blocks of components.
//  - TermOverPosition: grevlex on monomials first, so the order is
//    degree-compatible and suits dimension counting.
enum class OrderKind { PositionOverTerm, TermOverPosition };

bool module_term_less(OrderKind kind, const ModuleTerm& a, const ModuleTerm& b);

std::optional<std::pair<ModuleTerm, Rational>> leading_term(
    const ModuleElement& e, OrderKind kind);

// Full normal form (head and tail) against an ordered list of reducers.
ModuleElement normal_form(const ModuleElement& e,
                          const std::vector<ModuleElement>& basis,
                          OrderKind kind);

// Buchberger with the chain criterion, then inter-reduction; the result is
// the unique reduced monic basis, sorted ascending by leading term, so equal
// submodules always produce byte-identical bases.
std::vector<ModuleElement> module_groebner(const std::vector<ModuleElement>& gens,
                                           OrderKind kind);

bool module_contains(const std::vector<ModuleElement>& groebner,
                     const ModuleElement& e, OrderKind kind);

// Submodule equality via uniqueness of the reduced basis.
bool modules_equal(const std::vector<ModuleElement>& gensA,
                   const std::vector<ModuleElement>& gensB);

// Dimension over Q of { e in <gens> : max_degree(e) <= maxDeg }, counted as
// leading module monomials under the degree-compatible order.
long bounded_degree_dim(const std::vector<ModuleElement>& gens, int maxDeg);

}  // namespace jsk
