#pragma once

#include <vector>

namespace jsk {

// Exponent vector for n commuting symbols.  Used both for derivative
// monomials d1^a1*...*dn^an and for position monomials x1^a1*...*xn^an.
struct MultiIndex {
    std::vector<int> exp;

    MultiIndex() = default;
    explicit MultiIndex(int n) : exp(static_cast<size_t>(n), 0) {}
    MultiIndex(std::initializer_list<int> e) : exp(e) {}

    int size() const { return static_cast<int>(exp.size()); }
    int degree() const;
    bool is_zero() const { return degree() == 0; }
    int operator[](int i) const { return exp[static_cast<size_t>(i)]; }
    int& operator[](int i) { return exp[static_cast<size_t>(i)]; }

    MultiIndex plus(int axis, int count = 1) const;
    // Throws if the result would go negative.
    MultiIndex minus(int axis, int count = 1) const;

    bool divides(const MultiIndex& other) const;
    MultiIndex operator+(const MultiIndex& other) const;
    // Componentwise difference; requires divides(other) in spirit (no check).
    MultiIndex operator-(const MultiIndex& other) const;

    bool operator==(const MultiIndex& other) const { return exp == other.exp; }
    bool operator!=(const MultiIndex& other) const { return exp != other.exp; }
};

MultiIndex multiindex_lcm(const MultiIndex& a, const MultiIndex& b);

// Graded reverse lexicographic order with symbol 1 ranked highest.
// a < b when deg a < deg b, or degrees tie and the rightmost position
// where they differ has the larger exponent in a.
bool grevlex_less(const MultiIndex& a, const MultiIndex& b);

struct GrevlexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        return grevlex_less(a, b);
    }
};

// All multi-indices in n symbols of total degree exactly d, grevlex
// ascending.  Deterministic; used to index jet coordinates.
std::vector<MultiIndex> multi_indices_of_degree(int n, int d);

// Total degree <= d, ordered by (degree, grevlex) ascending.
std::vector<MultiIndex> multi_indices_up_to(int n, int d);

}  // namespace jsk
