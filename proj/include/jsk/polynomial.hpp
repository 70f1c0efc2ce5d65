#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jsk/multiindex.hpp"
#include "jsk/rational.hpp"

namespace jsk {

// The two disjoint symbol families.  Derivative symbols print as d1..dn,
// position symbols as x1..xn.  Mixing families in arithmetic throws.
enum class VarFamily { Derivative, Position };

inline char family_letter(VarFamily f) {
    return f == VarFamily::Derivative ? 'd' : 'x';
}

// Sparse multivariate polynomial with exact rational coefficients over one
// symbol family.  Terms are kept in a grevlex-ascending map, so iteration
// order (and therefore printing) is canonical.
class Polynomial {
  public:
    using TermMap = std::map<MultiIndex, Rational, GrevlexLess>;

    Polynomial() : family_(VarFamily::Derivative), n_(0) {}
    Polynomial(VarFamily family, int n) : family_(family), n_(n) {}

    static Polynomial zero(VarFamily family, int n) {
        return Polynomial(family, n);
    }
    static Polynomial constant(VarFamily family, int n, const Rational& c);
    static Polynomial variable(VarFamily family, int n, int axis,
                               int power = 1);
    static Polynomial monomial(VarFamily family, int n, const MultiIndex& mu,
                               const Rational& c);

    VarFamily family() const { return family_; }
    int vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Total degree; -1 for the zero polynomial.
    int degree() const;
    int degree_in(int axis) const;
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rational coeff(const MultiIndex& mu) const;
    void add_term(const MultiIndex& mu, const Rational& c);

    // Grevlex-largest term; throws on the zero polynomial.
    std::pair<MultiIndex, Rational> leading_term() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    Polynomial pow(int k) const;

    // d/dsymbol_axis, same family.
    Polynomial differentiate(int axis) const;

    // Largest positive rational r with (*this)/r having coprime integer
    // coefficients; sign chosen so the leading coefficient of (*this)/r is
    // positive.  Zero polynomial has content 0.
    Rational content() const;
    Polynomial primitive_part() const;

    // Collect as a univariate polynomial in symbol `axis`: result[k] is the
    // coefficient of symbol^k, a polynomial not involving `axis`.
    std::vector<Polynomial> coefficients_in(int axis) const;

    // Canonical text form, e.g. "2*d1^2 - d1*d2 + 1/3".  parse() accepts the
    // same grammar (whitespace-insensitive) and round-trips with str().
    std::string str() const;
    static Polynomial parse(VarFamily family, int n, const std::string& text);

  private:
    void check_compatible(const Polynomial& other) const;

    VarFamily family_;
    int n_;
    TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) {
    return p * c;
}

}  // namespace jsk
