#include "jsk/polynomial.hpp"

#include <cctype>
#include <sstream>

#include "jsk/errors.hpp"

namespace jsk {

Polynomial Polynomial::constant(VarFamily family, int n, const Rational& c) {
    Polynomial p(family, n);
    if (c != 0) p.terms_[MultiIndex(n)] = c;
    return p;
}

Polynomial Polynomial::variable(VarFamily family, int n, int axis, int power) {
    if (axis < 0 || axis >= n) throw Error("variable axis out of range");
    if (power < 0) throw Error("negative power");
    Polynomial p(family, n);
    MultiIndex mu(n);
    mu[axis] = power;
    p.terms_[mu] = 1;
    return p;
}

Polynomial Polynomial::monomial(VarFamily family, int n, const MultiIndex& mu,
                                const Rational& c) {
    if (mu.size() != n) throw DimensionMismatch("monomial index size != n");
    Polynomial p(family, n);
    if (c != 0) p.terms_[mu] = c;
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.is_zero();
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    // Map is grevlex ascending, so the last key has maximal total degree.
    return terms_.rbegin()->first.degree();
}

int Polynomial::degree_in(int axis) const {
    int d = 0;
    for (const auto& [mu, c] : terms_) d = std::max(d, mu[axis]);
    return terms_.empty() ? -1 : d;
}

Rational Polynomial::coeff(const MultiIndex& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const MultiIndex& mu, const Rational& c) {
    if (mu.size() != n_) throw DimensionMismatch("term index size != n");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(mu, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::pair<MultiIndex, Rational> Polynomial::leading_term() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return *terms_.rbegin();
}

void Polynomial::check_compatible(const Polynomial& other) const {
    if (family_ != other.family_)
        throw DimensionMismatch("mixed symbol families");
    if (n_ != other.n_)
        throw DimensionMismatch("mixed symbol counts");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(family_, n_);
    for (const auto& [mu, c] : terms_) r.terms_[mu] = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    check_compatible(other);
    for (const auto& [mu, c] : other.terms_) add_term(mu, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    check_compatible(other);
    for (const auto& [mu, c] : other.terms_) add_term(mu, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial r = *this;
    r += other;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    Polynomial r = *this;
    r -= other;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    check_compatible(other);
    Polynomial r(family_, n_);
    for (const auto& [mu, c] : terms_)
        for (const auto& [nu, d] : other.terms_) r.add_term(mu + nu, c * d);
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(family_, n_);
    if (c == 0) return r;
    for (const auto& [mu, k] : terms_) r.terms_[mu] = k * c;
    return r;
}

bool Polynomial::operator==(const Polynomial& other) const {
    return family_ == other.family_ && n_ == other.n_ &&
           terms_ == other.terms_;
}

Polynomial Polynomial::pow(int k) const {
    if (k < 0) throw Error("negative polynomial power");
    Polynomial r = constant(family_, n_, 1);
    for (int i = 0; i < k; ++i) r = r * (*this);
    return r;
}

Polynomial Polynomial::differentiate(int axis) const {
    if (axis < 0 || axis >= n_) throw Error("differentiation axis out of range");
    Polynomial r(family_, n_);
    for (const auto& [mu, c] : terms_) {
        if (mu[axis] == 0) continue;
        r.add_term(mu.minus(axis), c * mu[axis]);
    }
    return r;
}

Rational Polynomial::content() const {
    if (terms_.empty()) return 0;
    Rational g = 0;
    for (const auto& [mu, c] : terms_) g = rational_content_gcd(g, c);
    if (sign_of(terms_.rbegin()->second) < 0) g = -g;
    return g;
}

Polynomial Polynomial::primitive_part() const {
    if (terms_.empty()) return *this;
    Rational g = content();
    Polynomial r(family_, n_);
    for (const auto& [mu, c] : terms_) r.terms_[mu] = c / g;
    return r;
}

std::vector<Polynomial> Polynomial::coefficients_in(int axis) const {
    int d = std::max(degree_in(axis), 0);
    std::vector<Polynomial> out(static_cast<size_t>(d) + 1,
                                Polynomial(family_, n_));
    for (const auto& [mu, c] : terms_) {
        MultiIndex rest = mu;
        int k = rest[axis];
        rest[axis] = 0;
        out[static_cast<size_t>(k)].add_term(rest, c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text form.

namespace {

std::string monomial_str(char letter, const MultiIndex& mu) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < mu.size(); ++i) {
        if (mu[i] == 0) continue;
        if (!first) os << '*';
        os << letter << (i + 1);
        if (mu[i] > 1) os << '^' << mu[i];
        first = false;
    }
    return os.str();
}

}  // namespace

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print grevlex descending: leading term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const MultiIndex& mu = it->first;
        Rational c = it->second;
        bool negative = sign_of(c) < 0;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        Rational a = abs(c);
        std::string mono = monomial_str(family_letter(family_), mu);
        if (mono.empty()) {
            os << to_string(a);
        } else if (a == 1) {
            os << mono;
        } else {
            os << to_string(a) << '*' << mono;
        }
        first = false;
    }
    return os.str();
}

// Recursive-descent parser for the same grammar str() emits:
//   poly   := [sign] term (sign term)*
//   term   := factor ('*' factor)*
//   factor := number | symbol ['^' nat]
//   number := nat ['/' nat]
//   symbol := letter nat        (letter fixed by the family)
// Whitespace is allowed between tokens but not inside them.
namespace {

class Cursor {
  public:
    explicit Cursor(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(byte(pos_))) advance();
    }
    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }

    char take() {
        char c = peek();
        advance();
        return c;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line_, col_);
    }

    long take_nat(const char* what) {
        if (!std::isdigit(byte(pos_))) fail(std::string("expected ") + what);
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(byte(pos_))) {
            v = v * 10 + (take() - '0');
            if (v > 1000000000L) fail("numeric literal too large");
        }
        return v;
    }

  private:
    unsigned char byte(size_t i) const {
        return i < text_.size() ? static_cast<unsigned char>(text_[i]) : 0;
    }
    void advance() {
        if (pos_ < text_.size()) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

}  // namespace

Polynomial Polynomial::parse(VarFamily family, int n, const std::string& text) {
    Cursor cur(text);
    Polynomial result(family, n);
    char letter = family_letter(family);

    cur.skip_ws();
    if (cur.done()) cur.fail("empty polynomial");

    bool first = true;
    while (true) {
        cur.skip_ws();
        if (cur.done()) {
            if (first) cur.fail("empty polynomial");
            break;
        }
        int sign = 1;
        char c = cur.peek();
        if (c == '+' || c == '-') {
            cur.take();
            sign = (c == '-') ? -1 : 1;
            cur.skip_ws();
        } else if (!first) {
            cur.fail("expected '+' or '-' between terms");
        }

        // One term: product of factors.
        Rational coef = sign;
        MultiIndex mu(n);
        bool more = true;
        bool any_factor = false;
        while (more) {
            cur.skip_ws();
            char f = cur.peek();
            if (std::isdigit(static_cast<unsigned char>(f))) {
                long num = cur.take_nat("number");
                long den = 1;
                if (cur.peek() == '/') {
                    cur.take();
                    den = cur.take_nat("denominator");
                    if (den == 0) cur.fail("zero denominator");
                }
                coef *= rational(num, den);
            } else if (std::isalpha(static_cast<unsigned char>(f))) {
                if (f != letter)
                    cur.fail(std::string("unknown symbol '") + f +
                             "' (expected '" + letter + "')");
                cur.take();
                long idx = cur.take_nat("symbol index");
                if (idx < 1 || idx > n)
                    cur.fail("symbol index out of range 1.." +
                             std::to_string(n));
                int power = 1;
                if (cur.peek() == '^') {
                    cur.take();
                    power = static_cast<int>(cur.take_nat("exponent"));
                }
                mu[static_cast<int>(idx) - 1] += power;
            } else {
                cur.fail("expected a coefficient or symbol");
            }
            any_factor = true;
            cur.skip_ws();
            if (cur.peek() == '*') {
                cur.take();
            } else {
                more = false;
            }
        }
        if (!any_factor) cur.fail("empty term");
        result.add_term(mu, coef);
        first = false;
    }
    return result;
}

}  // namespace jsk
