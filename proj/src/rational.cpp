#include "jsk/rational.hpp"

#include "jsk/errors.hpp"

namespace jsk {

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal", 1, 1);
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw ParseError("bad rational literal '" + text + "'", 1, 1);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

Rational rational_content_gcd(const Rational& a, const Rational& b) {
    if (a == 0) return abs(b);
    if (b == 0) return abs(a);
    Integer num = gcd(a.get_num() * b.get_den(), b.get_num() * a.get_den());
    Rational q(abs(num), a.get_den() * b.get_den());
    q.canonicalize();
    return q;
}

}  // namespace jsk
