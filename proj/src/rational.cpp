#include "sector/rational.hpp"

#include <cctype>

namespace sector {

namespace {

bool parse_integer(std::string_view s, Integer& out) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') i = 1;
    if (i == s.size()) return false;
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
    std::string digits(s.substr(s[0] == '+' ? 1 : 0));
    return out.set_str(digits, 10) == 0;
}

} // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    auto slash = text.find('/');
    Integer num, den = 1;
    if (slash == std::string_view::npos) {
        if (!parse_integer(text, num)) return std::nullopt;
    } else {
        auto d = text.substr(slash + 1);
        if (d.empty() || d[0] == '+' || d[0] == '-') return std::nullopt;
        if (!parse_integer(text.substr(0, slash), num) || !parse_integer(d, den)) return std::nullopt;
        if (den == 0) return std::nullopt;
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational dyadic_ceil(const Rational& q, unsigned bits) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
    Rational scaled = q * scale;
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    Rational r(c, scale);
    r.canonicalize();
    return r;
}

Rational best_rational(const Rational& x, const Integer& max_den) {
    // Convergents h/k of the continued fraction of x, stopping before k exceeds max_den.
    Integer h_prev = 1, h = floor(x), k_prev = 0, k = 1;
    Rational rem = x - Rational(h);
    while (rem != 0) {
        Rational inv = 1 / rem;
        Integer a = floor(inv);
        Integer k_next = a * k + k_prev;
        if (k_next > max_den) break;
        Integer h_next = a * h + h_prev;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
        rem = inv - Rational(a);
    }
    Rational r(h, k);
    r.canonicalize();
    return r;
}

} // namespace sector
