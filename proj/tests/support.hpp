#ifndef SECTOR_TESTS_SUPPORT_HPP
#define SECTOR_TESTS_SUPPORT_HPP

#include "sector/certified.hpp"
#include "sector/polynomial.hpp"
#include "sector/roots.hpp"
#include "sector/sector.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace support {

using sector::Angle;
using sector::Polynomial;
using sector::Rational;

inline long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational ratio(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational small_rational(std::mt19937_64& rng, long range = 20, long max_den = 8) {
    return ratio(uniform(rng, -range, range), uniform(rng, 1, max_den));
}

// Random exact polynomial of degree exactly `degree`.
inline Polynomial random_polynomial(std::mt19937_64& rng, int degree, bool nonneg = false) {
    std::vector<Rational> c;
    for (int k = 0; k <= degree; ++k) {
        Rational q = small_rational(rng);
        if (nonneg) q = abs(q);
        c.push_back(q);
    }
    while (c.back() == 0) c.back() = ratio(uniform(rng, 1, 9), uniform(rng, 1, 4));
    if (c.front() == 0 && nonneg) c.front() = 1;
    return Polynomial(std::move(c));
}

inline Angle random_angle(std::mt19937_64& rng, long max_den = 60) {
    const long den = uniform(rng, 1, max_den);
    return Angle(ratio(uniform(rng, 1, den), den));
}

// Angle in (0, hi) with denominator <= max_den; hi in (0, 1].
inline Angle random_angle_below(std::mt19937_64& rng, const Rational& hi, long max_den = 60) {
    for (;;) {
        const Angle a = random_angle(rng, max_den);
        if (a.turns() < hi) return a;
    }
}

// n distinct sorted rationals with denominator 4 in (-10, 10).
inline std::vector<Rational> distinct_points(std::mt19937_64& rng, int n) {
    std::set<Rational> s;
    while (static_cast<int>(s.size()) < n) s.insert(ratio(uniform(rng, -39, 39), 4));
    return {s.begin(), s.end()};
}

inline bool strictly_alternate(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<std::pair<Rational, int>> m;
    for (const auto& x : a) m.emplace_back(x, 0);
    for (const auto& x : b) m.emplace_back(x, 1);
    std::sort(m.begin(), m.end());
    for (std::size_t i = 1; i < m.size(); ++i)
        if (m[i].second == m[i - 1].second || m[i].first == m[i - 1].first) return false;
    return true;
}

// Weak interlacing of exact sorted point lists, checked in both directions.
inline bool weakly_alternate(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    const auto bad = [](const std::vector<Rational>& x, const std::vector<Rational>& y) {
        for (std::size_t i = 0; i + 2 < x.size(); ++i) {
            const auto in = [&](const Rational& lo, const Rational& hi) {
                return std::any_of(y.begin(), y.end(), [&](const Rational& v) { return lo < v && v < hi; });
            };
            if (!in(x[i], x[i + 1]) && !in(x[i + 1], x[i + 2])) return true;
        }
        return false;
    };
    return !bad(a, b) && !bad(b, a);
}

struct RootedPair {
    std::vector<Rational> u_roots, v_roots;
    Polynomial u{Rational(1)}, v{Rational(1)};
};

// Strictly interlacing root sets with deg u - deg v in {0, 1}.
inline RootedPair interlacing_pair(std::mt19937_64& rng) {
    RootedPair r;
    const int k = static_cast<int>(uniform(rng, 1, 6));
    const bool equal = uniform(rng, 0, 1) == 1;
    const auto pts = distinct_points(rng, equal ? 2 * k : 2 * k - 1);
    const bool u_first = equal ? uniform(rng, 0, 1) == 1 : true;
    for (std::size_t i = 0; i < pts.size(); ++i) ((i % 2 == 0) == u_first ? r.u_roots : r.v_roots).push_back(pts[i]);
    r.u = sector::from_roots(r.u_roots);
    r.v = sector::from_roots(r.v_roots);
    return r;
}

// Weakly (but not necessarily strictly) interlacing root sets, degrees equal
// or differing by one, no common roots.
inline RootedPair weakly_interlacing_pair(std::mt19937_64& rng) {
    for (;;) {
        RootedPair r;
        const int du = static_cast<int>(uniform(rng, 1, 6));
        const int dv = du - static_cast<int>(uniform(rng, 0, 1));
        if (dv < 1) continue;
        const auto pts = distinct_points(rng, du + dv);
        std::vector<int> idx(pts.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
        std::shuffle(idx.begin(), idx.end(), rng);
        for (int i = 0; i < du + dv; ++i) (i < du ? r.u_roots : r.v_roots).push_back(pts[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]);
        std::sort(r.u_roots.begin(), r.u_roots.end());
        std::sort(r.v_roots.begin(), r.v_roots.end());
        if (!weakly_alternate(r.u_roots, r.v_roots)) continue;
        r.u = sector::from_roots(r.u_roots);
        r.v = sector::from_roots(r.v_roots);
        return r;
    }
}

inline bool square_free(const Polynomial& p) {
    return p.degree() < 1 || sector::gcd(p, sector::derivative(p)).degree() == 0;
}

// Roots certified inside the open upper sector {0 < arg < θ}, or -1 when some
// root cannot be placed.
inline int certified_upper_count(const Polynomial& p, const Angle& theta) {
    const auto roots = sector::find_root_enclosures(p).roots;
    const auto mem = sector::sector_membership(roots, sector::Sector{theta});
    int m = 0;
    for (const auto& rm : mem.margins) {
        if (rm.origin || mpfr_sgn(rm.margin.lower()) > 0) continue;
        if (mpfr_sgn(rm.margin.upper()) >= 0) return -1;
        const auto im = rm.root.box().im;
        if (mpfr_sgn(im.lower()) > 0)
            m += rm.root.multiplicity;
        else if (mpfr_sgn(im.upper()) >= 0)
            return -1;
    }
    return m;
}

inline bool encloses(const sector::Interval& x, const Rational& q) { return x.contains(q); }

} // namespace support

#endif
