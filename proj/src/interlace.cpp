#include "sector/interlace.hpp"

#include "sector/errors.hpp"

#include <algorithm>

namespace sector {

namespace {

bool overlap(const RealZero& x, const RealZero& y) {
    if (x.is_point() && y.is_point()) return x.lo == y.lo;
    if (x.is_point()) return y.lo < x.lo && x.lo < y.hi;
    if (y.is_point()) return x.lo < y.lo && y.lo < x.hi;
    return x.lo < y.hi && y.lo < x.hi;
}

Rational key(const RealZero& z) { return (z.lo + z.hi) / 2; }

const Rational& separation_floor() {
    static const Rational floor_width = Rational(1, 1) / Rational(Integer(1) << 256);
    return floor_width;
}

// Narrows overlapping zeros of a and b until every cross pair is disjoint,
// then returns the merged sequence of list labels (0 for a, 1 for b).
std::vector<int> merged_labels(ZeroList& a, ZeroList& b) {
    for (;;) {
        bool clash = false;
        for (auto& x : a.zeros) {
            for (auto& y : b.zeros) {
                if (!overlap(x, y)) continue;
                clash = true;
                const bool stuck_x = x.is_point() || x.width() < separation_floor();
                const bool stuck_y = y.is_point() || y.width() < separation_floor();
                if (stuck_x && stuck_y)
                    throw Error(ErrorKind::OverlappingEnclosures, "zeros of the two lists could not be separated");
                if (!stuck_x) x.narrow();
                if (!stuck_y) y.narrow();
            }
        }
        if (!clash) break;
    }
    std::vector<std::pair<Rational, int>> merged;
    for (const auto& z : a.zeros) merged.emplace_back(key(z), 0);
    for (const auto& z : b.zeros) merged.emplace_back(key(z), 1);
    std::sort(merged.begin(), merged.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    std::vector<int> labels;
    for (const auto& m : merged) labels.push_back(m.second);
    return labels;
}

// True if some list-`label` triple has both gaps free of the other list.
bool has_empty_double_gap(const std::vector<int>& labels, int label) {
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) pos.push_back(i);
    for (std::size_t i = 0; i + 2 < pos.size(); ++i) {
        const bool first_empty = pos[i + 1] == pos[i] + 1;
        const bool second_empty = pos[i + 2] == pos[i + 1] + 1;
        if (first_empty && second_empty) return true;
    }
    return false;
}

} // namespace

void RealZero::narrow() {
    if (is_point()) return;
    if (mirrored) {
        IsolatingInterval iv = source->refine({-hi, -lo}, width() / 2);
        lo = -iv.hi;
        hi = -iv.lo;
    } else {
        IsolatingInterval iv = source->refine({lo, hi}, width() / 2);
        lo = iv.lo;
        hi = iv.hi;
    }
}

ZeroList zero_list(std::vector<Rational> points) {
    std::sort(points.begin(), points.end());
    if (std::adjacent_find(points.begin(), points.end()) != points.end())
        throw Error(ErrorKind::OverlappingEnclosures, "repeated zero in list");
    ZeroList out;
    for (auto& p : points) out.zeros.push_back({p, p, nullptr, false});
    return out;
}

ZeroList nonnegative_zeros(const CertifiedPoly& cp, const PrecisionPolicy& policy) {
    ZeroList out;
    if (cp.zero_order() > 0) out.zeros.push_back({Rational(0), Rational(0), nullptr, false});
    auto iso = std::make_shared<PositiveRootIsolator>(cp, policy);
    for (const auto& iv : iso->isolate()) out.zeros.push_back({iv.lo, iv.hi, iso, false});
    return out;
}

ZeroList real_zeros(const Polynomial& p, const PrecisionPolicy& policy) {
    ZeroList out;
    if (p.degree() == 0) return out;
    const Polynomial sf = exact_quotient(p, gcd(p, derivative(p)));
    auto neg = std::make_shared<PositiveRootIsolator>(CertifiedPoly::from_rational(reflect(sf)), policy);
    auto negs = neg->isolate();
    for (auto it = negs.rbegin(); it != negs.rend(); ++it) out.zeros.push_back({-it->hi, -it->lo, neg, true});
    if (sf.coeff(0) == 0) out.zeros.push_back({Rational(0), Rational(0), nullptr, false});
    auto pos = std::make_shared<PositiveRootIsolator>(CertifiedPoly::from_rational(sf), policy);
    for (const auto& iv : pos->isolate()) out.zeros.push_back({iv.lo, iv.hi, pos, false});
    return out;
}

bool interlaces(ZeroList a, ZeroList b) {
    const auto na = a.size(), nb = b.size();
    if (na > nb + 1 || nb > na + 1) return false;
    const auto labels = merged_labels(a, b);
    for (std::size_t i = 1; i < labels.size(); ++i)
        if (labels[i] == labels[i - 1]) return false;
    return true;
}

bool weakly_interlaces(ZeroList a, ZeroList b) {
    const auto labels = merged_labels(a, b);
    return !has_empty_double_gap(labels, 0) && !has_empty_double_gap(labels, 1);
}

CombineParams::CombineParams(Rational a_, Rational b_, Rational c_, Rational d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (a <= 0 || b <= 0 || c <= 0 || d <= 0)
        throw Error(ErrorKind::InvalidArgument, "combination weights must be strictly positive");
}

Combination combine(const Polynomial& u, const Polynomial& v, const CombineParams& params) {
    return {u * params.a + v * params.b, u * params.c - v * params.d};
}

} // namespace sector
