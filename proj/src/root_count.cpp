#include "sector/root_count.hpp"

#include "sector/errors.hpp"

#include <algorithm>

namespace sector {

namespace {

// Raised while building or evaluating at a precision that cannot resolve a sign.
struct NeedPrecision {};

using IPoly = std::vector<Interval>;
using QPoly = std::vector<Rational>;

bool all_rational(const CertifiedPoly& cp) {
    return std::all_of(cp.recipes().begin(), cp.recipes().end(),
                       [](const CoeffRecipe& r) { return r.trig == Trig::One || r.exact_zero(); });
}

void trim_exact(IPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int sign_of(const Interval& v) {
    auto s = v.sign();
    if (!s) throw NeedPrecision{};
    return *s;
}

int sign_of(const Rational& v) { return sgn(v); }

IPoly interval_derivative(const IPoly& p) {
    IPoly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * Rational(static_cast<long>(k)));
    return d;
}

// Remainder of num by den; den's leading coefficient must exclude zero. The
// eliminated top coefficients are dropped exactly rather than computed.
IPoly interval_remainder(IPoly num, const IPoly& den) {
    const std::size_t dn = den.size();
    const Interval& lc = den.back();
    while (num.size() >= dn) {
        const std::size_t top = num.size() - 1;
        if (!num[top].is_zero()) {
            const Interval q = num[top] / lc;
            const std::size_t shift = top - (dn - 1);
            for (std::size_t j = 0; j + 1 < dn; ++j) num[shift + j] -= q * den[j];
        }
        num.pop_back();
    }
    trim_exact(num);
    return num;
}

QPoly exact_derivative(const QPoly& p) {
    QPoly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
    return d;
}

template <class C>
int low_sign(const std::vector<C>& p) {
    for (const auto& c : p) {
        int s = sign_of(c);
        if (s != 0) return s;
    }
    return 0;
}

template <class C>
int count_changes(const std::vector<C>& values) {
    int changes = 0, last = 0;
    for (const auto& v : values) {
        int s = sign_of(v);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

} // namespace

int sign_variations(std::span<const Sign> signs) {
    int changes = 0, last = 0;
    for (Sign s : signs) {
        const int v = static_cast<int>(s);
        if (v == 0) continue;
        if (last != 0 && v != last) ++changes;
        last = v;
    }
    return changes;
}

SignSequence coefficient_signs(const CertifiedPoly& cp, const PrecisionPolicy& policy) {
    CertifiedPoly p = cp;
    for (;;) {
        SignSequence out;
        bool resolved = true;
        for (const auto& c : p.coeffs()) {
            auto s = c.sign();
            if (!s) {
                resolved = false;
                break;
            }
            out.push_back(static_cast<Sign>(*s));
        }
        if (resolved) return out;
        if (2 * p.precision() > policy.ceiling_bits)
            throw Error(ErrorKind::SignIndeterminate, "coefficient sign unresolved at precision ceiling");
        p = p.refined();
    }
}

int descartes_bound(const CertifiedPoly& cp, const PrecisionPolicy& policy) {
    return sign_variations(coefficient_signs(cp, policy));
}

PositiveRootIsolator::PositiveRootIsolator(const CertifiedPoly& cp, PrecisionPolicy policy)
    : source_(cp.without_zero_root()), policy_(policy) {
    if (source_.is_zero()) throw Error(ErrorKind::DegenerateChain, "zero polynomial has no Sturm chain");
    int bits = std::max(policy_.start_bits, 2);
    for (;;) {
        try {
            build(bits);
            return;
        } catch (const NeedPrecision&) {
            if (2 * bits > policy_.ceiling_bits)
                throw Error(ErrorKind::SignIndeterminate, "Sturm chain unresolved at precision ceiling");
            bits *= 2;
        }
    }
}

void PositiveRootIsolator::build(int bits) {
    SturmChain chain;
    chain.precision = bits;
    const CertifiedPoly src = source_.at_precision(bits);
    const int deg = src.degree();

    if (all_rational(src)) {
        QPoly p0;
        for (int k = 0; k <= deg; ++k) p0.push_back(src.recipes()[static_cast<std::size_t>(k)].scale);
        chain.exact_elements.push_back(p0);
        if (deg > 0) chain.exact_elements.push_back(exact_derivative(p0));
        while (chain.exact_elements.size() >= 2 && chain.exact_elements.back().size() > 1) {
            const auto& a = chain.exact_elements[chain.exact_elements.size() - 2];
            const auto& b = chain.exact_elements.back();
            QPoly r = divmod(a, b).second;
            if (r.empty()) throw Error(ErrorKind::DegenerateChain, "input is not square-free");
            Rational scale = 1 / abs(r.back());
            for (auto& c : r) c *= -scale;
            chain.exact_elements.push_back(std::move(r));
        }
        for (const auto& e : chain.exact_elements) {
            IPoly ip;
            for (const auto& c : e) ip.push_back(Interval::from_rational(c, bits));
            chain.elements.push_back(std::move(ip));
        }
    } else {
        IPoly p0;
        for (int k = 0; k <= deg; ++k) p0.push_back(src.coeffs()[static_cast<std::size_t>(k)].enclosure);
        sign_of(p0.back());
        chain.elements.push_back(p0);
        if (deg > 0) chain.elements.push_back(interval_derivative(p0));
        while (chain.elements.size() >= 2 && chain.elements.back().size() > 1) {
            const auto& a = chain.elements[chain.elements.size() - 2];
            const auto& b = chain.elements.back();
            IPoly r = interval_remainder(a, b);
            if (r.empty()) throw Error(ErrorKind::DegenerateChain, "input is not square-free");
            // Positive rescaling keeps signs and stops coefficient growth.
            const int s = sign_of(r.back());
            Interval inv = Interval::from_int(-s, bits) / r.back();
            for (auto& c : r) c = c * inv;
            chain.elements.push_back(std::move(r));
        }
    }

    int v0 = 0, vinf = 0;
    {
        std::vector<int> low, high;
        for (std::size_t i = 0; i < chain.size(); ++i) {
            if (chain.exact()) {
                low.push_back(low_sign(chain.exact_elements[i]));
                high.push_back(sign_of(chain.exact_elements[i].back()));
            } else {
                low.push_back(low_sign(chain.elements[i]));
                high.push_back(sign_of(chain.elements[i].back()));
            }
        }
        auto changes = [](const std::vector<int>& s) {
            int c = 0, last = 0;
            for (int v : s) {
                if (v == 0) continue;
                if (last != 0 && v != last) ++c;
                last = v;
            }
            return c;
        };
        v0 = changes(low);
        vinf = changes(high);
    }

    // Cauchy bound 1 + max |a_k| / |a_n|, rounded up to an integer.
    const auto& top = chain.elements.front();
    Interval m = top.front().magnitude();
    for (const auto& c : top) m = Interval::hull(m, c.magnitude());
    Interval ratio = m / top.back().mignitude();
    Rational bound = dyadic_ceil(ratio.upper_rational(), 0) + 1;

    chain_ = std::move(chain);
    v_zero_ = v0;
    v_inf_ = vinf;
    bound_ = bound;
}

void PositiveRootIsolator::escalate() {
    const int bits = chain_.precision * 2;
    if (chain_.exact() || bits > policy_.ceiling_bits)
        throw Error(ErrorKind::SignIndeterminate, "Sturm sign unresolved at precision ceiling");
    for (int b = bits;; b *= 2) {
        try {
            build(b);
            return;
        } catch (const NeedPrecision&) {
            if (2 * b > policy_.ceiling_bits)
                throw Error(ErrorKind::SignIndeterminate, "Sturm chain unresolved at precision ceiling");
        }
    }
}

std::optional<int> PositiveRootIsolator::variations_at(const Rational& x, bool require_nonzero) const {
    if (chain_.exact()) {
        std::vector<Rational> vals;
        for (const auto& e : chain_.exact_elements) {
            Rational acc = 0;
            for (auto it = e.rbegin(); it != e.rend(); ++it) acc = acc * x + *it;
            vals.push_back(acc);
        }
        if (require_nonzero && vals.front() == 0) return std::nullopt;
        return count_changes(vals);
    }
    const Interval xi = Interval::from_rational(x, chain_.precision);
    std::vector<Interval> vals;
    for (const auto& e : chain_.elements) {
        Interval acc(chain_.precision);
        for (auto it = e.rbegin(); it != e.rend(); ++it) acc = acc * xi + *it;
        if (!acc.sign()) return std::nullopt;
        vals.push_back(std::move(acc));
    }
    if (require_nonzero && vals.front().is_zero()) return std::nullopt;
    return count_changes(vals);
}

int PositiveRootIsolator::variations(const Rational& x) {
    if (x == 0) return v_zero_;
    if (x >= bound_) return v_inf_;
    for (;;) {
        if (auto v = variations_at(x, false)) return *v;
        escalate();
    }
}

std::pair<Rational, int> PositiveRootIsolator::split_point(const Rational& lo, const Rational& hi) {
    const Rational mid = (lo + hi) / 2;
    const Rational step = (hi - lo) / 64;
    for (;;) {
        for (int k = 0; k <= 40; ++k) {
            // 0, +1, -1, +2, -2, ... steps away from the midpoint.
            const int offset = (k + 1) / 2 * (k % 2 ? 1 : -1);
            const Rational x = mid + step * offset;
            if (auto v = variations_at(x, true)) return {x, *v};
        }
        escalate();
    }
}

int PositiveRootIsolator::count_in(const Rational& lo, const Rational& hi) { return variations(lo) - variations(hi); }

std::vector<IsolatingInterval> PositiveRootIsolator::isolate() {
    std::vector<IsolatingInterval> out;
    if (count() == 0) return out;
    struct Task {
        Rational lo, hi;
        int vlo, vhi;
    };
    // Depth-first, left half first, so the output comes out sorted.
    std::vector<Task> stack{{Rational(0), bound_, v_zero_, v_inf_}};
    const Rational min_width = Rational(1, 1) / Rational(Integer(1) << std::min(4 * policy_.ceiling_bits, 1 << 14));
    while (!stack.empty()) {
        Task t = std::move(stack.back());
        stack.pop_back();
        const int n = t.vlo - t.vhi;
        if (n <= 0) continue;
        if (n == 1) {
            out.push_back({t.lo, t.hi});
            continue;
        }
        if (t.hi - t.lo < min_width)
            throw Error(ErrorKind::SignIndeterminate, "zeros could not be separated by bisection");
        auto [mid, vmid] = split_point(t.lo, t.hi);
        stack.push_back({mid, t.hi, vmid, t.vhi});
        stack.push_back({t.lo, mid, t.vlo, vmid});
    }
    return out;
}

IsolatingInterval PositiveRootIsolator::refine(const IsolatingInterval& iv, const Rational& width) {
    IsolatingInterval cur = iv;
    int vlo = variations(cur.lo);
    int vhi = variations(cur.hi);
    if (vlo - vhi != 1) throw Error(ErrorKind::InvalidArgument, "interval does not isolate exactly one zero");
    while (cur.width() > width) {
        auto [mid, vmid] = split_point(cur.lo, cur.hi);
        if (vlo - vmid == 1) {
            cur.hi = mid;
            vhi = vmid;
        } else {
            cur.lo = mid;
            vlo = vmid;
        }
    }
    return cur;
}

int sign_at(const CertifiedPoly& cp, const Rational& x, const PrecisionPolicy& policy) {
    for (int bits = std::max(cp.precision(), policy.start_bits);; bits *= 2) {
        const Interval v = evaluate(cp.at_precision(bits), Interval::from_rational(x, bits));
        if (auto s = v.sign()) return *s;
        if (2 * bits > policy.ceiling_bits)
            throw Error(ErrorKind::SignIndeterminate, "sign of evaluation unresolved at precision ceiling");
    }
}

SturmChain sturm_chain(const CertifiedPoly& cp, const PrecisionPolicy& policy) {
    return PositiveRootIsolator(cp, policy).chain();
}

int sturm_count_positive(const CertifiedPoly& cp, const PrecisionPolicy& policy) {
    return PositiveRootIsolator(cp, policy).count();
}

std::vector<IsolatingInterval> isolate_positive_zeros(const CertifiedPoly& cp, const PrecisionPolicy& policy) {
    return PositiveRootIsolator(cp, policy).isolate();
}

IsolatingInterval refine_interval(const CertifiedPoly& cp, const IsolatingInterval& iv, const Rational& width,
                                  const PrecisionPolicy& policy) {
    return PositiveRootIsolator(cp, policy).refine(iv, width);
}

} // namespace sector
