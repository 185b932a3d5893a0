#include "sector/ray.hpp"

#include "sector/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace sector {

namespace {

struct Located {
    IsolatingInterval iv;
    Crossing kind;
};

bool overlap(const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.hi && b.lo < a.hi; }

// Sign of the highest / lowest coefficient that is not exactly zero.
int leading_sign(const CertifiedPoly& cp, const PrecisionPolicy& policy) {
    auto s = coefficient_signs(cp, policy);
    for (auto it = s.rbegin(); it != s.rend(); ++it)
        if (*it != Sign::Zero) return static_cast<int>(*it);
    return 0;
}

int trailing_sign(const CertifiedPoly& cp, const PrecisionPolicy& policy) {
    auto s = coefficient_signs(cp, policy);
    for (Sign v : s)
        if (v != Sign::Zero) return static_cast<int>(v);
    return 0;
}

// Quadrant q in {0,1,2,3} covering (qπ/2, (q+1)π/2), from (Re, Im) signs.
int quadrant_of(int re, int im) {
    if (re > 0 && im > 0) return 0;
    if (re < 0 && im > 0) return 1;
    if (re < 0 && im < 0) return 2;
    return 3;
}

Integer mod4(const Integer& q) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), q.get_mpz_t(), 4);
    return r;
}

Rational mod4(const Rational& q) { return q - Rational(floor(q / 4) * 4); }

} // namespace

QuadrantTrace trace_quadrants(const Polynomial& p, const Angle& theta, const PrecisionPolicy& policy) {
    if (!is_nonneg(p) || p.coeff(0) <= 0)
        throw Error(ErrorKind::NotNonNegative, "argument variation needs non-negative coefficients with a0 > 0");

    const int n = p.degree();
    const RayComponents comps = ray_components(p, theta, policy.start_bits);
    QuadrantTrace trace;
    trace.initial_real_sign = 1;

    PositiveRootIsolator real_iso(comps.real, policy);
    if (comps.imag.is_zero()) {
        // θ = π: the ray image stays on the real axis, so any real-part zero is a zero of p.
        if (real_iso.count() > 0) throw Error(ErrorKind::ZeroOnRay, "p has a zero on the negative real axis");
        trace.initial_imag_sign = 0;
        trace.terminal_real_sign = 1;
        trace.terminal_imag_sign = 0;
        trace.terminal_quarters = 0;
        return trace;
    }
    PositiveRootIsolator imag_iso(comps.imag, policy);

    std::vector<Located> events;
    for (auto& iv : imag_iso.isolate()) events.push_back({iv, Crossing::ImagZero});
    for (auto& iv : real_iso.isolate()) events.push_back({iv, Crossing::RealZero});

    // Refine until no imaginary-part zero shares an interval with a real-part
    // zero. A common zero would be a zero of p on the ray.
    const Rational floor_width = Rational(1, 1) / Rational(Integer(1) << std::max(policy.ceiling_bits / 4, 64));
    for (;;) {
        bool clash = false;
        for (std::size_t i = 0; i < events.size(); ++i) {
            for (std::size_t j = i + 1; j < events.size(); ++j) {
                if (events[i].kind == events[j].kind || !overlap(events[i].iv, events[j].iv)) continue;
                clash = true;
                for (Located* e : {&events[i], &events[j]}) {
                    if (e->iv.width() < floor_width) {
                        throw Error(ErrorKind::ZeroOnRay,
                                    "ambiguous crossing: both ray components vanish on a common interval");
                    }
                    auto& iso = e->kind == Crossing::ImagZero ? imag_iso : real_iso;
                    e->iv = iso.refine(e->iv, e->iv.width() / 2);
                }
            }
        }
        if (!clash) break;
    }
    std::sort(events.begin(), events.end(), [](const Located& a, const Located& b) { return a.iv.lo < b.iv.lo; });

    trace.initial_imag_sign = trailing_sign(comps.imag, policy);
    Integer q_low = trace.initial_imag_sign > 0 ? 0 : -1;
    for (const auto& e : events) {
        const CertifiedPoly& other = e.kind == Crossing::ImagZero ? comps.real : comps.imag;
        const int co = sign_at(other, (e.iv.lo + e.iv.hi) / 2, policy);
        int axis = 0;
        if (e.kind == Crossing::ImagZero)
            axis = co > 0 ? 0 : 2;
        else
            axis = co > 0 ? 1 : 3;
        CrossingEvent ev{e.iv, e.kind, co, 0};
        if (mod4(q_low) == axis) {
            ev.quarter = q_low;
            q_low -= 1;
        } else if (mod4(Integer(q_low + 1)) == axis) {
            ev.quarter = q_low + 1;
            q_low += 1;
        } else {
            throw std::logic_error("trace_quadrants: crossing does not border the current quadrant");
        }
        trace.events.push_back(std::move(ev));
    }

    trace.terminal_real_sign = leading_sign(comps.real, policy);
    trace.terminal_imag_sign = leading_sign(comps.imag, policy);
    const int q = static_cast<int>(mod4(q_low).get_si());
    if (trace.terminal_real_sign != 0 && trace.terminal_imag_sign != 0 &&
        quadrant_of(trace.terminal_real_sign, trace.terminal_imag_sign) != q)
        throw std::logic_error("trace_quadrants: terminal quadrant disagrees with leading coefficients");

    // The image approaches direction nθ, which lies in the closure of the last quadrant.
    const Rational direction = mod4(theta.turns() * (2 * n));
    const Rational offset = mod4(direction - Rational(q_low));
    if (offset > 1) throw std::logic_error("trace_quadrants: terminal direction outside the last quadrant");
    trace.terminal_quarters = Rational(q_low) + offset;
    return trace;
}

ArgVariation argument_variation(const Polynomial& p, const Angle& theta, const PrecisionPolicy& policy) {
    const QuadrantTrace trace = trace_quadrants(p, theta, policy);
    const int n = p.degree();
    // Δ = nθ - 2πm  ⇔  m = (2n·turns - Δ_quarters) / 4.
    const Rational m4 = (theta.turns() * (2 * n) - trace.terminal_quarters) / 4;
    if (!is_integer(m4) || m4 < 0 || m4 > n)
        throw std::logic_error("argument_variation: non-integral sector count");
    return {n, static_cast<int>(m4.get_num().get_si()), theta};
}

int zeros_in_upper_sector(const Polynomial& p, const Angle& theta, const PrecisionPolicy& policy) {
    return argument_variation(p, theta, policy).m;
}

int expected_imag_zero_count(int n, const Angle& theta) {
    const Rational v = theta.turns() * n;
    if (is_integer(v))
        throw Error(ErrorKind::DegenerateAngle, "n*theta/pi = " + to_string(v) + " is an integer");
    return static_cast<int>(floor(v).get_si());
}

} // namespace sector
