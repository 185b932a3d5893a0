#include "sector/sector.hpp"

#include "sector/errors.hpp"
#include "sector/interlace.hpp"

#include <algorithm>

namespace sector {

namespace {

// |arg z| over the closed disk; [0, π] when the disk may contain the origin.
Interval disk_argument(const RootEnclosure& r) {
    const int bits = std::max(r.center.precision(), 64);
    const Interval pi = pi_interval(bits);
    Interval out(bits);
    mpfr_set_zero(out.lower_mut(), 1);
    mpfr_set(out.upper_mut(), pi.upper(), MPFR_RNDU);

    mpfr_t ay, alo, ahi, mod, ratio, delta;
    for (auto* v : {&ay, &alo, &ahi, &mod, &ratio, &delta}) mpfr_init2(*v, bits);
    mpfr_abs(ay, r.center.im.get(), MPFR_RNDN);  // exact
    mpfr_atan2(alo, ay, r.center.re.get(), MPFR_RNDD);
    mpfr_atan2(ahi, ay, r.center.re.get(), MPFR_RNDU);
    mpfr_hypot(mod, r.center.re.get(), r.center.im.get(), MPFR_RNDD);

    bool ok = true;
    if (r.radius == 0) {
        mpfr_set_zero(delta, 1);
        ok = !mpfr_zero_p(mod);
    } else if (mpfr_zero_p(mod)) {
        ok = false;
    } else {
        mpfr_set_q(ratio, r.radius.get_mpq_t(), MPFR_RNDU);
        mpfr_div(ratio, ratio, mod, MPFR_RNDU);
        if (mpfr_cmp_ui(ratio, 1) >= 0)
            ok = false;
        else
            mpfr_asin(delta, ratio, MPFR_RNDU);
    }
    if (ok) {
        mpfr_sub(out.lower_mut(), alo, delta, MPFR_RNDD);
        if (mpfr_sgn(out.lower()) < 0) mpfr_set_zero(out.lower_mut(), 1);
        mpfr_add(out.upper_mut(), ahi, delta, MPFR_RNDU);
        if (mpfr_greater_p(out.upper(), pi.upper())) mpfr_set(out.upper_mut(), pi.upper(), MPFR_RNDU);
    }
    for (auto* v : {&ay, &alo, &ahi, &mod, &ratio, &delta}) mpfr_clear(*v);
    return out;
}

int sign_of(const Rational& q) { return sgn(q); }

// Sign of |arg z| - φ for the root in r, decided exactly when that root is a
// zero of a rational linear or quadratic factor of target.
std::optional<int> exact_boundary_sign(const Polynomial& target, const RootEnclosure& r, const Angle& phi) {
    const Integer max_den = 1000000;
    const int bits = r.center.precision();
    const ComplexInterval disk = r.box();

    if (disk.im.contains_zero()) {
        const Rational x = best_rational(r.center.re.to_rational(), max_den);
        if (evaluate_exact(target, x) != 0 || abs(x - r.center.re.to_rational()) > r.radius) return std::nullopt;
        if (x > 0) return -1;
        if (x == 0) return std::nullopt;
        return phi.turns() == 1 ? 0 : 1;
    }

    const Rational re = r.center.re.to_rational(), im = r.center.im.to_rational();
    const Rational s = best_rational(-2 * re, max_den);
    const Rational q = best_rational(re * re + im * im, max_den);
    if (s * s - 4 * q >= 0) return std::nullopt;
    const Polynomial quad{q, s, Rational(1)};
    if (!divides(quad, target)) return std::nullopt;

    // The conjugate pair -s/2 ± i·sqrt(q - s²/4); one of them must lie in the disk.
    const Interval root_re = Interval::from_rational(-s / 2, bits);
    const Interval root_im = sqrt(Interval::from_rational(q - s * s / 4, bits));
    const ComplexInterval up(root_re, root_im), down(root_re, -root_im);
    const Interval rad = Interval::from_rational(r.radius, bits);
    const auto inside = [&](const ComplexInterval& z) {
        const Interval d = (z - r.center.to_interval()).abs_upper();
        return mpfr_lessequal_p(d.upper(), rad.lower());
    };
    if (!inside(up) && !inside(down)) return std::nullopt;

    // cos(arg) = -s / (2 sqrt q); |arg| - φ has the sign of cos φ - cos(arg).
    const auto cos2phi = rational_cos_pi(2 * phi.turns());
    if (!cos2phi) return std::nullopt;
    const Rational b2 = (1 + *cos2phi) / 2;
    const Rational a2 = s * s / (4 * q);
    const int sa = sign_of(-s);
    const int sb = phi.turns() < Rational(1, 2) ? 1 : (phi.turns() == Rational(1, 2) ? 0 : -1);
    if (sa != sb) return sb > sa ? 1 : -1;
    if (sa == 0) return 0;
    return sa > 0 ? sign_of(b2 - a2) : sign_of(a2 - b2);
}

Verdict classify(const RootMargin& m, BoundaryPolicy boundary) {
    if (m.origin) return Verdict::Verified;
    if (m.exact_boundary) return boundary == BoundaryPolicy::Verified ? Verdict::Verified : Verdict::Indeterminate;
    if (mpfr_sgn(m.margin.lower()) >= 0) return Verdict::Verified;
    if (mpfr_sgn(m.margin.upper()) < 0) return Verdict::Counterexample;
    return Verdict::Indeterminate;
}

Verdict aggregate(const std::vector<RootMargin>& margins, BoundaryPolicy boundary) {
    Verdict out = Verdict::Verified;
    for (const auto& m : margins) {
        const Verdict v = classify(m, boundary);
        if (v == Verdict::Counterexample) return v;
        if (v == Verdict::Indeterminate) out = v;
    }
    return out;
}

Membership membership_impl(const Polynomial* target, const std::vector<RootEnclosure>& roots, const Sector& sector,
                           BoundaryPolicy boundary) {
    Membership out;
    for (const auto& r : roots) {
        const int bits = std::max(r.center.precision(), 64);
        RootMargin m{r, Interval(bits), Interval(bits), false, false};
        if (r.is_exact_origin() && sector.origin_member) {
            m.origin = true;
        } else {
            m.arg = disk_argument(r);
            m.margin = m.arg - sector.phi.value(bits);
            if (target && m.margin.contains_zero() && mpfr_sgn(m.margin.lower()) < 0) {
                if (exact_boundary_sign(*target, r, sector.phi) == 0) {
                    m.exact_boundary = true;
                    m.margin = Interval(bits);
                }
            }
        }
        out.margins.push_back(std::move(m));
    }
    out.verdict = aggregate(out.margins, boundary);
    return out;
}

Rational tighter(const Rational& target) { return target / Rational(Integer(1) << 32); }

Rational smallest_target(const PrecisionPolicy& policy) {
    return Rational(1) / Rational(Integer(1) << std::max(policy.ceiling_bits / 2, 64));
}

} // namespace

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::Verified: return "verified";
    case Verdict::Counterexample: return "counterexample";
    case Verdict::Indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

Membership sector_membership(const std::vector<RootEnclosure>& roots, const Sector& sector, BoundaryPolicy boundary) {
    return membership_impl(nullptr, roots, sector, boundary);
}

Membership sector_membership(const Polynomial& target, const std::vector<RootEnclosure>& roots, const Sector& sector,
                             BoundaryPolicy boundary) {
    return membership_impl(&target, roots, sector, boundary);
}

bool ProofStepReport::all_pass() const {
    return g1_count_actual == g1_count_expected && g1g2_interlace && rolle_interlace && h1h2_weak_interlace &&
           delta_p.m == 0 && delta_pprime.m == 0;
}

SectorCertificate verify_theorem(const Polynomial& p, const Angle& phi, const VerifyOptions& options) {
    if (!is_nonneg(p).nonneg) throw Error(ErrorKind::NotNonNegative, "coefficients must be non-negative");
    if (p.degree() < 2) throw Error(ErrorKind::InvalidArgument, "the theorem needs degree >= 2");
    const Sector sector{phi};
    const Rational floor_target = smallest_target(options.roots.policy);

    SectorCertificate cert;
    cert.phi = phi;
    cert.target = derivative(p);

    RootFindOptions ropts = options.roots;
    for (;;) {
        const RootFindResult found = find_root_enclosures(p, ropts);
        cert.precision_bits = std::max(cert.precision_bits, found.precision_used);
        const Membership own = sector_membership(p, found.roots, sector, options.boundary);
        if (own.verdict == Verdict::Verified) break;
        if (own.verdict == Verdict::Counterexample)
            throw Error(ErrorKind::HypothesisViolated, "p has a zero outside S(" + phi.to_string() + ")");
        if (ropts.radius_target < floor_target)
            throw Error(ErrorKind::HypothesisViolated,
                        "zeros of p could not be certified in S(" + phi.to_string() + ")");
        ropts.radius_target = tighter(ropts.radius_target);
    }

    ropts = options.roots;
    for (;;) {
        RootFindResult found;
        try {
            found = find_root_enclosures(cert.target, ropts);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::CertificationFailed) throw;
            cert.verdict = Verdict::Indeterminate;
            cert.events.push_back(std::string("precision ceiling: ") + e.what());
            return cert;
        }
        cert.precision_bits = std::max(cert.precision_bits, found.precision_used);
        Membership mem = sector_membership(cert.target, found.roots, sector, options.boundary);
        cert.margins = std::move(mem.margins);
        cert.verdict = mem.verdict;
        if (cert.verdict != Verdict::Indeterminate) return cert;
        if (ropts.radius_target < floor_target) {
            cert.events.push_back("precision ceiling: margins still straddle zero at radius target " +
                                  std::to_string(ropts.radius_target.get_d()));
            return cert;
        }
        ropts.radius_target = tighter(ropts.radius_target);
        cert.events.push_back("refined root disks to radius target " + std::to_string(ropts.radius_target.get_d()));
    }
}

ProofStepReport verify_proof_steps(const Polynomial& p, const Angle& theta, const PrecisionPolicy& policy) {
    if (!is_nonneg(p).strict) throw Error(ErrorKind::NotNonNegative, "proof steps need strictly positive coefficients");
    const int n = p.degree();
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "proof steps need degree >= 2");

    ProofStepReport report;
    report.theta = theta;
    report.g1_count_expected = expected_imag_zero_count(n, theta);
    expected_imag_zero_count(n - 1, theta);

    report.delta_p = argument_variation(p, theta, policy);
    if (report.delta_p.m != 0)
        throw Error(ErrorKind::HypothesisViolated,
                    std::to_string(report.delta_p.m) + " zero(s) of p in the sector (0, " + theta.to_string() + ")");
    report.delta_pprime = argument_variation(derivative(p), theta, policy);

    const RayComponents g = ray_components(p, theta, policy.start_bits);
    report.g1_count_actual = sturm_count_positive(g.imag, policy);
    const ZeroList z1 = nonnegative_zeros(g.imag, policy);
    const ZeroList z2 = nonnegative_zeros(g.real, policy);
    report.g2_count = static_cast<int>(z2.size());
    const bool counts_ok = z2.size() == z1.size() || z2.size() + 1 == z1.size();
    report.g1g2_interlace = counts_ok && interlaces(z1, z2);

    report.rolle_interlace = interlaces(z1, nonnegative_zeros(derivative(g.imag), policy)) &&
                             interlaces(z2, nonnegative_zeros(derivative(g.real), policy));

    const RayComponents h = critical_ray_components(p, theta, policy.start_bits);
    report.h1h2_weak_interlace = weakly_interlaces(nonnegative_zeros(h.imag, policy), nonnegative_zeros(h.real, policy));
    return report;
}

MinArgument min_argument(const Polynomial& p, const RootFindOptions& options) {
    MinArgument out{Rational(0), Interval(64), find_root_enclosures(p, options)};
    bool any = false;
    for (const auto& r : out.roots.roots) {
        if (r.is_exact_origin()) continue;
        const Interval a = disk_argument(r);
        if (!any) {
            out.radians = a;
            any = true;
            continue;
        }
        Interval lo = out.radians;
        if (mpfr_less_p(a.lower(), lo.lower())) mpfr_set(lo.lower_mut(), a.lower(), MPFR_RNDD);
        if (mpfr_less_p(a.upper(), lo.upper())) mpfr_set(lo.upper_mut(), a.upper(), MPFR_RNDU);
        out.radians = lo;
    }
    if (!any) throw Error(ErrorKind::InvalidArgument, "p has no nonzero roots");
    Interval low(out.radians.precision());
    mpfr_set(low.lower_mut(), out.radians.lower(), MPFR_RNDD);
    mpfr_set(low.upper_mut(), out.radians.lower(), MPFR_RNDU);
    out.lower_turns = (low / pi_interval(out.radians.precision())).lower_rational();
    return out;
}

} // namespace sector
