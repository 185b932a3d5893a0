#include "sector/roots.hpp"

#include "sector/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace sector {

namespace {

using cdouble = std::complex<double>;

struct Approx {
    std::vector<BigComplex> z;
    std::vector<Rational> radius;
};

// f / f' at z by Horner.
cdouble newton_ratio(const std::vector<double>& a, cdouble z) {
    cdouble f = a.back(), df = 0;
    for (std::size_t k = a.size() - 1; k-- > 0;) {
        df = df * z + f;
        f = f * z + a[k];
    }
    return f / df;
}

std::vector<cdouble> aberth_double(const Polynomial& f) {
    const int d = f.degree();
    std::vector<double> a;
    for (const auto& c : f.coeffs()) a.push_back(c.get_d());
    const double r0 = std::pow(std::abs(a[0] / a.back()), 1.0 / d);
    std::vector<cdouble> z(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) z[static_cast<std::size_t>(i)] = std::polar(r0, 2 * std::numbers::pi * i / d + 0.4);

    std::vector<bool> done(z.size(), false);
    for (int sweep = 0; sweep < 500; ++sweep) {
        bool all = true;
        for (std::size_t i = 0; i < z.size(); ++i) {
            if (done[i]) continue;
            const cdouble ratio = newton_ratio(a, z[i]);
            cdouble s = 0;
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != i) s += 1.0 / (z[i] - z[j]);
            const cdouble w = ratio / (1.0 - ratio * s);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
            z[i] -= w;
            if (std::abs(w) <= 1e-15 * std::max(1.0, std::abs(z[i])))
                done[i] = true;
            else
                all = false;
        }
        if (all) break;
    }
    return z;
}

BigComplex horner_ratio(const std::vector<BigFloat>& a, const BigComplex& z, int bits) {
    BigComplex f(a.back(), BigFloat(bits)), df(bits);
    for (std::size_t k = a.size() - 1; k-- > 0;) {
        df = df * z + f;
        f = f * z + BigComplex(a[k], BigFloat(bits));
    }
    return f / df;
}

void aberth_polish(const Polynomial& f, std::vector<BigComplex>& z, int bits) {
    std::vector<BigFloat> a;
    for (const auto& c : f.coeffs()) a.emplace_back(c, bits);
    for (auto& zi : z) zi = BigComplex(zi.re.with_precision(bits), zi.im.with_precision(bits));
    const BigComplex one(BigFloat(1.0, bits), BigFloat(bits));
    const BigFloat tol(std::ldexp(1.0, -(bits - 8)), bits);
    BigFloat previous(bits);
    for (int sweep = 0; sweep < 60; ++sweep) {
        BigFloat worst(bits);  // largest relative correction of this sweep
        for (std::size_t i = 0; i < z.size(); ++i) {
            const BigComplex ratio = horner_ratio(a, z[i], bits);
            BigComplex s(bits);
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != i) s = s + one / (z[i] - z[j]);
            const BigComplex w = ratio / (one - ratio * s);
            if (!mpfr_number_p(w.re.get()) || !mpfr_number_p(w.im.get())) continue;
            z[i] = z[i] - w;
            BigFloat scale = z[i].abs();
            if (scale < one.re) scale = one.re;
            const BigFloat rel = w.abs() / scale;
            if (rel > worst) worst = rel;
        }
        if (!(worst > tol)) break;
        // Stalled at the rounding level of this precision.
        if (sweep > 2 && !(worst < previous * BigFloat(0.5, bits))) break;
        previous = worst;
    }
}

Interval point(mpfr_srcptr v) {
    Interval out(static_cast<int>(mpfr_get_prec(v)));
    mpfr_set(out.lower_mut(), v, MPFR_RNDD);
    mpfr_set(out.upper_mut(), v, MPFR_RNDU);
    return out;
}

// Weierstrass inclusion radii d·|f(z_i) / Π_{j≠i}(z_i - z_j)| for monic f;
// nullopt if a denominator cannot be bounded away from zero.
std::optional<std::vector<Rational>> inclusion_radii(const Polynomial& f, const std::vector<BigComplex>& z) {
    const int d = f.degree();
    std::vector<Rational> out;
    for (std::size_t i = 0; i < z.size(); ++i) {
        const ComplexInterval zi = z[i].to_interval();
        const ComplexInterval fz = evaluate_complex(f, zi);
        ComplexInterval prod(Interval::from_int(1, zi.re.precision()), Interval(zi.re.precision()));
        for (std::size_t j = 0; j < z.size(); ++j)
            if (j != i) prod = prod * (zi - z[j].to_interval());
        const Interval den = prod.abs_lower();
        if (mpfr_sgn(den.lower()) <= 0) return std::nullopt;
        const Interval q = point(fz.abs_upper().upper()) / point(den.lower());
        out.push_back(q.upper_rational() * d);
    }
    return out;
}

Rational distance_lower(const BigComplex& a, const BigComplex& b) {
    return (a.to_interval() - b.to_interval()).abs_lower().lower_rational();
}

bool disjoint(const std::vector<BigComplex>& z, const std::vector<Rational>& r) {
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j)
            if (distance_lower(z[i], z[j]) <= r[i] + r[j]) return false;
    return true;
}

// Roots of one monic square-free factor of degree >= 2 with a nonzero constant term.
Approx certify_factor(const Polynomial& f, const Rational& target, const PrecisionPolicy& policy, int& bits_used) {
    const auto start = aberth_double(f);
    std::vector<BigComplex> z;
    for (const auto& c : start) z.emplace_back(BigFloat(c.real(), 64), BigFloat(c.imag(), 64));
    const auto certified = [&]() -> std::optional<Approx> {
        auto radii = inclusion_radii(f, z);
        if (!radii) return std::nullopt;
        const bool small = std::all_of(radii->begin(), radii->end(), [&](const Rational& r) { return r <= target; });
        if (!small || !disjoint(z, *radii)) return std::nullopt;
        return Approx{z, *radii};
    };
    if (auto done = certified()) return *done;
    for (int bits = std::max(policy.start_bits, 64); bits <= policy.ceiling_bits; bits *= 2) {
        aberth_polish(f, z, bits);
        bits_used = std::max(bits_used, bits);
        if (auto done = certified()) return *done;
    }
    throw Error(ErrorKind::CertificationFailed,
                "inclusion disks for a degree-" + std::to_string(f.degree()) +
                    " factor did not reach the radius target below the precision ceiling");
}

Approx certify_linear(const Rational& root, int bits) {
    BigComplex c(BigFloat(root, bits), BigFloat(bits));
    const Rational err = abs(c.re.to_rational() - root);
    return {{c}, {err}};
}

} // namespace

ComplexInterval RootEnclosure::box() const {
    const int bits = center.precision();
    const Interval spread = Interval::from_rationals(-radius, radius, bits);
    return {center.re.to_interval() + spread, center.im.to_interval() + spread};
}

RootFindResult find_root_enclosures(const Polynomial& p, const RootFindOptions& options) {
    if (p.degree() < 1) throw Error(ErrorKind::DegreeZero, "root enclosures need degree >= 1");
    RootFindResult result;
    result.precision_used = std::max(options.policy.start_bits, 64);
    for (Rational target = options.radius_target;; target /= Rational(1 << 16)) {
        std::vector<RootEnclosure> roots;
        for (const auto& sf : square_free_decomposition(p)) {
            Polynomial f = sf.factor;
            if (f.coeff(0) == 0) {
                roots.push_back({BigComplex(64), Rational(0), sf.multiplicity});
                if (f.degree() == 1) continue;
                f = Polynomial(std::vector<Rational>(f.coeffs().begin() + 1, f.coeffs().end()));
            }
            Approx found = f.degree() == 1 ? certify_linear(-f.coeff(0) / f.leading(), result.precision_used)
                                           : certify_factor(f, target, options.policy, result.precision_used);
            for (std::size_t i = 0; i < found.z.size(); ++i)
                roots.push_back({std::move(found.z[i]), std::move(found.radius[i]), sf.multiplicity});
        }
        std::vector<BigComplex> centers;
        std::vector<Rational> radii;
        for (const auto& r : roots) {
            centers.push_back(r.center);
            radii.push_back(r.radius);
        }
        // Disks from different factors were certified separately.
        if (disjoint(centers, radii)) {
            result.roots = std::move(roots);
            return result;
        }
        if (target < Rational(1) / Rational(Integer(1) << options.policy.ceiling_bits / 2))
            throw Error(ErrorKind::CertificationFailed, "disks of distinct roots overlap at the precision ceiling");
    }
}

} // namespace sector
