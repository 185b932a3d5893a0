#include "sector/certified.hpp"

#include "sector/errors.hpp"

#include <algorithm>

namespace sector {

bool CoeffRecipe::exact_zero() const {
    if (scale == 0) return true;
    switch (trig) {
    case Trig::One: return false;
    case Trig::Sin: return is_integer(turns);
    case Trig::Cos: return is_integer(turns - Rational(1, 2));
    }
    return false;
}

Interval CoeffRecipe::enclose(int bits) const {
    if (exact_zero()) return Interval(bits);
    switch (trig) {
    case Trig::One: return Interval::from_rational(scale, bits);
    case Trig::Sin: return sin_pi(turns, bits) * scale;
    case Trig::Cos: return cos_pi(turns, bits) * scale;
    }
    return Interval(bits);
}

CertifiedPoly::CertifiedPoly(std::vector<CoeffRecipe> recipes, int bits) : recipes_(std::move(recipes)), bits_(bits) {
    coeffs_.reserve(recipes_.size());
    for (const auto& r : recipes_) {
        const bool zero = r.exact_zero();
        coeffs_.push_back({r.enclose(bits), zero});
    }
}

CertifiedPoly CertifiedPoly::from_rational(const Polynomial& p, int bits) { return from_rationals(p.coeffs(), bits); }

CertifiedPoly CertifiedPoly::from_rationals(const std::vector<Rational>& coeffs, int bits) {
    std::vector<CoeffRecipe> r;
    r.reserve(coeffs.size());
    for (const auto& c : coeffs) r.push_back({c, Trig::One, 0});
    return CertifiedPoly(std::move(r), bits);
}

int CertifiedPoly::degree() const {
    for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k)
        if (!coeffs_[static_cast<std::size_t>(k)].exact_zero) return k;
    return -1;
}

int CertifiedPoly::zero_order() const {
    int k = 0;
    while (k < static_cast<int>(coeffs_.size()) && coeffs_[static_cast<std::size_t>(k)].exact_zero) ++k;
    return k;
}

CertifiedPoly CertifiedPoly::at_precision(int bits) const { return CertifiedPoly(recipes_, bits); }

CertifiedPoly CertifiedPoly::without_zero_root() const {
    const int j = zero_order();
    if (j == 0) return *this;
    CertifiedPoly out;
    out.bits_ = bits_;
    out.recipes_.assign(recipes_.begin() + j, recipes_.end());
    out.coeffs_.assign(coeffs_.begin() + j, coeffs_.end());
    return out;
}

CertifiedPoly derivative(const CertifiedPoly& p) {
    std::vector<CoeffRecipe> r;
    for (std::size_t k = 1; k < p.recipes().size(); ++k) {
        CoeffRecipe c = p.recipes()[k];
        c.scale *= static_cast<long>(k);
        r.push_back(c);
    }
    return CertifiedPoly(std::move(r), p.precision());
}

CertifiedPoly reflect(const CertifiedPoly& p) {
    std::vector<CoeffRecipe> r = p.recipes();
    for (std::size_t k = 1; k < r.size(); k += 2) r[k].scale = -r[k].scale;
    return CertifiedPoly(std::move(r), p.precision());
}

Interval evaluate(const CertifiedPoly& p, const Interval& t) {
    const int bits = std::max(p.precision(), t.precision());
    Interval acc(bits);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * t + it->enclosure;
    return acc;
}

RayComponents ray_components(const Polynomial& p, const Angle& theta, int bits) {
    std::vector<CoeffRecipe> im, re;
    for (int k = 0; k <= p.degree(); ++k) {
        const Rational& a = p.coeffs()[static_cast<std::size_t>(k)];
        const Rational turns = theta.turns() * k;
        im.push_back({a, Trig::Sin, turns});
        re.push_back({a, Trig::Cos, turns});
    }
    return {CertifiedPoly(std::move(im), bits), CertifiedPoly(std::move(re), bits)};
}

RayComponents critical_ray_components(const Polynomial& p, const Angle& theta, int bits) {
    if (p.degree() == 0) throw Error(ErrorKind::DegreeZero, "critical ray components of a constant");
    std::vector<CoeffRecipe> im, re;
    for (int k = 1; k <= p.degree(); ++k) {
        const Rational scaled = p.coeffs()[static_cast<std::size_t>(k)] * k;
        const Rational turns = theta.turns() * (k - 1);
        im.push_back({scaled, Trig::Sin, turns});
        re.push_back({scaled, Trig::Cos, turns});
    }
    return {CertifiedPoly(std::move(im), bits), CertifiedPoly(std::move(re), bits)};
}

std::pair<std::vector<Interval>, std::vector<Interval>> rotate_components(const CertifiedPoly& imag,
                                                                          const CertifiedPoly& real,
                                                                          const Angle& theta, int bits) {
    const CertifiedPoly a = imag.at_precision(bits);
    const CertifiedPoly b = real.at_precision(bits);
    const Interval c = theta.cos(bits);
    const Interval s = theta.sin(bits);
    const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
    std::vector<Interval> first, second;
    for (std::size_t k = 0; k < n; ++k) {
        const Interval x = k < a.coeffs().size() ? a.coeffs()[k].enclosure : Interval(bits);
        const Interval y = k < b.coeffs().size() ? b.coeffs()[k].enclosure : Interval(bits);
        first.push_back(x * c - y * s);
        second.push_back(x * s + y * c);
    }
    return {std::move(first), std::move(second)};
}

} // namespace sector
