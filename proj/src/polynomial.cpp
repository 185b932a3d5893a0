#include "sector/polynomial.hpp"

#include "sector/errors.hpp"

#include <algorithm>
#include <sstream>

namespace sector {

namespace {

using Coeffs = std::vector<Rational>;

void trim(Coeffs& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Coeffs raw_derivative(const Coeffs& c) {
    Coeffs d;
    for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * static_cast<long>(k));
    trim(d);
    return d;
}

Coeffs raw_sub(const Coeffs& a, const Coeffs& b) {
    Coeffs r(std::max(a.size(), b.size()));
    for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) r[k] -= b[k];
    trim(r);
    return r;
}

Coeffs monic(Coeffs c) {
    if (c.empty()) return c;
    Rational lc = c.back();
    for (auto& x : c) x /= lc;
    return c;
}

Coeffs raw_gcd(Coeffs a, Coeffs b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = monic(std::move(r));
    }
    return monic(std::move(a));
}

Coeffs raw_quotient(const Coeffs& a, const Coeffs& b) { return divmod(a, b).first; }

} // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim(coeffs_);
    if (coeffs_.empty()) throw Error(ErrorKind::ZeroPolynomial, "all coefficients are zero");
}

Rational Polynomial::coeff(int k) const {
    if (k < 0 || k > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

Polynomial make_polynomial(std::vector<Rational> coeffs) { return Polynomial(std::move(coeffs)); }

Polynomial derivative(const Polynomial& p) {
    if (p.degree() == 0) throw Error(ErrorKind::DegreeZero, "derivative of a constant polynomial");
    return Polynomial(raw_derivative(p.coeffs()));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Coeffs r(a.coeffs().size() + b.coeffs().size() - 1);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) r[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return Polynomial(std::move(r));
}

Polynomial operator*(const Polynomial& a, const Rational& c) {
    Coeffs r = a.coeffs();
    for (auto& x : r) x *= c;
    return Polynomial(std::move(r));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Coeffs r(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t k = 0; k < a.coeffs().size(); ++k) r[k] += a.coeffs()[k];
    for (std::size_t k = 0; k < b.coeffs().size(); ++k) r[k] += b.coeffs()[k];
    return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return Polynomial(raw_sub(a.coeffs(), b.coeffs())); }

Polynomial reflect(const Polynomial& p) { return scale_variable(p, -1); }

Polynomial scale_variable(const Polynomial& p, const Rational& s) {
    Coeffs r = p.coeffs();
    Rational power = 1;
    for (auto& x : r) {
        x *= power;
        power *= s;
    }
    return Polynomial(std::move(r));
}

Polynomial from_roots(const std::vector<Rational>& roots) {
    Polynomial p{Rational(1)};
    for (const auto& r : roots) p = p * Polynomial{-r, Rational(1)};
    return p;
}

NonNegativity is_nonneg(const Polynomial& p) {
    NonNegativity out;
    out.nonneg = std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const Rational& a) { return a >= 0; });
    out.strict = std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const Rational& a) { return a > 0; });
    return out;
}

Interval evaluate(const Polynomial& p, const Interval& x) {
    const int bits = x.precision();
    Interval acc = Interval::from_rational(p.leading(), bits);
    for (int k = p.degree() - 1; k >= 0; --k)
        acc = acc * x + Interval::from_rational(p.coeffs()[static_cast<std::size_t>(k)], bits);
    return acc;
}

ComplexInterval evaluate_complex(const Polynomial& p, const ComplexInterval& z) {
    const int bits = std::max(z.re.precision(), z.im.precision());
    ComplexInterval acc(Interval::from_rational(p.leading(), bits), Interval(bits));
    for (int k = p.degree() - 1; k >= 0; --k) {
        acc = acc * z;
        acc.re += Interval::from_rational(p.coeffs()[static_cast<std::size_t>(k)], bits);
    }
    return acc;
}

Rational evaluate_exact(const Polynomial& p, const Rational& x) {
    Rational acc = p.leading();
    for (int k = p.degree() - 1; k >= 0; --k) acc = acc * x + p.coeffs()[static_cast<std::size_t>(k)];
    return acc;
}

std::pair<std::vector<Rational>, std::vector<Rational>> divmod(const std::vector<Rational>& num,
                                                               const std::vector<Rational>& den) {
    Coeffs d = den;
    trim(d);
    if (d.empty()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
    Coeffs r = num;
    trim(r);
    if (r.size() < d.size()) return {Coeffs{}, r};
    Coeffs q(r.size() - d.size() + 1);
    const Rational& lc = d.back();
    for (std::size_t shift = q.size(); shift-- > 0;) {
        const Rational c = r[shift + d.size() - 1] / lc;
        q[shift] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < d.size(); ++j) r[shift + j] -= c * d[j];
    }
    r.resize(d.size() - 1);
    trim(r);
    trim(q);
    return {q, r};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) { return Polynomial(raw_gcd(a.coeffs(), b.coeffs())); }

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divmod(a.coeffs(), b.coeffs());
    if (!r.empty()) throw Error(ErrorKind::InvalidArgument, "exact_quotient: divisor does not divide");
    return Polynomial(std::move(q));
}

bool divides(const Polynomial& b, const Polynomial& a) { return divmod(a.coeffs(), b.coeffs()).second.empty(); }

std::vector<SquareFreeFactor> square_free_decomposition(const Polynomial& p) {
    std::vector<SquareFreeFactor> out;
    if (p.degree() == 0) return out;
    Coeffs f = monic(p.coeffs());
    Coeffs df = raw_derivative(f);
    Coeffs g = raw_gcd(f, df);
    Coeffs c = raw_quotient(f, g);
    Coeffs d = raw_sub(raw_quotient(df, g), raw_derivative(c));
    for (int i = 1; c.size() > 1; ++i) {
        Coeffs a = raw_gcd(c, d);
        if (a.size() > 1) out.push_back({Polynomial(a), i});
        c = raw_quotient(c, a);
        d = raw_sub(raw_quotient(d, a), raw_derivative(c));
    }
    return out;
}

std::string format_coefficients(const Polynomial& p) {
    std::string out;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        if (k) out += ',';
        out += to_string(p.coeffs()[k]);
    }
    return out;
}

std::string format_monomials(const Polynomial& p) {
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational& c = p.coeffs()[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (!out.empty() || c < 0) out += c < 0 ? '-' : '+';
        if (k == 0 || mag != 1) out += to_string(mag);
        if (k >= 1) out += 'z';
        if (k >= 2) out += '^' + std::to_string(k);
    }
    return out;
}

Angle::Angle(const Rational& turns) : turns_(turns) {
    turns_.canonicalize();
    if (turns_ <= 0 || turns_ > 1)
        throw Error(ErrorKind::OutOfRange, "angle " + to_string() + " outside (0, pi]");
}

Angle::Angle(long num, long den) : Angle(den == 0 ? Rational(-1) : Rational(num, den)) {}

double Angle::float_hint() const { return value(64).mid_double(); }

Interval Angle::value(int bits) const { return pi_interval(bits + 8) * turns_; }

std::string Angle::to_string() const {
    if (turns_ == 1) return "pi";
    return sector::to_string(turns_) + "pi";
}

} // namespace sector
