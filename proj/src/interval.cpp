#include "sector/interval.hpp"

#include "sector/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace sector {

namespace {

constexpr int kGuardBits = 16;

int max_prec(const Interval& a, const Interval& b) { return std::max(a.precision(), b.precision()); }

struct Scratch {
    mpfr_t v;
    explicit Scratch(int bits) { mpfr_init2(v, bits); }
    ~Scratch() { mpfr_clear(v); }
    Scratch(const Scratch&) = delete;
    Scratch& operator=(const Scratch&) = delete;
};

} // namespace

Interval::Interval(int bits) {
    mpfr_init2(lo_, bits);
    mpfr_init2(hi_, bits);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) {
    mpfr_init2(lo_, mpfr_get_prec(other.lo_));
    mpfr_init2(hi_, mpfr_get_prec(other.hi_));
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept {
    mpfr_init2(lo_, mpfr_get_prec(other.lo_));
    mpfr_init2(hi_, mpfr_get_prec(other.hi_));
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
    if (this != &other) {
        mpfr_set_prec(lo_, mpfr_get_prec(other.lo_));
        mpfr_set_prec(hi_, mpfr_get_prec(other.hi_));
        mpfr_set(lo_, other.lo_, MPFR_RNDD);
        mpfr_set(hi_, other.hi_, MPFR_RNDU);
    }
    return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::from_rational(const Rational& q, int bits) {
    Interval r(bits);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::from_int(long v, int bits) {
    Interval r(bits);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

Interval Interval::from_rationals(const Rational& a, const Rational& b, int bits) {
    Interval r(bits);
    mpfr_set_q(r.lo_, a.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, b.get_mpq_t(), MPFR_RNDU);
    return r;
}

std::optional<int> Interval::sign() const {
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    if (is_zero()) return 0;
    return std::nullopt;
}

bool Interval::contains(const Rational& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool Interval::overlaps(const Interval& other) const {
    return mpfr_lessequal_p(lo_, other.hi_) && mpfr_lessequal_p(other.lo_, hi_);
}

bool Interval::subset_of(const Interval& other) const {
    return mpfr_lessequal_p(other.lo_, lo_) && mpfr_lessequal_p(hi_, other.hi_);
}

Rational Interval::lower_rational() const {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), lo_);
    return q;
}

Rational Interval::upper_rational() const {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), hi_);
    return q;
}

double Interval::mid_double() const {
    Scratch m(precision() + 1);
    mpfr_add(m.v, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m.v, m.v, 1, MPFR_RNDN);
    return mpfr_get_d(m.v, MPFR_RNDN);
}

Interval Interval::width() const {
    Interval r(precision());
    mpfr_sub(r.hi_, hi_, lo_, MPFR_RNDU);
    mpfr_set(r.lo_, r.hi_, MPFR_RNDD);
    return r;
}

Interval Interval::magnitude() const {
    Interval r(precision());
    if (mpfr_cmpabs(lo_, hi_) > 0)
        mpfr_abs(r.hi_, lo_, MPFR_RNDU);
    else
        mpfr_abs(r.hi_, hi_, MPFR_RNDU);
    mpfr_set(r.lo_, r.hi_, MPFR_RNDD);
    return r;
}

Interval Interval::mignitude() const {
    Interval r(precision());
    if (!contains_zero()) {
        if (mpfr_cmpabs(lo_, hi_) < 0)
            mpfr_abs(r.lo_, lo_, MPFR_RNDD);
        else
            mpfr_abs(r.lo_, hi_, MPFR_RNDD);
    }
    mpfr_set(r.hi_, r.lo_, MPFR_RNDU);
    return r;
}

std::string Interval::to_string() const {
    if (is_zero()) return "0 ± 0";
    const int bits = precision();
    Scratch mid(bits + 2), rad(bits), tmp(bits);
    mpfr_add(mid.v, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(mid.v, mid.v, 1, MPFR_RNDN);
    mpfr_sub(rad.v, hi_, mid.v, MPFR_RNDU);
    mpfr_sub(tmp.v, mid.v, lo_, MPFR_RNDU);
    mpfr_max(rad.v, rad.v, tmp.v, MPFR_RNDU);

    const int max_digits = static_cast<int>(bits * 0.30103) + 1;
    int digits = max_digits;
    if (!mpfr_zero_p(rad.v) && !mpfr_zero_p(mid.v)) {
        // Significant digits of mid not swamped by rad.
        long e_mid = mpfr_get_exp(mid.v);
        long e_rad = mpfr_get_exp(rad.v);
        digits = static_cast<int>(std::floor((e_mid - e_rad) * 0.30103)) + 2;
        digits = std::clamp(digits, 1, max_digits);
    }
    if (!mpfr_zero_p(mid.v)) {
        // Decimal rounding of mid is at most half a unit in its last printed digit.
        mpfr_abs(tmp.v, mid.v, MPFR_RNDN);
        mpfr_log10(tmp.v, tmp.v, MPFR_RNDU);
        const long e10 = static_cast<long>(std::floor(mpfr_get_d(tmp.v, MPFR_RNDU))) + 1;
        mpfr_set_si(tmp.v, e10 - digits, MPFR_RNDN);
        mpfr_exp10(tmp.v, tmp.v, MPFR_RNDU);
        mpfr_add(rad.v, rad.v, tmp.v, MPFR_RNDU);
    }
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re ± %.2RUe", digits, mid.v, rad.v);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

Interval Interval::operator-() const {
    Interval r(precision());
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Interval operator+(const Interval& a, const Interval& b) {
    Interval r(max_prec(a, b));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a, const Interval& b) {
    Interval r(max_prec(a, b));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

Interval operator*(const Interval& a, const Interval& b) {
    const int bits = max_prec(a, b);
    Interval r(bits);
    if (a.is_zero() || b.is_zero()) return r;
    // Sign-case split keeps the common (sign-definite) cases to two products.
    const int sa = mpfr_sgn(a.lo_) >= 0 ? 1 : (mpfr_sgn(a.hi_) <= 0 ? -1 : 0);
    const int sb = mpfr_sgn(b.lo_) >= 0 ? 1 : (mpfr_sgn(b.hi_) <= 0 ? -1 : 0);
    if (sa != 0 && sb != 0) {
        mpfr_srcptr alo = sa * sb > 0 ? (sa > 0 ? a.lo_ : a.hi_) : (sa > 0 ? a.hi_ : a.lo_);
        mpfr_srcptr blo = sa * sb > 0 ? (sa > 0 ? b.lo_ : b.hi_) : (sa > 0 ? b.lo_ : b.hi_);
        mpfr_srcptr ahi = sa * sb > 0 ? (sa > 0 ? a.hi_ : a.lo_) : (sa > 0 ? a.lo_ : a.hi_);
        mpfr_srcptr bhi = sa * sb > 0 ? (sa > 0 ? b.hi_ : b.lo_) : (sa > 0 ? b.hi_ : b.lo_);
        mpfr_mul(r.lo_, alo, blo, MPFR_RNDD);
        mpfr_mul(r.hi_, ahi, bhi, MPFR_RNDU);
        return r;
    }
    Scratch t(bits);
    mpfr_srcptr as[2] = {a.lo_, a.hi_};
    mpfr_srcptr bs[2] = {b.lo_, b.hi_};
    mpfr_set_inf(r.lo_, 1);
    mpfr_set_inf(r.hi_, -1);
    for (auto x : as) {
        for (auto y : bs) {
            mpfr_mul(t.v, x, y, MPFR_RNDD);
            mpfr_min(r.lo_, r.lo_, t.v, MPFR_RNDD);
            mpfr_mul(t.v, x, y, MPFR_RNDU);
            mpfr_max(r.hi_, r.hi_, t.v, MPFR_RNDU);
        }
    }
    return r;
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw Error(ErrorKind::InvalidArgument, "interval division by an enclosure of zero");
    const int bits = max_prec(a, b);
    Interval r(bits);
    Scratch t(bits);
    mpfr_srcptr as[2] = {a.lo_, a.hi_};
    mpfr_srcptr bs[2] = {b.lo_, b.hi_};
    mpfr_set_inf(r.lo_, 1);
    mpfr_set_inf(r.hi_, -1);
    for (auto x : as) {
        for (auto y : bs) {
            mpfr_div(t.v, x, y, MPFR_RNDD);
            mpfr_min(r.lo_, r.lo_, t.v, MPFR_RNDD);
            mpfr_div(t.v, x, y, MPFR_RNDU);
            mpfr_max(r.hi_, r.hi_, t.v, MPFR_RNDU);
        }
    }
    return r;
}

Interval operator*(const Interval& a, const Rational& q) {
    Interval r(a.precision());
    if (sgn(q) >= 0) {
        mpfr_mul_q(r.lo_, a.lo_, q.get_mpq_t(), MPFR_RNDD);
        mpfr_mul_q(r.hi_, a.hi_, q.get_mpq_t(), MPFR_RNDU);
    } else {
        mpfr_mul_q(r.lo_, a.hi_, q.get_mpq_t(), MPFR_RNDD);
        mpfr_mul_q(r.hi_, a.lo_, q.get_mpq_t(), MPFR_RNDU);
    }
    return r;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
    Interval r(max_prec(a, b));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval sqr(const Interval& a) {
    Interval m = a.magnitude();
    Interval g = a.mignitude();
    Interval r(a.precision());
    mpfr_sqr(r.lower_mut(), g.lower(), MPFR_RNDD);
    mpfr_sqr(r.upper_mut(), m.upper(), MPFR_RNDU);
    return r;
}

Interval sqrt(const Interval& a) {
    Interval r(a.precision());
    if (mpfr_sgn(a.lower()) > 0) mpfr_sqrt(r.lower_mut(), a.lower(), MPFR_RNDD);
    if (mpfr_sgn(a.upper()) > 0) mpfr_sqrt(r.upper_mut(), a.upper(), MPFR_RNDU);
    return r;
}

Interval pi_interval(int bits) {
    Interval r(bits);
    mpfr_const_pi(r.lower_mut(), MPFR_RNDD);
    mpfr_const_pi(r.upper_mut(), MPFR_RNDU);
    return r;
}

namespace {

// sin(r·π) for r in (0, 1/2), which is increasing in r and lies in (0, 1).
Interval sin_pi_first_quadrant(const Rational& r, int bits) {
    const int work = bits + kGuardBits;
    Interval pi = pi_interval(work);
    Scratch xlo(work), xhi(work), half_pi(work);
    mpfr_mul_q(xlo.v, pi.lower(), r.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(xhi.v, pi.upper(), r.get_mpq_t(), MPFR_RNDU);
    mpfr_div_2ui(half_pi.v, pi.lower(), 1, MPFR_RNDD);

    Interval out(bits);
    mpfr_sin(out.lower_mut(), xlo.v, MPFR_RNDD);
    if (mpfr_sgn(out.lower()) < 0) mpfr_set_zero(out.lower_mut(), 1);
    if (mpfr_greaterequal_p(xhi.v, half_pi.v))
        mpfr_set_ui(out.upper_mut(), 1, MPFR_RNDU);
    else
        mpfr_sin(out.upper_mut(), xhi.v, MPFR_RNDU);
    return out;
}

} // namespace

Interval sin_pi(const Rational& q, int bits) {
    Rational half_turns = q / 2;
    Rational r = q - Rational(floor(half_turns) * 2);
    int s = 1;
    if (r >= 1) {
        r -= 1;
        s = -1;
    }
    if (r > Rational(1, 2)) r = 1 - r;
    Interval v(bits);
    if (r == 0) return v;
    if (r == Rational(1, 2))
        v = Interval::from_int(1, bits);
    else if (r == Rational(1, 6))
        v = Interval::from_rational(Rational(1, 2), bits);
    else
        v = sin_pi_first_quadrant(r, bits);
    return s > 0 ? v : -v;
}

Interval cos_pi(const Rational& q, int bits) { return sin_pi(Rational(1, 2) - q, bits); }

std::optional<Rational> rational_cos_pi(const Rational& q) {
    Rational r = q - Rational(floor(q / 2) * 2);
    if (r == 0) return Rational(1);
    if (r == 1) return Rational(-1);
    if (r == Rational(1, 2) || r == Rational(3, 2)) return Rational(0);
    if (r == Rational(1, 3) || r == Rational(5, 3)) return Rational(1, 2);
    if (r == Rational(2, 3) || r == Rational(4, 3)) return Rational(-1, 2);
    return std::nullopt;
}

Interval ComplexInterval::abs_upper() const {
    return sqrt(sqr(re.magnitude()) + sqr(im.magnitude()));
}

Interval ComplexInterval::abs_lower() const {
    return sqrt(sqr(re.mignitude()) + sqr(im.mignitude()));
}

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re + b.re, a.im + b.im};
}

ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re - b.re, a.im - b.im};
}

ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexInterval operator*(const ComplexInterval& a, const Interval& b) { return {a.re * b, a.im * b}; }

} // namespace sector
