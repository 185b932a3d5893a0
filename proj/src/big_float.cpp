#include "sector/big_float.hpp"

#include <algorithm>

namespace sector {

BigFloat::BigFloat(int bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double v, int bits) {
    mpfr_init2(v_, bits);
    mpfr_set_d(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& q, int bits) {
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

Rational BigFloat::to_rational() const {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
}

Interval BigFloat::to_interval() const {
    Interval r(precision());
    mpfr_set(r.lower_mut(), v_, MPFR_RNDD);
    mpfr_set(r.upper_mut(), v_, MPFR_RNDU);
    return r;
}

BigFloat BigFloat::with_precision(int bits) const {
    BigFloat r(bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

std::string BigFloat::to_string(int digits) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", digits, v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

namespace {
int prec2(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }
} // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(prec2(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(prec2(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(prec2(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(prec2(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat abs(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
}

BigFloat sqrt(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
}

BigFloat hypot(const BigFloat& a, const BigFloat& b) {
    BigFloat r(prec2(a, b));
    mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }

BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigFloat den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

} // namespace sector
