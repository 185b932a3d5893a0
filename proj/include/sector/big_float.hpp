#ifndef SECTOR_BIG_FLOAT_HPP
#define SECTOR_BIG_FLOAT_HPP

#include "sector/interval.hpp"
#include "sector/rational.hpp"

#include <mpfr.h>

#include <string>

namespace sector {

// Round-to-nearest MPFR scalar for the uncertified numerical parts (root
// polishing). Anything that must be certified goes through Interval instead.
class BigFloat {
public:
    explicit BigFloat(int bits = 64);
    BigFloat(double v, int bits);
    BigFloat(const Rational& q, int bits);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    int precision() const { return static_cast<int>(mpfr_get_prec(v_)); }
    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get_mut() { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    Rational to_rational() const;
    // Degenerate interval holding exactly this value.
    Interval to_interval() const;
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    // Rounds to a new precision.
    BigFloat with_precision(int bits) const;
    std::string to_string(int digits) const;

    BigFloat operator-() const;
    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_); }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_); }

    friend BigFloat abs(const BigFloat& a);
    friend BigFloat sqrt(const BigFloat& a);
    friend BigFloat hypot(const BigFloat& a, const BigFloat& b);

private:
    mpfr_t v_;
};

struct BigComplex {
    BigFloat re;
    BigFloat im;

    explicit BigComplex(int bits = 64) : re(bits), im(bits) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    int precision() const { return re.precision(); }
    BigFloat abs() const { return hypot(re, im); }
    ComplexInterval to_interval() const { return {re.to_interval(), im.to_interval()}; }
};

BigComplex operator+(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigComplex& b);

} // namespace sector

#endif
