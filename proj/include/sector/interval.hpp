#ifndef SECTOR_INTERVAL_HPP
#define SECTOR_INTERVAL_HPP

#include "sector/rational.hpp"

#include <mpfr.h>

#include <optional>
#include <string>

namespace sector {

// Precision schedule for every adaptive computation: start at start_bits,
// double on demand, give up (SignIndeterminate / CertificationFailed) past
// ceiling_bits.
struct PrecisionPolicy {
    int start_bits = 64;
    int ceiling_bits = 1024;
};

// Closed interval [lo, hi] with MPFR endpoints. Every operation rounds the
// lower endpoint down and the upper endpoint up, so the result always contains
// the exact value of the operation applied to any points of the operands.
// Result precision is the larger of the operand precisions.
class Interval {
public:
    explicit Interval(int bits = 64);
    Interval(const Interval& other);
    Interval(Interval&& other) noexcept;
    Interval& operator=(const Interval& other);
    Interval& operator=(Interval&& other) noexcept;
    ~Interval();

    static Interval from_rational(const Rational& q, int bits);
    static Interval from_int(long v, int bits);
    // Encloses [a, b]; requires a <= b.
    static Interval from_rationals(const Rational& a, const Rational& b, int bits);

    int precision() const { return static_cast<int>(mpfr_get_prec(lo_)); }
    mpfr_srcptr lower() const { return lo_; }
    mpfr_srcptr upper() const { return hi_; }
    mpfr_ptr lower_mut() { return lo_; }
    mpfr_ptr upper_mut() { return hi_; }

    bool is_zero() const { return mpfr_zero_p(lo_) && mpfr_zero_p(hi_); }
    bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
    bool is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }
    // +1 / -1 when the enclosure excludes zero, 0 for the exact [0,0], nullopt otherwise.
    std::optional<int> sign() const;

    bool contains(const Rational& q) const;
    bool overlaps(const Interval& other) const;
    bool subset_of(const Interval& other) const;

    Rational lower_rational() const;
    Rational upper_rational() const;
    double mid_double() const;
    // Upper bound on the width.
    Interval width() const;
    // Upper bound on max |x| over the interval, as a degenerate interval.
    Interval magnitude() const;
    // Lower bound on min |x| over the interval (0 if the interval contains 0).
    Interval mignitude() const;

    // "mid ± rad" with enough digits to show every certified digit.
    std::string to_string() const;

    Interval operator-() const;
    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    // Throws InvalidArgument if b contains zero.
    friend Interval operator/(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Rational& q);

    Interval& operator+=(const Interval& b) { return *this = *this + b; }
    Interval& operator-=(const Interval& b) { return *this = *this - b; }
    Interval& operator*=(const Interval& b) { return *this = *this * b; }

    // Hull of both operands.
    static Interval hull(const Interval& a, const Interval& b);

private:
    mpfr_t lo_;
    mpfr_t hi_;
};

Interval sqr(const Interval& a);
Interval sqrt(const Interval& a);
Interval pi_interval(int bits);
// Enclosures of sin(q·π) and cos(q·π); exact at multiples of 1/2 and at ±1/6, ±1/3.
Interval sin_pi(const Rational& q, int bits);
Interval cos_pi(const Rational& q, int bits);

// Exact value of cos(q·π) when it is rational (q·π a multiple of π/3 or π/2).
std::optional<Rational> rational_cos_pi(const Rational& q);

struct ComplexInterval {
    Interval re;
    Interval im;

    explicit ComplexInterval(int bits = 64) : re(bits), im(bits) {}
    ComplexInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}

    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    // Upper bound on |z| over the rectangle.
    Interval abs_upper() const;
    // Lower bound on |z| over the rectangle.
    Interval abs_lower() const;
};

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator*(const ComplexInterval& a, const Interval& b);

} // namespace sector

#endif
