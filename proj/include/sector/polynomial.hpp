#ifndef SECTOR_POLYNOMIAL_HPP
#define SECTOR_POLYNOMIAL_HPP

#include "sector/interval.hpp"
#include "sector/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace sector {

// Univariate polynomial with exact rational coefficients, ascending by power.
// Trailing zeros are trimmed on construction and the zero polynomial is not a
// value of this type.
class Polynomial {
public:
    // Throws ZeroPolynomial if every coefficient is zero.
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs) : Polynomial(std::vector<Rational>(coeffs)) {}

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    // Coefficient of z^k; zero above the degree.
    Rational coeff(int k) const;
    const Rational& leading() const { return coeffs_.back(); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<Rational> coeffs_;
};

Polynomial make_polynomial(std::vector<Rational> coeffs);

// Throws DegreeZero for constants.
Polynomial derivative(const Polynomial& p);

Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Rational& c);
// These throw ZeroPolynomial when the result vanishes identically.
Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);

// p(-z).
Polynomial reflect(const Polynomial& p);
// p(s·z).
Polynomial scale_variable(const Polynomial& p, const Rational& s);
// Product of (z - r) over the given roots.
Polynomial from_roots(const std::vector<Rational>& roots);

struct NonNegativity {
    bool nonneg = false;
    // Every coefficient strictly positive.
    bool strict = false;
    explicit operator bool() const { return nonneg; }
};

NonNegativity is_nonneg(const Polynomial& p);

Interval evaluate(const Polynomial& p, const Interval& x);
// Horner evaluation with outward rounding; the result contains p(z) for every z
// in the rectangle.
ComplexInterval evaluate_complex(const Polynomial& p, const ComplexInterval& z);
Rational evaluate_exact(const Polynomial& p, const Rational& x);

// Exact division with remainder over Q. The remainder is returned as a raw
// coefficient vector (possibly empty for the zero remainder).
std::pair<std::vector<Rational>, std::vector<Rational>> divmod(const std::vector<Rational>& num,
                                                               const std::vector<Rational>& den);
// Monic gcd over Q.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
// Exact quotient; requires b | a.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);
bool divides(const Polynomial& b, const Polynomial& a);

struct SquareFreeFactor {
    Polynomial factor;  // monic, square-free, degree >= 1
    int multiplicity;
};

// Yun's algorithm: p = lc · Π factor_i^multiplicity_i with pairwise coprime factors.
std::vector<SquareFreeFactor> square_free_decomposition(const Polynomial& p);

// Canonical comma-separated ascending coefficients, e.g. "1,2,3/2".
std::string format_coefficients(const Polynomial& p);
// Human-readable monomial form over z, e.g. "z^2+2z+1".
std::string format_monomials(const Polynomial& p);

// Angle (num/den)·π in (0, π], kept in lowest terms.
class Angle {
public:
    // Throws OutOfRange unless 0 < turns <= 1.
    explicit Angle(const Rational& turns);
    Angle(long num, long den);

    // Value divided by π.
    const Rational& turns() const { return turns_; }
    Integer num() const { return turns_.get_num(); }
    Integer den() const { return turns_.get_den(); }
    double float_hint() const;
    Interval value(int bits) const;
    Interval sin(int bits) const { return sin_pi(turns_, bits); }
    Interval cos(int bits) const { return cos_pi(turns_, bits); }
    // "2/3pi", "pi".
    std::string to_string() const;

    friend bool operator==(const Angle& a, const Angle& b) { return a.turns_ == b.turns_; }
    friend bool operator<(const Angle& a, const Angle& b) { return a.turns_ < b.turns_; }

private:
    Rational turns_;
};

} // namespace sector

#endif
