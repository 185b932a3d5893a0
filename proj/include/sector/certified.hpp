#ifndef SECTOR_CERTIFIED_HPP
#define SECTOR_CERTIFIED_HPP

#include "sector/interval.hpp"
#include "sector/polynomial.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace sector {

enum class Trig { One, Sin, Cos };

// Symbolic description of one coefficient: scale · trig(turns · π). Keeping the
// recipe lets a CertifiedPoly be recomputed at any precision, and makes exact
// zeros (sin kπ, cos (k + 1/2)π) decidable without numerics.
struct CoeffRecipe {
    Rational scale = 0;
    Trig trig = Trig::One;
    Rational turns = 0;

    bool exact_zero() const;
    Interval enclose(int bits) const;
};

struct CertifiedCoeff {
    Interval enclosure;
    bool exact_zero = false;

    std::optional<int> sign() const { return exact_zero ? std::optional<int>(0) : enclosure.sign(); }
};

// Real polynomial whose coefficients are certified enclosures of algebraic
// values, ascending by power. Immutable; refinement returns a new value.
class CertifiedPoly {
public:
    CertifiedPoly() = default;
    explicit CertifiedPoly(std::vector<CoeffRecipe> recipes, int bits = 64);

    static CertifiedPoly from_rational(const Polynomial& p, int bits = 64);
    static CertifiedPoly from_rationals(const std::vector<Rational>& coeffs, int bits = 64);

    int precision() const { return bits_; }
    const std::vector<CertifiedCoeff>& coeffs() const { return coeffs_; }
    const std::vector<CoeffRecipe>& recipes() const { return recipes_; }

    // Index of the highest coefficient not exactly zero; -1 for the zero polynomial.
    int degree() const;
    bool is_zero() const { return degree() < 0; }
    // Number of exactly-zero coefficients below the first nonzero one (the
    // multiplicity of t = 0 as a root).
    int zero_order() const;

    CertifiedPoly refined() const { return at_precision(2 * bits_); }
    CertifiedPoly at_precision(int bits) const;
    // Divides out t^zero_order().
    CertifiedPoly without_zero_root() const;

private:
    std::vector<CoeffRecipe> recipes_;
    std::vector<CertifiedCoeff> coeffs_;
    int bits_ = 64;
};

CertifiedPoly derivative(const CertifiedPoly& p);
// p(-t).
CertifiedPoly reflect(const CertifiedPoly& p);
Interval evaluate(const CertifiedPoly& p, const Interval& t);

// Imaginary and real parts of p(t·e^{iθ}) as polynomials in real t.
struct RayComponents {
    CertifiedPoly imag;
    CertifiedPoly real;
};

// imag[k] = a_k sin kθ, real[k] = a_k cos kθ.
RayComponents ray_components(const Polynomial& p, const Angle& theta, int bits = 64);
// Ray components of p′: imag[k-1] = k a_k sin (k-1)θ, real[k-1] = k a_k cos (k-1)θ.
// Throws DegreeZero for constants.
RayComponents critical_ray_components(const Polynomial& p, const Angle& theta, int bits = 64);

// Rotates a pair of coefficient sequences by -θ:
//   first  = imag·cosθ - real·sinθ,   second = imag·sinθ + real·cosθ
// evaluated coefficient-wise in interval arithmetic at the given precision.
std::pair<std::vector<Interval>, std::vector<Interval>> rotate_components(const CertifiedPoly& imag,
                                                                          const CertifiedPoly& real,
                                                                          const Angle& theta, int bits);

} // namespace sector

#endif
