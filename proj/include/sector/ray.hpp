#ifndef SECTOR_RAY_HPP
#define SECTOR_RAY_HPP

#include "sector/polynomial.hpp"
#include "sector/root_count.hpp"

#include <vector>

namespace sector {

// Net change of arg p(z) along the ray {t·e^{iθ} : t >= 0}, stored exactly as
// n·θ - 2π·m where m counts the zeros of p with argument in (0, θ).
struct ArgVariation {
    int n = 0;
    int m = 0;
    Angle theta{Rational(1)};

    // Δ / π.
    Rational delta_turns() const { return theta.turns() * n - 2 * m; }
};

enum class Crossing {
    ImagZero,  // Im p = 0: the image crosses the real axis
    RealZero,  // Re p = 0: the image crosses the imaginary axis
};

struct CrossingEvent {
    IsolatingInterval where;
    Crossing kind = Crossing::ImagZero;
    // Certified sign of the other component on `where`.
    int co_sign = 0;
    // Unwrapped argument at the crossing, in quarter turns (units of π/2).
    Integer quarter;
};

struct QuadrantTrace {
    std::vector<CrossingEvent> events;
    // Signs of (Re, Im) just after t = 0 and as t -> ∞.
    int initial_real_sign = 1;
    int initial_imag_sign = 0;
    int terminal_real_sign = 1;
    int terminal_imag_sign = 0;
    // Δ in quarter turns.
    Rational terminal_quarters;

    Rational delta_turns() const { return terminal_quarters / 2; }
};

// Requires non-negative coefficients with a₀ > 0 (NotNonNegative otherwise).
// Throws ZeroOnRay when p vanishes on the ray, SignIndeterminate at the
// precision ceiling.
QuadrantTrace trace_quadrants(const Polynomial& p, const Angle& theta, const PrecisionPolicy& policy = {});
ArgVariation argument_variation(const Polynomial& p, const Angle& theta, const PrecisionPolicy& policy = {});
int zeros_in_upper_sector(const Polynomial& p, const Angle& theta, const PrecisionPolicy& policy = {});

// ⌊n·θ/π⌋, the number of positive zeros of Im p(t·e^{iθ}) when p has no
// zeros in the upper sector. Throws DegenerateAngle when n·θ/π is an integer.
int expected_imag_zero_count(int n, const Angle& theta);

} // namespace sector

#endif
