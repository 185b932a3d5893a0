#ifndef SECTOR_GENERATOR_HPP
#define SECTOR_GENERATOR_HPP

#include "sector/polynomial.hpp"

#include <cstdint>
#include <optional>

namespace sector {

// Factor shapes: (t + r), and conjugate pairs t² - 2r·c·t + r² with c = cos ψ,
// ψ in [max(φ, π/2), π) ("obtuse") or [φ, π/2) ("acute").
struct GeneratorConfig {
    double real_weight = 1.0;
    double obtuse_weight = 1.0;
    double acute_weight = 1.0;
    // Forces ψ (as a multiple of π) and r for every pair factor.
    std::optional<Rational> psi_turns;
    std::optional<Rational> radius;
    int max_attempts = 10000;
};

// Degree-n polynomial with strictly positive rational coefficients and simple
// zeros, all with |arg| >= φ (strictly, unless ψ is forced). Deterministic in
// seed. Throws InvalidArgument for n < 1, GenerationExhausted when every
// attempt produced a non-positive coefficient.
Polynomial generate_sector_poly(int n, const Angle& phi, std::uint64_t seed, const GeneratorConfig& config = {});

} // namespace sector

#endif
