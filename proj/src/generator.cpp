#include "sector/generator.hpp"

#include "sector/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <utility>

namespace sector {

namespace {

enum class Shape { Real, Obtuse, Acute };

Rational quantize(double x, long den) {
    Rational q(static_cast<long>(std::lround(x * den)), den);
    q.canonicalize();
    return q;
}

class FactorSampler {
public:
    FactorSampler(const Angle& phi, const GeneratorConfig& config, std::mt19937_64& rng)
        : phi_(phi), config_(config), rng_(rng), cos_phi_(cos_pi(phi.turns(), 128).lower_rational()) {}

    Shape shape(int remaining) {
        if (remaining == 1 || phi_.turns() == 1) return Shape::Real;
        const bool acute_ok = phi_.turns() < Rational(1, 2);
        if (config_.psi_turns) return *config_.psi_turns < Rational(1, 2) ? Shape::Acute : Shape::Obtuse;
        std::discrete_distribution<int> pick(
            {config_.real_weight, config_.obtuse_weight, acute_ok ? config_.acute_weight : 0.0});
        return static_cast<Shape>(pick(rng_));
    }

    Rational radius() {
        if (config_.radius) return *config_.radius;
        std::uniform_real_distribution<double> u(std::log(0.25), std::log(4.0));
        return quantize(std::exp(u(rng_)), 16);
    }

    // c = cos ψ with -1 < c < cos φ.
    std::optional<Rational> cosine(Shape shape) {
        if (config_.psi_turns) {
            if (auto exact = rational_cos_pi(*config_.psi_turns)) return *exact;
            return quantize(std::cos(config_.psi_turns->get_d() * std::numbers::pi), 1024);
        }
        const double lo = shape == Shape::Acute ? phi_.float_hint() : std::max(phi_.float_hint(), std::numbers::pi / 2);
        const double hi = shape == Shape::Acute ? std::numbers::pi / 2 : std::numbers::pi;
        std::uniform_real_distribution<double> u(lo, hi);
        const Rational c = quantize(std::cos(u(rng_)), 1024);
        if (c <= -1 || c >= cos_phi_) return std::nullopt;
        return c;
    }

private:
    const Angle& phi_;
    const GeneratorConfig& config_;
    std::mt19937_64& rng_;
    Rational cos_phi_;
};

} // namespace

Polynomial generate_sector_poly(int n, const Angle& phi, std::uint64_t seed, const GeneratorConfig& config) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "degree must be at least 1");
    std::mt19937_64 rng(seed);
    FactorSampler sampler(phi, config, rng);
    const bool forced = config.psi_turns.has_value() && config.radius.has_value();

    for (int attempt = 0; attempt < config.max_attempts; ++attempt) {
        Polynomial p{Rational(1)};
        std::set<std::pair<Rational, Rational>> used;  // (r, c); c = -1 marks a real factor
        int draws = 0;
        for (int remaining = n; remaining > 0 && draws < 64 * n; ++draws) {
            const Shape shape = sampler.shape(remaining);
            const Rational r = sampler.radius();
            if (shape == Shape::Real) {
                if (!used.emplace(r, Rational(-1)).second && !forced) continue;
                p = p * Polynomial{r, Rational(1)};
                remaining -= 1;
                continue;
            }
            const auto c = sampler.cosine(shape);
            if (!c) continue;
            if (!used.emplace(r, *c).second && !forced) continue;
            p = p * Polynomial{r * r, -2 * r * *c, Rational(1)};
            remaining -= 2;
        }
        if (p.degree() == n && is_nonneg(p).strict) return p;
    }
    throw Error(ErrorKind::GenerationExhausted,
                "no positive-coefficient polynomial of degree " + std::to_string(n) + " in S(" + phi.to_string() +
                    ") after " + std::to_string(config.max_attempts) + " attempts");
}

} // namespace sector
