#ifndef SECTOR_SECTOR_HPP
#define SECTOR_SECTOR_HPP

#include "sector/polynomial.hpp"
#include "sector/ray.hpp"
#include "sector/roots.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sector {

// S(φ) = {z : |arg z| >= φ}, arg in (-π, π]. The origin is always a member.
struct Sector {
    Angle phi;
    bool origin_member = true;
};

enum class Verdict { Verified, Counterexample, Indeterminate };
std::string_view to_string(Verdict v);

// What a root exactly on the boundary |arg z| = φ counts as.
enum class BoundaryPolicy { Verified, Indeterminate };

struct RootMargin {
    RootEnclosure root;
    Interval arg;     // |arg z| over the disk, radians
    Interval margin;  // min |arg z| - φ over the disk, radians
    bool origin = false;
    // |arg| = φ exactly, decided from a rational linear or quadratic factor.
    bool exact_boundary = false;
};

struct Membership {
    std::vector<RootMargin> margins;
    Verdict verdict = Verdict::Indeterminate;
};

Membership sector_membership(const std::vector<RootEnclosure>& roots, const Sector& sector,
                             BoundaryPolicy boundary = BoundaryPolicy::Verified);
// Same, additionally resolving margins that straddle zero by exact arithmetic
// on the rational factors of `target`.
Membership sector_membership(const Polynomial& target, const std::vector<RootEnclosure>& roots,
                             const Sector& sector, BoundaryPolicy boundary = BoundaryPolicy::Verified);

struct ProofStepReport {
    Angle theta{Rational(1)};
    int g1_count_expected = 0;
    int g1_count_actual = 0;
    int g2_count = 0;
    bool g1g2_interlace = false;
    bool rolle_interlace = false;
    bool h1h2_weak_interlace = false;
    ArgVariation delta_p;
    ArgVariation delta_pprime;

    bool all_pass() const;
};

struct SectorCertificate {
    Verdict verdict = Verdict::Indeterminate;
    Angle phi{Rational(1)};
    Polynomial target{Rational(1)};  // p′
    std::vector<RootMargin> margins;
    std::optional<ProofStepReport> proof_steps;
    int precision_bits = 0;
    std::vector<std::string> events;
};

struct VerifyOptions {
    RootFindOptions roots;
    BoundaryPolicy boundary = BoundaryPolicy::Verified;
};

// Certifies that the zeros of p′ lie in S(φ). Throws NotNonNegative,
// InvalidArgument (degree < 2), HypothesisViolated (zeros of p not certified in
// S(φ)). Running out of precision gives an indeterminate verdict with a logged
// event rather than an error.
SectorCertificate verify_theorem(const Polynomial& p, const Angle& phi, const VerifyOptions& options = {});

// Instantiates every intermediate claim of the proof at the ray angle θ.
// Throws NotNonNegative unless all coefficients are strictly positive,
// InvalidArgument for degree < 2, DegenerateAngle when nθ/π or (n-1)θ/π is an
// integer, HypothesisViolated when p has zeros in the upper sector, and
// ZeroOnRay when p or p′ vanishes on the ray.
ProofStepReport verify_proof_steps(const Polynomial& p, const Angle& theta, const PrecisionPolicy& policy = {});

struct MinArgument {
    Rational lower_turns;  // certified: min |arg| / π >= lower_turns
    Interval radians;      // enclosure of min |arg| over the root disks
    RootFindResult roots;
};

// Smallest |arg| over the nonzero roots of p. Throws CertificationFailed.
MinArgument min_argument(const Polynomial& p, const RootFindOptions& options = {});

} // namespace sector

#endif
