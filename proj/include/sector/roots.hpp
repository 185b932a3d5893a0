#ifndef SECTOR_ROOTS_HPP
#define SECTOR_ROOTS_HPP

#include "sector/big_float.hpp"
#include "sector/polynomial.hpp"

#include <vector>

namespace sector {

// Closed disk certified to contain exactly `multiplicity` zeros of the target
// polynomial (all equal: one distinct zero of that multiplicity).
struct RootEnclosure {
    BigComplex center;
    Rational radius;  // exact upper bound
    int multiplicity = 1;

    ComplexInterval box() const;
    bool is_exact_origin() const { return radius == 0 && center.re.is_zero() && center.im.is_zero(); }
};

struct RootFindOptions {
    Rational radius_target{1, 1000000000000};  // 1e-12
    PrecisionPolicy policy{64, 1024};
};

struct RootFindResult {
    std::vector<RootEnclosure> roots;
    int precision_used = 0;
};

// Square-free decomposition over Q, simultaneous (Aberth) iteration on each
// factor, then inclusion disks of radius d·|f(z_i) / Π_{j≠i}(z_i - z_j)|
// certified in interval arithmetic. Disks of distinct zeros are pairwise
// disjoint and no larger than radius_target. Throws CertificationFailed when
// that cannot be reached below the precision ceiling.
RootFindResult find_root_enclosures(const Polynomial& p, const RootFindOptions& options = {});

} // namespace sector

#endif
