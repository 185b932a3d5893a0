#ifndef SECTOR_INTERLACE_HPP
#define SECTOR_INTERLACE_HPP

#include "sector/certified.hpp"
#include "sector/polynomial.hpp"
#include "sector/root_count.hpp"

#include <memory>
#include <vector>

namespace sector {

// One certified real zero: the exact point lo when lo == hi, otherwise a zero
// lying strictly inside (lo, hi) that can be narrowed through its source.
struct RealZero {
    Rational lo;
    Rational hi;
    std::shared_ptr<PositiveRootIsolator> source;  // null for exact points
    bool mirrored = false;                         // source isolates -x rather than x

    bool is_point() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    // Halves the width (no-op for points).
    void narrow();
};

// Strictly increasing sequence of certified real zeros of one polynomial.
struct ZeroList {
    std::vector<RealZero> zeros;

    std::size_t size() const { return zeros.size(); }
    bool empty() const { return zeros.empty(); }
};

ZeroList zero_list(std::vector<Rational> points);
// Zeros in [0, ∞): t = 0 when the constant coefficient is exactly zero, then
// the isolated positive zeros.
ZeroList nonnegative_zeros(const CertifiedPoly& cp, const PrecisionPolicy& policy = {});
// All real zeros of an exact polynomial (distinct zeros; multiplicities ignored).
ZeroList real_zeros(const Polynomial& p, const PrecisionPolicy& policy = {});

// Strict alternation of the merged zeros. Lists whose sizes differ by more
// than one cannot alternate and give false. Throws OverlappingEnclosures if a
// zero of one list cannot be separated from a zero of the other.
bool interlaces(ZeroList a, ZeroList b);

// False iff one list has three consecutive zeros such that neither of the two
// gaps they bound contains a zero of the other list (checked in both
// directions).
bool weakly_interlaces(ZeroList a, ZeroList b);

struct CombineParams {
    Rational a, b, c, d;

    // Throws InvalidArgument unless all four are strictly positive.
    CombineParams(Rational a_, Rational b_, Rational c_, Rational d_);
};

struct Combination {
    Polynomial sum;         // a·u + b·v
    Polynomial difference;  // c·u - d·v
};

Combination combine(const Polynomial& u, const Polynomial& v, const CombineParams& params);

} // namespace sector

#endif
