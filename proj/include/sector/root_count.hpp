#ifndef SECTOR_ROOT_COUNT_HPP
#define SECTOR_ROOT_COUNT_HPP

#include "sector/certified.hpp"
#include "sector/interval.hpp"
#include "sector/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace sector {

enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };
using SignSequence = std::vector<Sign>;

// Sign changes after deleting zeros.
int sign_variations(std::span<const Sign> signs);

// Coefficient signs of cp, refining precision until each is resolved.
// Throws SignIndeterminate past the ceiling.
SignSequence coefficient_signs(const CertifiedPoly& cp, const PrecisionPolicy& policy = {});

// Descartes' rule of signs: sign variations of the coefficient sequence.
int descartes_bound(const CertifiedPoly& cp, const PrecisionPolicy& policy = {});

// Rational endpoints; the isolated zero lies strictly inside (lo, hi).
struct IsolatingInterval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo < x && x < hi; }
};

// Signed remainder sequence p, p', -rem(p, p'), ... of the input with its
// t = 0 root divided out. Coefficients are interval enclosures, or exact
// rationals when the input has rational coefficients.
struct SturmChain {
    std::vector<std::vector<Interval>> elements;
    std::vector<std::vector<Rational>> exact_elements;  // empty unless exact
    int precision = 0;

    bool exact() const { return !exact_elements.empty(); }
    std::size_t size() const { return exact() ? exact_elements.size() : elements.size(); }
};

// Counts and isolates the zeros of a polynomial in (0, ∞) with a Sturm chain
// that is rebuilt at doubled precision whenever a sign cannot be resolved.
class PositiveRootIsolator {
public:
    // Throws DegenerateChain (zero or non-square-free input) or SignIndeterminate.
    explicit PositiveRootIsolator(const CertifiedPoly& cp, PrecisionPolicy policy = {});

    int count() const { return v_zero_ - v_inf_; }
    const SturmChain& chain() const { return chain_; }
    int precision_used() const { return chain_.precision; }
    // Certified strict upper bound on the positive zeros.
    const Rational& root_bound() const { return bound_; }

    // Sorted, disjoint, one zero each; size() == count().
    std::vector<IsolatingInterval> isolate();
    // Bisects iv (which must isolate exactly one zero) down to width <= width.
    IsolatingInterval refine(const IsolatingInterval& iv, const Rational& width);
    // Number of zeros in (lo, hi].
    int count_in(const Rational& lo, const Rational& hi);

private:
    void build(int bits);
    void escalate();
    std::optional<int> variations_at(const Rational& x, bool require_nonzero) const;
    int variations(const Rational& x);
    // Split point inside (lo, hi) where the input does not vanish and every
    // chain sign is resolved: the midpoint, or a nearby perturbation of it.
    std::pair<Rational, int> split_point(const Rational& lo, const Rational& hi);

    CertifiedPoly source_;
    PrecisionPolicy policy_;
    SturmChain chain_;
    Rational bound_;
    int v_zero_ = 0;
    int v_inf_ = 0;
};

// Sign of cp at x, refining precision as needed. Throws SignIndeterminate if
// the sign is still unresolved at the ceiling (for instance at an exact zero of
// an irrational-coefficient polynomial).
int sign_at(const CertifiedPoly& cp, const Rational& x, const PrecisionPolicy& policy = {});

SturmChain sturm_chain(const CertifiedPoly& cp, const PrecisionPolicy& policy = {});
int sturm_count_positive(const CertifiedPoly& cp, const PrecisionPolicy& policy = {});
std::vector<IsolatingInterval> isolate_positive_zeros(const CertifiedPoly& cp, const PrecisionPolicy& policy = {});
IsolatingInterval refine_interval(const CertifiedPoly& cp, const IsolatingInterval& iv, const Rational& width,
                                  const PrecisionPolicy& policy = {});

} // namespace sector

#endif
