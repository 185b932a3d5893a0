#include "oracles.hpp"
#include "support.hpp"

#include "sector/errors.hpp"
#include "sector/generator.hpp"
#include "sector/roots.hpp"
#include "sector/sector.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace sector;

namespace {

Polynomial P(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return make_polynomial(v);
}

template <class F>
void expect_error(ErrorKind kind, F&& f) {
    try {
        f();
        FAIL("expected " << to_string(kind));
    } catch (const Error& e) {
        CHECK(e.kind() == kind);
    }
}

constexpr double pi = std::numbers::pi;

bool near(const BigComplex& z, double re, double im, double tol = 1e-12) {
    return std::abs(z.re.to_double() - re) < tol && std::abs(z.im.to_double() - im) < tol;
}

double lower(const Interval& x) { return mpfr_get_d(x.lower(), MPFR_RNDD); }
double upper(const Interval& x) { return mpfr_get_d(x.upper(), MPFR_RNDU); }

} // namespace

TEST_SUITE("sector-lab") {

TEST_CASE("generator examples") {
    GeneratorConfig forced;
    forced.psi_turns = Rational(2, 3);
    forced.radius = Rational(1);
    forced.real_weight = 0;
    forced.acute_weight = 0;
    CHECK(generate_sector_poly(2, Angle(2, 3), 7, forced) == P({1, 1, 1}));

    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        GeneratorConfig once;
        once.max_attempts = 1;
        const Polynomial p = generate_sector_poly(static_cast<int>(2 + seed % 12), Angle(1, 2), seed, once);
        CHECK(is_nonneg(p).strict);
    }

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Polynomial p = generate_sector_poly(4, Angle(2, 5), seed);
        CHECK(p.degree() == 4);
        CHECK(is_nonneg(p).strict);
        const auto m = min_argument(p);
        CHECK(m.lower_turns >= Rational(2, 5));
    }
}

TEST_CASE("generator is deterministic and validates input") {
    CHECK(generate_sector_poly(9, Angle(1, 5), 123) == generate_sector_poly(9, Angle(1, 5), 123));
    CHECK_FALSE(generate_sector_poly(9, Angle(1, 5), 123) == generate_sector_poly(9, Angle(1, 5), 124));
    expect_error(ErrorKind::InvalidArgument, [] { generate_sector_poly(0, Angle(1, 5), 1); });
}

TEST_CASE("find_root_enclosures examples") {
    auto r = find_root_enclosures(P({1, 0, 1}));
    REQUIRE(r.roots.size() == 2);
    int found = 0;
    for (const auto& root : r.roots) {
        CHECK(root.radius <= Rational(1, 1000000000000));
        found += near(root.center, 0, 1) || near(root.center, 0, -1);
    }
    CHECK(found == 2);

    r = find_root_enclosures(P({1, 2, 3, 2, 1}));
    REQUIRE(r.roots.size() == 2);
    for (const auto& root : r.roots) {
        CHECK(root.multiplicity == 2);
        CHECK(std::abs(root.center.re.to_double() + 0.5) < 1e-12);
        CHECK(std::abs(std::abs(root.center.im.to_double()) - std::sqrt(3.0) / 2) < 1e-12);
    }

    r = find_root_enclosures(P({1, 1}));
    REQUIRE(r.roots.size() == 1);
    CHECK(r.roots[0].box().re.contains(Rational(-1)));
    CHECK(r.roots[0].radius <= Rational(1, 1000000000000));

    expect_error(ErrorKind::DegreeZero, [] { find_root_enclosures(P({3})); });
}

TEST_CASE("origin roots are exact") {
    const auto r = find_root_enclosures(P({0, 0, 1, 1}));
    int origin = 0;
    for (const auto& root : r.roots)
        if (root.is_exact_origin()) origin += root.multiplicity;
    CHECK(origin == 2);
}

TEST_CASE("sector_membership examples") {
    auto mem = sector_membership(find_root_enclosures(P({1, 0, 1})).roots, Sector{Angle(1, 3)});
    CHECK(mem.verdict == Verdict::Verified);
    for (const auto& m : mem.margins) {
        CHECK(lower(m.margin) > 0);
        CHECK(std::abs(lower(m.margin) - pi / 6) < 1e-10);
    }

    const Polynomial target = derivative(P({1, 2, 3, 2, 1}));
    mem = sector_membership(target, find_root_enclosures(target).roots, Sector{Angle(2, 3)});
    CHECK(mem.verdict == Verdict::Verified);
    int boundary = 0;
    for (const auto& m : mem.margins) {
        CHECK(mpfr_sgn(m.margin.lower()) >= 0);
        if (m.exact_boundary) ++boundary;
        else CHECK(std::abs(lower(m.margin) - pi / 3) < 1e-10);
    }
    CHECK(boundary == 2);

    mem = sector_membership(target, find_root_enclosures(target).roots, Sector{Angle(2, 3)}, BoundaryPolicy::Indeterminate);
    CHECK(mem.verdict == Verdict::Indeterminate);

    mem = sector_membership(find_root_enclosures(P({-1, 1})).roots, Sector{Angle(1, 4)});
    CHECK(mem.verdict == Verdict::Counterexample);
    REQUIRE(mem.margins.size() == 1);
    CHECK(upper(mem.margins[0].margin) < 0);
    CHECK(std::abs(upper(mem.margins[0].margin) + pi / 4) < 1e-10);
}

TEST_CASE("verify_theorem examples") {
    auto cert = verify_theorem(P({1, 1, 1}), Angle(2, 3));
    CHECK(cert.verdict == Verdict::Verified);
    CHECK(cert.target == P({1, 2}));

    cert = verify_theorem(P({1, 2, 3, 2, 1}), Angle(2, 3));
    CHECK(cert.verdict == Verdict::Verified);
    CHECK(cert.margins.size() == 3);

    expect_error(ErrorKind::NotNonNegative, [] { verify_theorem(P({1, -1}), Angle(1, 3)); });
    expect_error(ErrorKind::InvalidArgument, [] { verify_theorem(P({1, 1}), Angle(1, 3)); });
    expect_error(ErrorKind::HypothesisViolated, [] { verify_theorem(P({1, 1, 1}), Angle(3, 4)); });
}

TEST_CASE("verify_proof_steps examples") {
    auto r = verify_proof_steps(P({1, 4, 6, 4, 1}), Angle(3, 5));
    CHECK(r.all_pass());
    CHECK(r.g1_count_expected == 2);
    CHECK(r.g1_count_actual == 2);
    CHECK(r.g1g2_interlace);
    CHECK(r.h1h2_weak_interlace);
    CHECK(r.delta_p.m == 0);
    CHECK(r.delta_p.delta_turns() == Rational(12, 5));
    CHECK(r.delta_pprime.m == 0);
    CHECK(r.delta_pprime.delta_turns() == Rational(9, 5));

    r = verify_proof_steps(P({1, 1, 1}), Angle(1, 3));
    CHECK(r.all_pass());
    CHECK(r.g1_count_actual == 0);
    CHECK(r.delta_p.delta_turns() == Rational(2, 3));

    expect_error(ErrorKind::DegenerateAngle, [] { verify_proof_steps(P({1, 1, 1}), Angle(1, 2)); });
    expect_error(ErrorKind::DegenerateAngle, [] { verify_proof_steps(P({1, 4, 6, 4, 1}), Angle(1, 2)); });
    expect_error(ErrorKind::NotNonNegative, [] { verify_proof_steps(P({1, 0, 1}), Angle(1, 3)); });
    expect_error(ErrorKind::HypothesisViolated, [] { verify_proof_steps(P({1, 1, 1}), Angle(5, 7)); });
}

TEST_CASE("min_argument examples") {
    CHECK(std::abs(min_argument(P({1, 1, 1})).lower_turns.get_d() - 2.0 / 3) < 1e-10);
    CHECK(min_argument(P({1, 1, 1})).lower_turns <= Rational(2, 3));
    CHECK(std::abs(min_argument(P({1, 3, 3, 1})).lower_turns.get_d() - 1) < 1e-10);
    CHECK(std::abs(min_argument(P({1, 2, 2})).lower_turns.get_d() - 0.75) < 1e-10);
    CHECK(min_argument(P({1, 2, 2})).lower_turns <= Rational(3, 4));
}

TEST_CASE("generated polynomials round-trip through min_argument") {
    std::mt19937_64 rng(51);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const int n = static_cast<int>(support::uniform(rng, 2, 16));
        const Angle phi = support::random_angle_below(rng, Rational(9, 20) + Rational(1, 100));
        const Polynomial p = generate_sector_poly(n, phi, seed);
        CHECK(p.degree() == n);
        CHECK(is_nonneg(p).strict);
        CHECK(support::square_free(p));
        CHECK(min_argument(p).lower_turns >= phi.turns());
    }
}

TEST_CASE("theorem holds on generated polynomials") {
    std::mt19937_64 rng(52);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const int n = static_cast<int>(support::uniform(rng, 2, 16));
        const Angle phi = support::random_angle_below(rng, Rational(9, 20) + Rational(1, 100));
        const auto cert = verify_theorem(generate_sector_poly(n, phi, seed + 100), phi);
        CHECK(cert.verdict == Verdict::Verified);
        CHECK(cert.margins.size() == static_cast<std::size_t>(n - 1));
    }
}

TEST_CASE("Gauss-Lucas range on hand inputs") {
    const Angle half(1, 2);
    for (const Polynomial& p : {P({1, 1, 1}), P({1, 3, 3, 1}), P({1, 0, 1}), P({2, 0, 3, 0, 1}), P({1, 2, 2}),
                                P({1, 1}) * P({1, 1}) * P({1, 0, 1})})
        CHECK(verify_theorem(p, half).verdict == Verdict::Verified);
}

TEST_CASE("verdicts are scale invariant") {
    std::mt19937_64 rng(53);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const int n = static_cast<int>(support::uniform(rng, 2, 12));
        const Angle phi = support::random_angle_below(rng, Rational(9, 20) + Rational(1, 100));
        const Polynomial p = generate_sector_poly(n, phi, seed + 200);
        const Rational c = support::ratio(support::uniform(rng, 1, 1000), support::uniform(rng, 1, 1000));
        const Rational s = support::ratio(support::uniform(rng, 1, 50), support::uniform(rng, 1, 50));
        const Verdict base = verify_theorem(p, phi).verdict;
        CHECK(verify_theorem(p * c, phi).verdict == base);
        CHECK(verify_theorem(scale_variable(p, s), phi).verdict == base);
    }
}

TEST_CASE("enclosures contain the roots") {
    std::mt19937_64 rng(54);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const int n = static_cast<int>(support::uniform(rng, 1, 10));
        Polynomial p = generate_sector_poly(n, Angle(1, 60), seed + 300);
        if (seed % 4 == 0) p = p * P({1, 1, 1});
        const auto r = find_root_enclosures(p);
        int total = 0;
        for (const auto& root : r.roots) {
            total += root.multiplicity;
            CHECK(evaluate_complex(p, root.box()).contains_zero());
            const oracle::cld c(root.center.re.to_double(), root.center.im.to_double());
            const long double rad = std::max<long double>(1e-6L, root.radius.get_d());
            CHECK(oracle::disk_winding(p, c, rad) == root.multiplicity);
        }
        CHECK(total == p.degree());
    }
}

}
