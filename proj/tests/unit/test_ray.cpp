#include "oracles.hpp"
#include "support.hpp"

#include "sector/errors.hpp"
#include "sector/generator.hpp"
#include "sector/interlace.hpp"
#include "sector/ray.hpp"
#include "sector/roots.hpp"
#include "sector/sector.hpp"

#include <doctest.h>

#include <cmath>

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

GeneratorConfig mixed() { return {}; }

} // namespace

TEST_SUITE("ray-analysis") {

TEST_CASE("argument_variation examples") {
    auto v = argument_variation(P({1, 1, 1}), Angle(1, 2));
    CHECK(v.m == 0);
    CHECK(v.delta_turns() == Rational(1));

    v = argument_variation(P({1, 1, 1}), Angle(9, 10));
    CHECK(v.m == 1);
    CHECK(v.delta_turns() == Rational(-1, 5));

    v = argument_variation(P({1, 1}), Angle(1, 2));
    CHECK(v.m == 0);
    CHECK(v.delta_turns() == Rational(1, 2));
}

TEST_CASE("argument_variation agrees with the winding oracle on the examples") {
    CHECK(std::abs(oracle::winding_over_pi(P({1, 1, 1}), 0.5L) - 1) < 1e-6L);
    CHECK(std::abs(oracle::winding_over_pi(P({1, 1, 1}), 0.9L) + 0.2L) < 1e-6L);
    CHECK(std::abs(oracle::winding_over_pi(P({1, 4, 6, 4, 1}), 0.6L) - 2.4L) < 1e-6L);
}

TEST_CASE("zeros_in_upper_sector examples") {
    CHECK(zeros_in_upper_sector(P({1, 1, 1}), Angle(1, 2)) == 0);
    CHECK(zeros_in_upper_sector(P({1, 1, 1}), Angle(9, 10)) == 1);
    CHECK(zeros_in_upper_sector(P({1, 3, 3, 1}), Angle(1, 2)) == 0);
}

TEST_CASE("expected_imag_zero_count examples") {
    CHECK(expected_imag_zero_count(4, Angle(3, 5)) == 2);
    expect_error(ErrorKind::DegenerateAngle, [] { expected_imag_zero_count(5, Angle(2, 5)); });
    expect_error(ErrorKind::DegenerateAngle, [] { expected_imag_zero_count(2, Angle(1, 2)); });
}

TEST_CASE("trace_quadrants examples") {
    auto tr = trace_quadrants(P({1, 1, 1}), Angle(1, 2));
    REQUIRE(tr.events.size() == 1);
    CHECK(tr.events[0].kind == Crossing::RealZero);
    CHECK(tr.events[0].where.contains(Rational(1)));
    CHECK(tr.events[0].co_sign == 1);
    CHECK(tr.delta_turns() == Rational(1));

    tr = trace_quadrants(P({1, 4, 6, 4, 1}), Angle(3, 5));
    int imag_zeros = 0;
    for (const auto& e : tr.events) imag_zeros += e.kind == Crossing::ImagZero;
    CHECK(imag_zeros == 2);
    CHECK(tr.delta_turns() == Rational(12, 5));

    tr = trace_quadrants(P({1, 1}), Angle(1, 4));
    CHECK(tr.events.empty());
    CHECK(tr.delta_turns() == Rational(1, 4));
}

TEST_CASE("precondition errors") {
    expect_error(ErrorKind::NotNonNegative, [] { argument_variation(P({1, -1}), Angle(1, 2)); });
    expect_error(ErrorKind::NotNonNegative, [] { argument_variation(P({0, 1, 1}), Angle(1, 2)); });
    expect_error(ErrorKind::ZeroOnRay, [] { argument_variation(P({1, 1}), Angle(1, 1)); });
    expect_error(ErrorKind::ZeroOnRay, [] { argument_variation(P({1, 1, 1}), Angle(2, 3)); });
}

TEST_CASE("m matches certified root enclosures") {
    std::mt19937_64 rng(31);
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const int n = static_cast<int>(support::uniform(rng, 2, 12));
        const Polynomial p = generate_sector_poly(n, Angle(1, 60), seed, mixed());
        const Angle theta = support::random_angle(rng);
        int m = 0;
        try {
            m = argument_variation(p, theta).m;
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::ZeroOnRay);
            continue;
        }
        const int expected = support::certified_upper_count(p, theta);
        if (expected < 0) continue;
        CHECK(m == expected);
        CHECK(m == oracle::roots_in_sector(p, static_cast<long double>(theta.turns().get_d())));
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("delta agrees with the winding oracle") {
    std::mt19937_64 rng(32);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const int n = static_cast<int>(support::uniform(rng, 2, 8));
        const Polynomial p = generate_sector_poly(n, Angle(1, 30), seed + 1000);
        const Angle theta = support::random_angle(rng, 24);
        ArgVariation v;
        try {
            v = argument_variation(p, theta);
        } catch (const Error&) {
            continue;
        }
        const long double w = oracle::winding_over_pi(p, static_cast<long double>(theta.turns().get_d()));
        CHECK(std::abs(w - static_cast<long double>(v.delta_turns().get_d())) < 1e-6L);
    }
}

TEST_CASE("Descartes count is exact without zeros in the upper sector") {
    std::mt19937_64 rng(33);
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const int n = static_cast<int>(support::uniform(rng, 2, 14));
        const Angle phi = support::random_angle_below(rng, Rational(9, 10), 40);
        const Polynomial p = generate_sector_poly(n, phi, seed);
        const Angle theta = support::random_angle_below(rng, phi.turns());
        if (Rational(theta.turns() * n).get_den() == 1) continue;
        REQUIRE(zeros_in_upper_sector(p, theta) == 0);
        const auto g = ray_components(p, theta);
        const int expected = expected_imag_zero_count(n, theta);
        CHECK(sturm_count_positive(g.imag) == expected);
        CHECK(descartes_bound(g.imag) == expected);
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("g1 and g2 interlace without zeros in the upper sector") {
    std::mt19937_64 rng(34);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const int n = static_cast<int>(support::uniform(rng, 2, 14));
        const Angle phi = support::random_angle_below(rng, Rational(9, 10), 40);
        const Polynomial p = generate_sector_poly(n, phi, seed + 500);
        const Angle theta = support::random_angle_below(rng, phi.turns());
        if (Rational(theta.turns() * n).get_den() == 1) continue;
        const auto g = ray_components(p, theta);
        const ZeroList z1 = nonnegative_zeros(g.imag);
        const ZeroList z2 = nonnegative_zeros(g.real);
        CHECK((z2.size() == z1.size() || z2.size() + 1 == z1.size()));
        CHECK(interlaces(z1, z2));
    }
}

TEST_CASE("the derivative has no zeros in the upper sector") {
    std::mt19937_64 rng(35);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const int n = static_cast<int>(support::uniform(rng, 2, 14));
        const Angle phi = support::random_angle_below(rng, Rational(9, 10), 40);
        const Polynomial p = generate_sector_poly(n, phi, seed + 700);
        const Angle theta = support::random_angle_below(rng, phi.turns());
        const auto v = argument_variation(derivative(p), theta);
        CHECK(v.m == 0);
        CHECK(v.delta_turns() == theta.turns() * (n - 1));
    }
}

TEST_CASE("upper zeros and negative zeros account for the degree near pi") {
    const Angle near_pi(Rational(999999, 1000000));
    std::mt19937_64 rng(36);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const int n = static_cast<int>(support::uniform(rng, 1, 14));
        const Polynomial p = generate_sector_poly(n, Angle(1, 60), seed + 900);
        std::vector<Rational> mirrored(p.coeffs());
        for (std::size_t k = 1; k < mirrored.size(); k += 2) mirrored[k] = -mirrored[k];
        const int negative = sturm_count_positive(CertifiedPoly::from_rationals(mirrored));
        const int m = zeros_in_upper_sector(p, near_pi);
        CHECK(2 * m + negative == n);
        CHECK(m == oracle::roots_in_sector(p, 0.999999L));
    }
}

}
