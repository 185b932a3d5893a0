#include "oracles.hpp"
#include "support.hpp"

#include "sector/errors.hpp"
#include "sector/root_count.hpp"

#include <doctest.h>

#include <cmath>

using namespace sector;

namespace {

CertifiedPoly Q(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return CertifiedPoly::from_rationals(v);
}

constexpr Sign P = Sign::Positive, N = Sign::Negative, Z = Sign::Zero;

} // namespace

TEST_SUITE("root-count") {

TEST_CASE("sign_variations") {
    CHECK(sign_variations(SignSequence{P, N, P}) == 2);
    CHECK(sign_variations(SignSequence{P, Z, P}) == 0);
    CHECK(sign_variations(SignSequence{P, Z, N}) == 1);
    CHECK(sign_variations(SignSequence{}) == 0);
}

TEST_CASE("descartes_bound examples") {
    const Polynomial quartic{Rational(1), Rational(4), Rational(6), Rational(4), Rational(1)};
    CHECK(descartes_bound(ray_components(quartic, Angle(3, 5)).imag) == 2);
    const Polynomial tri{Rational(1), Rational(1), Rational(1)};
    CHECK(descartes_bound(ray_components(tri, Angle(1, 2)).imag) == 0);
    CHECK(descartes_bound(Q({1, 0, -1})) == 1);
}

TEST_CASE("sturm_count_positive examples") {
    CHECK(sturm_count_positive(Q({2, -3, 1})) == 2);
    CHECK(sturm_count_positive(Q({1, 0, 1})) == 0);
    CHECK(sturm_count_positive(Q({0, 4, 0, -4})) == 1);
}

TEST_CASE("sturm chain shape") {
    const SturmChain c = sturm_chain(Q({2, -3, 1}));
    REQUIRE(c.exact());
    CHECK(c.exact_elements[0].size() == 3);
    CHECK(c.exact_elements[1].size() == 2);
    CHECK(c.exact_elements.back().size() == 1);
}

TEST_CASE("non-square-free input is rejected") {
    try {
        sturm_count_positive(Q({1, -2, 1}));
        FAIL("expected DegenerateChain");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegenerateChain);
    }
}

TEST_CASE("isolate_positive_zeros examples") {
    auto iv = isolate_positive_zeros(Q({2, -3, 1}));
    REQUIRE(iv.size() == 2);
    CHECK(iv[0].contains(Rational(1)));
    CHECK(iv[1].contains(Rational(2)));
    CHECK(iv[0].hi <= iv[1].lo);

    iv = isolate_positive_zeros(Q({0, 4, 0, -4}));
    REQUIRE(iv.size() == 1);
    CHECK(iv[0].contains(Rational(1)));

    CHECK(isolate_positive_zeros(Q({1, 0, 1})).empty());
}

TEST_CASE("refine_interval examples") {
    auto r = refine_interval(Q({2, -3, 1}), {Rational(1, 2), Rational(3, 2)}, Rational(1, 100));
    CHECK(r.width() <= Rational(1, 100));
    CHECK(r.contains(Rational(1)));

    r = refine_interval(Q({0, 4, 0, -4}), {Rational(1, 2), Rational(2)}, Rational(1, 1000));
    CHECK(r.width() <= Rational(1, 1000));
    CHECK(r.contains(Rational(1)));

    r = refine_interval(Q({-2, 0, 1}), {Rational(1), Rational(2)}, Rational(1, 1000000));
    CHECK(r.width() <= Rational(1, 1000000));
    const double mid = Rational((r.lo + r.hi) / 2).get_d();
    CHECK(std::abs(mid - static_cast<double>(oracle::newton_sqrt(2))) < 1e-6);
    CHECK(std::abs(mid - 1.41421356) < 1e-6);
}

TEST_CASE("irrational coefficients: isolation of the imaginary ray component") {
    const Polynomial quartic{Rational(1), Rational(4), Rational(6), Rational(4), Rational(1)};
    const auto g = ray_components(quartic, Angle(3, 5));
    const auto iv = isolate_positive_zeros(g.imag);
    CHECK(iv.size() == 2);
    CHECK(sturm_count_positive(g.imag) == 2);
}

TEST_CASE("Descartes soundness") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        const Polynomial p = support::random_polynomial(rng, static_cast<int>(support::uniform(rng, 1, 16)));
        if (!support::square_free(p)) continue;
        CertifiedPoly cp = CertifiedPoly::from_rational(p);
        if (trial % 2 == 1) cp = ray_components(p, support::random_angle(rng)).imag;
        if (cp.is_zero()) continue;
        const int d = descartes_bound(cp);
        int s = 0;
        try {
            s = sturm_count_positive(cp);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::DegenerateChain);
            continue;
        }
        CHECK(s <= d);
        CHECK((d - s) % 2 == 0);
    }
}

TEST_CASE("isolation agrees with the count and the oracle") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial p = support::random_polynomial(rng, static_cast<int>(support::uniform(rng, 1, 16)));
        if (!support::square_free(p) || p.coeff(0) == 0) continue;
        const CertifiedPoly cp = CertifiedPoly::from_rational(p);
        PositiveRootIsolator iso(cp);
        const auto ivs = iso.isolate();
        REQUIRE(static_cast<int>(ivs.size()) == iso.count());
        int total = 0;
        for (std::size_t i = 0; i < ivs.size(); ++i) {
            total += iso.count_in(ivs[i].lo, ivs[i].hi);
            if (i > 0) CHECK(ivs[i - 1].hi <= ivs[i].lo);
        }
        CHECK(total == iso.count());
        CHECK(iso.count() == oracle::positive_root_count(p));
    }
}

TEST_CASE("refinement nests") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const Polynomial p = support::random_polynomial(rng, static_cast<int>(support::uniform(rng, 2, 12)));
        if (!support::square_free(p)) continue;
        const CertifiedPoly cp = CertifiedPoly::from_rational(p);
        for (const auto& iv : isolate_positive_zeros(cp)) {
            const auto a = refine_interval(cp, iv, Rational(1, 1000));
            const auto b = refine_interval(cp, a, Rational(1, 2000));
            CHECK(iv.lo <= a.lo);
            CHECK(a.hi <= iv.hi);
            CHECK(a.lo <= b.lo);
            CHECK(b.hi <= a.hi);
            CHECK(b.width() <= Rational(1, 2000));
        }
    }
}

}
