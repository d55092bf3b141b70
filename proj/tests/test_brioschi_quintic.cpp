#include <doctest.h>

#include <cmath>

#include "kq/brioschi_quintic.hpp"
#include "kq/errors.hpp"
#include "kq/instances.hpp"
#include "kq/perm_group.hpp"
#include "oracle.hpp"

using kq::Complex;
using kq::RootTuple;

namespace {

double rel(Complex got, Complex want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace

TEST_CASE("phi") {
    SUBCASE("equal family values") {
        const Complex v{2.0, -1.0};
        CHECK(kq::phi(kq::FFamily{v, {v, v, v, v, v}}) == Complex{0.0, 0.0});
    }
    SUBCASE("literal product") {
        const kq::FFamily fam{1.0, {2.0, 3.0, 5.0, 7.0, 11.0}};
        // (1 - 2)(3 - 11)(5 - 7)
        CHECK(kq::phi(fam) == Complex{-16.0, 0.0});
    }
    SUBCASE("homogeneous of degree 15") {
        const RootTuple rt = kq::random_instance(12, 3);
        RootTuple doubled = rt;
        for (auto& z : doubled) {
            z *= 2.0;
        }
        const Complex base = kq::phi(kq::f_family(rt));
        CHECK(rel(kq::phi(kq::f_family(doubled)), std::pow(2.0, 15) * base) < 1e-9);
    }
    SUBCASE("high-precision re-evaluation") {
        for (int index = 0; index < 10; ++index) {
            const RootTuple rt = kq::random_instance(77, index);
            const auto hp = kq::oracle::family(rt);
            const auto want = kq::oracle::lower((hp[0] - hp[1]) * (hp[2] - hp[5]) * (hp[3] - hp[4]));
            CHECK(rel(kq::phi(kq::f_family(rt)), want) < 1e-10);
        }
    }
}

TEST_CASE("sign normalisation of the family") {
    SUBCASE("the literal family gives 30 values under A5") {
        const RootTuple rt = kq::random_instance(1, 0);
        CHECK_THROWS_AS(kq::phi_values(rt, kq::kDefaultDedupTol, kq::kNaturalSigns),
                        kq::VerificationFailure);
    }
    SUBCASE("search recovers kPhiSigns first, with eight valid choices") {
        for (int index = 0; index < 5; ++index) {
            const auto found = kq::find_phi_sign_normalizations(kq::random_instance(30, index));
            REQUIRE(found.size() == 8);
            CHECK(found.front() == kq::kPhiSigns);
        }
    }
    SUBCASE("apply_signs") {
        const kq::FFamily fam{1.0, {2.0, 3.0, 4.0, 5.0, 6.0}};
        const auto flipped = kq::apply_signs(fam, kq::kPhiSigns);
        CHECK(flipped.fk[3] == Complex{-5.0, 0.0});
        CHECK(flipped.fk[2] == Complex{4.0, 0.0});
    }
}

TEST_CASE("phi_values") {
    for (int index = 0; index < 20; ++index) {
        const auto pf = kq::phi_values(kq::random_instance(1, index));
        CAPTURE(index);
        CHECK(pf.values.size() == 5);
        CHECK(pf.s5_value_count == 10);
    }
    const Complex c{0.5, 0.5};
    CHECK_THROWS_AS(kq::phi_values(RootTuple{c, c, c, c, c}), kq::Degenerate);
}

TEST_CASE("phi_quintic") {
    SUBCASE("principal form on seeded instances") {
        for (int index = 0; index < 20; ++index) {
            const auto pf = kq::phi_values(kq::random_instance(1, index));
            const auto pq = kq::phi_quintic(pf);
            CHECK(pq.suppressed.c4_mag < 1e-7);
            CHECK(pq.suppressed.c2_mag < 1e-7);

            // z^5 + p z^3 + q z + r has the five values as roots
            const auto roots = kq::find_roots(kq::MonicPoly({0.0, pq.p, 0.0, pq.q, pq.r}));
            const auto match = kq::optimal_assignment(roots, pf.values);
            CHECK(match.max_distance / kq::value_scale(pf.values) < 1e-6);
        }
    }
    SUBCASE("values summing to zero have no z^4 term") {
        kq::PhiFamily pf;
        pf.values = {Complex{1.0, 0.0}, Complex{-1.0, 0.0}, Complex{0.0, 2.0}, Complex{0.0, -2.0},
                     Complex{0.0, 0.0}};
        const auto pq = kq::phi_quintic(pf);
        CHECK(pq.suppressed.c4_mag < 1e-15);
    }
    SUBCASE("non-principal values are rejected") {
        kq::PhiFamily pf;
        pf.values = {1.0, 2.0, 3.0, 4.0, 5.0};
        CHECK_THROWS_AS(kq::phi_quintic(pf), kq::VerificationFailure);
        pf.values.pop_back();
        CHECK_THROWS_AS(kq::phi_quintic(pf), kq::InvalidInput);
    }
}

TEST_CASE("power_sum_check and the Newton bridge") {
    int control = 0;
    const int total = 40;
    for (int index = 0; index < total; ++index) {
        const auto pf = kq::phi_values(kq::random_instance(1, index));
        const auto ps = kq::power_sum_check(pf);
        CHECK(ps.p1 < 1e-7);
        CHECK(ps.p3 < 1e-7);
        control += ps.p2_magnitude > 1e-3 ? 1 : 0;
        CHECK(kq::newton_bridge_gap(pf) < 1e-10);
    }
    CHECK(control >= 0.95 * total);

    kq::PhiFamily zeros;
    zeros.values.assign(5, Complex{0.0, 0.0});
    const auto ps = kq::power_sum_check(zeros);
    CHECK(ps.p1 == 0.0);
    CHECK(ps.p3 == 0.0);
    CHECK(ps.p2_magnitude == 0.0);
}

TEST_CASE("invariance_check") {
    const RootTuple rt = kq::random_instance(5, 2);
    CHECK(kq::coefficient_deviation(rt, kq::Perm5()) == 0.0);
    CHECK(kq::invariance_check(rt) < 1e-7);
    // an odd relabelling gives the other five values
    CHECK(kq::coefficient_deviation(rt, kq::Perm5({1, 0, 2, 3, 4})) > 1e-3);

    const Complex c{0.1, 0.0};
    CHECK_THROWS_AS(kq::invariance_check(RootTuple{c, c, c, c, c}), kq::Degenerate);
}
