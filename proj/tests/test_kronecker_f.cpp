#include <doctest.h>

#include <cmath>
#include <numbers>

#include "kq/errors.hpp"
#include "kq/instances.hpp"
#include "kq/kronecker_f.hpp"
#include "kq/perm_group.hpp"
#include "oracle.hpp"

using kq::Complex;
using kq::RootTuple;

namespace {

RootTuple fifth_roots_of_unity() {
    RootTuple rt{};
    for (int m = 0; m < 5; ++m) {
        rt[m] = std::polar(1.0, 2.0 * std::numbers::pi * m / 5.0);
    }
    return rt;
}

RootTuple scaled(const RootTuple& rt, Complex lambda) {
    RootTuple out = rt;
    for (auto& z : out) {
        z *= lambda;
    }
    return out;
}

double rel(Complex got, Complex want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace

TEST_CASE("eval_f on special tuples") {
    SUBCASE("equal roots cancel exactly") {
        for (Complex c : {Complex{1.0, 0.0}, Complex{0.3, -1.7}, Complex{-2.0, 0.5}}) {
            const RootTuple rt{c, c, c, c, c};
            CHECK(kq::eval_f(rt) == Complex{0.0, 0.0});
        }
    }
    SUBCASE("zeros") { CHECK(kq::eval_f(RootTuple{}) == Complex{0.0, 0.0}); }
    SUBCASE("fifth roots of unity") {
        // Every monomial is w^(5m + 6n) = w^n, so f = 5 sum_n sin(2n pi/5) w^n = 12.5 i.
        const RootTuple rt = fifth_roots_of_unity();
        const Complex hp = kq::oracle::lower(kq::oracle::f(kq::oracle::lift(rt)));
        CHECK(std::abs(hp - Complex{0.0, 12.5}) < 1e-13);
        CHECK(std::abs(kq::eval_f(rt) - Complex{0.0, 12.5}) < 1e-13);
    }
}

TEST_CASE("eval_f matches the 20-term high-precision oracle") {
    for (int index = 0; index < 25; ++index) {
        const RootTuple rt = kq::random_instance(314, index);
        const Complex hp = kq::oracle::lower(kq::oracle::f(kq::oracle::lift(rt)));
        CHECK(rel(kq::eval_f(rt), hp) < 1e-12);
    }
}

TEST_CASE("eval_f is homogeneous of degree 5") {
    const RootTuple rt = kq::random_instance(11, 0);
    const Complex base = kq::eval_f(rt);
    CHECK(rel(kq::eval_f(scaled(rt, 2.0)), 32.0 * base) < 1e-10);
    for (Complex lambda : {Complex{0.3, 1.1}, Complex{-1.5, 0.2}, Complex{0.0, 1.0}}) {
        CHECK(rel(kq::eval_f(scaled(rt, lambda)), std::pow(lambda, 5) * base) < 1e-10);
    }
}

TEST_CASE("f_family") {
    SUBCASE("argument orders") {
        CHECK(kq::family_argument_order(0) == std::array<int, 5>{0, 3, 4, 1, 2});
        CHECK(kq::family_argument_order(3) == std::array<int, 5>{3, 1, 2, 4, 0});
        const RootTuple rt = kq::random_instance(2, 5);
        const RootTuple reordered{rt[0], rt[3], rt[4], rt[1], rt[2]};
        CHECK(kq::f_family(rt).fk[0] == kq::eval_f(reordered));
    }
    SUBCASE("equal roots give an all-zero family") {
        const Complex c{0.7, 0.2};
        for (const Complex& v : kq::f_family(RootTuple{c, c, c, c, c}).values()) {
            CHECK(v == Complex{0.0, 0.0});
        }
    }
    SUBCASE("high-precision re-evaluation") {
        for (int index = 0; index < 10; ++index) {
            const RootTuple rt = kq::random_instance(99, index);
            const auto fam = kq::f_family(rt).values();
            const auto hp = kq::oracle::family(rt);
            for (int k = 0; k < 6; ++k) {
                CHECK(rel(fam[k], kq::oracle::lower(hp[k])) < 1e-11);
            }
        }
    }
}

TEST_CASE("a5_orbit on generic tuples") {
    for (int index = 0; index < 30; ++index) {
        const RootTuple rt = kq::random_instance(1, index);
        const kq::OrbitReport orbit = kq::a5_orbit(rt);
        CAPTURE(index);
        CHECK_FALSE(orbit.degenerate);
        CHECK(orbit.values.size() == 12);
        CHECK(orbit.pair_map.size() == 6);
        CHECK(orbit.well_formed());

        const double scale = kq::value_scale(orbit.values);
        for (const Complex& v : orbit.values) {
            bool negated = false;
            for (const Complex& w : orbit.values) {
                negated = negated || std::abs(v + w) <= 1e-7 * scale;
            }
            CHECK(negated);
        }

        // every label is used by exactly one value
        std::array<int, 12> used{};
        for (const auto& label : orbit.family_match) {
            used[2 * label.member + (label.sign < 0 ? 1 : 0)]++;
        }
        for (int u : used) {
            CHECK(u == 1);
        }
    }
}

TEST_CASE("every even relabelling lands on some +-f_k") {
    for (int index = 0; index < 10; ++index) {
        const RootTuple rt = kq::random_instance(8, index);
        const auto fam = kq::f_family(rt).values();
        const auto values = kq::f_over(rt, kq::all_a5());
        double scale = kq::value_scale(values);
        for (const Complex& v : values) {
            double best = INFINITY;
            for (const Complex& t : fam) {
                best = std::min({best, std::abs(v - t), std::abs(v + t)});
            }
            CHECK(best / scale < 1e-7);
        }
    }
}

TEST_CASE("odd relabellings give the conjugate orbit; the union is S5-stable") {
    const kq::Perm5 odd({1, 0, 2, 3, 4});
    for (int index = 0; index < 10; ++index) {
        const RootTuple rt = kq::random_instance(21, index);
        const auto orbit = kq::a5_orbit(rt).values;
        const auto conjugate = kq::a5_orbit(kq::apply(odd, rt)).values;
        REQUIRE(conjugate.size() == 12);

        std::vector<Complex> both(orbit);
        both.insert(both.end(), conjugate.begin(), conjugate.end());
        const double scale = kq::value_scale(both);

        int shared = 0;
        for (const Complex& v : conjugate) {
            for (const Complex& w : orbit) {
                shared += std::abs(v - w) <= 1e-7 * scale ? 1 : 0;
            }
        }
        CHECK(shared == 0);

        for (const Complex& v : kq::f_over(rt, kq::all_s5())) {
            double best = INFINITY;
            for (const Complex& w : both) {
                best = std::min(best, std::abs(v - w));
            }
            CHECK(best / scale < 1e-7);
        }
    }
}

TEST_CASE("a5_orbit on degenerate tuples") {
    const Complex c{0.4, -0.9};
    const kq::OrbitReport orbit = kq::a5_orbit(RootTuple{c, c, c, c, c});
    CHECK(orbit.degenerate);
    REQUIRE(orbit.values.size() == 1);
    CHECK(orbit.values[0] == Complex{0.0, 0.0});
    CHECK_FALSE(orbit.well_formed());
}

TEST_CASE("a5_orbit reports ambiguous deduplication") {
    // a tolerance so loose that clusters merge into neighbours' 10x guard band
    const RootTuple rt = kq::random_instance(1, 0);
    CHECK_THROWS_AS(kq::a5_orbit(rt, 0.05), kq::NumericFailure);
}

TEST_CASE("relation_rank") {
    SUBCASE("fifty seeded families have rank 3") {
        std::vector<kq::FFamily> samples;
        for (int index = 0; index < 50; ++index) {
            samples.push_back(kq::f_family(kq::random_instance(4, index)));
        }
        const auto rel = kq::relation_rank(samples);
        CHECK(rel.rank == 3);
        REQUIRE(rel.singular_values.size() == 6);
        CHECK(rel.singular_values[3] / rel.singular_values[0] < 1e-6);
        CHECK(rel.singular_values[2] / rel.singular_values[0] > 1e-3);
        REQUIRE(rel.relations.has_value());
        CHECK(rel.relations->size() == 3);
        // the relations are not small-integer combinations
        CHECK_FALSE(rel.integer_relations);

        // each reported relation annihilates fresh samples too
        for (int index = 100; index < 110; ++index) {
            const auto row = kq::f_family(kq::random_instance(4, index)).values();
            double row_norm = 0.0;
            for (const auto& v : row) {
                row_norm += std::norm(v);
            }
            for (const auto& r : *rel.relations) {
                Complex dot{0.0, 0.0};
                for (int k = 0; k < 6; ++k) {
                    dot += row[k] * r[k];
                }
                CHECK(std::abs(dot) / std::sqrt(row_norm) < 1e-9);
            }
        }
    }
    SUBCASE("one repeated nonzero sample has rank 1") {
        const auto fam = kq::f_family(kq::random_instance(3, 0));
        const auto rel = kq::relation_rank(std::vector<kq::FFamily>(10, fam));
        CHECK(rel.rank == 1);
        CHECK_FALSE(rel.relations.has_value());
    }
    SUBCASE("a single nonzero row among zeros has rank 1") {
        std::vector<kq::FFamily> samples(12, kq::FFamily{});
        samples[4] = kq::f_family(kq::random_instance(3, 1));
        CHECK(kq::relation_rank(samples).rank == 1);
    }
    SUBCASE("all-zero samples have rank 0") {
        const Complex c{1.0, 0.5};
        const auto zero = kq::f_family(RootTuple{c, c, c, c, c});
        CHECK(kq::relation_rank(std::vector<kq::FFamily>(10, zero)).rank == 0);
    }
    SUBCASE("fewer than ten samples") {
        CHECK_THROWS_AS(kq::relation_rank(std::vector<kq::FFamily>(9)), kq::InvalidInput);
    }
}
