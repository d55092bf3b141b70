#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "kq/errors.hpp"
#include "kq/perm_group.hpp"

using kq::Perm5;

TEST_CASE("S5 enumeration") {
    const auto& s5 = kq::all_s5();
    CHECK(s5.size() == 120);
    CHECK(s5.front() == Perm5());
    CHECK(s5.front().parity() == 1);

    std::set<std::array<int, 5>> distinct;
    for (const auto& p : s5) {
        distinct.insert(p.image());
    }
    CHECK(distinct.size() == 120);
    CHECK(std::is_sorted(s5.begin(), s5.end(),
                         [](const Perm5& a, const Perm5& b) { return a.image() < b.image(); }));

    const auto even = std::count_if(s5.begin(), s5.end(), [](const Perm5& p) { return p.parity() == 1; });
    CHECK(even == 60);
}

TEST_CASE("A5 is the even half") {
    const auto& a5 = kq::all_a5();
    CHECK(a5.size() == 60);
    for (const auto& p : a5) {
        CHECK(p.parity() == 1);
    }
    for (const auto& c : kq::three_cycles()) {
        CHECK(std::find(a5.begin(), a5.end(), c) != a5.end());
    }
}

TEST_CASE("three-cycles") {
    const auto& cycles = kq::three_cycles();
    CHECK(cycles.size() == 20);
    for (const auto& c : cycles) {
        CHECK(c.parity() == 1);
        CHECK(kq::compose(c, kq::compose(c, c)) == Perm5());
        CHECK_FALSE(c == Perm5());
        int moved = 0;
        for (int i = 0; i < 5; ++i) {
            moved += c(i) != i ? 1 : 0;
        }
        CHECK(moved == 3);
    }
}

TEST_CASE("Perm5 validates its image") {
    CHECK_THROWS_AS(Perm5({0, 0, 1, 2, 3}), kq::InvalidInput);
    CHECK_THROWS_AS(Perm5({0, 1, 2, 3, 5}), kq::InvalidInput);
    CHECK(Perm5({1, 0, 2, 3, 4}).parity() == -1);
}

TEST_CASE("apply and compose") {
    const kq::RootTuple rt{1.0, 2.0, 3.0, 4.0, 5.0};
    CHECK(kq::apply(Perm5(), rt) == rt);

    const Perm5 swap({0, 3, 2, 1, 4});
    CHECK(kq::apply(swap, kq::apply(swap, rt)) == rt);

    // pull convention: position i receives rt[p(i)]
    const Perm5 shift({1, 2, 3, 4, 0});
    CHECK(kq::apply(shift, rt) == kq::RootTuple{2.0, 3.0, 4.0, 5.0, 1.0});

    const auto& s5 = kq::all_s5();
    for (const auto& p : s5) {
        CHECK(kq::compose(p, Perm5()) == p);
        CHECK(kq::compose(p, p.inverse()) == Perm5());
        for (const auto& q : s5) {
            CHECK(kq::compose(p, q).parity() == p.parity() * q.parity());
        }
    }
}

TEST_CASE("apply is a group action on 1000 seeded triples") {
    std::mt19937_64 gen(123);
    std::uniform_int_distribution<int> pick(0, 119);
    std::normal_distribution<double> coord;
    const auto& s5 = kq::all_s5();
    for (int trial = 0; trial < 1000; ++trial) {
        const Perm5& p = s5[pick(gen)];
        const Perm5& q = s5[pick(gen)];
        kq::RootTuple rt{};
        for (auto& z : rt) {
            z = {coord(gen), coord(gen)};
        }
        CHECK(kq::apply(kq::compose(p, q), rt) == kq::apply(p, kq::apply(q, rt)));
    }
}
