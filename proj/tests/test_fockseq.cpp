#include <doctest.h>

#include "fockqsp/random.hpp"
#include "oracle_helpers.hpp"

using namespace fockqsp;

namespace {

Sequence vacuum_int() { return Sequence(Support::INT, 2, ""); }

// 1 at every i <= 0 and at {1, 2, 3}: the type C rank-3 zero weight.
Sequence c3_zero() { return Sequence(Support::INT, 8, ""); }

}  // namespace

TEST_CASE("canonicalization") {
    Sequence a(Support::INT, -4, "110110");
    CHECK(a.left_d() == 0);
    CHECK(a.bits() == "011");
    Sequence again(a.support(), a.left_d(), a.bits());
    CHECK(again == a);
    Sequence b(Support::INT, 0, "1111");
    CHECK(b.bits().empty());
    CHECK(b == Sequence(Support::INT, 8, ""));
    CHECK_THROWS_AS(Sequence(Support::INT, 1, "01"), const Error&);
    CHECK_THROWS_AS(Sequence(Support::HALF, 0, "01"), const Error&);
}

TEST_CASE("charge") {
    CHECK(vacuum_int().charge() == 0);
    CHECK(c3_zero().charge() == 3);
    // Single 0 at -2 and single 1 at 1: +1 - 1 = 0.
    Sequence a(Support::INT, -4, "0111");
    REQUIRE(a.at_d(-4) == 0);
    REQUIRE(a.at_d(2) == 1);
    CHECK(a.charge() == 0);
    // Half-integer vacuum: 1s at i < 0.
    CHECK(Sequence(Support::HALF, 1, "").charge() == 0);
}

TEST_CASE("moving operators") {
    // f at 3.5 moves the 1 at 3 to 4: lambda-bar (4,2,1).
    auto moved = move_f(7, c3_zero());
    REQUIRE(moved.has_value());
    CHECK(*moved == Sequence(Support::INT, 6, "01"));
    CHECK(!move_e(1, vacuum_int()).has_value());
    auto back = move_e(7, *moved);
    REQUIRE(back.has_value());
    CHECK(*back == c3_zero());
    CHECK_THROWS_AS(move_e(2, c3_zero()), const Error&);
}

TEST_CASE("statistics on worked examples") {
    const Sequence c3 = c3_zero();
    CHECK(stat_L(StatKind::F_MINUS_E, 5, 7, c3) == 0);
    CHECK(stat_R(StatKind::F, 5, -3, c3) == 1);
    CHECK(stat_T(StatKind::F, 5, 7, c3) == 1);
    CHECK(stat_T(StatKind::E, 5, 7, c3) == 0);
    CHECK(stat_T(StatKind::E, 5, 1, c3) == 0);
    for (int r : {2, 3, 5})
        for (long long j = -9; j <= 9; j += 2) CHECK(stat_R(StatKind::E, r, j, vacuum_int()) == 0);
    // T^{f-e} on the vacuum: 1 exactly for the class of 1/2.
    for (long long p = 1; p < 10; p += 2)
        CHECK(stat_T(StatKind::F_MINUS_E, 5, p, vacuum_int()) == (p == 1 ? 1 : 0));
}

TEST_CASE("statistics match the dense oracle on random sequences") {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Support s = trial % 2 ? Support::HALF : Support::INT;
        const Sequence a = random_sequence(rng, s, 14 + static_cast<int>(rng.below(10)));
        const int r = 2 + static_cast<int>(rng.below(7));
        const long long j = (rng.below(30) - 15) * 2 + dual_parity(s);
        for (StatKind k :
             {StatKind::E, StatKind::F, StatKind::E_MINUS_F, StatKind::F_MINUS_E}) {
            CHECK(stat_R(k, r, j, a) == oracle::naive_R(k, r, j, a));
            CHECK(stat_L(k, r, j, a) == oracle::naive_L(k, r, j, a));
            CHECK(stat_T(k, r, j, a) == oracle::naive_T(k, r, j, a));
        }
    }
}

TEST_CASE("move properties on random sequences") {
    Rng rng(12);
    for (int trial = 0; trial < 1000; ++trial) {
        const Support s = trial % 2 ? Support::HALF : Support::INT;
        const Sequence a = random_sequence(rng, s, 20);
        auto [lo, hi] = a.move_range_d();
        long long moves = 0;
        for (long long j = lo; j <= hi; j += 2) {
            if (auto b = move_e(j, a)) {
                ++moves;
                CHECK(b->charge() == a.charge());
                auto back = move_f(j, *b);
                REQUIRE(back.has_value());
                CHECK(*back == a);
            }
            if (auto b = move_f(j, a)) {
                ++moves;
                CHECK(b->charge() == a.charge());
                auto back = move_e(j, *b);
                REQUIRE(back.has_value());
                CHECK(*back == a);
            }
        }
        CHECK(moves <= a.window_len() + 1);
        // Nothing moves outside the scan range.
        for (long long j : {lo - 2, lo - 10, hi + 2, hi + 10}) {
            CHECK(!move_e(j, a).has_value());
            CHECK(!move_f(j, a).has_value());
        }
    }
}

TEST_CASE("statistics consistency T = R + L + self") {
    Rng rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        const Support s = trial % 2 ? Support::HALF : Support::INT;
        const Sequence a = random_sequence(rng, s, 18);
        const int r = 2 + static_cast<int>(rng.below(7));
        const long long j = (rng.below(20) - 10) * 2 + dual_parity(s);
        const long long self_e = move_e(j, a) ? 1 : 0;
        const long long self_f = move_f(j, a) ? 1 : 0;
        CHECK(stat_T(StatKind::E, r, j, a) ==
              stat_R(StatKind::E, r, j, a) + stat_L(StatKind::E, r, j, a) + self_e);
        CHECK(stat_T(StatKind::F, r, j, a) ==
              stat_R(StatKind::F, r, j, a) + stat_L(StatKind::F, r, j, a) + self_f);
    }
}

TEST_CASE("fock vector algebra") {
    FockVector x = FockVector::basis(c3_zero());
    FockVector minus = Laurent(-1) * x;
    CHECK((x + minus).is_zero());
    CHECK((Laurent() * x).is_zero());
    FockVector sum = Laurent::power(1) * x + Laurent::power(-1) * x;
    FockVector expect(Support::INT);
    expect.add_term(c3_zero(), Laurent::power(1) + Laurent::power(-1));
    CHECK(sum == expect);
    CHECK_THROWS_AS(x += FockVector(Support::HALF), const Error&);
}

TEST_CASE("charge targeting of the sample generator") {
    Rng rng(14);
    for (long long target : {0LL, 3LL, -2LL}) {
        for (int i = 0; i < 50; ++i) {
            CHECK(random_sequence_with_charge(rng, Support::INT, 24, target).charge() == target);
            CHECK(random_sequence_with_charge(rng, Support::HALF, 24, target).charge() == target);
        }
    }
}
