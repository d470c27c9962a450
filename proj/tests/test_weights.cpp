#include <doctest.h>

#include <map>
#include <set>

#include "fockqsp/random.hpp"
#include "fockqsp/weights.hpp"

using namespace fockqsp;

namespace {

Weight mk(LieFamily fam, int rank, std::vector<long long> coords_d) {
    return Weight{LieType{fam, rank}, std::move(coords_d)};
}

}  // namespace

TEST_CASE("rho") {
    CHECK(rho(LieType{LieFamily::C, 3}).coords_d == std::vector<long long>{6, 4, 2});
    CHECK(rho(LieType{LieFamily::B_INT, 2}).coords_d == std::vector<long long>{3, 1});
    CHECK(rho(LieType{LieFamily::B_HALF, 2}).coords_d == std::vector<long long>{3, 1});
    CHECK(rho(LieType{LieFamily::A, 3}).coords_d == std::vector<long long>{0, -2, -4});
}

TEST_CASE("dominance") {
    CHECK(is_dominant(mk(LieFamily::C, 3, {4, 4, 0})));
    CHECK(!is_dominant(mk(LieFamily::C, 3, {2, 4, 0})));
    CHECK(is_dominant(mk(LieFamily::B_INT, 2, {3, 1})));
    CHECK(is_dominant(mk(LieFamily::B_HALF, 2, {2, 0})));
    CHECK(!is_dominant(mk(LieFamily::B_HALF, 2, {0, -2})));
    CHECK_THROWS_AS(is_dominant(mk(LieFamily::B_INT, 2, {2, 0})), const Error&);
    CHECK_THROWS_AS(is_dominant(mk(LieFamily::C, 2, {3, 1})), const Error&);
}

TEST_CASE("embeddings") {
    // C_3, lambda = 0: 1s at i <= 0 and {1,2,3}.
    CHECK(embed(mk(LieFamily::C, 3, {0, 0, 0})) == Sequence(Support::INT, 8, ""));
    CHECK(embed(mk(LieFamily::C, 3, {0, 0, 0})).charge() == 3);
    // A_3, lambda = 0: the charge-0 vacuum.
    CHECK(embed(mk(LieFamily::A, 3, {0, 0, 0})) == Sequence(Support::INT, 2, ""));
    CHECK(embed(mk(LieFamily::A, 3, {0, 0, 0})).charge() == 0);
    // B_HALF, N=2, lambda = 0: 1s at i < 0 and {1/2, 3/2}.
    CHECK(embed(mk(LieFamily::B_HALF, 2, {0, 0})) == Sequence(Support::HALF, 5, ""));
    CHECK(embed(mk(LieFamily::B_HALF, 2, {0, 0})).charge() == 2);
    // B_INT, N=2, lambda = (1/2, 1/2): rho-shift (2, 1), 1s at i <= 0 and {1, 2}.
    CHECK(embed(mk(LieFamily::B_INT, 2, {1, 1})) == Sequence(Support::INT, 6, ""));
    CHECK_THROWS_AS(embed(mk(LieFamily::C, 3, {0, 2, 0})), const Error&);
}

TEST_CASE("extract inverts embed exhaustively") {
    for (LieFamily fam : {LieFamily::A, LieFamily::C, LieFamily::B_INT, LieFamily::B_HALF}) {
        for (int rank = 1; rank <= 4; ++rank) {
            const LieType type{fam, rank};
            std::set<Sequence> images;
            for (const Weight& w : dominant_weights_up_to(type, 16)) {
                const Sequence a = embed(w);
                CHECK(images.insert(a).second);  // embed is injective
                auto back = extract(type, a);
                REQUIRE(back.has_value());
                CHECK(*back == w);
            }
        }
    }
}

TEST_CASE("extract rejects sequences outside the image") {
    const LieType c3{LieFamily::C, 3};
    // A zero in the mandatory region.
    CHECK(!extract(c3, Sequence(Support::INT, 0, "0101")).has_value());
    // Wrong charge.
    CHECK(!extract(c3, Sequence(Support::INT, 2, "")).has_value());
    // The f_{1/2} image of an embedded weight leaves the image.
    Weight w = mk(LieFamily::C, 3, {8, 4, 2});  // rho-shift (7, 4, 2)
    Sequence a = embed(w);
    auto moved = move_f(1, a);
    REQUIRE(moved.has_value());
    CHECK(!extract(c3, *moved).has_value());
    CHECK_THROWS_AS(extract(c3, Sequence(Support::HALF, 1, "")), const Error&);
}

TEST_CASE("moving operators match dominance steps both ways") {
    // e_r in the image iff lambda - eps_i is dominant with r = lambda-bar_i - 1/2,
    // f analogously with lambda + eps_i, on exhaustive grids.
    for (LieFamily fam : {LieFamily::C, LieFamily::B_INT, LieFamily::B_HALF}) {
        for (int rank = 2; rank <= 3; ++rank) {
            const LieType type{fam, rank};
            for (const Weight& w : dominant_weights_up_to(type, 12)) {
                const Sequence a = embed(w);
                const std::vector<long long> shifted = rho_shift(w);
                auto [lo, hi] = a.move_range_d();
                for (long long r = lo - 4; r <= hi + 4; r += 2) {
                    bool e_expect = false, f_expect = false;
                    for (size_t i = 0; i < shifted.size(); ++i) {
                        Weight down = w, up = w;
                        down.coords_d[i] -= 2;
                        up.coords_d[i] += 2;
                        if (r == shifted[i] - 1 && is_dominant(down)) e_expect = true;
                        if (r == shifted[i] + 1 && is_dominant(up)) f_expect = true;
                    }
                    auto e_img = move_e(r, a);
                    auto f_img = move_f(r, a);
                    CHECK((e_img && extract(type, *e_img)) == e_expect);
                    CHECK((f_img && extract(type, *f_img)) == f_expect);
                }
            }
        }
    }
}

TEST_CASE("shift") {
    Rng rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const Support s = trial % 2 ? Support::HALF : Support::INT;
        const Sequence a = random_sequence(rng, s, 16);
        const int ell = 5;
        CHECK(shift(a, 0, ell) == a);
        const long long m = rng.below(5) - 2;
        CHECK(shift(a, m, ell).charge() == a.charge() - m * ell);
        CHECK(shift(shift(a, m, ell), -m, ell) == a);
        // Shifts intertwine the moving operators.
        auto [lo, hi] = a.move_range_d();
        for (long long j = lo; j <= hi; j += 2) {
            auto moved = move_e(j, a);
            if (!moved) continue;
            auto other = move_e(j - 2 * m * ell, shift(a, m, ell));
            REQUIRE(other.has_value());
            CHECK(shift(*moved, m, ell) == *other);
        }
    }
}

TEST_CASE("stabilize") {
    // Vacuum of charge 1: no zero in the nonpositive part.
    Sequence a(Support::INT, 4, "");
    REQUIRE(a.charge() == 1);
    Stabilization st = stabilize(a, 0, 5, LieFamily::C);
    CHECK(st.m == 0);
    CHECK(st.weight == mk(LieFamily::C, 1, {0}));
    CHECK(shift(embed(st.weight), st.m, 5) == a);
    // With a reserve the rank grows.
    st = stabilize(a, 2, 5, LieFamily::C);
    CHECK(st.m == 1);
    CHECK(st.weight.type.rank == 6);
    CHECK(shift(embed(st.weight), st.m, 5) == a);
    CHECK_THROWS_AS(stabilize(a, 0, 5, LieFamily::A), const Error&);
    Sequence big(Support::INT, 12, "");  // charge 5 = ell out of range
    CHECK_THROWS_AS(stabilize(big, 0, 5, LieFamily::C), const Error&);
}

TEST_CASE("stabilize round trips on random sequences") {
    Rng rng(22);
    for (int trial = 0; trial < 300; ++trial) {
        const LieFamily fam = trial % 3 == 0   ? LieFamily::C
                              : trial % 3 == 1 ? LieFamily::B_INT
                                               : LieFamily::B_HALF;
        const int ell = 5;
        const long long charge = rng.below(ell);
        const Sequence a = random_sequence_with_charge(rng, support_of(fam), 16, charge);
        const long long reserve = rng.below(3);
        Stabilization st = stabilize(a, reserve, ell, fam);
        CHECK(st.weight.type.rank == st.m * ell + charge);
        CHECK(shift(embed(st.weight), st.m, ell) == a);
        // Minimality of m against the reserve bound.
        if (st.m > 0) {
            const long long nprime_d = a.left_d() < (fam == LieFamily::B_HALF ? 1 : 2)
                                           ? -a.left_d()
                                           : (fam == LieFamily::B_HALF ? -1 : -2);
            CHECK(2 * (st.m - 1) * ell <= nprime_d + 2 * reserve);
        }
    }
}

TEST_CASE("partition view of charge-zero sequences") {
    CHECK(seq_to_partition(Sequence(Support::INT, 2, "")).empty());
    Weight w = mk(LieFamily::A, 3, {6, 2, 0});
    CHECK(seq_to_partition(embed(w)) == std::vector<long long>{3, 1});
    CHECK_THROWS_AS(seq_to_partition(Sequence(Support::INT, 4, "")), const Error&);
}

TEST_CASE("residue classes") {
    ResidueClass p(5, 3, Support::INT);  // 3/2 mod 5
    CHECK(p.theta().value_d == 7);
    CHECK(p.contains(13));
    CHECK(p.contains(-7));
    CHECK(!p.contains(5));
    CHECK(p.linked_to(ResidueClass(5, 5, Support::INT)));
    CHECK(p.linked_to(ResidueClass(5, 1, Support::INT)));
    CHECK(!p.linked_to(ResidueClass(5, 7, Support::INT)));
    CHECK(all_classes(5, Support::INT).size() == 5);
    CHECK(all_classes(4, Support::HALF).size() == 4);
    CHECK_THROWS_AS(ResidueClass(5, 2, Support::INT), const Error&);
}

TEST_CASE("dominant weight enumeration") {
    CHECK(dominant_weights_up_to(LieType{LieFamily::C, 3}, 12).size() == 84);
    // B_INT coordinates are strictly half-integral.
    for (const Weight& w : dominant_weights_up_to(LieType{LieFamily::B_INT, 2}, 11)) {
        CHECK(w.coords_d[0] % 2 != 0);
        CHECK(is_dominant(w));
    }
    CHECK(dominant_weights_up_to(LieType{LieFamily::B_INT, 2}, 11).size() == 21);
}
