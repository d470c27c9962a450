#include <doctest.h>

#include "fockqsp/random.hpp"
#include "oracle_helpers.hpp"

using namespace fockqsp;

namespace {

Weight mk(LieFamily fam, int rank, std::vector<long long> coords_d) {
    return Weight{LieType{fam, rank}, std::move(coords_d)};
}

FockVector random_vector(Rng& rng, Support s, int width, int terms) {
    FockVector x(s);
    for (int i = 0; i < terms; ++i) {
        Laurent c = Laurent::monomial(rng.below(5) - 2, static_cast<int>(rng.below(5)) - 2);
        x.add_term(random_sequence(rng, s, width), c);
    }
    return x;
}

}  // namespace

TEST_CASE("index classification") {
    CHECK(classify_index(ResidueClass(5, 5, Support::INT)) == IndexClass::FIXED);     // 5/2
    CHECK(classify_index(ResidueClass(5, 1, Support::INT)) == IndexClass::THETA_LINKED);  // 1/2
    CHECK(classify_index(ResidueClass(5, 3, Support::INT)) == IndexClass::STANDARD);  // 3/2
    CHECK(classify_index(ResidueClass(5, 0, Support::HALF)) == IndexClass::FIXED);
    CHECK(classify_index(ResidueClass(8, 1, Support::INT)) == IndexClass::THETA_LINKED);
    CHECK(classify_index(ResidueClass(8, 7, Support::INT)) == IndexClass::THETA_LINKED);
    CHECK(classify_index(ResidueClass(8, 5, Support::INT)) == IndexClass::STANDARD);
    CHECK(classify_index(ResidueClass(4, 4, Support::HALF)) == IndexClass::FIXED);  // 2 mod 4
}

TEST_CASE("worked B-generator applications in type C") {
    const QSPConfig cfg = qsp_config(LieFamily::C, 5);
    const Sequence a = embed(mk(LieFamily::C, 3, {0, 0, 0}));
    // Class of 3/2: only the f-move at 7/2 contributes, with coefficient 1.
    FockVector out = apply_basis(cfg.make_B(ResidueClass(5, 3, Support::INT)), a);
    FockVector expect(Support::INT);
    expect.add_term(embed(mk(LieFamily::C, 3, {2, 0, 0})), Laurent(1));
    CHECK(out == expect);
    // Class of 7/2: nothing moves.
    CHECK(apply_basis(cfg.make_B(ResidueClass(5, 7, Support::INT)), a).is_zero());
}

TEST_CASE("type A K-generator on the vacuum") {
    const Sequence vac(Support::INT, 2, "");
    FockVector out = apply_basis(op_K(ResidueClass(5, 1, Support::INT)), vac);
    FockVector expect(Support::INT);
    expect.add_term(vac, Laurent::power(1));
    CHECK(out == expect);
}

TEST_CASE("generators agree with the dense per-term oracle") {
    Rng rng(51);
    struct Config {
        LieFamily fam;
        int ell;
    };
    for (Config c : {Config{LieFamily::C, 5}, Config{LieFamily::C, 8},
                     Config{LieFamily::B_INT, 5}, Config{LieFamily::B_HALF, 5},
                     Config{LieFamily::B_INT, 8}, Config{LieFamily::B_HALF, 8}}) {
        const QSPConfig cfg = qsp_config(c.fam, c.ell);
        for (int trial = 0; trial < 25; ++trial) {
            const Sequence a = random_sequence(rng, cfg.support, 20);
            for (const ResidueClass& p : all_classes(cfg.r, cfg.support)) {
                CHECK(apply_basis(cfg.make_B(p), a) == oracle::naive_B(cfg, p, a));
                if (p.contains(0)) {
                    const long long z = 1 - 2 * cfg.r * (1 + 2 * rng.below(2));
                    CHECK(apply_basis(op_B_z(p, z), a) ==
                          oracle::naive_B(cfg, p, a, true, z));
                }
            }
        }
    }
}

TEST_CASE("B-generators against their type A composites") {
    Rng rng(52);
    for (LieFamily fam : {LieFamily::C, LieFamily::B_INT, LieFamily::B_HALF}) {
        for (int ell : {5, 8}) {
            const QSPConfig cfg = qsp_config(fam, ell);
            const auto samples = relation_sample_pool(rng, cfg.support, 12, 24);
            for (const ResidueClass& p : all_classes(cfg.r, cfg.support))
                CHECK(!check_typeA_identity(cfg, p, samples).has_value());
            if (cfg.support == Support::HALF)
                CHECK(!check_typeA_identity_z(cfg, 1 - 2 * cfg.r, samples).has_value());
        }
    }
}

TEST_CASE("linearity and charge preservation") {
    Rng rng(53);
    const QSPConfig cfg = qsp_config(LieFamily::C, 5);
    for (int trial = 0; trial < 30; ++trial) {
        const FockVector x = random_vector(rng, Support::INT, 16, 3);
        const FockVector y = random_vector(rng, Support::INT, 16, 3);
        const Laurent c = Laurent::monomial(rng.below(7) - 3, static_cast<int>(rng.below(5)) - 2);
        for (const ResidueClass& p : all_classes(5, Support::INT)) {
            const OperatorSpec op = cfg.make_B(p);
            CHECK(apply(op, x + y) == apply(op, x) + apply(op, y));
            CHECK(apply(op, c * x) == c * apply(op, x));
        }
    }
    // Charge preservation lifts linearly: basis outputs share the input charge.
    for (int trial = 0; trial < 50; ++trial) {
        const Sequence a = random_sequence(rng, Support::INT, 18);
        for (const ResidueClass& p : all_classes(5, Support::INT)) {
            const FockVector out = apply_basis(cfg.make_B(p), a);
            for (const auto& [b, coeff] : out.terms()) CHECK(b.charge() == a.charge());
        }
    }
}

TEST_CASE("operators commute with ell-step shifts") {
    Rng rng(54);
    for (LieFamily fam : {LieFamily::C, LieFamily::B_INT, LieFamily::B_HALF}) {
        for (int ell : {5, 8}) {
            const QSPConfig cfg = qsp_config(fam, ell);
            for (int trial = 0; trial < 15; ++trial) {
                const Sequence a = random_sequence(rng, cfg.support, 16);
                const long long m = rng.below(5) - 2;
                for (const ResidueClass& p : all_classes(cfg.r, cfg.support)) {
                    FockVector lhs = apply_basis(cfg.make_B(p), shift(a, m, ell));
                    FockVector rhs(cfg.support);
                    const FockVector unshifted = apply_basis(cfg.make_B(p), a);
                    for (const auto& [b, c] : unshifted.terms()) rhs.add_term(shift(b, m, ell), c);
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("projection and evaluation") {
    const LieType c3{LieFamily::C, 3};
    const Weight zero = mk(LieFamily::C, 3, {0, 0, 0});
    FockVector x = FockVector::basis(embed(zero));
    CHECK(project_embedded(c3, x) == x);
    CHECK(project_embedded(c3, FockVector(Support::INT)).is_zero());
    // The f_{1/2} image projects away.
    Sequence escaped = *move_f(1, embed(mk(LieFamily::C, 3, {8, 4, 2})));
    CHECK(project_embedded(c3, FockVector::basis(escaped)).is_zero());

    const Weight mu = mk(LieFamily::C, 3, {2, 0, 0});
    FockVector y(Support::INT);
    y.add_term(embed(mu), Laurent::power(1) + Laurent::power(-1));
    auto dec = eval_decomposition(y, c3);
    CHECK(dec == std::map<Weight, long long>{{mu, 2}});
    // Cancelling coefficients disappear before evaluation.
    FockVector z(Support::INT);
    z.add_term(embed(mu), Laurent::power(1));
    z.add_term(embed(mu), -Laurent::power(1));
    CHECK(eval_decomposition(z, c3).empty());
    FockVector neg(Support::INT);
    neg.add_term(embed(mu), Laurent(-1));
    CHECK_THROWS_AS(eval_decomposition(neg, c3), const Error&);
}

TEST_CASE("theorem aggregates on worked examples") {
    // C_3, ell=5, lambda=0: exactly omega_1 with coefficient 1.
    const LieType c3{LieFamily::C, 3};
    FockVector total = apply_sum_B(c3, 5, mk(LieFamily::C, 3, {0, 0, 0}));
    auto dec = eval_decomposition(project_embedded(c3, total), c3);
    CHECK(dec == std::map<Weight, long long>{{mk(LieFamily::C, 3, {2, 0, 0}), 1}});

    // B_HALF, N=2, ell=5, lambda=(1,0): {(2,0), (1,1), (0,0)}, no (1,0).
    const LieType b2{LieFamily::B_HALF, 2};
    total = apply_sum_B(b2, 5, mk(LieFamily::B_HALF, 2, {2, 0}));
    dec = eval_decomposition(project_embedded(b2, total), b2);
    CHECK(dec == std::map<Weight, long long>{{mk(LieFamily::B_HALF, 2, {4, 0}), 1},
                                             {mk(LieFamily::B_HALF, 2, {2, 2}), 1},
                                             {mk(LieFamily::B_HALF, 2, {0, 0}), 1}});

    // B_INT at even ell carries the naive identity summand.
    const LieType bi2{LieFamily::B_INT, 2};
    const Weight half_half = mk(LieFamily::B_INT, 2, {1, 1});
    total = apply_sum_B(bi2, 8, half_half);
    dec = eval_decomposition(project_embedded(bi2, total), bi2);
    REQUIRE(dec.count(half_half) == 1);
    CHECK(dec.at(half_half) >= 1);
    CHECK_THROWS_AS(apply_sum_B(bi2, 6, half_half), const Error&);
}

TEST_CASE("iterated operator sums") {
    const Weight zero = mk(LieFamily::C, 3, {0, 0, 0});
    const LieType c3{LieFamily::C, 3};
    auto d0 = iterated_sum(c3, 5, zero, 0);
    CHECK(d0.size() == 1);
    CHECK(d0.at(zero) == Laurent(1));
    auto d1 = iterated_sum(c3, 5, zero, 1);
    CHECK(d1.size() == 1);
    CHECK(d1.at(mk(LieFamily::C, 3, {2, 0, 0})) == Laurent(1));
    // All coefficients stay nonnegative on a deeper product.
    auto d2 = iterated_sum(c3, 5, zero, 2);
    for (const auto& [w, poly] : d2)
        for (const auto& [e, c] : poly.terms()) CHECK(!c.is_negative());
}

TEST_CASE("operator spec validation") {
    CHECK_THROWS_AS(op_B_z(ResidueClass(5, 5, Support::INT), 1), const Error&);
    CHECK_THROWS_AS(op_B_z(ResidueClass(5, 0, Support::HALF), 3), const Error&);
    CHECK_THROWS_AS(qsp_config(LieFamily::C, 3), const Error&);
    CHECK_THROWS_AS(qsp_config(LieFamily::B_INT, 6), const Error&);
    const QSPConfig cfg = qsp_config(LieFamily::B_INT, 5);
    CHECK(cfg.variant_for(ResidueClass(5, 5, Support::INT)) == BVariant::NONSTANDARD);
    CHECK(qsp_config(LieFamily::C, 5).variant_for(ResidueClass(5, 5, Support::INT)) ==
          BVariant::STANDARD);
    CHECK(qsp_config(LieFamily::B_HALF, 5).variant_for(ResidueClass(5, 0, Support::HALF)) ==
          BVariant::NONSTANDARD);
    CHECK(qsp_config(LieFamily::B_HALF, 8).variant_for(ResidueClass(4, 4, Support::HALF)) ==
          BVariant::STANDARD);
    CHECK_THROWS_AS(apply(op_E(ResidueClass(5, 1, Support::INT)), FockVector(Support::HALF)),
                    const Error&);
}
