#include "toricemb/sl2.hpp"

#include "toricemb/semigroup.hpp"

#include <doctest.h>

using namespace toricemb;

namespace {

EmbeddingData emb(long p, long q, long r) {
    return make_embedding(Integer(p), Integer(q), Integer(r));
}

}  // namespace

TEST_SUITE("sl2") {

TEST_CASE("embedding data validation") {
    CHECK_NOTHROW(emb(1, 1, 5));
    CHECK_THROWS_AS(emb(2, 4, 1), std::invalid_argument);  // not coprime
    CHECK_THROWS_AS(emb(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(emb(3, 2, 1), std::invalid_argument);  // p > q
    CHECK_THROWS_AS(emb(1, 2, 0), std::invalid_argument);
}

TEST_CASE("toricity is divisibility of the degree by q-p") {
    CHECK(is_toric(emb(1, 2, 1)));
    CHECK_FALSE(is_toric(emb(1, 3, 3)));
    CHECK_FALSE(is_toric(emb(1, 1, 5)));
    CHECK(toricity_reason(emb(1, 3, 3)) == "q-p=2 does not divide r=3");
}

TEST_CASE("for degree one exactly the heights p/(p+1) are toric") {
    for (long q = 1; q <= 9; ++q)
        for (long p = 1; p <= q; ++p) {
            if (int_gcd(Integer(p), Integer(q)) != 1) continue;
            CHECK(is_toric(emb(p, q, 1)) == (q == p + 1));
        }
}

TEST_CASE("class group formula") {
    CHECK(cl_group(emb(1, 2, 1)) == FgAbelianGroup{1, {}});
    CHECK(cl_group(emb(1, 2, 6)) == FgAbelianGroup{1, {6}});
    CHECK(cl_group(emb(1, 3, 4)) == FgAbelianGroup{1, {2}});
    CHECK_THROWS_AS(cl_group(emb(1, 1, 5)), std::invalid_argument);
}

TEST_CASE("embedding cones") {
    CHECK(embedding_cone(emb(1, 2, 1)) ==
          make_ray_cone(3, {{1, 0, 0}, {0, 1, 0}, {-1, 0, 2}, {0, -1, 1}}));
    CHECK(embedding_cone(emb(1, 2, 2)) ==
          make_ray_cone(3, {{1, 0, 0}, {0, 1, 0}, {-1, 0, 4}, {0, -1, 2}}));
    CHECK(embedding_cone(emb(2, 3, 3)) ==
          make_ray_cone(3, {{1, 0, 0}, {0, 1, 0}, {-1, 0, 9}, {0, -1, 6}}));
    CHECK_THROWS_AS(embedding_cone(emb(1, 3, 3)), std::invalid_argument);
}

TEST_CASE("embedding weight data") {
    WeightData w1 = embedding_weights(emb(1, 2, 1));
    CHECK(w1.torus_rows == std::vector<IntVector>{{1, 1, -2, -2}});
    CHECK(w1.finite_rows.empty());

    WeightData w2 = embedding_weights(emb(1, 2, 2));
    CHECK(w2.torus_rows == std::vector<IntVector>{{1, 1, -2, -2}});
    REQUIRE(w2.finite_rows.size() == 1);
    CHECK(w2.finite_rows[0].row == IntVector{1, 1, 0, 0});
    CHECK(w2.finite_rows[0].modulus == 4);

    WeightData w3 = embedding_weights(emb(2, 3, 1));
    CHECK(w3.torus_rows == std::vector<IntVector>{{2, 2, -3, -3}});
    CHECK(w3.finite_rows.empty());
}

TEST_CASE("exponent transport along the orbit map") {
    CHECK(phi_star(VExponent{2, 0, 1, 0}) == GExponent{2, 1, 0, 0});
    CHECK(phi_star(VExponent{0, 0, 0, 0}) == GExponent{0, 0, 0, 0});
    CHECK(phi_star(VExponent{1, 1, 0, 1}) == GExponent{1, 0, 1, 1});
}

TEST_CASE("exponent transport is additive") {
    VExponent u{2, 1, 0, 3}, v{0, 4, 2, 1};
    VExponent sum{u.a + v.a, u.b + v.b, u.c + v.c, u.d + v.d};
    GExponent gu = phi_star(u), gv = phi_star(v), gs = phi_star(sum);
    CHECK(gs.e_alpha == gu.e_alpha + gv.e_alpha);
    CHECK(gs.e_beta == gu.e_beta + gv.e_beta);
    CHECK(gs.e_gamma == gu.e_gamma + gv.e_gamma);
    CHECK(gs.e_delta == gu.e_delta + gv.e_delta);
}

TEST_CASE("dual points convert to level-consistent exponents") {
    EmbeddingData e = emb(1, 2, 2);  // l = 2, lq = 4, lp = 2
    CHECK(exponent_from_dual_point(e, {1, 0, 1}) == VExponent{3, 1, 2, 0});
    CHECK(exponent_from_dual_point(e, {0, 0, 0}) == VExponent{0, 0, 0, 0});
    CHECK_THROWS_AS(exponent_from_dual_point(e, {5, 0, 1}), std::invalid_argument);
}

TEST_CASE("heights and their witnesses") {
    HeightResult h1 = height(emb(1, 2, 1));
    CHECK(h1.value == make_rational(1, 2));
    REQUIRE(h1.witness.has_value());
    CHECK(*h1.witness == VExponent{2, 0, 1, 0});
    GExponent img = phi_star(*h1.witness);
    CHECK(img == GExponent{2, 1, 0, 0});

    HeightResult h2 = height(emb(2, 3, 1));
    CHECK(h2.value == make_rational(2, 3));
    REQUIRE(h2.witness.has_value());
    CHECK(*h2.witness == VExponent{3, 0, 2, 0});

    HeightResult h3 = height(emb(1, 2, 2));
    CHECK(h3.value == make_rational(1, 2));
    REQUIRE(h3.witness.has_value());
    CHECK(*h3.witness == VExponent{4, 0, 2, 0});

    HeightResult h4 = height(emb(1, 1, 5));  // non-toric: value only
    CHECK(h4.value == make_rational(1, 1));
    CHECK_FALSE(h4.witness.has_value());
}

TEST_CASE("stabilizer orders") {
    CHECK(stabilizer_order(emb(1, 2, 7)) == 1);
    CHECK(stabilizer_order(emb(1, 3, 2)) == 2);
    CHECK(stabilizer_order(emb(2, 3, 5)) == 1);
    CHECK_THROWS_AS(stabilizer_order(emb(1, 1, 1)), std::invalid_argument);
}

TEST_CASE("verify cross-checks the whole pipeline") {
    VerifyReport r1 = verify(emb(1, 2, 1), 10);
    CHECK(r1.all_passed());
    REQUIRE(r1.checks.size() == 4);

    VerifyReport r2 = verify(emb(1, 2, 2), 10);
    CHECK(r2.all_passed());
    CHECK(cl_group(emb(1, 2, 2)) == FgAbelianGroup{1, {2}});

    VerifyReport r3 = verify(emb(1, 3, 2), 12);
    CHECK(r3.all_passed());
    CHECK(toric_l(emb(1, 3, 2)) == 1);
    CHECK(embedding_cone(emb(1, 3, 2)) ==
          make_ray_cone(3, {{1, 0, 0}, {0, 1, 0}, {-1, 0, 3}, {0, -1, 1}}));

    CHECK_THROWS_AS(verify(emb(1, 3, 3), 10), std::invalid_argument);
}

TEST_CASE("verify counts the height-one generators on both sides") {
    EmbeddingData e = emb(1, 2, 1);
    HilbertBasis dual_basis = hilbert_basis_of_cone(dualize(embedding_cone(e)));
    HilbertBasis inv = invariant_generators(embedding_weights(e));
    CHECK(dual_basis.elements.size() == 6);
    CHECK(inv.elements.size() == 6);
}

TEST_CASE("the semigroup identification extends additively over a box") {
    EmbeddingData e = emb(1, 2, 2);
    RayCone dual = dualize(embedding_cone(e));
    HilbertBasis dual_basis = hilbert_basis_of_cone(dual);
    WeightData w = embedding_weights(e);
    HilbertBasis inv = invariant_generators(w);
    Integer bound = default_verify_bound(e);
    CHECK(bound == 10);
    CHECK(generates_up_to(dual_basis, dual, bound));
    CHECK(generates_up_to(inv, DiophantineSystem{4, w.torus_rows, w.finite_rows}, bound));
}

TEST_CASE("toricity, construction and verification agree on a grid") {
    for (long q = 1; q <= 4; ++q)
        for (long p = 1; p <= q; ++p) {
            if (int_gcd(Integer(p), Integer(q)) != 1) continue;
            for (long r = 1; r <= 4; ++r) {
                EmbeddingData e = emb(p, q, r);
                if (is_toric(e)) {
                    CHECK(verify(e, default_verify_bound(e)).all_passed());
                } else {
                    CHECK_THROWS_AS(embedding_cone(e), std::invalid_argument);
                    CHECK_THROWS_AS(embedding_weights(e), std::invalid_argument);
                }
            }
        }
}

TEST_CASE("geometric and formula class groups agree across the grid") {
    for (long q = 2; q <= 5; ++q)
        for (long p = 1; p < q; ++p) {
            if (int_gcd(Integer(p), Integer(q)) != 1) continue;
            for (long r = 1; r <= 6; ++r) {
                EmbeddingData e = emb(p, q, r);
                if (!is_toric(e)) continue;
                AffineToricData t = make_toric_data(embedding_cone(e));
                CHECK(t.class_group == cl_group(e));
                CHECK(t.class_group.free_rank == 1);
                CHECK(t.rays.size() == 4);
            }
        }
}

}  // TEST_SUITE
