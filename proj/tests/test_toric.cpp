#include "toricemb/toric.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <map>

using namespace toricemb;
using testutil::random_vector;

namespace {

RayCone height_cone(long lq, long lp) {
    return make_ray_cone(3, {{1, 0, 0},
                             {0, 1, 0},
                             {Integer(-1), 0, Integer(lq)},
                             {0, Integer(-1), Integer(lp)}});
}

std::size_t ray_index(const AffineToricData& t, const IntVector& ray) {
    for (std::size_t i = 0; i < t.rays.size(); ++i)
        if (t.rays[i] == ray) return i;
    throw std::logic_error("ray not found: " + to_string(ray));
}

// Divisor from coefficients keyed by ray, independent of storage order.
TDivisor divisor_on(const AffineToricData& t, const std::map<IntVector, Integer>& coeffs) {
    IntVector c(t.rays.size(), 0);
    for (const auto& [ray, a] : coeffs) c[ray_index(t, ray)] = a;
    return TDivisor{c};
}

Integer mod_residue(const Integer& a, const Integer& k) {
    Integer r = a % k;
    if (r < 0) r += k;
    return r;
}

// Class of a divisor in the canonical presentation, combined linearly from
// the ray degrees.
IntVector degree_of(const AffineToricData& t, const TDivisor& d) {
    std::size_t nfree = t.class_group.free_rank;
    const auto& factors = t.class_group.invariant_factors;
    IntVector deg(nfree + factors.size(), 0);
    for (std::size_t rho = 0; rho < t.rays.size(); ++rho)
        for (std::size_t i = 0; i < deg.size(); ++i)
            deg[i] += d.coefficients[rho] * t.degree_map[rho][i];
    for (std::size_t k = 0; k < factors.size(); ++k)
        deg[nfree + k] = mod_residue(deg[nfree + k], factors[k]);
    return deg;
}

}  // namespace

TEST_SUITE("toric") {

TEST_CASE("principal divisor of the trivial character is zero") {
    AffineToricData t = make_toric_data(height_cone(2, 1));
    TDivisor d = principal_divisor(t, {0, 0, 0});
    CHECK(is_zero(d.coefficients));
}

TEST_CASE("principal divisors pair the character with each ray") {
    AffineToricData t = make_toric_data(height_cone(2, 1));
    TDivisor d = principal_divisor(t, {1, 0, 0});
    CHECK(d.coefficients[ray_index(t, {1, 0, 0})] == 1);
    CHECK(d.coefficients[ray_index(t, {0, 1, 0})] == 0);
    CHECK(d.coefficients[ray_index(t, {-1, 0, 2})] == -1);
    CHECK(d.coefficients[ray_index(t, {0, -1, 1})] == 0);

    TDivisor d2 = principal_divisor(t, {0, 0, 1});
    CHECK(d2.coefficients[ray_index(t, {1, 0, 0})] == 0);
    CHECK(d2.coefficients[ray_index(t, {0, 1, 0})] == 0);
    CHECK(d2.coefficients[ray_index(t, {-1, 0, 2})] == 2);
    CHECK(d2.coefficients[ray_index(t, {0, -1, 1})] == 1);

    CHECK_THROWS_AS(principal_divisor(t, {1, 0}), std::invalid_argument);
}

TEST_CASE("principal divisors are additive in the character") {
    AffineToricData t = make_toric_data(height_cone(4, 2));
    std::mt19937_64 rng(20240830);
    for (int trial = 0; trial < 20; ++trial) {
        IntVector m1 = random_vector(rng, 3, -5, 5), m2 = random_vector(rng, 3, -5, 5);
        CHECK(principal_divisor(t, add(m1, m2)).coefficients ==
              add(principal_divisor(t, m1).coefficients,
                  principal_divisor(t, m2).coefficients));
    }
}

TEST_CASE("a smooth orthant has trivial class group") {
    AffineToricData t =
        make_toric_data(make_ray_cone(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(t.class_group.is_trivial());
}

TEST_CASE("class group of the height cone is Z with degrees (1,-2,1,-2)") {
    AffineToricData t = make_toric_data(height_cone(2, 1));
    CHECK(t.class_group == FgAbelianGroup{1, {}});
    IntVector degs(4);
    degs[0] = t.degree_map[ray_index(t, {1, 0, 0})][0];
    degs[1] = t.degree_map[ray_index(t, {0, 1, 0})][0];
    degs[2] = t.degree_map[ray_index(t, {-1, 0, 2})][0];
    degs[3] = t.degree_map[ray_index(t, {0, -1, 1})][0];
    bool plus = degs == IntVector{1, -2, 1, -2};
    bool minus = degs == IntVector{-1, 2, -1, 2};
    CHECK((plus || minus));
}

TEST_CASE("class group of the doubled height cone is Z+Z2") {
    AffineToricData t = make_toric_data(height_cone(4, 2));
    CHECK(t.class_group == FgAbelianGroup{1, {2}});
}

TEST_CASE("non-spanning ray sets are rejected") {
    CHECK_THROWS_AS(make_toric_data(make_ray_cone(3, {{1, 0, 0}, {0, 1, 0}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_toric_data(make_ray_cone(2, {{1, 0}, {-1, 0}})),
                    std::invalid_argument);
}

TEST_CASE("linear equivalence") {
    AffineToricData t = make_toric_data(height_cone(2, 1));
    TDivisor zero{IntVector(4, 0)};
    TDivisor d = divisor_on(t, {{{1, 0, 0}, 2}, {{0, -1, 1}, -1}});
    CHECK(linearly_equivalent(t, d, d));
    CHECK(linearly_equivalent(t, principal_divisor(t, {1, 0, 0}), zero));
    CHECK_FALSE(linearly_equivalent(t, divisor_on(t, {{{1, 0, 0}, 1}}), zero));
}

TEST_CASE("degree zero characterizes principal divisors") {
    AffineToricData t = make_toric_data(height_cone(4, 2));
    TDivisor zero{IntVector(4, 0)};
    IntVector c(4, -2);
    for (;;) {
        TDivisor d{c};
        CHECK(linearly_equivalent(t, d, zero) == is_zero(degree_of(t, d)));
        std::size_t i = 0;
        while (i < 4 && c[i] == 2) c[i++] = -2;
        if (i == 4) break;
        c[i] += 1;
    }
}

TEST_CASE("ray degrees generate the class group") {
    AffineToricData t = make_toric_data(height_cone(4, 2));
    // Search small divisors hitting each canonical generator of Z + Z2.
    bool hit_free = false, hit_torsion = false;
    IntVector c(4, -2);
    for (;;) {
        IntVector deg = degree_of(t, TDivisor{c});
        if (deg == IntVector{1, 0} || deg == IntVector{-1, 0}) hit_free = true;
        if (deg == IntVector{0, 1}) hit_torsion = true;
        std::size_t i = 0;
        while (i < 4 && c[i] == 2) c[i++] = -2;
        if (i == 4) break;
        c[i] += 1;
    }
    CHECK(hit_free);
    CHECK(hit_torsion);
}

TEST_CASE("free rank of the class group counts rays minus dimension") {
    std::mt19937_64 rng(20240831);
    int tested = 0;
    for (int trial = 0; trial < 200 && tested < 20; ++trial) {
        std::size_t dim = 2 + trial % 2;
        std::vector<IntVector> rays;
        for (std::size_t i = 0; i < 2 + trial % 3; ++i) {
            IntVector v = random_vector(rng, dim, -5, 5);
            if (!is_zero(v)) rays.push_back(v);
        }
        if (rays.empty()) continue;
        RayCone c = make_ray_cone(dim, rays);
        if (!is_strongly_convex(c)) continue;
        if (rank_of(IntMatrix::from_rows(c.rays, dim)) != dim) continue;
        AffineToricData t = make_toric_data(c);
        CHECK(t.class_group.free_rank == t.rays.size() - dim);
        ++tested;
    }
    CHECK(tested >= 10);
}

TEST_CASE("section points of the zero divisor are the dual cone points") {
    AffineToricData t = make_toric_data(height_cone(2, 1));
    TDivisor zero{IntVector(4, 0)};
    auto pts = pd_points(t, zero, 2);
    auto expected = testutil::box_points_in_halfspaces(t.rays, 3, 2);
    CHECK(pts == testutil::sorted(expected));
}

TEST_CASE("shifting one facet admits exactly one extra level-zero point") {
    AffineToricData t = make_toric_data(height_cone(2, 1));
    TDivisor d = divisor_on(t, {{{1, 0, 0}, 1}});
    std::vector<IntVector> level0;
    for (const IntVector& m : pd_points(t, d, 3))
        if (m[2] == 0) level0.push_back(m);
    CHECK(level0 == std::vector<IntVector>{{-1, 0, 0}, {0, 0, 0}});
}

TEST_CASE("section points grow monotonically with the divisor") {
    AffineToricData t = make_toric_data(height_cone(2, 1));
    std::mt19937_64 rng(20240832);
    for (int trial = 0; trial < 10; ++trial) {
        IntVector small = random_vector(rng, 4, -2, 2);
        IntVector bigger = small;
        bigger[trial % 4] += 1 + trial % 2;
        auto lo = pd_points(t, TDivisor{small}, 3);
        auto hi = pd_points(t, TDivisor{bigger}, 3);
        for (const IntVector& m : lo)
            CHECK(std::binary_search(hi.begin(), hi.end(), m));
    }
}

}  // TEST_SUITE
