// sl2.hpp: classification data for the three-dimensional embeddings indexed
// by a reduced height fraction p/q and a degree r. Decides toricity, builds
// the associated cone, class group, quotient weight data and height, and
// cross-checks all of these constructions against each other.
#pragma once

#include "toricemb/cone.hpp"
#include "toricemb/exact.hpp"
#include "toricemb/quotient.hpp"
#include "toricemb/toric.hpp"

#include <optional>
#include <string>

namespace toricemb {

// Height p/q in (0, 1] with gcd(p, q) = 1, and degree r >= 1.
struct EmbeddingData {
    Integer p, q, r;

    bool operator==(const EmbeddingData& other) const = default;
};

EmbeddingData make_embedding(const Integer& p, const Integer& q, const Integer& r);

// True iff q > p and (q - p) divides r. Heights equal to 1 (q = p) are never
// toric: only 0 is divisible by 0 and r >= 1.
bool is_toric(const EmbeddingData& emb);

// Reason string for the toricity decision, e.g. "q-p=2 does not divide r=3".
std::string toricity_reason(const EmbeddingData& emb);

// l = r / (q - p); only defined for toric data.
Integer toric_l(const EmbeddingData& emb);

// The divisor class group Z + Z_l with l = r / gcd(r, q - p); defined for
// every embedding with q > p, toric or not.
FgAbelianGroup cl_group(const EmbeddingData& emb);

// cone((1,0,0), (0,1,0), (-1,0,lq), (0,-1,lp)) with l = r/(q-p).
RayCone embedding_cone(const EmbeddingData& emb);

// Diagonal quasitorus data on 4 coordinates: torus row (p, p, -q, -q), and
// for l > 1 the cyclic condition <(1,1,0,0), e> == 0 (mod l*q), which says
// the level of a monomial is divisible by l.
WeightData embedding_weights(const EmbeddingData& emb);

// Exponents of the four affine coordinates x1, x2, y1, y2.
struct VExponent {
    Integer a, b, c, d;

    bool operator==(const VExponent& other) const = default;
    IntVector as_vector() const { return {a, b, c, d}; }
};

// Exponents of the four matrix coordinate functions.
struct GExponent {
    Integer e_alpha, e_beta, e_gamma, e_delta;

    bool operator==(const GExponent& other) const = default;
};

// Exponent transport along the orbit map: x1 -> alpha, x2 -> gamma,
// y1 -> beta, y2 -> delta. A monoid homomorphism.
GExponent phi_star(const VExponent& v);

// Inverse of the coordinate change between dual-cone lattice points and
// monomial exponents: a point (m1, m2, m3) of level m3 corresponds to the
// exponents (m3*lq - m1, m1, m3*lp - m2, m2). Points that are not level
// consistent (a negative entry would result) are rejected.
VExponent exponent_from_dual_point(const EmbeddingData& emb, const IntVector& m);

struct HeightResult {
    Rational value;                    // always p/q
    std::optional<VExponent> witness;  // (lq, 0, lp, 0) when toric
};

// Returns p/q. For toric data also produces the unique invariant generator
// with zero x2- and y2-exponents as a witness (its image under phi_star is a
// pure monomial of ratio lp/lq = p/q) and checks the defining inequality
// l'/(q-p+l') <= p/q for 0 <= l' <= p with equality only at l' = p.
HeightResult height(const EmbeddingData& emb);

// Order q - p of the generic stabilizer; rejects q = p, where the stabilizer
// of every point contains a one-dimensional torus and there is no open orbit.
Integer stabilizer_order(const EmbeddingData& emb);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    EmbeddingData embedding;
    Integer bound;
    std::vector<CheckResult> checks;

    bool all_passed() const;
};

// max(10, lq + lp): covers every height-one basis element with slack.
Integer default_verify_bound(const EmbeddingData& emb);

// Cross-checks the constructions against each other:
//  1. the cone has exactly 4 extremal rays and is strongly convex;
//  2. the class group of the cone equals the formula group;
//  3. the Hilbert basis of the dual cone corresponds exactly to the
//     invariant generators under the coordinate change, and both sides
//     generate their monoids up to the bound;
//  4. the height witness and the height inequality hold.
// All comparisons are exact. Rejects non-toric input.
VerifyReport verify(const EmbeddingData& emb, const Integer& bound);

}  // namespace toricemb
