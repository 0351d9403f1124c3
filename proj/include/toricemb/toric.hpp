// toric.hpp: data of the affine toric variety attached to a strongly convex
// cone — prime invariant divisors, principal divisors, the divisor class
// group with its ray degrees, and lattice-point windows of global sections.
#pragma once

#include "toricemb/cone.hpp"
#include "toricemb/exact.hpp"

namespace toricemb {

// Divisor sum_rho a_rho D_rho; one coefficient per extremal ray, in the
// canonical ray order of the attached AffineToricData.
struct TDivisor {
    IntVector coefficients;

    bool operator==(const TDivisor& other) const = default;
};

struct AffineToricData {
    RayCone cone;                       // canonicalized, strongly convex
    std::vector<IntVector> rays;        // extremal rays, canonical order
    IntMatrix pairing_matrix;           // (#rays) x dim, row per ray
    FgAbelianGroup class_group;         // cokernel of m -> pairing_matrix * m
    std::vector<IntVector> degree_map;  // class of each ray divisor, as
                                        // canonical coordinates: free parts
                                        // first, then residues mod each
                                        // invariant factor
};

// Builds the toric data. Requires a strongly convex cone whose rays span the
// ambient space; a non-spanning ray set would inflate the class group's free
// rank, so it is rejected rather than silently computed.
AffineToricData make_toric_data(const RayCone& c);

// Divisor of the character with exponent m: coefficient <m, n_rho> at rho.
TDivisor principal_divisor(const AffineToricData& t, const IntVector& m);

FgAbelianGroup class_group(const AffineToricData& t);

// True iff a - b is the divisor of some character (exact integer solve).
bool linearly_equivalent(const AffineToricData& t, const TDivisor& a, const TDivisor& b);

// All lattice points m with sup-norm <= box_bound satisfying every
// inequality <m, n_rho> >= -a_rho; a finite window of the section space of
// the divisor.
std::vector<IntVector> pd_points(const AffineToricData& t, const TDivisor& d,
                                 const Integer& box_bound);

}  // namespace toricemb
