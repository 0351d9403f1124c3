// cone.hpp: rational polyhedral cones in generator (V) and inequality (H)
// form, with exact dualization, extremal-ray extraction and membership.
#pragma once

#include "toricemb/exact.hpp"

namespace toricemb {

// Cone spanned by finitely many rays. Rays are stored primitive,
// lexicographically sorted and duplicate-free, so equality is structural.
// An empty ray list denotes the zero cone. A cone that contains lines keeps
// both w and -w among its generators for each lineality direction.
struct RayCone {
    std::size_t ambient_dim = 0;
    std::vector<IntVector> rays;

    bool operator==(const RayCone& other) const = default;
};

// Intersection of halfspaces <normal, .> >= 0; same storage conventions.
struct HalfspaceCone {
    std::size_t ambient_dim = 0;
    std::vector<IntVector> normals;

    bool operator==(const HalfspaceCone& other) const = default;
};

// Canonicalize a generator list: primitive rays, sorted, deduplicated.
// Zero vectors among the generators are rejected.
RayCone make_ray_cone(std::size_t ambient_dim, const std::vector<IntVector>& rays);

// The dual cone {m : <m, r> >= 0 for every ray r}, given by its extremal
// rays (plus +/- pairs for lineality directions when the dual is not
// pointed). The zero cone dualizes to the whole space.
RayCone dualize(const RayCone& c);

// Inequality form of the cone spanned by c's rays (normals = dual rays).
HalfspaceCone halfspaces(const RayCone& c);

// Minimal generating set of the cone spanned by c's rays: each ray that is a
// nonnegative combination of the remaining ones is dropped. For strongly
// convex cones this is the unique extremal ray set.
RayCone extremal_rays(const RayCone& c);

// Exact membership, decided through the H-representation.
bool contains(const RayCone& c, const IntVector& v);
bool contains(const HalfspaceCone& h, const IntVector& v);

// True iff the cone contains no line, equivalently iff its dual is
// full-dimensional.
bool is_strongly_convex(const RayCone& c);

}  // namespace toricemb
