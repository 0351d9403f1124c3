// semigroup.hpp: Hilbert bases, i.e. minimal generating sets of the monoid
// of lattice points of a strongly convex cone or of the nonnegative solution
// monoid of a homogeneous linear diophantine system with congruences.
#pragma once

#include "toricemb/cone.hpp"
#include "toricemb/exact.hpp"

namespace toricemb {

// Row w with modulus k imposes <w, e> == 0 (mod k).
struct CongruenceRow {
    IntVector row;
    Integer modulus;  // >= 2

    bool operator==(const CongruenceRow& other) const = default;
};

// Variables are constrained nonnegative; each equality row w imposes
// <w, e> = 0 and each congruence row imposes its congruence.
struct DiophantineSystem {
    std::size_t num_vars = 0;
    std::vector<IntVector> equality_rows;
    std::vector<CongruenceRow> congruence_rows;

    bool operator==(const DiophantineSystem& other) const = default;
};

void validate(const DiophantineSystem& s);

// True iff e is a monoid element: e >= 0 and every row is satisfied.
bool satisfies(const DiophantineSystem& s, const IntVector& e);

struct HilbertBasis {
    std::size_t ambient_dim = 0;
    std::vector<IntVector> elements;  // canonically (lexicographically) sorted

    bool operator==(const HilbertBasis& other) const = default;
};

// Unique minimal generating set of {e in Z+^n : all rows hold}, computed by
// an incremental completion over the frontier of partial sums. Congruence
// rows are lifted to equalities with one nonnegative slack variable each
// (the row is first reduced modulo its modulus to nonnegative residues, so
// <w, e> >= 0 and a single slack suffices); slack coordinates are projected
// away afterwards, which preserves minimality.
HilbertBasis hilbert_basis_of_system(const DiophantineSystem& s);

// Unique minimal generating set of the monoid of lattice points of the cone
// spanned by c's rays. The cone is rewritten as a diophantine system on its
// facet pairings: for x in the cone let s = W x with W the facet normal
// matrix; the image lattice of W is cut out by equalities and congruences
// (read off the Smith form of W), and s >= 0 is exactly the cone condition.
// Requires a strongly convex cone (otherwise there is no unique basis).
HilbertBasis hilbert_basis_of_cone(const RayCone& c);

// Independent oracle: enumerate all monoid elements with sup-norm <= bound
// and sieve out the reducible ones. Equals the true basis whenever the true
// basis fits in the box.
HilbertBasis brute_force_basis(const DiophantineSystem& s, const Integer& bound);
HilbertBasis brute_force_basis(const RayCone& c, const Integer& bound);

// True iff every monoid element with sup-norm <= bound is a nonnegative
// integer combination of basis elements, decided by exact dynamic
// programming over the boxed monoid elements.
bool generates_up_to(const HilbertBasis& basis, const DiophantineSystem& s, const Integer& bound);
bool generates_up_to(const HilbertBasis& basis, const RayCone& c, const Integer& bound);

}  // namespace toricemb
