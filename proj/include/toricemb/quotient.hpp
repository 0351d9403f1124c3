// quotient.hpp: diagonal quasitorus actions on affine space at the exponent
// level. A monomial is invariant exactly when its exponent vector pairs to
// zero with every torus weight row and to zero residues with every cyclic
// row, so generators of the invariant algebra are a Hilbert basis.
#pragma once

#include "toricemb/exact.hpp"
#include "toricemb/semigroup.hpp"

namespace toricemb {

struct WeightData {
    std::size_t num_vars = 0;
    std::vector<IntVector> torus_rows;
    std::vector<CongruenceRow> finite_rows;

    bool operator==(const WeightData& other) const = default;
};

void validate(const WeightData& w);

// Exponent vectors of a minimal generating set of the invariant monomial
// algebra.
HilbertBasis invariant_generators(const WeightData& w);

// Character of the monomial with exponent vector e: the torus pairings and
// the cyclic residues (normalized to [0, modulus)). The monomial is
// invariant iff everything is zero.
struct MonomialWeight {
    std::vector<Integer> torus_pairings;
    std::vector<Integer> residues;

    bool all_zero() const;
};

MonomialWeight monomial_weight(const WeightData& w, const IntVector& e);

}  // namespace toricemb
