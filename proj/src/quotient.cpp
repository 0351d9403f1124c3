#include "toricemb/quotient.hpp"

#include <algorithm>

namespace toricemb {

void validate(const WeightData& w) {
    if (w.num_vars == 0) throw std::invalid_argument("WeightData: num_vars must be positive");
    for (const IntVector& r : w.torus_rows)
        if (r.size() != w.num_vars)
            throw std::invalid_argument("WeightData: torus row length mismatch");
    for (const CongruenceRow& c : w.finite_rows) {
        if (c.row.size() != w.num_vars)
            throw std::invalid_argument("WeightData: finite row length mismatch");
        if (c.modulus < 2) throw std::invalid_argument("WeightData: modulus must be >= 2");
    }
}

HilbertBasis invariant_generators(const WeightData& w) {
    validate(w);
    DiophantineSystem s{w.num_vars, w.torus_rows, w.finite_rows};
    return hilbert_basis_of_system(s);
}

bool MonomialWeight::all_zero() const {
    auto zero = [](const Integer& x) { return x == 0; };
    return std::all_of(torus_pairings.begin(), torus_pairings.end(), zero) &&
           std::all_of(residues.begin(), residues.end(), zero);
}

MonomialWeight monomial_weight(const WeightData& w, const IntVector& e) {
    validate(w);
    if (e.size() != w.num_vars) throw std::invalid_argument("monomial_weight: dimension mismatch");
    for (const Integer& x : e)
        if (x < 0) throw std::invalid_argument("monomial_weight: negative exponent");
    MonomialWeight mw;
    for (const IntVector& r : w.torus_rows) mw.torus_pairings.push_back(dot(r, e));
    for (const CongruenceRow& c : w.finite_rows) {
        Integer r = dot(c.row, e) % c.modulus;
        if (r < 0) r += c.modulus;
        mw.residues.push_back(r);
    }
    return mw;
}

}  // namespace toricemb
