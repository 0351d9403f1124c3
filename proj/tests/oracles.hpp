// Test-only helpers: deterministic random generators and independent
// brute-force oracles. Everything here stays independent of the library
// algorithms it is used to check.
#pragma once

#include "toricemb/cone.hpp"
#include "toricemb/exact.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace testutil {

using toricemb::Integer;
using toricemb::IntMatrix;
using toricemb::IntVector;

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                               long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Integer(dist(rng));
    return m;
}

// Product of random elementary operations, so the determinant stays +/-1.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, std::size_t steps = 12) {
    IntMatrix m = IntMatrix::identity(n);
    if (n < 2) return m;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<long> factor(-3, 3);
    std::uniform_int_distribution<int> kind(0, 2);
    for (std::size_t s = 0; s < steps; ++s) {
        std::size_t i = pick(rng), j = pick(rng);
        switch (kind(rng)) {
            case 0:
                if (i != j)
                    for (std::size_t c = 0; c < n; ++c) m.at(i, c) += Integer(factor(rng)) * m.at(j, c);
                break;
            case 1:
                if (i != j)
                    for (std::size_t c = 0; c < n; ++c) std::swap(m.at(i, c), m.at(j, c));
                break;
            default:
                for (std::size_t c = 0; c < n; ++c) m.at(i, c) = -m.at(i, c);
        }
    }
    return m;
}

inline IntVector random_vector(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    IntVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Integer(dist(rng));
    return v;
}

// All lattice points of the box [-bound, bound]^dim whose pairings with
// every given vector are nonnegative: the raw halfspace-intersection oracle.
inline std::vector<IntVector> box_points_in_halfspaces(const std::vector<IntVector>& normals,
                                                       std::size_t dim, long bound) {
    std::vector<IntVector> pts;
    IntVector x(dim, Integer(-bound));
    for (;;) {
        bool ok = true;
        for (const IntVector& n : normals)
            if (toricemb::dot(n, x) < 0) {
                ok = false;
                break;
            }
        if (ok) pts.push_back(x);
        std::size_t i = 0;
        while (i < dim && x[i] == bound) {
            x[i] = -bound;
            ++i;
        }
        if (i == dim) break;
        x[i] += 1;
    }
    return pts;
}

inline std::vector<IntVector> sorted(std::vector<IntVector> vs) {
    std::sort(vs.begin(), vs.end());
    return vs;
}

}  // namespace testutil
