// exact.hpp: arbitrary-precision integers and rationals, integer vectors and
// matrices, Smith normal form, cokernels of integer maps. Everything here is
// exact; there is no floating point anywhere in this library.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace toricemb {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

Integer int_gcd(const Integer& a, const Integer& b);
Integer int_lcm(const Integer& a, const Integer& b);

// num/den with den != 0, reduced and with positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

bool is_zero(const IntVector& v);
Integer dot(const IntVector& a, const IntVector& b);
IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector negated(const IntVector& v);
IntVector scaled(const IntVector& v, const Integer& c);

// gcd of the absolute values of the entries; 0 for the zero vector.
Integer content(const IntVector& v);

// v divided by its content. Rejects the zero vector, which has no direction.
IntVector primitive(const IntVector& v);

std::string to_string(const IntVector& v);

// Dense row-major integer matrix. Zero rows or columns are allowed; several
// maps in this library (e.g. the zero map into Z^n) are empty matrices.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    // One matrix row per vector; all vectors must share a length.
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
    static IntMatrix from_cols(const std::vector<IntVector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    IntVector col(std::size_t j) const;

    IntMatrix transposed() const;
    IntMatrix mul(const IntMatrix& other) const;
    IntVector apply(const IntVector& v) const;  // matrix * column vector

    bool operator==(const IntMatrix& other) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<Integer> data_;
};

// u_left * input * v_right == diag, with u_left and v_right unimodular and
// diag diagonal, nonnegative, each entry dividing the next.
struct SnfResult {
    IntMatrix u_left;
    IntMatrix diag;
    IntMatrix v_right;

    // The diagonal entries d_1 | d_2 | ..., min(rows, cols) of them.
    std::vector<Integer> invariant_factors() const;
};

SnfResult snf(const IntMatrix& a);

// Exact determinant of a square matrix (fraction-free elimination).
Integer determinant(const IntMatrix& a);

std::size_t rank_of(const IntMatrix& a);

// Basis of the integer kernel {x : a*x = 0}; the basis spans the kernel as a
// saturated sublattice (every integer kernel element is an integer
// combination of the basis).
std::vector<IntVector> kernel_basis(const IntMatrix& a);

// Canonical form of a finitely generated abelian group:
// Z^free_rank + Z_{k_1} + ... with 2 <= k_1 | k_2 | ...; unit factors dropped.
struct FgAbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Integer> invariant_factors;

    bool operator==(const FgAbelianGroup& other) const = default;
    bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
    std::string to_string() const;  // "0", "Z", "Z^2+Z2+Z4", ...
};

// Z^rows / (column span of a). Columns are the image generators.
FgAbelianGroup cokernel(const IntMatrix& a);

}  // namespace toricemb
