#include "toricemb/exact.hpp"

#include <algorithm>
#include <cstddef>

namespace toricemb {

Integer int_gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer int_lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool is_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

Integer dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IntVector add(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IntVector sub(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IntVector negated(const IntVector& v) {
    IntVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

IntVector scaled(const IntVector& v, const Integer& c) {
    IntVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
    return r;
}

Integer content(const IntVector& v) {
    Integer g = 0;
    for (const Integer& x : v) g = int_gcd(g, x);
    return g;
}

IntVector primitive(const IntVector& v) {
    Integer g = content(v);
    if (g == 0) throw std::invalid_argument("primitive: zero vector has no direction");
    IntVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

std::string to_string(const IntVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("from_rows: ragged rows");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_cols(const std::vector<IntVector>& cols, std::size_t rows) {
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("from_cols: ragged columns");
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

IntVector IntMatrix::row(std::size_t i) const {
    IntVector r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

IntVector IntMatrix::col(std::size_t j) const {
    IntVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::mul(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("mul: dimension mismatch");
    IntMatrix r(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                r.at(i, j) += aik * other.at(k, j);
        }
    return r;
}

IntVector IntMatrix::apply(const IntVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
    IntVector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

std::vector<Integer> SnfResult::invariant_factors() const {
    std::size_t n = std::min(diag.rows(), diag.cols());
    std::vector<Integer> f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = diag.at(i, i);
    return f;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(dst, j) += k * m.at(src, j);
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, dst) += k * m.at(i, src);
}

void negate_row(IntMatrix& m, std::size_t i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
}

// Smallest-|entry| nonzero pivot in the submatrix starting at t, ties broken
// by lowest (row, col). Returns false if the submatrix is zero.
bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d.at(i, j) == 0) continue;
            Integer a = abs(d.at(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SnfResult snf(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    SnfResult res{IntMatrix::identity(m), a, IntMatrix::identity(n)};
    IntMatrix& d = res.diag;
    IntMatrix& u = res.u_left;
    IntMatrix& v = res.v_right;

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        std::size_t pi, pj;
        if (!find_pivot(d, t, pi, pj)) break;
        for (;;) {
            swap_rows(d, t, pi);
            swap_rows(u, t, pi);
            swap_cols(d, t, pj);
            swap_cols(v, t, pj);

            bool leftover = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d.at(i, t) == 0) continue;
                Integer k = d.at(i, t) / d.at(t, t);
                add_row_multiple(d, i, t, -k);
                add_row_multiple(u, i, t, -k);
                if (d.at(i, t) != 0) leftover = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d.at(t, j) == 0) continue;
                Integer k = d.at(t, j) / d.at(t, t);
                add_col_multiple(d, j, t, -k);
                add_col_multiple(v, j, t, -k);
                if (d.at(t, j) != 0) leftover = true;
            }
            if (leftover) {
                find_pivot(d, t, pi, pj);
                continue;
            }
            // Row and column t are clean; enforce that the pivot divides the
            // rest of the submatrix, pulling an offending row in if not.
            bool fixed = true;
            for (std::size_t i = t + 1; i < m && fixed; ++i)
                for (std::size_t j = t + 1; j < n && fixed; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        add_row_multiple(d, t, i, 1);
                        add_row_multiple(u, t, i, 1);
                        fixed = false;
                    }
            if (fixed) break;
            find_pivot(d, t, pi, pj);
        }
        if (d.at(t, t) < 0) {
            negate_row(d, t);
            negate_row(u, t);
        }
    }
    return res;
}

Integer determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix w = a;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t i = k + 1;
            while (i < n && w.at(i, k) == 0) ++i;
            if (i == n) return 0;
            swap_rows(w, k, i);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign * w.at(n - 1, n - 1);
}

std::size_t rank_of(const IntMatrix& a) {
    std::vector<Integer> f = snf(a).invariant_factors();
    std::size_t r = 0;
    for (const Integer& x : f)
        if (x != 0) ++r;
    return r;
}

std::vector<IntVector> kernel_basis(const IntMatrix& a) {
    SnfResult s = snf(a);
    std::size_t r = 0;
    for (const Integer& x : s.invariant_factors())
        if (x != 0) ++r;
    std::vector<IntVector> basis;
    for (std::size_t j = r; j < a.cols(); ++j) basis.push_back(s.v_right.col(j));
    return basis;
}

std::string FgAbelianGroup::to_string() const {
    std::string s;
    if (free_rank == 1)
        s = "Z";
    else if (free_rank > 1)
        s = "Z^" + std::to_string(free_rank);
    for (const Integer& k : invariant_factors) {
        if (!s.empty()) s += "+";
        s += "Z" + k.get_str();
    }
    return s.empty() ? "0" : s;
}

FgAbelianGroup cokernel(const IntMatrix& a) {
    SnfResult s = snf(a);
    FgAbelianGroup g;
    std::size_t nonzero = 0;
    for (const Integer& d : s.invariant_factors()) {
        if (d != 0) ++nonzero;
        if (d >= 2) g.invariant_factors.push_back(d);
    }
    g.free_rank = a.rows() - nonzero;
    return g;
}

}  // namespace toricemb
