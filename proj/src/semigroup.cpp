#include "toricemb/semigroup.hpp"

#include <algorithm>
#include <map>

namespace toricemb {

namespace {

Integer mod_residue(const Integer& a, const Integer& k) {
    Integer r = a % k;
    if (r < 0) r += k;
    return r;
}

bool all_nonneg(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x >= 0; });
}

bool componentwise_leq(const IntVector& a, const IntVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Integer one_norm(const IntVector& v) {
    Integer s = 0;
    for (const Integer& x : v) s += abs(x);
    return s;
}

template <typename F>
void for_each_box_point(std::size_t n, const Integer& lo, const Integer& hi, F&& f) {
    if (lo > hi || n == 0) return;
    IntVector x(n, lo);
    for (;;) {
        f(x);
        std::size_t i = 0;
        while (i < n && x[i] == hi) {
            x[i] = lo;
            ++i;
        }
        if (i == n) return;
        x[i] += 1;
    }
}

// Minimal nonzero solutions of rows * x = 0, x >= 0, by incremental
// completion: grow partial sums from the unit vectors, extending t by e_j
// only when the value vectors of t and e_j meet at an obtuse angle, and
// freezing anything that dominates a known solution. Breadth-first order
// makes every harvested solution minimal.
std::vector<IntVector> minimal_nonneg_solutions(const std::vector<IntVector>& rows,
                                                std::size_t n) {
    const std::size_t m = rows.size();
    std::vector<IntVector> colval(n, IntVector(m));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) colval[j][i] = rows[i][j];

    std::vector<IntVector> basis;
    auto dominated = [&](const IntVector& x) {
        return std::any_of(basis.begin(), basis.end(),
                           [&](const IntVector& b) { return componentwise_leq(b, x); });
    };

    std::map<IntVector, IntVector> frontier;  // partial sum -> value vector
    for (std::size_t j = 0; j < n; ++j) {
        IntVector e(n);
        e[j] = 1;
        frontier.emplace(std::move(e), colval[j]);
    }
    while (!frontier.empty()) {
        for (const auto& [x, val] : frontier)
            if (is_zero(val) && !dominated(x)) basis.push_back(x);
        std::map<IntVector, IntVector> next;
        for (const auto& [x, val] : frontier) {
            if (is_zero(val) || dominated(x)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (dot(val, colval[j]) >= 0) continue;
                IntVector y = x;
                y[j] += 1;
                if (dominated(y) || next.count(y)) continue;
                next.emplace(std::move(y), add(val, colval[j]));
            }
        }
        frontier = std::move(next);
    }
    return basis;
}

// Congruence rows reduced to nonnegative residues and lifted to equalities
// with one slack variable each; rows whose residues vanish impose nothing.
struct LiftedSystem {
    std::size_t num_vars = 0;  // original + slacks
    std::vector<IntVector> rows;
};

LiftedSystem lift_congruences(const DiophantineSystem& s) {
    const std::size_t n = s.num_vars;
    std::vector<IntVector> reduced;
    std::vector<Integer> moduli;
    for (const CongruenceRow& c : s.congruence_rows) {
        IntVector r(n);
        bool nonzero = false;
        for (std::size_t i = 0; i < n; ++i) {
            r[i] = mod_residue(c.row[i], c.modulus);
            if (r[i] != 0) nonzero = true;
        }
        if (nonzero) {
            reduced.push_back(std::move(r));
            moduli.push_back(c.modulus);
        }
    }
    LiftedSystem lifted;
    lifted.num_vars = n + reduced.size();
    for (const IntVector& row : s.equality_rows) {
        IntVector ext = row;
        ext.resize(lifted.num_vars);
        lifted.rows.push_back(std::move(ext));
    }
    for (std::size_t k = 0; k < reduced.size(); ++k) {
        IntVector ext = reduced[k];
        ext.resize(lifted.num_vars);
        ext[n + k] = -moduli[k];
        lifted.rows.push_back(std::move(ext));
    }
    return lifted;
}

// A strongly convex cone as a diophantine system on its facet pairings
// s = W x: s >= 0 is the cone condition and membership of s in the image
// lattice of W is read off the Smith form of W.
struct ConeSystem {
    DiophantineSystem sys;
    IntMatrix w;  // m x d facet normal matrix, rank d
    SnfResult snf_w;
    std::size_t dim = 0;
};

ConeSystem cone_as_system(const RayCone& c, const char* caller) {
    RayCone dual = dualize(c);
    const std::size_t d = c.ambient_dim;
    IntMatrix w = IntMatrix::from_rows(dual.rays, d);
    if (dual.rays.empty() || rank_of(w) != d)
        throw std::invalid_argument(std::string(caller) + ": cone is not strongly convex");
    ConeSystem cs;
    cs.w = std::move(w);
    cs.dim = d;
    cs.snf_w = snf(cs.w);
    const std::size_t m = cs.w.rows();
    cs.sys.num_vars = m;
    for (std::size_t i = 0; i < m; ++i) {
        if (i < d) {
            const Integer& di = cs.snf_w.diag.at(i, i);
            if (di >= 2) cs.sys.congruence_rows.push_back({cs.snf_w.u_left.row(i), di});
        } else {
            cs.sys.equality_rows.push_back(cs.snf_w.u_left.row(i));
        }
    }
    return cs;
}

// The unique x with W x = s, for s in the image lattice.
IntVector cone_point_from_pairings(const ConeSystem& cs, const IntVector& s) {
    IntVector us = cs.snf_w.u_left.apply(s);
    IntVector y(cs.dim);
    for (std::size_t i = 0; i < us.size(); ++i) {
        if (i < cs.dim) {
            const Integer& di = cs.snf_w.diag.at(i, i);
            if (us[i] % di != 0)
                throw std::logic_error("cone_point_from_pairings: value outside image lattice");
            y[i] = us[i] / di;
        } else if (us[i] != 0) {
            throw std::logic_error("cone_point_from_pairings: value outside image lattice");
        }
    }
    return cs.snf_w.v_right.apply(y);
}

// Grading functional that is strictly positive on the cone minus the origin
// (sum of the facet normals of a strongly convex cone).
IntVector cone_grading(const std::vector<IntVector>& normals, std::size_t d) {
    IntVector g(d);
    for (const IntVector& n : normals) g = add(g, n);
    return g;
}

bool in_halfspaces(const std::vector<IntVector>& normals, const IntVector& x) {
    return std::all_of(normals.begin(), normals.end(),
                       [&](const IntVector& n) { return dot(n, x) >= 0; });
}

void sort_graded(std::vector<IntVector>& pts, const IntVector& grading) {
    std::sort(pts.begin(), pts.end(), [&](const IntVector& a, const IntVector& b) {
        Integer ga = dot(grading, a), gb = dot(grading, b);
        if (ga != gb) return ga < gb;
        return a < b;
    });
}

}  // namespace

void validate(const DiophantineSystem& s) {
    if (s.num_vars == 0) throw std::invalid_argument("DiophantineSystem: num_vars must be positive");
    for (const IntVector& r : s.equality_rows)
        if (r.size() != s.num_vars)
            throw std::invalid_argument("DiophantineSystem: equality row length mismatch");
    for (const CongruenceRow& c : s.congruence_rows) {
        if (c.row.size() != s.num_vars)
            throw std::invalid_argument("DiophantineSystem: congruence row length mismatch");
        if (c.modulus < 2) throw std::invalid_argument("DiophantineSystem: modulus must be >= 2");
    }
}

bool satisfies(const DiophantineSystem& s, const IntVector& e) {
    if (e.size() != s.num_vars) throw std::invalid_argument("satisfies: dimension mismatch");
    if (!all_nonneg(e)) return false;
    for (const IntVector& r : s.equality_rows)
        if (dot(r, e) != 0) return false;
    for (const CongruenceRow& c : s.congruence_rows)
        if (mod_residue(dot(c.row, e), c.modulus) != 0) return false;
    return true;
}

HilbertBasis hilbert_basis_of_system(const DiophantineSystem& s) {
    validate(s);
    LiftedSystem lifted = lift_congruences(s);
    std::vector<IntVector> sols = minimal_nonneg_solutions(lifted.rows, lifted.num_vars);
    // Slack values are determined by the original coordinates, so dropping
    // them is an order isomorphism onto the solution monoid.
    std::vector<IntVector> elems;
    elems.reserve(sols.size());
    for (IntVector& sol : sols) {
        sol.resize(s.num_vars);
        elems.push_back(std::move(sol));
    }
    std::sort(elems.begin(), elems.end());
    return HilbertBasis{s.num_vars, std::move(elems)};
}

HilbertBasis hilbert_basis_of_cone(const RayCone& c) {
    ConeSystem cs = cone_as_system(c, "hilbert_basis_of_cone");
    HilbertBasis pairings = hilbert_basis_of_system(cs.sys);
    std::vector<IntVector> elems;
    elems.reserve(pairings.elements.size());
    for (const IntVector& s : pairings.elements)
        elems.push_back(cone_point_from_pairings(cs, s));
    std::sort(elems.begin(), elems.end());
    return HilbertBasis{c.ambient_dim, std::move(elems)};
}

HilbertBasis brute_force_basis(const DiophantineSystem& s, const Integer& bound) {
    validate(s);
    if (bound < 1) throw std::invalid_argument("brute_force_basis: bound must be >= 1");
    std::vector<IntVector> pts;
    for_each_box_point(s.num_vars, 0, bound, [&](const IntVector& e) {
        if (!is_zero(e) && satisfies(s, e)) pts.push_back(e);
    });
    std::sort(pts.begin(), pts.end(), [](const IntVector& a, const IntVector& b) {
        Integer na = one_norm(a), nb = one_norm(b);
        if (na != nb) return na < nb;
        return a < b;
    });
    // A difference of monoid elements satisfies every row, so e is reducible
    // exactly when some smaller basis element fits under it componentwise.
    std::vector<IntVector> basis;
    for (const IntVector& e : pts) {
        bool reducible = std::any_of(basis.begin(), basis.end(), [&](const IntVector& b) {
            return componentwise_leq(b, e);
        });
        if (!reducible) basis.push_back(e);
    }
    std::sort(basis.begin(), basis.end());
    return HilbertBasis{s.num_vars, std::move(basis)};
}

HilbertBasis brute_force_basis(const RayCone& c, const Integer& bound) {
    if (bound < 1) throw std::invalid_argument("brute_force_basis: bound must be >= 1");
    RayCone dual = dualize(c);
    const std::size_t d = c.ambient_dim;
    if (dual.rays.empty() || rank_of(IntMatrix::from_rows(dual.rays, d)) != d)
        throw std::invalid_argument("brute_force_basis: cone is not strongly convex");
    const std::vector<IntVector>& normals = dual.rays;
    IntVector grading = cone_grading(normals, d);

    std::vector<IntVector> pts;
    for_each_box_point(d, -bound, bound, [&](const IntVector& x) {
        if (!is_zero(x) && in_halfspaces(normals, x)) pts.push_back(x);
    });
    sort_graded(pts, grading);
    std::vector<IntVector> basis;
    for (const IntVector& x : pts) {
        bool reducible = std::any_of(basis.begin(), basis.end(), [&](const IntVector& b) {
            return in_halfspaces(normals, sub(x, b));
        });
        if (!reducible) basis.push_back(x);
    }
    std::sort(basis.begin(), basis.end());
    return HilbertBasis{d, std::move(basis)};
}

bool generates_up_to(const HilbertBasis& basis, const DiophantineSystem& s,
                     const Integer& bound) {
    validate(s);
    if (basis.ambient_dim != s.num_vars)
        throw std::invalid_argument("generates_up_to: dimension mismatch");
    std::vector<IntVector> pts;
    for_each_box_point(s.num_vars, 0, bound, [&](const IntVector& e) {
        if (satisfies(s, e)) pts.push_back(e);
    });
    std::sort(pts.begin(), pts.end(), [](const IntVector& a, const IntVector& b) {
        Integer na = one_norm(a), nb = one_norm(b);
        if (na != nb) return na < nb;
        return a < b;
    });
    std::map<IntVector, bool> reach;
    for (const IntVector& e : pts) {
        bool ok = is_zero(e);
        for (const IntVector& g : basis.elements) {
            if (ok) break;
            if (is_zero(g) || !componentwise_leq(g, e)) continue;
            auto it = reach.find(sub(e, g));
            ok = it != reach.end() && it->second;
        }
        reach[e] = ok;
        if (!ok) return false;
    }
    return true;
}

bool generates_up_to(const HilbertBasis& basis, const RayCone& c, const Integer& bound) {
    if (basis.ambient_dim != c.ambient_dim)
        throw std::invalid_argument("generates_up_to: dimension mismatch");
    RayCone dual = dualize(c);
    const std::size_t d = c.ambient_dim;
    if (dual.rays.empty() || rank_of(IntMatrix::from_rows(dual.rays, d)) != d)
        throw std::invalid_argument("generates_up_to: cone is not strongly convex");
    const std::vector<IntVector>& normals = dual.rays;
    IntVector grading = cone_grading(normals, d);

    std::vector<IntVector> pts;
    for_each_box_point(d, -bound, bound, [&](const IntVector& x) {
        if (in_halfspaces(normals, x)) pts.push_back(x);
    });
    sort_graded(pts, grading);
    std::map<IntVector, bool> reach;
    for (const IntVector& x : pts) {
        bool ok = is_zero(x);
        for (const IntVector& g : basis.elements) {
            if (ok) break;
            if (is_zero(g)) continue;
            IntVector diff = sub(x, g);
            if (!in_halfspaces(normals, diff)) continue;
            auto it = reach.find(diff);
            ok = it != reach.end() && it->second;
        }
        reach[x] = ok;
        if (!ok) return false;
    }
    return true;
}

}  // namespace toricemb
