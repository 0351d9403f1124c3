#include "toricemb/cone.hpp"

#include <algorithm>
#include <numeric>

namespace toricemb {

namespace {

// Exact Gaussian elimination; a must be square and nonsingular.
std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> a,
                                     std::vector<Rational> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::logic_error("solve_rational: singular system");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rational f = a[row][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
            b[row] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

bool in_span(const std::vector<IntVector>& basis, const IntVector& v) {
    if (basis.empty()) return is_zero(v);
    std::vector<IntVector> ext = basis;
    ext.push_back(v);
    return rank_of(IntMatrix::from_rows(ext, v.size())) == basis.size();
}

bool all_nonneg_pairings(const std::vector<IntVector>& rays, const IntVector& v) {
    return std::all_of(rays.begin(), rays.end(),
                       [&](const IntVector& r) { return dot(r, v) >= 0; });
}

// Component of w orthogonal to span(lin), scaled to a primitive integer
// vector. Pairings with the cone's rays are unchanged, since lineality
// directions pair to zero with every ray; this makes the representative of
// an extremal direction modulo lineality canonical.
IntVector project_off_lineality(const IntVector& w, const std::vector<IntVector>& lin) {
    if (lin.empty()) return primitive(w);
    const std::size_t k = lin.size();
    std::vector<std::vector<Rational>> gram(k, std::vector<Rational>(k));
    std::vector<Rational> rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) gram[i][j] = Rational(dot(lin[i], lin[j]));
        rhs[i] = Rational(dot(lin[i], w));
    }
    std::vector<Rational> x = solve_rational(gram, rhs);
    std::vector<Rational> perp(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) {
        perp[j] = Rational(w[j]);
        for (std::size_t i = 0; i < k; ++i) perp[j] -= x[i] * Rational(lin[i][j]);
        perp[j].canonicalize();
    }
    Integer scale = 1;
    for (const Rational& e : perp) scale = int_lcm(scale, e.get_den());
    IntVector out(w.size());
    for (std::size_t j = 0; j < w.size(); ++j)
        out[j] = perp[j].get_num() * (scale / perp[j].get_den());
    return primitive(out);
}

// Visit every k-subset of {0, ..., n-1}.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& visit) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        visit(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

RayCone make_ray_cone(std::size_t ambient_dim, const std::vector<IntVector>& rays) {
    if (ambient_dim == 0) throw std::invalid_argument("make_ray_cone: ambient_dim must be positive");
    std::vector<IntVector> canon;
    canon.reserve(rays.size());
    for (const IntVector& r : rays) {
        if (r.size() != ambient_dim)
            throw std::invalid_argument("make_ray_cone: ray dimension mismatch");
        canon.push_back(primitive(r));
    }
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    return RayCone{ambient_dim, std::move(canon)};
}

RayCone dualize(const RayCone& c) {
    const std::size_t d = c.ambient_dim;
    if (d == 0) throw std::invalid_argument("dualize: ambient_dim must be positive");
    std::vector<IntVector> out;
    if (c.rays.empty()) {
        // Zero cone: the dual is the whole space.
        for (std::size_t i = 0; i < d; ++i) {
            IntVector e(d);
            e[i] = 1;
            out.push_back(e);
            out.push_back(negated(e));
        }
        return make_ray_cone(d, out);
    }

    IntMatrix r = IntMatrix::from_rows(c.rays, d);
    const std::vector<IntVector> lin = kernel_basis(r);
    const std::size_t rank = d - lin.size();
    for (const IntVector& l : lin) {
        out.push_back(l);
        out.push_back(negated(l));
    }

    // An extremal direction of the dual (modulo its lineality) lies in the
    // common kernel of rank-1 of the constraints. Enumerate those kernels,
    // keep the feasible sign, and canonicalize modulo the lineality span.
    for_each_subset(c.rays.size(), rank - 1, [&](const std::vector<std::size_t>& idx) {
        std::vector<IntVector> sub;
        sub.reserve(idx.size());
        for (std::size_t i : idx) sub.push_back(c.rays[i]);
        std::vector<IntVector> ker = kernel_basis(IntMatrix::from_rows(sub, d));
        if (ker.size() != lin.size() + 1) return;
        const IntVector* w = nullptr;
        for (const IntVector& cand : ker)
            if (!in_span(lin, cand)) {
                w = &cand;
                break;
            }
        if (!w) return;
        if (all_nonneg_pairings(c.rays, *w))
            out.push_back(project_off_lineality(*w, lin));
        else if (IntVector nw = negated(*w); all_nonneg_pairings(c.rays, nw))
            out.push_back(project_off_lineality(nw, lin));
    });
    return make_ray_cone(d, out);
}

HalfspaceCone halfspaces(const RayCone& c) {
    RayCone dual = dualize(c);
    return HalfspaceCone{c.ambient_dim, std::move(dual.rays)};
}

RayCone extremal_rays(const RayCone& c) {
    RayCone canon = make_ray_cone(c.ambient_dim, c.rays);
    std::vector<IntVector>& rays = canon.rays;
    for (std::size_t i = 0; i < rays.size();) {
        std::vector<IntVector> others;
        others.reserve(rays.size() - 1);
        for (std::size_t j = 0; j < rays.size(); ++j)
            if (j != i) others.push_back(rays[j]);
        if (contains(RayCone{c.ambient_dim, std::move(others)}, rays[i]))
            rays.erase(rays.begin() + i);
        else
            ++i;
    }
    return canon;
}

bool contains(const RayCone& c, const IntVector& v) {
    if (v.size() != c.ambient_dim) throw std::invalid_argument("contains: dimension mismatch");
    return contains(halfspaces(c), v);
}

bool contains(const HalfspaceCone& h, const IntVector& v) {
    if (v.size() != h.ambient_dim) throw std::invalid_argument("contains: dimension mismatch");
    return all_nonneg_pairings(h.normals, v);
}

bool is_strongly_convex(const RayCone& c) {
    RayCone dual = dualize(c);
    if (dual.rays.empty()) return false;
    return rank_of(IntMatrix::from_rows(dual.rays, c.ambient_dim)) == c.ambient_dim;
}

}  // namespace toricemb
