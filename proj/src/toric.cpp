#include "toricemb/toric.hpp"

#include <algorithm>

namespace toricemb {

namespace {

Integer mod_residue(const Integer& a, const Integer& k) {
    Integer r = a % k;
    if (r < 0) r += k;
    return r;
}

}  // namespace

AffineToricData make_toric_data(const RayCone& c) {
    RayCone canon = extremal_rays(c);
    if (!is_strongly_convex(canon))
        throw std::invalid_argument("make_toric_data: cone is not strongly convex");
    const std::size_t d = canon.ambient_dim;
    const std::size_t u = canon.rays.size();
    IntMatrix pairing = IntMatrix::from_rows(canon.rays, d);
    if (rank_of(pairing) != d)
        throw std::invalid_argument(
            "make_toric_data: rays do not span the ambient space; the class group "
            "would gain spurious free rank");

    // Class group = Z^u / column span of the pairing map; the left Smith
    // transform carries each ray basis vector to its canonical coordinates.
    SnfResult s = snf(pairing);
    FgAbelianGroup cl;
    std::vector<std::size_t> free_idx, torsion_idx;
    for (std::size_t i = 0; i < u; ++i) {
        if (i >= d) {
            free_idx.push_back(i);
            continue;
        }
        const Integer& di = s.diag.at(i, i);
        if (di >= 2) {
            torsion_idx.push_back(i);
            cl.invariant_factors.push_back(di);
        }
        // di == 1 contributes nothing (rank d, so no zero entries occur).
    }
    cl.free_rank = free_idx.size();

    std::vector<IntVector> degrees;
    degrees.reserve(u);
    for (std::size_t rho = 0; rho < u; ++rho) {
        IntVector ucol = s.u_left.col(rho);
        IntVector deg;
        deg.reserve(free_idx.size() + torsion_idx.size());
        for (std::size_t i : free_idx) deg.push_back(ucol[i]);
        for (std::size_t i : torsion_idx) deg.push_back(mod_residue(ucol[i], s.diag.at(i, i)));
        degrees.push_back(std::move(deg));
    }

    std::vector<IntVector> rays = canon.rays;
    return AffineToricData{std::move(canon), std::move(rays), std::move(pairing), std::move(cl),
                           std::move(degrees)};
}

TDivisor principal_divisor(const AffineToricData& t, const IntVector& m) {
    if (m.size() != t.cone.ambient_dim)
        throw std::invalid_argument("principal_divisor: dimension mismatch");
    return TDivisor{t.pairing_matrix.apply(m)};
}

FgAbelianGroup class_group(const AffineToricData& t) { return t.class_group; }

bool linearly_equivalent(const AffineToricData& t, const TDivisor& a, const TDivisor& b) {
    const std::size_t u = t.rays.size();
    if (a.coefficients.size() != u || b.coefficients.size() != u)
        throw std::invalid_argument("linearly_equivalent: coefficient count mismatch");
    // Solve pairing_matrix * m = a - b over the integers via the Smith form.
    IntVector diff = sub(a.coefficients, b.coefficients);
    SnfResult s = snf(t.pairing_matrix);
    IntVector rhs = s.u_left.apply(diff);
    const std::size_t d = t.cone.ambient_dim;
    for (std::size_t i = 0; i < u; ++i) {
        if (i < d) {
            if (rhs[i] % s.diag.at(i, i) != 0) return false;
        } else if (rhs[i] != 0) {
            return false;
        }
    }
    return true;
}

std::vector<IntVector> pd_points(const AffineToricData& t, const TDivisor& d,
                                 const Integer& box_bound) {
    if (d.coefficients.size() != t.rays.size())
        throw std::invalid_argument("pd_points: coefficient count mismatch");
    if (box_bound < 0) throw std::invalid_argument("pd_points: box_bound must be >= 0");
    const std::size_t dim = t.cone.ambient_dim;
    std::vector<IntVector> pts;
    IntVector m(dim, -box_bound);
    for (;;) {
        bool ok = true;
        for (std::size_t rho = 0; rho < t.rays.size() && ok; ++rho)
            ok = dot(m, t.rays[rho]) >= -d.coefficients[rho];
        if (ok) pts.push_back(m);
        std::size_t i = 0;
        while (i < dim && m[i] == box_bound) {
            m[i] = -box_bound;
            ++i;
        }
        if (i == dim) break;
        m[i] += 1;
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

}  // namespace toricemb
