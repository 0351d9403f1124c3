#include "toricemb/sl2.hpp"

#include "toricemb/semigroup.hpp"

#include <algorithm>

namespace toricemb {

namespace {

std::string vectors_to_string(const std::vector<IntVector>& vs, std::size_t limit = 12) {
    std::string s;
    for (std::size_t i = 0; i < vs.size() && i < limit; ++i) {
        if (i) s += " ";
        s += to_string(vs[i]);
    }
    if (vs.size() > limit) s += " ...";
    return s;
}

}  // namespace

EmbeddingData make_embedding(const Integer& p, const Integer& q, const Integer& r) {
    if (p < 1 || q < p) throw std::invalid_argument("EmbeddingData: need 1 <= p <= q");
    if (int_gcd(p, q) != 1) throw std::invalid_argument("EmbeddingData: p and q must be coprime");
    if (r < 1) throw std::invalid_argument("EmbeddingData: need r >= 1");
    return EmbeddingData{p, q, r};
}

bool is_toric(const EmbeddingData& emb) {
    if (emb.q <= emb.p) return false;
    return emb.r % (emb.q - emb.p) == 0;
}

std::string toricity_reason(const EmbeddingData& emb) {
    Integer d = emb.q - emb.p;
    if (d == 0) return "q-p=0 divides no r>=1 (height-1 embeddings are not toric)";
    if (emb.r % d == 0)
        return "q-p=" + d.get_str() + " divides r=" + emb.r.get_str();
    return "q-p=" + d.get_str() + " does not divide r=" + emb.r.get_str();
}

Integer toric_l(const EmbeddingData& emb) {
    if (!is_toric(emb)) throw std::invalid_argument("toric_l: " + toricity_reason(emb));
    return emb.r / (emb.q - emb.p);
}

FgAbelianGroup cl_group(const EmbeddingData& emb) {
    if (emb.q == emb.p)
        throw std::invalid_argument("cl_group: q = p is rejected (the formula uses q - p)");
    Integer l = emb.r / int_gcd(emb.r, emb.q - emb.p);
    FgAbelianGroup g;
    g.free_rank = 1;
    if (l >= 2) g.invariant_factors.push_back(l);
    return g;
}

RayCone embedding_cone(const EmbeddingData& emb) {
    if (!is_toric(emb)) throw std::invalid_argument("embedding_cone: " + toricity_reason(emb));
    Integer l = toric_l(emb);
    Integer lq = l * emb.q, lp = l * emb.p;
    RayCone c = make_ray_cone(
        3, {{1, 0, 0}, {0, 1, 0}, {Integer(-1), 0, lq}, {0, Integer(-1), lp}});
    if (!is_strongly_convex(c) || extremal_rays(c).rays.size() != 4)
        throw std::logic_error("embedding_cone: construction failed its own law");
    return c;
}

WeightData embedding_weights(const EmbeddingData& emb) {
    if (!is_toric(emb)) throw std::invalid_argument("embedding_weights: " + toricity_reason(emb));
    Integer l = toric_l(emb);
    WeightData w;
    w.num_vars = 4;
    w.torus_rows.push_back({emb.p, emb.p, -emb.q, -emb.q});
    if (l > 1) w.finite_rows.push_back({{1, 1, 0, 0}, l * emb.q});
    return w;
}

GExponent phi_star(const VExponent& v) {
    if (v.a < 0 || v.b < 0 || v.c < 0 || v.d < 0)
        throw std::invalid_argument("phi_star: exponents must be nonnegative");
    return GExponent{v.a, v.c, v.b, v.d};
}

VExponent exponent_from_dual_point(const EmbeddingData& emb, const IntVector& m) {
    if (m.size() != 3) throw std::invalid_argument("exponent_from_dual_point: need a 3-vector");
    Integer l = toric_l(emb);
    VExponent v{m[2] * l * emb.q - m[0], m[0], m[2] * l * emb.p - m[1], m[1]};
    if (v.a < 0 || v.b < 0 || v.c < 0 || v.d < 0)
        throw std::invalid_argument("exponent_from_dual_point: point " + to_string(m) +
                                    " is not level-consistent");
    return v;
}

HeightResult height(const EmbeddingData& emb) {
    HeightResult res{make_rational(emb.p, emb.q), std::nullopt};
    // The defining inequality of the height: l'/(q-p+l') <= p/q for all
    // 0 <= l' <= p, with equality exactly at l' = p. Checked symbolically.
    if (emb.q > emb.p) {
        for (Integer j = 0; j <= emb.p; ++j) {
            Rational ratio = make_rational(j, emb.q - emb.p + j);
            if (j == emb.p ? ratio != res.value : ratio >= res.value)
                throw std::logic_error("height: ratio inequality failed at l'=" + j.get_str());
        }
    }
    if (!is_toric(emb)) return res;

    Integer l = toric_l(emb);
    Integer lq = l * emb.q, lp = l * emb.p;
    WeightData w = embedding_weights(emb);
    VExponent wit{lq, 0, lp, 0};
    if (!monomial_weight(w, wit.as_vector()).all_zero())
        throw std::logic_error("height: witness is not invariant");
    // The witness is the only generator with zero x2- and y2-exponents: any
    // smaller invariant of that shape would need q | a' and lq | a' with
    // 0 < a' < lq.
    for (Integer a = 1; a < lq; ++a) {
        if ((emb.p * a) % emb.q != 0) continue;
        IntVector e{a, 0, (emb.p * a) / emb.q, 0};
        if (monomial_weight(w, e).all_zero())
            throw std::logic_error("height: witness is not the minimal pure generator");
    }
    if (make_rational(lp, lq) != res.value)
        throw std::logic_error("height: witness ratio disagrees with p/q");
    res.witness = wit;
    return res;
}

Integer stabilizer_order(const EmbeddingData& emb) {
    if (emb.q == emb.p)
        throw std::invalid_argument(
            "stabilizer_order: q = p has no open orbit (every stabilizer contains a "
            "one-dimensional torus)");
    return emb.q - emb.p;
}

bool VerifyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
}

Integer default_verify_bound(const EmbeddingData& emb) {
    Integer l = toric_l(emb);
    Integer s = l * emb.q + l * emb.p;
    return s > 10 ? s : Integer(10);
}

VerifyReport verify(const EmbeddingData& emb, const Integer& bound) {
    if (!is_toric(emb)) throw std::invalid_argument("verify: " + toricity_reason(emb));
    VerifyReport rep{emb, bound, {}};

    // 1: the cone is strongly convex with exactly four extremal rays.
    RayCone ec = embedding_cone(emb);
    RayCone ext = extremal_rays(ec);
    bool sc = is_strongly_convex(ec);
    rep.checks.push_back({"cone",
                          ext.rays.size() == 4 && sc,
                          "extremal_rays=" + std::to_string(ext.rays.size()) +
                              " strongly_convex=" + (sc ? "true" : "false") + " rays " +
                              vectors_to_string(ec.rays)});

    // 2: geometric class group vs the closed formula.
    AffineToricData td = make_toric_data(ec);
    FgAbelianGroup formula = cl_group(emb);
    rep.checks.push_back({"class-group",
                          td.class_group == formula,
                          "cone gives " + td.class_group.to_string() + ", formula gives " +
                              formula.to_string()});

    // 3: dual-cone Hilbert basis vs invariant generators, matched through
    // the coordinate change, plus generation up to the bound on both sides.
    RayCone dual = dualize(ec);
    HilbertBasis dual_basis = hilbert_basis_of_cone(dual);
    std::vector<IntVector> mapped;
    mapped.reserve(dual_basis.elements.size());
    for (const IntVector& m : dual_basis.elements)
        mapped.push_back(exponent_from_dual_point(emb, m).as_vector());
    std::sort(mapped.begin(), mapped.end());
    WeightData w = embedding_weights(emb);
    HilbertBasis inv = invariant_generators(w);
    bool same = mapped == inv.elements;
    bool gen_cone = generates_up_to(dual_basis, dual, bound);
    DiophantineSystem ws{w.num_vars, w.torus_rows, w.finite_rows};
    HilbertBasis inv_as_basis{4, inv.elements};
    bool gen_sys = generates_up_to(inv_as_basis, ws, bound);
    std::string d3 = "dual basis has " + std::to_string(dual_basis.elements.size()) +
                     " elements, invariant generators " + std::to_string(inv.elements.size()) +
                     ", generate_cone=" + (gen_cone ? "true" : "false") +
                     ", generate_system=" + (gen_sys ? "true" : "false");
    if (!same)
        d3 += "; mapped: " + vectors_to_string(mapped) +
              " vs invariants: " + vectors_to_string(inv.elements);
    rep.checks.push_back({"semigroup", same && gen_cone && gen_sys, d3});

    // 4: the height, its witness, and the ratio inequality.
    CheckResult c4{"height", false, ""};
    try {
        HeightResult h = height(emb);
        bool wit_invariant =
            h.witness && std::binary_search(inv.elements.begin(), inv.elements.end(),
                                            h.witness->as_vector());
        GExponent img = h.witness ? phi_star(*h.witness) : GExponent{};
        bool pure = h.witness && img.e_gamma == 0 && img.e_delta == 0;
        c4.passed = wit_invariant && pure;
        c4.detail = "height=" + h.value.get_str() +
                    (h.witness ? " witness=" + to_string(h.witness->as_vector()) : "") +
                    " witness_is_generator=" + (wit_invariant ? "true" : "false");
    } catch (const std::logic_error& e) {
        c4.detail = e.what();
    }
    rep.checks.push_back(std::move(c4));
    return rep;
}

}  // namespace toricemb
