#include "toricemb/cli.hpp"

#include "toricemb/semigroup.hpp"
#include "toricemb/sl2.hpp"
#include "toricemb/toric.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>

namespace toricemb {

namespace {

struct Lines {
    std::vector<std::string> v;

    void add(const std::string& key, const std::string& value) { v.push_back(key + "=" + value); }
    void add(const std::string& key, bool value) { add(key, value ? "true" : "false"); }
    void raw(const std::string& line) { v.push_back(line); }

    std::string join() const {
        std::string s;
        for (const std::string& line : v) {
            s += line;
            s += "\n";
        }
        return s;
    }
};

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw ParseError("file '" + path + "': " + e.what());
    }
    return j;
}

std::size_t parse_dim(const std::string& s, const char* flag) {
    Integer d = parse_integer(s);
    if (d < 1 || !d.fits_ulong_p())
        throw ParseError(std::string(flag) + ": expected a positive integer");
    return static_cast<std::size_t>(d.get_ui());
}

RayCone cone_input(const std::string& file, const std::string& dim, const std::string& rays) {
    if (!file.empty()) {
        if (!dim.empty() || !rays.empty())
            throw ParseError("give either --file or --dim/--rays, not both");
        return cone_from_json(read_json_file(file));
    }
    if (dim.empty() || rays.empty())
        throw ParseError("cone input requires --file, or both --dim and --rays");
    return make_ray_cone(parse_dim(dim, "--dim"), parse_vector_list(rays));
}

EmbeddingData embedding_input(const std::string& p, const std::string& q, const std::string& r) {
    return make_embedding(parse_integer(p), parse_integer(q), parse_integer(r));
}

void emit_cone(const RayCone& c, Lines& out, Json& pay) {
    out.add("dim", std::to_string(c.ambient_dim));
    out.add("rays", render_vector_list(c.rays));
    pay = to_json(c);
}

void do_classify(const EmbeddingData& emb, Lines& out, Json& pay) {
    bool tor = is_toric(emb);
    out.add("p", emb.p.get_str());
    out.add("q", emb.q.get_str());
    out.add("r", emb.r.get_str());
    out.add("toric", tor);
    out.add("reason", toricity_reason(emb));
    pay = Json{{"p", integer_to_json(emb.p)},
               {"q", integer_to_json(emb.q)},
               {"r", integer_to_json(emb.r)},
               {"toric", tor},
               {"reason", toricity_reason(emb)}};
    if (tor) {
        Integer l = toric_l(emb);
        out.add("l", l.get_str());
        pay["l"] = integer_to_json(l);
    }
    if (emb.q > emb.p) {
        FgAbelianGroup g = cl_group(emb);
        out.add("class_group", g.to_string());
        pay["class_group"] = to_json(g);
    } else {
        out.add("class_group", "n/a");
    }
    HeightResult h = height(emb);
    out.add("height", h.value.get_str());
    pay["height"] = h.value.get_str();
    if (h.witness) {
        out.add("height_witness", render_vector(h.witness->as_vector()));
        pay["height_witness"] = vector_to_json(h.witness->as_vector());
    }
}

void do_cone(const RayCone& c, Lines& out, Json& pay) {
    RayCone ext = extremal_rays(c);
    bool sc = is_strongly_convex(c);
    emit_cone(c, out, pay);
    out.add("extremal_rays", render_vector_list(ext.rays));
    out.add("strongly_convex", sc);
    pay["extremal_rays"] = to_json(ext)["rays"];
    pay["strongly_convex"] = sc;
}

void do_dual(const RayCone& c, Lines& out, Json& pay) {
    RayCone d = dualize(c);
    emit_cone(d, out, pay);
}

void do_hilbert_cone(const RayCone& c, Lines& out, Json& pay) {
    HilbertBasis b = hilbert_basis_of_cone(c);
    out.add("dim", std::to_string(b.ambient_dim));
    out.add("count", std::to_string(b.elements.size()));
    out.add("elements", render_vector_list(b.elements));
    pay = to_json(b);
}

void do_hilbert_system(const DiophantineSystem& s, Lines& out, Json& pay) {
    HilbertBasis b = hilbert_basis_of_system(s);
    out.add("vars", std::to_string(s.num_vars));
    out.add("count", std::to_string(b.elements.size()));
    out.add("elements", render_vector_list(b.elements));
    pay = to_json(b);
}

void do_invariants(const WeightData& w, Lines& out, Json& pay) {
    HilbertBasis b = invariant_generators(w);
    out.add("vars", std::to_string(w.num_vars));
    out.add("count", std::to_string(b.elements.size()));
    out.add("generators", render_vector_list(b.elements));
    pay = to_json(b);
    pay["weights"] = to_json(w);
}

void do_class_group(const RayCone& c, Lines& out, Json& pay) {
    AffineToricData t = make_toric_data(c);
    out.add("rays", render_vector_list(t.rays));
    out.add("class_group", t.class_group.to_string());
    out.add("ray_degrees", render_vector_list(t.degree_map));
    pay = Json{{"rays", to_json(t.cone)["rays"]},
               {"class_group", to_json(t.class_group)},
               {"ray_degrees", Json::array()}};
    for (const IntVector& d : t.degree_map) pay["ray_degrees"].push_back(vector_to_json(d));
}

void do_divisor(const RayCone& c, const std::string& m_flag, const std::string& coeffs,
                const std::string& coeffs2, const std::string& box, Lines& out, Json& pay) {
    AffineToricData t = make_toric_data(c);
    out.add("rays", render_vector_list(t.rays));
    pay["rays"] = to_json(t.cone)["rays"];
    if (!m_flag.empty()) {
        TDivisor d = principal_divisor(t, parse_int_vector(m_flag));
        out.add("principal_divisor", render_vector(d.coefficients));
        pay["principal_divisor"] = vector_to_json(d.coefficients);
        return;
    }
    if (coeffs.empty())
        throw ParseError("divisor requires --m, or --coeffs with --box or --coeffs2");
    TDivisor d{parse_int_vector(coeffs)};
    out.add("coefficients", render_vector(d.coefficients));
    pay["coefficients"] = vector_to_json(d.coefficients);
    if (!coeffs2.empty()) {
        TDivisor d2{parse_int_vector(coeffs2)};
        bool eq = linearly_equivalent(t, d, d2);
        out.add("coefficients2", render_vector(d2.coefficients));
        out.add("linearly_equivalent", eq);
        pay["coefficients2"] = vector_to_json(d2.coefficients);
        pay["linearly_equivalent"] = eq;
        return;
    }
    if (box.empty()) throw ParseError("divisor with --coeffs requires --box or --coeffs2");
    Integer b = parse_integer(box);
    std::vector<IntVector> pts = pd_points(t, d, b);
    out.add("box", b.get_str());
    out.add("count", std::to_string(pts.size()));
    out.add("points", render_vector_list(pts));
    pay["box"] = integer_to_json(b);
    pay["points"] = Json::array();
    for (const IntVector& pt : pts) pay["points"].push_back(vector_to_json(pt));
}

void do_verify(const EmbeddingData& emb, const std::string& bound_flag, Lines& out, Json& pay,
               CommandStatus& status) {
    Integer bound = bound_flag.empty() ? default_verify_bound(emb) : parse_integer(bound_flag);
    VerifyReport rep = verify(emb, bound);
    out.add("p", emb.p.get_str());
    out.add("q", emb.q.get_str());
    out.add("r", emb.r.get_str());
    out.add("bound", bound.get_str());
    for (const CheckResult& c : rep.checks) {
        out.add(c.name, c.passed ? "pass" : "fail");
        out.add(c.name + ".detail", c.detail);
    }
    out.add("verified", rep.all_passed());
    pay = to_json(rep);
    if (!rep.all_passed()) status = CommandStatus::check_failure;
}

void do_grid(const std::string& max_q, const std::string& max_r, Lines& out, Json& pay) {
    Integer maxq = parse_integer(max_q), maxr = parse_integer(max_r);
    if (maxq < 2 || maxr < 1) throw ParseError("grid needs --max-q >= 2 and --max-r >= 1");
    out.raw("p q r toric l class_group height");
    pay = Json::array();
    for (Integer q = 2; q <= maxq; ++q)
        for (Integer p = 1; p < q; ++p) {
            if (int_gcd(p, q) != 1) continue;
            for (Integer r = 1; r <= maxr; ++r) {
                EmbeddingData emb = make_embedding(p, q, r);
                bool tor = is_toric(emb);
                FgAbelianGroup g = cl_group(emb);
                HeightResult h = height(emb);
                std::string l = tor ? toric_l(emb).get_str() : "-";
                out.raw(p.get_str() + " " + q.get_str() + " " + r.get_str() + " " +
                        (tor ? "true" : "false") + " " + l + " " + g.to_string() + " " +
                        h.value.get_str());
                pay.push_back(Json{{"p", integer_to_json(p)},
                                   {"q", integer_to_json(q)},
                                   {"r", integer_to_json(r)},
                                   {"toric", tor},
                                   {"l", l},
                                   {"class_group", to_json(g)},
                                   {"height", h.value.get_str()}});
            }
        }
}

DiophantineSystem system_inline(const std::string& vars, const std::string& equalities,
                                const std::string& congruences) {
    DiophantineSystem s;
    s.num_vars = parse_dim(vars, "--vars");
    if (!equalities.empty()) s.equality_rows = parse_vector_list(equalities);
    if (!congruences.empty()) s.congruence_rows = parse_congruence_list(congruences);
    validate(s);
    return s;
}

WeightData weights_inline(const std::string& vars, const std::string& torus,
                          const std::string& finite) {
    WeightData w;
    w.num_vars = parse_dim(vars, "--vars");
    if (!torus.empty()) w.torus_rows = parse_vector_list(torus);
    if (!finite.empty()) w.finite_rows = parse_congruence_list(finite);
    validate(w);
    return w;
}

}  // namespace

int CommandResult::exit_code() const {
    switch (status) {
        case CommandStatus::success: return 0;
        case CommandStatus::check_failure: return 1;
        case CommandStatus::input_error: return 2;
    }
    return 2;
}

CommandResult run_command(std::vector<std::string> args) {
    CommandResult res;
    CLI::App app{"exact polyhedral, semigroup and class-group computations for toric embeddings"};
    app.name("toricemb");
    app.require_subcommand(1);
    bool machine = false;
    app.add_flag("--machine", machine, "print structured JSON instead of key=value lines");

    std::string p, q, r, bound, file, dim, rays, system_file, vars, equalities, congruences;
    std::string torus, finite, m_flag, coeffs, coeffs2, box, max_q = "6", max_r = "12";

    CLI::App* classify = app.add_subcommand(
        "classify", "toricity, class group and height of the embedding (p/q, r)");
    classify->add_option("--p", p, "numerator of the height")->required();
    classify->add_option("--q", q, "denominator of the height")->required();
    classify->add_option("--r", r, "degree (order of the generic stabilizer)")->required();

    CLI::App* cone_cmd =
        app.add_subcommand("cone", "canonical form, extremal rays and convexity of a cone");
    CLI::App* dual_cmd = app.add_subcommand("dual", "dual cone");
    CLI::App* hilbert = app.add_subcommand(
        "hilbert", "Hilbert basis of a cone monoid or of a diophantine system");
    CLI::App* invariants = app.add_subcommand(
        "invariants", "generators of the invariant monomial algebra of a quasitorus action");
    CLI::App* class_group_cmd =
        app.add_subcommand("class-group", "divisor class group and ray degrees of a toric cone");
    CLI::App* divisor = app.add_subcommand(
        "divisor", "principal divisors, section points and linear equivalence");
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "cross-check cone, class group, semigroup and height for an embedding");
    CLI::App* grid =
        app.add_subcommand("grid", "classification table over p < q <= Q, r <= R");

    for (CLI::App* sc : {cone_cmd, dual_cmd, hilbert, class_group_cmd, divisor}) {
        sc->add_option("--file", file, "cone as a JSON file {\"dim\":..,\"rays\":[[..],..]}");
        sc->add_option("--dim", dim, "ambient dimension");
        sc->add_option("--rays", rays, "rays, e.g. \"1,0,0;0,1,0\"");
    }
    hilbert->add_option("--system", system_file, "diophantine system as a JSON file");
    hilbert->add_option("--vars", vars, "number of variables (inline system)");
    hilbert->add_option("--equalities", equalities, "equality rows, e.g. \"1,-1\"");
    hilbert->add_option("--congruences", congruences, "congruence rows, e.g. \"1,1,0,0@4\"");
    invariants->add_option("--file", file, "weight data as a JSON file");
    invariants->add_option("--vars", vars, "number of variables");
    invariants->add_option("--torus", torus, "torus weight rows, e.g. \"1,1,-2,-2\"");
    invariants->add_option("--finite", finite, "cyclic rows, e.g. \"1,1,0,0@4\"");
    divisor->add_option("--m", m_flag, "character exponent for a principal divisor");
    divisor->add_option("--coeffs", coeffs, "divisor coefficients in canonical ray order");
    divisor->add_option("--coeffs2", coeffs2, "second divisor, for linear equivalence");
    divisor->add_option("--box", box, "sup-norm bound for section points");
    verify_cmd->add_option("--p", p)->required();
    verify_cmd->add_option("--q", q)->required();
    verify_cmd->add_option("--r", r)->required();
    verify_cmd->add_option("--bound", bound, "generation bound (default max(10, lq+lp))");
    grid->add_option("--max-q", max_q, "largest q (default 6)");
    grid->add_option("--max-r", max_r, "largest r (default 12)");

    for (CLI::App* sc : app.get_subcommands({})) sc->fallthrough();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        res.text = app.help();
        return res;
    } catch (const CLI::ParseError& e) {
        res.status = CommandStatus::input_error;
        res.payload = Json{{"error", e.what()}};
        res.text = std::string("error: ") + e.what() + "\n";
        return res;
    }

    Lines out;
    try {
        if (app.got_subcommand(classify)) {
            do_classify(embedding_input(p, q, r), out, res.payload);
        } else if (app.got_subcommand(cone_cmd)) {
            do_cone(cone_input(file, dim, rays), out, res.payload);
        } else if (app.got_subcommand(dual_cmd)) {
            do_dual(cone_input(file, dim, rays), out, res.payload);
        } else if (app.got_subcommand(hilbert)) {
            bool has_system = !system_file.empty() || !vars.empty();
            bool has_cone = !file.empty() || !dim.empty() || !rays.empty();
            if (has_system && has_cone)
                throw ParseError("hilbert: give a cone or a system, not both");
            if (has_system) {
                DiophantineSystem s = system_file.empty()
                                          ? system_inline(vars, equalities, congruences)
                                          : system_from_json(read_json_file(system_file));
                do_hilbert_system(s, out, res.payload);
            } else {
                do_hilbert_cone(cone_input(file, dim, rays), out, res.payload);
            }
        } else if (app.got_subcommand(invariants)) {
            WeightData w = file.empty() ? weights_inline(vars, torus, finite)
                                        : weights_from_json(read_json_file(file));
            do_invariants(w, out, res.payload);
        } else if (app.got_subcommand(class_group_cmd)) {
            do_class_group(cone_input(file, dim, rays), out, res.payload);
        } else if (app.got_subcommand(divisor)) {
            do_divisor(cone_input(file, dim, rays), m_flag, coeffs, coeffs2, box, out,
                       res.payload);
        } else if (app.got_subcommand(verify_cmd)) {
            do_verify(embedding_input(p, q, r), bound, out, res.payload, res.status);
        } else if (app.got_subcommand(grid)) {
            do_grid(max_q, max_r, out, res.payload);
        }
    } catch (const ParseError& e) {
        res.status = CommandStatus::input_error;
        res.payload = Json{{"error", e.what()}};
        res.text = std::string("error: ") + e.what() + "\n";
        return res;
    } catch (const std::invalid_argument& e) {
        res.status = CommandStatus::input_error;
        res.payload = Json{{"error", e.what()}};
        res.text = std::string("error: ") + e.what() + "\n";
        return res;
    }

    res.text = machine ? res.payload.dump(2) + "\n" : out.join();
    return res;
}

}  // namespace toricemb
