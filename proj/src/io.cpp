#include "toricemb/io.hpp"

#include <algorithm>
#include <cctype>

namespace toricemb {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    for (;;) {
        std::size_t next = s.find(sep, pos);
        out.push_back(s.substr(pos, next - pos));
        if (next == std::string::npos) return out;
        pos = next + 1;
    }
}

std::size_t size_from_json(const Json& j, const char* what) {
    Integer n = integer_from_json(j);
    if (n < 1 || !n.fits_ulong_p()) throw ParseError(std::string(what) + ": bad positive integer");
    return static_cast<std::size_t>(n.get_ui());
}

}  // namespace

Integer parse_integer(const std::string& token) {
    std::string t = trim(token);
    if (t.empty()) throw ParseError("empty integer token");
    try {
        return Integer(t);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad integer token '" + t + "'");
    }
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<long long>());
    if (j.is_string()) return parse_integer(j.get<std::string>());
    throw ParseError("expected an integer, got " + j.dump());
}

Json integer_to_json(const Integer& x) {
    if (x.fits_slong_p()) return Json(static_cast<long long>(x.get_si()));
    return Json(x.get_str());
}

IntVector vector_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of integers, got " + j.dump());
    IntVector v;
    v.reserve(j.size());
    for (const Json& e : j) v.push_back(integer_from_json(e));
    return v;
}

Json vector_to_json(const IntVector& v) {
    Json j = Json::array();
    for (const Integer& x : v) j.push_back(integer_to_json(x));
    return j;
}

Json to_json(const RayCone& c) {
    Json rays = Json::array();
    for (const IntVector& r : c.rays) rays.push_back(vector_to_json(r));
    return Json{{"dim", c.ambient_dim}, {"rays", std::move(rays)}};
}

RayCone cone_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("rays"))
        throw ParseError("cone: expected an object with fields 'dim' and 'rays'");
    std::size_t dim = size_from_json(j["dim"], "cone.dim");
    if (!j["rays"].is_array()) throw ParseError("cone.rays: expected an array");
    std::vector<IntVector> rays;
    for (const Json& r : j["rays"]) rays.push_back(vector_from_json(r));
    return make_ray_cone(dim, rays);
}

Json to_json(const DiophantineSystem& s) {
    Json eq = Json::array(), cg = Json::array();
    for (const IntVector& r : s.equality_rows) eq.push_back(vector_to_json(r));
    for (const CongruenceRow& c : s.congruence_rows)
        cg.push_back(Json{{"row", vector_to_json(c.row)}, {"mod", integer_to_json(c.modulus)}});
    return Json{{"vars", s.num_vars}, {"equalities", std::move(eq)}, {"congruences", std::move(cg)}};
}

namespace {

std::vector<CongruenceRow> congruences_from_json(const Json& j, const char* what) {
    std::vector<CongruenceRow> out;
    if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array");
    for (const Json& c : j) {
        if (!c.is_object() || !c.contains("row") || !c.contains("mod"))
            throw ParseError(std::string(what) + ": entries need fields 'row' and 'mod'");
        out.push_back({vector_from_json(c["row"]), integer_from_json(c["mod"])});
    }
    return out;
}

}  // namespace

DiophantineSystem system_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vars"))
        throw ParseError("system: expected an object with field 'vars'");
    DiophantineSystem s;
    s.num_vars = size_from_json(j["vars"], "system.vars");
    if (j.contains("equalities")) {
        if (!j["equalities"].is_array()) throw ParseError("system.equalities: expected an array");
        for (const Json& r : j["equalities"]) s.equality_rows.push_back(vector_from_json(r));
    }
    if (j.contains("congruences"))
        s.congruence_rows = congruences_from_json(j["congruences"], "system.congruences");
    validate(s);
    return s;
}

Json to_json(const WeightData& w) {
    Json torus = Json::array(), finite = Json::array();
    for (const IntVector& r : w.torus_rows) torus.push_back(vector_to_json(r));
    for (const CongruenceRow& c : w.finite_rows)
        finite.push_back(Json{{"row", vector_to_json(c.row)}, {"mod", integer_to_json(c.modulus)}});
    return Json{{"vars", w.num_vars}, {"torus", std::move(torus)}, {"finite", std::move(finite)}};
}

WeightData weights_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vars"))
        throw ParseError("weights: expected an object with field 'vars'");
    WeightData w;
    w.num_vars = size_from_json(j["vars"], "weights.vars");
    if (j.contains("torus")) {
        if (!j["torus"].is_array()) throw ParseError("weights.torus: expected an array");
        for (const Json& r : j["torus"]) w.torus_rows.push_back(vector_from_json(r));
    }
    if (j.contains("finite")) w.finite_rows = congruences_from_json(j["finite"], "weights.finite");
    validate(w);
    return w;
}

Json to_json(const HilbertBasis& b) {
    Json elems = Json::array();
    for (const IntVector& e : b.elements) elems.push_back(vector_to_json(e));
    return Json{{"dim", b.ambient_dim}, {"elements", std::move(elems)}};
}

Json to_json(const FgAbelianGroup& g) {
    Json factors = Json::array();
    for (const Integer& k : g.invariant_factors) factors.push_back(integer_to_json(k));
    return Json{{"free_rank", g.free_rank},
                {"invariant_factors", std::move(factors)},
                {"name", g.to_string()}};
}

Json to_json(const VerifyReport& r) {
    Json checks = Json::array();
    for (const CheckResult& c : r.checks)
        checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return Json{{"p", integer_to_json(r.embedding.p)},
                {"q", integer_to_json(r.embedding.q)},
                {"r", integer_to_json(r.embedding.r)},
                {"bound", integer_to_json(r.bound)},
                {"checks", std::move(checks)},
                {"all_passed", r.all_passed()}};
}

IntVector parse_int_vector(const std::string& s) {
    IntVector v;
    for (const std::string& tok : split(s, ',')) v.push_back(parse_integer(tok));
    return v;
}

std::vector<IntVector> parse_vector_list(const std::string& s) {
    std::vector<IntVector> out;
    for (const std::string& part : split(s, ';')) {
        std::string t = trim(part);
        if (t.empty()) continue;
        out.push_back(parse_int_vector(t));
    }
    if (out.empty()) throw ParseError("empty vector list '" + s + "'");
    return out;
}

CongruenceRow parse_congruence(const std::string& s) {
    std::vector<std::string> parts = split(s, '@');
    if (parts.size() != 2) throw ParseError("congruence '" + s + "': expected 'row@mod'");
    return {parse_int_vector(parts[0]), parse_integer(parts[1])};
}

std::vector<CongruenceRow> parse_congruence_list(const std::string& s) {
    std::vector<CongruenceRow> out;
    for (const std::string& part : split(s, ';')) {
        std::string t = trim(part);
        if (t.empty()) continue;
        out.push_back(parse_congruence(t));
    }
    return out;
}

std::string render_vector(const IntVector& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s;
}

std::string render_vector_list(const std::vector<IntVector>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ";";
        s += render_vector(vs[i]);
    }
    return s;
}

}  // namespace toricemb
