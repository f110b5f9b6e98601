#include "ipls/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace ipls {

namespace {

[[noreturn]] void schema(const std::string& what) { throw SchemaError("system document: " + what); }

double number(const Json& j, const std::string& where) {
    if (!j.is_number()) schema(where + " must be a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw InvalidArgument("system document: " + where + " is not finite");
    return v;
}

RealVector vector_from(const Json& j, std::size_t n, const std::string& where) {
    if (!j.is_array()) schema(where + " must be an array");
    if (j.size() != n) throw DimensionMismatch("system document: " + where + " must have length " + std::to_string(n));
    RealVector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(number(j[i], where));
    return v;
}

RealMatrix matrix_from(const Json& j, std::size_t n, const std::string& where) {
    if (!j.is_array()) schema(where + " must be an array of rows");
    if (j.size() != n) throw DimensionMismatch("system document: " + where + " must have " + std::to_string(n) + " rows");
    RealMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const RealVector row = vector_from(j[i], n, where);
        for (std::size_t c = 0; c < n; ++c) m(i, c) = row[c];
    }
    return m;
}

std::size_t count_field(const Json& doc, const char* key) {
    if (!doc.contains(key)) schema(std::string("missing \"") + key + "\"");
    const Json& v = doc[key];
    if (!v.is_number_integer() || v.get<long long>() < 0) schema(std::string("\"") + key + "\" must be a non-negative integer");
    return static_cast<std::size_t>(v.get<long long>());
}

Json real_vector(const RealVector& v) { return Json(v); }

Json column_names(const ParametricLinearSystem& sys, const RankOneRepresentation& rep) {
    Json names = Json::array();
    for (std::size_t k : rep.q_parameters()) names.push_back(sys.name(k));
    return names;
}

Json signs_json(const std::vector<int>& s) { return Json(s); }

}  // namespace

Json to_json(const Interval& a) { return Json::array({a.lo(), a.hi()}); }

Json to_json(const IntervalVector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

Json to_json(const RealMatrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const auto r = m.row(i);
        out.push_back(Json(std::vector<double>(r.begin(), r.end())));
    }
    return out;
}

Interval interval_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw SchemaError("interval must be a two-element array [lo, hi]");
    return Interval(number(j[0], "interval endpoint"), number(j[1], "interval endpoint"));
}

ParametricLinearSystem load_system(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::exception& e) {
        throw SchemaError(std::string("system document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) schema("top level must be an object");
    const std::size_t n = count_field(doc, "n");
    const std::size_t K = count_field(doc, "K");
    if (n == 0) schema("\"n\" must be positive");
    if (!doc.contains("A0") || !doc.contains("a0")) schema("missing \"A0\" or \"a0\"");
    RealMatrix A0 = matrix_from(doc["A0"], n, "A0");
    RealVector a0 = vector_from(doc["a0"], n, "a0");
    if (!doc.contains("terms") || !doc["terms"].is_array()) schema("\"terms\" must be an array");
    const Json& terms = doc["terms"];
    if (terms.size() != K) schema("\"K\" does not match the number of terms");

    std::vector<ParametricLinearSystem::Term> out;
    for (std::size_t k = 0; k < K; ++k) {
        const Json& t = terms[k];
        const std::string where = "terms[" + std::to_string(k) + "]";
        if (!t.is_object()) schema(where + " must be an object");
        ParametricLinearSystem::Term term;
        if (t.contains("name")) {
            if (!t["name"].is_string()) schema(where + ".name must be a string");
            term.name = t["name"].get<std::string>();
        }
        if (t.contains("A")) term.A = matrix_from(t["A"], n, where + ".A");
        if (t.contains("a")) term.a = vector_from(t["a"], n, where + ".a");
        if (!t.contains("interval")) schema(where + " is missing \"interval\"");
        try {
            term.range = interval_from_json(t["interval"]);
        } catch (const SchemaError&) {
            schema(where + ".interval must be [lo, hi]");
        }
        out.push_back(std::move(term));
    }
    if (doc.contains("names")) {
        const Json& names = doc["names"];
        if (!names.is_array() || names.size() != K) schema("\"names\" must list K strings");
        for (std::size_t k = 0; k < K; ++k) {
            if (!names[k].is_string()) schema("\"names\" must list K strings");
            const std::string nm = names[k].get<std::string>();
            if (out[k].name.empty()) out[k].name = nm;
            else if (out[k].name != nm) schema("names[" + std::to_string(k) + "] disagrees with the term name");
        }
    }
    return ParametricLinearSystem(std::move(A0), std::move(a0), std::move(out));
}

ParametricLinearSystem load_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_system(ss.str());
}

Json serialize_system(const ParametricLinearSystem& sys) {
    Json doc;
    doc["n"] = sys.dimension();
    doc["K"] = sys.parameter_count();
    doc["names"] = sys.names();
    doc["A0"] = to_json(sys.constant_matrix());
    doc["a0"] = real_vector(sys.constant_rhs());
    Json terms = Json::array();
    for (const auto& t : sys.terms()) {
        Json j;
        j["name"] = t.name;
        if (!t.A.empty()) j["A"] = to_json(t.A);
        if (!t.a.empty()) j["a"] = real_vector(t.a);
        j["interval"] = to_json(t.range);
        terms.push_back(std::move(j));
    }
    doc["terms"] = std::move(terms);
    return doc;
}

Json representation_json(const ParametricLinearSystem& sys, const RankOneRepresentation& rep) {
    Json j;
    j["L"] = to_json(rep.L);
    j["R"] = to_json(rep.R);
    j["F"] = to_json(rep.F);
    j["t"] = real_vector(rep.t);
    j["gamma"] = rep.gamma();
    j["gamma_k"] = rep.gamma_k;
    Json pp = Json::array(), pdp = Json::array();
    for (std::size_t k : rep.partition.pi_prime) pp.push_back(sys.name(k));
    for (std::size_t k : rep.partition.pi_double_prime) pdp.push_back(sys.name(k));
    j["pi_prime"] = std::move(pp);
    j["pi_double_prime"] = std::move(pdp);
    j["transposed"] = rep.transposed;
    return j;
}

Json enclosure_json(const EnclosureRun& run) {
    Json j;
    j["method"] = to_string(run.enclosure.method);
    j["rho_strong"] = run.central.rho_strong;
    j["rho_weak"] = run.central.rho_weak;
    j["x"] = to_json(run.enclosure.x);
    j["y"] = to_json(run.enclosure.y);
    j["iterations"] = run.enclosure.iterations;
    return j;
}

Json parameterized_json(const ParametricLinearSystem& sys, const ParameterizedSolutionP& s) {
    Json j;
    j["form"] = "p";
    j["x_mid"] = real_vector(s.x_mid);
    j["W_dp"] = to_json(s.W_dp);
    j["W_g"] = to_json(s.W_g);
    j["column_order"] = column_names(sys, s.rep);
    return j;
}

Json parameterized_json(const ParametricLinearSystem& sys, const ParameterizedSolutionK& s) {
    Json j;
    j["form"] = "k";
    j["x_mid"] = real_vector(s.x_mid);
    j["U"] = to_json(s.U);
    j["r_hat"] = real_vector(s.r_hat);
    j["column_order"] = column_names(sys, s.rep);
    return j;
}

Json inner_json(const InnerEstimate& e) {
    Json x = Json::array();
    for (const auto& c : e.x_in) x.push_back(c ? to_json(*c) : Json(nullptr));
    Json j;
    j["x_in"] = std::move(x);
    j["v_low"] = to_json(e.v_low);
    j["v_up"] = to_json(e.v_up);
    return j;
}

Json hull_report_json(const HullReport& r) {
    Json j;
    j["parameter_names"] = r.parameter_names;
    Json order = Json::array();
    for (std::size_t k : r.column_order) order.push_back(r.parameter_names[k]);
    j["column_order"] = std::move(order);
    j["signs_source"] = r.signs_source;
    j["oracle_mode"] = r.oracle_mode ? Json(to_string(*r.oracle_mode)) : Json(nullptr);
    Json comps = Json::array();
    for (std::size_t i = 0; i < r.components.size(); ++i) {
        const HullComponent& c = r.components[i];
        Json cj;
        cj["component"] = i + 1;
        cj["claimed_signs"] = signs_json(c.claimed_signs);
        if (r.oracle_mode) {
            cj["oracle_lower_signs"] = signs_json(c.oracle_signs.lower_vertex);
            cj["oracle_upper_signs"] = signs_json(c.oracle_signs.upper_vertex);
        }
        cj["hull"] = c.endpoint.hull ? to_json(*c.endpoint.hull) : Json(nullptr);
        cj["reversed"] = c.endpoint.reversed;
        cj["path_disagreement"] = c.endpoint.path_disagreement;
        cj["r_star"] = Json::array({c.endpoint.r_star.lo(), c.endpoint.r_star.hi()});
        if (!c.endpoint.error.empty()) cj["error"] = c.endpoint.error;
        cj["oracle_hull"] = c.oracle_hull ? to_json(*c.oracle_hull) : Json(nullptr);
        cj["verdict"] = to_string(c.verdict);
        comps.push_back(std::move(cj));
    }
    j["components"] = std::move(comps);
    j["claimed_table"] = render_claimed_table(r);
    if (r.oracle_mode) j["oracle_table"] = render_oracle_table(r);
    return j;
}

Json sample_hull_json(const SampleHull& s) {
    Json j;
    j["hull_lower_bound"] = to_json(s.hull_lower_bound);
    j["sample_count"] = s.sample_count;
    j["singular_count"] = s.singular_count;
    j["seed"] = s.seed;
    return j;
}

Json quality_json(const std::vector<QualityRow>& rows) {
    Json out = Json::array();
    for (const auto& r : rows) {
        Json j;
        j["component"] = r.component + 1;
        j["O_s"] = r.sharpness;
        j["O_w"] = r.overestimation ? Json(*r.overestimation) : Json(nullptr);
        out.push_back(std::move(j));
    }
    return out;
}

}  // namespace ipls
