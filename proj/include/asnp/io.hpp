#pragma once

// JSON and TSV forms of the pipeline types. Needs nlohmann/json (json.hpp).

#include "asnp/dwork.hpp"
#include "asnp/finite_field.hpp"
#include "asnp/oracle.hpp"
#include "asnp/padic.hpp"
#include "asnp/polygon.hpp"
#include "asnp/rational.hpp"
#include "asnp/scan.hpp"

#include <json.hpp>

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace asnp::io {

using json = nlohmann::json;
using asnp::to_string;

// ---------------------------------------------------------------- scalars

inline json to_json(const Rational& r) { return to_string(r); }

inline json to_json(const Valuation& v) { return {{"value", to_string(v.value)}, {"exact", v.exact}}; }

inline Valuation valuation_from_json(const json& j) {
    return {parse_rational(j.at("value").get<std::string>()), j.at("exact").get<bool>()};
}

/// Coordinates low-to-high: "ξ+2" -> [2,1].
inline json to_json(const FqElem& x) { return x.coords(); }

/// Coefficients low-to-high; an F_p coefficient is a plain integer, others a coordinate array.
inline json to_json(const PolyFq& f) {
    json out = json::array();
    for (const auto& c : f.coeffs()) {
        if (c.in_prime_field()) out.push_back(c.coord(0));
        else out.push_back(c.coords());
    }
    return out;
}

/// (p-1)×a matrix (formal model: N(p-1)×a), row i = coordinates of the π^i component.
inline json to_json(const PiElement& x) {
    json rows = json::array();
    for (size_t i = 0; i < x.len; ++i) rows.push_back(x.comp(i).c);
    return rows;
}

inline PiElement pi_element_from_json(const json& j, const PiRing& R) {
    if (!j.is_array() || j.size() != R.len()) throw std::invalid_argument("PiElement: expected " + std::to_string(R.len()) + " rows");
    std::vector<UnramifiedScalar> comps;
    for (const auto& row : j) {
        auto c = row.get<std::vector<i64>>();
        if (c.size() != static_cast<size_t>(R.ctx().a())) throw std::invalid_argument("PiElement: row length must be a");
        for (i64 v : c)
            if (v < 0 || v >= R.ctx().modulus()) throw std::invalid_argument("PiElement: entry outside [0, p^N)");
        comps.push_back({std::move(c)});
    }
    return R.from_comps(comps);
}

// ---------------------------------------------------------------- polygons

inline json to_json(const NewtonPolygon& P, bool with_points = false) {
    json j;
    j["vertices"] = json::array();
    for (const auto& [x, y] : P.vertices) j["vertices"].push_back({x, to_string(y)});
    j["slopes"] = json::array();
    for (const auto& [s, m] : P.slopes) j["slopes"].push_back({to_string(s), m});
    j["certified"] = P.certified;
    if (!P.certified) j["blocking"] = P.blocking;
    if (with_points) {
        j["points"] = json::array();
        for (const auto& pt : P.points) j["points"].push_back({pt.index, to_string(pt.val.value), pt.val.exact});
    }
    return j;
}

inline NewtonPolygon polygon_from_json(const json& j) {
    std::vector<Vertex> v;
    for (const auto& e : j.at("vertices")) v.emplace_back(e.at(0).get<int>(), parse_rational(e.at(1).get<std::string>()));
    NewtonPolygon P = detail::polygon_from_vertices(std::move(v));
    P.certified = j.at("certified").get<bool>();
    if (j.contains("blocking")) P.blocking = j.at("blocking").get<std::vector<int>>();
    if (j.contains("points"))
        for (const auto& e : j.at("points"))
            P.points.push_back({e.at(0).get<int>(), {parse_rational(e.at(1).get<std::string>()), e.at(2).get<bool>()}});
    // the stored slopes must agree with the vertices
    if (j.contains("slopes")) {
        std::vector<SlopeMult> s;
        for (const auto& e : j.at("slopes")) s.emplace_back(parse_rational(e.at(0).get<std::string>()), e.at(1).get<int>());
        if (s != P.slopes) throw std::invalid_argument("polygon: slopes do not match vertices");
    }
    return P;
}

// ---------------------------------------------------------------- job spec

enum class Format { json, tsv, svg };

inline std::string to_string(Format f) {
    switch (f) {
        case Format::tsv: return "tsv";
        case Format::svg: return "svg";
        default: return "json";
    }
}

inline Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "tsv") return Format::tsv;
    if (s == "svg") return Format::svg;
    throw std::invalid_argument("format: expected json, tsv or svg, got '" + s + "'");
}

/// One pipeline job. f holds one coordinate vector per coefficient, low-to-high.
struct JobSpec {
    i64 p = 0;
    int a = 1;
    std::optional<std::vector<i64>> min_poly;
    std::vector<std::vector<i64>> f;
    std::vector<i64> lambda{1};
    std::optional<int> N;
    std::optional<size_t> m;
    Format format = Format::json;
    bool include_trivial = false;
    bool dump_F = false;
    bool dump_traces = false;

    friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

namespace detail {

inline std::vector<i64> parse_int_list(const std::string& s, const std::string& field, char sep = ',') {
    std::vector<i64> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        const auto first = item.find_first_not_of(" \t");
        item = first == std::string::npos ? "" : item.substr(first, item.find_last_not_of(" \t") - first + 1);
        size_t pos = 0;
        try {
            out.push_back(std::stoll(item, &pos));
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == 0 || pos != item.size()) throw std::invalid_argument(field + ": '" + item + "' is not an integer");
    }
    if (out.empty()) throw std::invalid_argument(field + ": empty list");
    return out;
}

}  // namespace detail

/// "0,0,1" or, for F_q coefficients, "0,2;1,1": commas separate coefficients,
/// semicolons separate the coordinates of one coefficient.
inline std::vector<std::vector<i64>> parse_coefficients(const std::string& s, const std::string& field = "f") {
    std::vector<std::vector<i64>> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(detail::parse_int_list(item, field, ';'));
    if (out.empty()) throw std::invalid_argument(field + ": empty coefficient list");
    return out;
}

inline json to_json(const JobSpec& s) {
    json j;
    j["p"] = s.p;
    j["a"] = s.a;
    j["min_poly"] = s.min_poly ? json(*s.min_poly) : json(nullptr);
    j["f"] = json::array();
    for (const auto& c : s.f) {
        if (c.size() == 1) j["f"].push_back(c[0]);
        else j["f"].push_back(c);
    }
    j["lambda"] = s.lambda;
    j["N"] = s.N ? json(*s.N) : json(nullptr);
    j["m"] = s.m ? json(*s.m) : json(nullptr);
    j["format"] = to_string(s.format);
    j["include_trivial"] = s.include_trivial;
    j["dump_F"] = s.dump_F;
    j["dump_traces"] = s.dump_traces;
    return j;
}

inline JobSpec job_from_json(const json& j) {
    auto field = [&](const char* name, auto fn) {
        try {
            fn();
        } catch (const json::exception& e) {
            throw std::invalid_argument(std::string(name) + ": " + e.what());
        }
    };
    if (!j.is_object()) throw std::invalid_argument("job: expected a JSON object");
    JobSpec s;
    field("p", [&] { s.p = j.at("p").get<i64>(); });
    field("a", [&] {
        if (j.contains("a")) s.a = j.at("a").get<int>();
    });
    field("min_poly", [&] {
        if (j.contains("min_poly") && !j.at("min_poly").is_null()) s.min_poly = j.at("min_poly").get<std::vector<i64>>();
    });
    field("f", [&] {
        s.f.clear();
        for (const auto& c : j.at("f")) {
            if (c.is_array()) s.f.push_back(c.get<std::vector<i64>>());
            else s.f.push_back({c.get<i64>()});
        }
    });
    field("lambda", [&] {
        if (j.contains("lambda")) s.lambda = j.at("lambda").get<std::vector<i64>>();
    });
    field("N", [&] {
        if (j.contains("N") && !j.at("N").is_null()) s.N = j.at("N").get<int>();
    });
    field("m", [&] {
        if (j.contains("m") && !j.at("m").is_null()) s.m = j.at("m").get<size_t>();
    });
    field("format", [&] {
        if (j.contains("format")) s.format = parse_format(j.at("format").get<std::string>());
    });
    field("include_trivial", [&] {
        if (j.contains("include_trivial")) s.include_trivial = j.at("include_trivial").get<bool>();
    });
    field("dump_F", [&] {
        if (j.contains("dump_F")) s.dump_F = j.at("dump_F").get<bool>();
    });
    field("dump_traces", [&] {
        if (j.contains("dump_traces")) s.dump_traces = j.at("dump_traces").get<bool>();
    });
    return s;
}

/// Checked objects for a job; every error names the offending field.
struct ResolvedJob {
    FieldCtx field;
    PolyFq f;
    FqElem lambda;
};

inline ResolvedJob resolve(const JobSpec& s) {
    if (!is_prime(s.p) || s.p < 3) throw std::invalid_argument("p: must be an odd prime, got " + std::to_string(s.p));
    if (s.a < 1) throw std::invalid_argument("a: must be >= 1");
    std::optional<FieldCtx> field;
    try {
        field.emplace(s.p, s.a, s.min_poly.value_or(std::vector<i64>{}));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string(s.min_poly ? "min_poly: " : "a: ") + e.what());
    }
    if (s.f.empty()) throw std::invalid_argument("f: empty coefficient list");
    std::vector<FqElem> coeffs;
    for (const auto& c : s.f) {
        if (c.empty() || c.size() > static_cast<size_t>(s.a))
            throw std::invalid_argument("f: each coefficient needs 1..a coordinates");
        coeffs.push_back(field->element(c));
    }
    std::optional<PolyFq> fp;
    try {
        fp.emplace(*field, coeffs);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("f: ") + e.what());
    }
    const PolyFq& f = *fp;
    if (f.degree() < 1) throw std::invalid_argument("f: must be nonconstant");
    if (!f.degree_coprime_to_p()) throw std::invalid_argument("f: degree " + std::to_string(f.degree()) + " is divisible by p");
    if (s.lambda.empty() || s.lambda.size() > static_cast<size_t>(s.a))
        throw std::invalid_argument("lambda: needs 1..a coordinates");
    FqElem lambda = field->element(s.lambda);
    if (lambda.is_zero()) throw std::invalid_argument("lambda: must be nonzero");
    if (s.N && (*s.N < 1 || *s.N > PadicCtx::max_precision(s.p)))
        throw std::invalid_argument("N: must lie in [1, " + std::to_string(PadicCtx::max_precision(s.p)) + "]");
    if (s.m && *s.m > static_cast<size_t>(f.degree() - 1)) throw std::invalid_argument("m: must not exceed deg f - 1");
    return {*field, f, lambda};
}

// ---------------------------------------------------------------- reports

/// Hodge bound for reports; for d = 1 the polygon of L_f is the point (0,0).
inline NewtonPolygon report_hodge(int d, int a) {
    if (d >= 2) return hodge_polygon(d, a);
    NewtonPolygon P = asnp::detail::polygon_from_vertices({{0, Rational(0)}});
    P.certified = true;
    return P;
}

inline json to_json(const PipelineResult& r, const JobSpec& job) {
    const FieldCtx& F = r.f.field();
    json j;
    j["p"] = F.p();
    j["a"] = F.a();
    j["min_poly"] = F.min_poly();
    j["f"] = to_json(r.f);
    j["lambda"] = to_json(r.lambda);
    j["N"] = r.N;
    j["N_work"] = r.N_work;
    j["m"] = r.m;
    j["n"] = r.n;
    j["attempts"] = r.attempts;
    j["valuations"] = json::array();
    for (size_t i = 0; i < r.coeffs.vals.size(); ++i) {
        json v = to_json(r.coeffs.vals[i]);
        v["index"] = i + 1;
        j["valuations"].push_back(v);
    }
    const int d = r.f.degree();
    NewtonPolygon P = r.polygon;
    NewtonPolygon H = report_hodge(d, F.a());
    if (job.include_trivial) {
        P = with_trivial_factor(P);
        H = with_trivial_factor(H);
    }
    j["polygon"] = to_json(P, true);
    j["hodge"] = to_json(H);
    j["certified"] = r.certified;
    j["status"] = r.status;
    if (job.dump_traces) {
        j["traces"] = json::array();
        for (const auto& t : r.traces) j["traces"].push_back(to_json(t));
    }
    if (job.dump_F) {
        j["F"] = json::array();
        for (const auto& x : r.F) j["F"].push_back(to_json(x));
    }
    return j;
}

/// Columns: index, ord_num, ord_den, exactness (one row per C_i).
inline std::string to_tsv(const PipelineResult& r) {
    std::ostringstream o;
    o << "index\tord_num\tord_den\texactness\n";
    for (size_t i = 0; i < r.coeffs.vals.size(); ++i) {
        const auto& v = r.coeffs.vals[i];
        o << i + 1 << '\t' << v.value.numerator() << '\t' << v.value.denominator() << '\t'
          << (v.exact ? "exact" : "lower_bound") << '\n';
    }
    return o.str();
}

inline json to_json(const ScanReport& rep) {
    json j;
    const FieldCtx& F = rep.f.field();
    j["p"] = F.p();
    j["a"] = F.a();
    j["min_poly"] = F.min_poly();
    j["f"] = to_json(rep.f);
    j["verdict"] = to_string(rep.verdict);
    j["classes"] = json::array();
    for (const auto& c : rep.classes) {
        json e;
        e["class_value"] = to_json(c.cls.value);
        e["lambda"] = to_json(c.cls.representative);
        e["N"] = c.result.N;
        e["m"] = c.result.m;
        e["polygon"] = to_json(c.result.polygon);
        e["valuations"] = json::array();
        for (const auto& v : c.result.coeffs.vals) e["valuations"].push_back(to_json(v));
        if (c.member_check) e["member_check"] = *c.member_check;
        j["classes"].push_back(e);
    }
    if (rep.witnesses) {
        j["witnesses"] = {to_json(rep.classes[rep.witnesses->first].cls.representative),
                          to_json(rep.classes[rep.witnesses->second].cls.representative)};
        json d;
        d["only_first"] = json::array();
        for (const auto& [s, m] : rep.diff.only_left) d["only_first"].push_back({to_string(s), m});
        d["only_second"] = json::array();
        for (const auto& [s, m] : rep.diff.only_right) d["only_second"].push_back({to_string(s), m});
        j["diff"] = d;
    }
    return j;
}

inline json to_json(const CyclotomicInt& x) {
    json a = json::array();
    for (const auto& c : x.coeffs()) a.push_back(c.str());
    return a;
}

inline json to_json(const OracleResult& r, bool include_trivial) {
    json j;
    j["sums"] = json::array();
    for (const auto& s : r.L.sums) j["sums"].push_back(to_json(s));
    j["coefficients"] = json::array();
    for (const auto& c : r.L.coeffs) j["coefficients"].push_back(to_json(c));
    j["degree_checked"] = r.L.degree_checked;
    j["valuations"] = json::array();
    for (const auto& o : r.ords) j["valuations"].push_back(o ? json(to_string(*o)) : json(nullptr));
    j["polygon"] = to_json(include_trivial ? r.polygon_star : r.polygon);
    return j;
}

}  // namespace asnp::io
