#pragma once

// JSON wire formats.  Scalars are strings "p/q" in exact mode and plain
// numbers in float mode; a document must commit to one mode and readers
// reject the mixture.  Every reader checks its object against the set of
// allowed keys so unknown fields fail loudly instead of being ignored.

#include "toric/fan.hpp"
#include "toric/hausdorff.hpp"
#include "toric/points.hpp"
#include "toric/secondary.hpp"

#include <json.hpp>

#include <set>
#include <string>

namespace toric {

using nlohmann::json;

inline void require_keys(const json& obj, const std::string& what,
                         const std::set<std::string>& required,
                         const std::set<std::string>& optional = {}) {
    if (!obj.is_object()) throw ParseError(what + ": expected an object");
    for (const auto& k : required)
        if (!obj.contains(k)) throw ParseError(what + ": missing field '" + k + "'");
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!required.count(it.key()) && !optional.count(it.key()))
            throw ParseError(what + ": unknown field '" + it.key() + "'");
}

// ---------------------------------------------------------------------------
// scalars

template <class T>
json scalar_to_json(const T& x) {
    if constexpr (scalar_traits<T>::exact) return scalar_to_string(x);
    else return x;
}

template <class T>
T scalar_from_json(const json& j) {
    if constexpr (scalar_traits<T>::exact) {
        if (j.is_string()) return rat_from_string(j.get<std::string>());
        if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
        throw ParseError("exact mode expects scalars as \"p/q\" strings or integers");
    } else {
        if (j.is_number()) return j.get<double>();
        if (j.is_string())
            throw ParseError("float mode expects numeric scalars, found a string");
        throw ParseError("expected a numeric scalar");
    }
}

/// true when the document carries any "p/q" string scalars (exact mode)
inline bool document_prefers_exact(const json& j) {
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        return !s.empty() && (std::isdigit(static_cast<unsigned char>(s[0])) || s[0] == '-');
    }
    if (j.is_array() || j.is_object()) {
        for (const auto& el : j)
            if (document_prefers_exact(el)) return true;
    }
    return false;
}

template <class T>
Vec<T> vec_from_json(const json& j, std::size_t expect_dim = 0) {
    if (!j.is_array()) throw ParseError("expected an array of scalars");
    Vec<T> v;
    for (const auto& el : j) v.push_back(scalar_from_json<T>(el));
    if (expect_dim && v.size() != expect_dim)
        throw ParseError("vector has wrong dimension");
    return v;
}

template <class T>
json vec_to_json(const Vec<T>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(scalar_to_json(x));
    return a;
}

// ---------------------------------------------------------------------------
// cones

template <class T>
json cone_to_json(const Cone<T>& c) {
    json gens = json::array();
    for (const auto& g : c.generators()) gens.push_back(vec_to_json(g));
    return json{{"dim", c.ambient_dim()}, {"generators", gens}};
}

template <class T>
Cone<T> cone_from_json(const json& j) {
    require_keys(j, "cone", {"dim", "generators"});
    std::size_t dim = j.at("dim").get<std::size_t>();
    std::vector<Vec<T>> gens;
    for (const auto& g : j.at("generators")) gens.push_back(vec_from_json<T>(g, dim));
    return Cone<T>::from_generators(dim, gens);
}

// ---------------------------------------------------------------------------
// fans

template <class T>
json fan_to_json(const Fan<T>& f) {
    json cones = json::array();
    for (const auto& c : f.cones()) cones.push_back(cone_to_json(c));
    json out{{"dim", f.ambient_dim()}, {"cones", cones}};
    bool labeled = false;
    for (const auto& l : f.labels())
        if (!l.empty()) labeled = true;
    if (labeled) {
        json labels = json::array();
        for (const auto& l : f.labels()) labels.push_back(l);
        out["labels"] = labels;
    }
    return out;
}

template <class T>
Fan<T> fan_from_json(const json& j) {
    require_keys(j, "fan", {"dim", "cones"}, {"labels"});
    std::size_t dim = j.at("dim").get<std::size_t>();
    std::vector<Cone<T>> cones;
    for (const auto& c : j.at("cones")) cones.push_back(cone_from_json<T>(c));
    return validate_fan(dim, cones);
}

// ---------------------------------------------------------------------------
// point configurations

template <class T>
json config_to_json(const PointConfiguration<T>& p) {
    json pts = json::array();
    for (const auto& a : p.points) pts.push_back(vec_to_json(a));
    return json{{"dim", p.dim}, {"points", pts}};
}

template <class T>
PointConfiguration<T> config_from_json(const json& j) {
    require_keys(j, "configuration", {"dim", "points"});
    std::size_t dim = j.at("dim").get<std::size_t>();
    std::vector<Vec<T>> pts;
    for (const auto& a : j.at("points")) pts.push_back(vec_from_json<T>(a, dim));
    return PointConfiguration<T>(dim, pts);
}

// ---------------------------------------------------------------------------
// subdivisions and liftings

template <class T>
json subdivision_to_json(const Subdivision<T>& s) {
    return json{{"configuration", config_to_json(s.config)},
                {"faces", s.faces},
                {"maximal_cells", s.maximal}};
}

template <class T>
Subdivision<T> subdivision_from_json(const json& j) {
    require_keys(j, "subdivision", {"configuration", "faces"}, {"maximal_cells"});
    auto cfg = config_from_json<T>(j.at("configuration"));
    std::vector<std::vector<std::size_t>> faces;
    for (const auto& f : j.at("faces")) faces.push_back(f.get<std::vector<std::size_t>>());
    return make_subdivision(cfg, faces);
}

// ---------------------------------------------------------------------------
// toric points

inline json chart_point_to_json(const ChartPoint& x) {
    json vals = json::object();
    for (std::size_t g = 0; g < x.values.size(); ++g)
        vals["gen_" + std::to_string(g)] = x.values[g].value();
    return json{{"chart", x.chart}, {"values", vals}};
}

inline ChartPoint chart_point_from_json(const json& j, std::size_t expected_gens) {
    require_keys(j, "point", {"chart", "values"});
    ChartPoint x;
    x.chart = j.at("chart").get<std::size_t>();
    const json& vals = j.at("values");
    x.values.assign(expected_gens, LogVal::zero());
    for (auto it = vals.begin(); it != vals.end(); ++it) {
        const std::string& k = it.key();
        if (k.rfind("gen_", 0) != 0) throw ParseError("point: value keys look like gen_<i>");
        std::size_t idx = std::stoul(k.substr(4));
        if (idx >= expected_gens) throw ParseError("point: generator index out of range");
        x.values[idx] = LogVal::from_value(it.value().get<double>());
    }
    return x;
}

// ---------------------------------------------------------------------------
// power-sum paths

template <class T>
PowerSumPath<T> path_from_json(const json& j, std::size_t dim) {
    require_keys(j, "path", {"terms"});
    PowerSumPath<T> p;
    for (const auto& t : j.at("terms")) {
        require_keys(t, "path term", {"exponent", "coefficient"});
        typename PowerSumPath<T>::Term term;
        term.exponent = t.at("exponent").get<double>();
        term.coeff = vec_from_json<T>(t.at("coefficient"), dim);
        p.terms.push_back(std::move(term));
    }
    p.validate(dim);
    return p;
}

}  // namespace toric
