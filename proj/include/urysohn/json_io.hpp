#pragma once

#include <nlohmann/json.hpp>

#include <fstream>
#include <limits>
#include <string>

#include "errors.hpp"
#include "finite_space.hpp"
#include "hyperspace.hpp"
#include "injectivity.hpp"
#include "petals.hpp"
#include "point.hpp"
#include "predicates.hpp"
#include "products.hpp"
#include "rational.hpp"

/// JSON interchange for every value the CLI reads or writes. Rationals travel as
/// strings ("3", "1/2"); readers take a path prefix so errors name their location.
namespace urysohn::json_io {

using nlohmann::json;

[[noreturn]] inline void fail(const std::string& path, const std::string& what) {
    throw ParseError(path + ": " + what);
}

inline json to_json(const Rational& r) { return r.str(); }

inline Rational rational_from(const json& j, const std::string& path) {
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const ParseError& e) {
            fail(path, e.what());
        }
    }
    if (j.is_number_unsigned()) {
        return Rational(BigInt(j.get<std::uint64_t>()), BigInt(1));
    }
    if (j.is_number_integer()) {
        const auto v = j.get<std::int64_t>();
        if (v < 0) {
            fail(path, "negative value " + j.dump());
        }
        return Rational(v);
    }
    fail(path, "expected a rational string, got " + j.dump());
}

inline json to_json(const BigInt& k) {
    if (k <= std::numeric_limits<std::uint64_t>::max()) {
        return k.convert_to<std::uint64_t>();
    }
    return k.str();
}

inline BigInt integer_from(const json& j, const std::string& path) {
    if (j.is_number_unsigned()) {
        return BigInt(j.get<std::uint64_t>());
    }
    if (j.is_number_integer() && j.get<std::int64_t>() >= 0) {
        return BigInt(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) {
            return BigInt(s);
        }
    }
    fail(path, "expected a nonnegative integer, got " + j.dump());
}

inline json to_json(const RangeSet& s) {
    json out = json::array();
    for (const auto& r : s.values()) {
        out.push_back(to_json(r));
    }
    return out;
}

inline RangeSet range_from(const json& j, const std::string& path) {
    if (!j.is_array()) {
        fail(path, "expected an array of rationals");
    }
    std::vector<Rational> values;
    for (std::size_t i = 0; i < j.size(); ++i) {
        values.push_back(rational_from(j[i], path + "/" + std::to_string(i)));
    }
    return RangeSet::from_values(std::move(values));
}

inline json to_json(const UrysohnPoint& p) {
    json out = json::object();
    // Ascending coordinate order on output.
    for (auto it = p.support().rbegin(); it != p.support().rend(); ++it) {
        out[it->first.str()] = to_json(it->second);
    }
    return out;
}

inline UrysohnPoint point_from(const json& j, const std::string& path) {
    if (!j.is_object()) {
        fail(path, "expected an object mapping coordinates to integers");
    }
    UrysohnPoint out;
    for (const auto& [key, value] : j.items()) {
        const auto here = path + "/" + key;
        Rational r;
        try {
            r = Rational::parse(key);
        } catch (const ParseError& e) {
            fail(here, e.what());
        }
        const BigInt k = integer_from(value, here);
        if (k == 0) {
            fail(here, "zero values are not stored");
        }
        if (r.is_zero()) {
            fail(here, "coordinate 0 cannot carry a value");
        }
        out.set(r, k);
    }
    return out;
}

inline json to_json(const FiniteUltrametricSpace& space) {
    json out;
    out["labels"] = space.labels();
    json rows = json::array();
    for (const auto& row : space.matrix()) {
        json r = json::array();
        for (const auto& v : row) {
            r.push_back(to_json(v));
        }
        rows.push_back(std::move(r));
    }
    out["dist"] = std::move(rows);
    if (space.range()) {
        out["range"] = to_json(*space.range());
    }
    return out;
}

inline FiniteUltrametricSpace space_from(const json& j, const std::string& path) {
    if (!j.is_object() || !j.contains("labels") || !j.contains("dist")) {
        fail(path, "expected an object with 'labels' and 'dist'");
    }
    const auto& jl = j.at("labels");
    const auto& jd = j.at("dist");
    if (!jl.is_array() || !jd.is_array()) {
        fail(path, "'labels' and 'dist' must be arrays");
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < jl.size(); ++i) {
        if (!jl[i].is_string()) {
            fail(path + "/labels/" + std::to_string(i), "labels are strings");
        }
        labels.push_back(jl[i].get<std::string>());
    }
    DistanceMatrix dist;
    for (std::size_t i = 0; i < jd.size(); ++i) {
        const auto rp = path + "/dist/" + std::to_string(i);
        if (!jd[i].is_array()) {
            fail(rp, "expected a row array");
        }
        auto& row = dist.emplace_back();
        for (std::size_t c = 0; c < jd[i].size(); ++c) {
            row.push_back(rational_from(jd[i][c], rp + "/" + std::to_string(c)));
        }
    }
    std::optional<RangeSet> range;
    if (j.contains("range") && !j.at("range").is_null()) {
        range = range_from(j.at("range"), path + "/range");
    }
    return {std::move(labels), std::move(dist), std::move(range)};
}

inline json to_json(const FiniteSubset& e) {
    json out = json::array();
    for (const auto& p : e.points()) {
        out.push_back(to_json(p));
    }
    return out;
}

inline FiniteSubset subset_from(const json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) {
        fail(path, "expected a nonempty array of points");
    }
    std::set<UrysohnPoint> points;
    for (std::size_t i = 0; i < j.size(); ++i) {
        points.insert(point_from(j[i], path + "/" + std::to_string(i)));
    }
    return FiniteSubset(std::move(points));
}

inline json to_json(const Embedding& images) {
    json out = json::object();
    for (const auto& [label, p] : images) {
        out[label] = to_json(p);
    }
    return out;
}

inline Embedding embedding_from(const json& j, const std::string& path) {
    if (!j.is_object()) {
        fail(path, "expected an object mapping labels to points");
    }
    Embedding out;
    for (const auto& [label, p] : j.items()) {
        out.emplace(label, point_from(p, path + "/" + label));
    }
    return out;
}

/// {"space": <space>, "theta": "<label>", "phi": {"<label>": <point>, ...}}
inline ExtensionProblem problem_from(const json& j, const std::string& path) {
    if (!j.is_object() || !j.contains("space") || !j.contains("theta") || !j.contains("phi")) {
        fail(path, "expected an object with 'space', 'theta' and 'phi'");
    }
    if (!j.at("theta").is_string()) {
        fail(path + "/theta", "expected a label string");
    }
    return ExtensionProblem{space_from(j.at("space"), path + "/space"),
                            j.at("theta").get<std::string>(),
                            embedding_from(j.at("phi"), path + "/phi")};
}

inline json to_json(const ExtensionProblem& p) {
    return json{{"space", to_json(p.base)}, {"theta", p.theta}, {"phi", to_json(p.phi)}};
}

inline json to_json(const ValidationReport& report, const FiniteUltrametricSpace& space) {
    json violations = json::array();
    for (const auto& v : report.violations) {
        json item{{"message", describe(v, space)}};
        item["points"] = v.k ? json{space.label(v.i), space.label(v.j), space.label(*v.k)}
                             : json{space.label(v.i), space.label(v.j)};
        violations.push_back(std::move(item));
    }
    return json{{"ok", report.ok()}, {"violations", std::move(violations)}};
}

/// Flat node list for dendrogram renderers; the root has a null parent.
inline json to_json(const HeirTree& tree) {
    json nodes = json::array();
    for (const auto& node : tree.nodes) {
        json n{{"point", to_json(node.point())}};
        n["parent"] = node.parent ? json(*node.parent) : json(nullptr);
        n["radius"] = node.step_radius ? to_json(*node.step_radius) : json(nullptr);
        n["seed_index"] = node.seed_index ? to_json(*node.seed_index) : json(nullptr);
        nodes.push_back(std::move(n));
    }
    return json{{"range", to_json(tree.range)},
                {"depth", tree.depth},
                {"branching", tree.branching},
                {"nodes", std::move(nodes)}};
}

inline json to_json(const LpCertificate& cert) {
    json target = json::array();
    for (const auto& r : cert.target) {
        target.push_back(to_json(r));
    }
    json out{{"p", cert.p.str()}, {"target", std::move(target)}, {"consistency_defect", cert.consistency_defect}};
    out["defect"] = cert.defect ? json(cert.defect->str()) : json(nullptr);
    return out;
}

inline json to_json(const PetalProjection& p) {
    return json{{"distance", to_json(p.distance)}, {"nearest", to_json(p.nearest)}};
}

inline json load_file(const std::string& filename) {
    std::ifstream in(filename);
    if (!in) {
        throw ParseError(filename + ": cannot open file");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(filename + ": " + e.what());
    }
}

} // namespace urysohn::json_io
