#pragma once

#include <assoc/linsys.hpp>
#include <assoc/quadric_model.hpp>
#include <assoc/weyl.hpp>

#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace assoc::json_io {

using nlohmann::json;

inline json to_json(const Rational& q) { return to_string(q); }

/// Accepts "3/4", "-2" or a JSON integer.
inline Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw Error("expected a rational string, got " + j.dump());
}

inline json to_json(const RationalVector& v) {
    json out = json::array();
    for (const auto& q : v) out.push_back(to_string(q));
    return out;
}

inline RationalVector vector_from_json(const json& j) {
    if (!j.is_array()) throw Error("expected an array, got " + j.dump());
    RationalVector v;
    for (const auto& x : j) v.push_back(rational_from_json(x));
    return v;
}

inline json to_json(const ProjectivePoint& p) {
    json out = json::array();
    for (const auto& z : p.coords()) out.push_back(z.get_str());
    return out;
}

inline ProjectivePoint point_from_json(const json& j) {
    if (j.is_object() && j.contains("point")) return point_from_json(j.at("point"));
    return canonicalize(vector_from_json(j));
}

inline json to_json(const std::vector<ProjectivePoint>& pts) {
    json out = json::array();
    for (const auto& p : pts) out.push_back(to_json(p));
    return out;
}

inline std::vector<ProjectivePoint> points_from_json(const json& j) {
    const json& arr = j.is_object() ? j.at("points") : j;
    std::vector<ProjectivePoint> pts;
    for (const auto& x : arr) pts.push_back(point_from_json(x));
    return pts;
}

inline json to_json(const PointConfiguration& c) { return {{"n", c.ambient_dim()}, {"points", to_json(c.points())}}; }

inline PointConfiguration config_from_json(const json& j) {
    auto pts = points_from_json(j);
    if (pts.empty()) throw Error("configuration has no points");
    std::size_t n = j.contains("n") ? j.at("n").get<std::size_t>() : pts.front().ambient_dim();
    return {n, std::move(pts)};
}

inline json to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row_vector(i)));
    return out;
}

inline Matrix matrix_from_json(const json& j) {
    std::vector<RationalVector> rows;
    for (const auto& r : j) rows.push_back(vector_from_json(r));
    if (rows.empty()) throw Error("empty matrix");
    return Matrix::from_rows(rows, rows.front().size());
}

/// Terms listed in graded-lex order.
inline json to_json(const Polynomial& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back({{"exponent", e}, {"coefficient", to_string(c)}});
    return {{"variables", f.variables()}, {"terms", terms}};
}

inline Polynomial polynomial_from_json(const json& j) {
    Polynomial f(j.at("variables").get<std::size_t>());
    for (const auto& t : j.at("terms")) f.add_term(t.at("exponent").get<Exponent>(), rational_from_json(t.at("coefficient")));
    return f;
}

inline json to_json(const std::vector<Polynomial>& fs) {
    json out = json::array();
    for (const auto& f : fs) out.push_back(to_json(f));
    return out;
}

inline json to_json(const DivisorClass& c) { return c.coeffs; }

inline json to_json(const WeylElement& w) {
    json out = json::array();
    for (std::size_t i = 0; i < w.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < w.size(); ++j) row.push_back(w(i, j));
        out.push_back(row);
    }
    return out;
}

inline json to_json(const IndexSet& s) { return std::vector<std::size_t>(s.begin(), s.end()); }

inline json to_json(const BaseCondition& c) {
    json out{{"point", to_json(c.point)}, {"multiplicity", c.multiplicity}};
    if (c.tangent_line) out["tangent_line"] = to_json(*c.tangent_line);
    return out;
}

/// {"point": [...], "multiplicity": k, "tangent_line": [...]}; a bare
/// coordinate array is a simple point.
inline BaseCondition condition_from_json(const json& j) {
    if (j.is_array()) return simple_point(point_from_json(j));
    BaseCondition c{point_from_json(j.at("point")), j.value("multiplicity", 1), std::nullopt};
    if (j.contains("tangent_line")) c.tangent_line = vector_from_json(j.at("tangent_line"));
    return c;
}

inline std::vector<BaseCondition> conditions_from_json(const json& j) {
    const json& arr = j.is_object() ? j.at("conditions") : j;
    std::vector<BaseCondition> out;
    for (const auto& x : arr) out.push_back(condition_from_json(x));
    return out;
}

inline json to_json(const HypersurfaceSystem& s) {
    json conds = json::array();
    for (const auto& c : s.conditions) conds.push_back(to_json(c));
    return {{"n", s.n},
            {"degree", s.degree},
            {"conditions", conds},
            {"monomials", s.monomial_count},
            {"scalar_conditions", s.condition_count},
            {"rank", s.rank()},
            {"dimension", s.dimension()},
            {"basis", to_json(s.basis)}};
}

inline json to_json(const QuadricModel& m) {
    return {{"n", m.n}, {"arrangement", to_json(m.arrangement.rows)}, {"quadrics", to_json(m.quadrics)}};
}

/// Rebuilds the model from its normalized arrangement.
inline QuadricModel model_from_json(const json& j) {
    return model_from_arrangement({matrix_from_json(j.at("arrangement"))});
}

inline json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(path + ": " + e.what());
    }
}

/// Writes to the path, or to stdout when the path is empty or "-".
inline void write(const json& j, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace assoc::json_io
