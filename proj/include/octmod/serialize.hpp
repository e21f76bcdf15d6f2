#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "octmod/errors.hpp"
#include "octmod/bimodule.hpp"
#include "octmod/paralinear.hpp"
#include "octmod/report.hpp"

namespace octmod {

/// JSON encodings.  An octonion is an array of 8 rational strings in lowest
/// terms; an element carries its shape next to one octonion per coordinate;
/// a map stores chirality, both shapes, and the canonical re_matrix.

[[nodiscard]] inline nlohmann::json to_json(const Octonion& p) {
    auto arr = nlohmann::json::array();
    for (int i = 0; i < 8; ++i) arr.push_back(to_string(p[i]));
    return arr;
}

[[nodiscard]] inline Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    throw ParseError(0, "rational: expected a string like \"p/q\" or an integer");
}

[[nodiscard]] inline Octonion octonion_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 8) throw ParseError(0, "octonion: expected an array of 8 rationals");
    Octonion p;
    for (int i = 0; i < 8; ++i) p[i] = rational_from_json(j[i]);
    return p;
}

[[nodiscard]] inline nlohmann::json to_json(const ModuleShape& s) {
    return {{"rank", s.rank}, {"conjugated", s.conjugated}};
}

[[nodiscard]] inline ModuleShape shape_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("rank")) throw ParseError(0, "shape: expected {\"rank\", \"conjugated\"}");
    const auto rank = j.at("rank").get<std::int64_t>();
    if (rank < 1) throw ParseError(0, "shape: rank must be positive");
    const bool conj = j.value("conjugated", false);
    return ModuleShape{static_cast<std::size_t>(rank), conj};
}

[[nodiscard]] inline nlohmann::json to_json(const Element& x) {
    nlohmann::json j = to_json(x.shape);
    auto coords = nlohmann::json::array();
    for (const auto& c : x.coords) coords.push_back(to_json(c));
    j["coords"] = coords;
    return j;
}

[[nodiscard]] inline Element element_from_json(const nlohmann::json& j) {
    const ModuleShape s = shape_from_json(j);
    if (!j.contains("coords") || !j.at("coords").is_array() || j.at("coords").size() != s.rank)
        throw ParseError(0, "element: coords must list one octonion per coordinate");
    Element x(s);
    for (std::size_t a = 0; a < s.rank; ++a) x.coords[a] = octonion_from_json(j.at("coords")[a]);
    return x;
}

[[nodiscard]] inline nlohmann::json to_json(const Matrix& m) {
    auto rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

[[nodiscard]] inline Matrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw ParseError(0, "matrix: expected a non-empty array of rows");
    const std::size_t rows = j.size();
    if (!j[0].is_array() || j[0].empty()) throw ParseError(0, "matrix: rows must be non-empty arrays");
    const std::size_t cols = j[0].size();
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) throw ParseError(0, "matrix: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rational_from_json(j[r][c]);
    }
    return m;
}

[[nodiscard]] inline nlohmann::json to_json(const ParaLinearMap& f) {
    return {{"chirality", f.chirality == Chirality::Left ? "left" : "right"},
            {"dom", to_json(f.dom)},
            {"cod", to_json(f.cod)},
            {"re_matrix", to_json(f.re_matrix)}};
}

[[nodiscard]] inline ParaLinearMap map_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError(0, "map: expected an object");
    const std::string chi = j.value("chirality", "");
    if (chi != "left" && chi != "right") throw ParseError(0, "map: chirality must be \"left\" or \"right\"");
    if (!j.contains("dom") || !j.contains("cod") || !j.contains("re_matrix"))
        throw ParseError(0, "map: expected dom, cod and re_matrix");
    const ModuleShape dom = shape_from_json(j.at("dom"));
    const ModuleShape cod = shape_from_json(j.at("cod"));
    Matrix m = matrix_from_json(j.at("re_matrix"));
    if (m.rows() != cod.rank || m.cols() != 8 * dom.rank)
        throw ShapeError("map: re_matrix must be cod.rank x 8*dom.rank");
    return ParaLinearMap{chi == "left" ? Chirality::Left : Chirality::Right, dom, cod, std::move(m)};
}

[[nodiscard]] inline nlohmann::json to_json(const IdentityReport& r) {
    nlohmann::json j{{"name", r.name},
                     {"trials", r.trials},
                     {"seed", r.seed},
                     {"status", to_string(r.status)},
                     {"counterexample", r.counterexample}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

[[nodiscard]] inline nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, path + ": " + e.what());
    }
    return j;
}

inline void write_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError(0, "cannot open file for writing: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace octmod
