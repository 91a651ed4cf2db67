#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "matrix.hpp"

namespace rickart {

// Matrix JSON schema:
//   { "field": {"kind":"Qi"} | {"kind":"Fp","p":3},
//     "rows": n, "cols": m,
//     "entries": [["<scalar>", ...], ...] }

inline FieldDescriptor fieldFromJson(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind")) throw ParseError("field must be an object with 'kind'");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "Qi") return FieldDescriptor::qi();
    if (kind == "Fp") {
        if (!j.contains("p")) throw ParseError("Fp field needs 'p'");
        return FieldDescriptor::fp(j.at("p").get<std::int64_t>());
    }
    throw ParseError("unknown field kind '" + kind + "'");
}

inline nlohmann::json fieldToJson(const FieldDescriptor& f) {
    if (f.kind == FieldDescriptor::Kind::GaussianRationals) return {{"kind", "Qi"}};
    return {{"kind", "Fp"}, {"p", f.p}};
}

inline Matrix matrixFromJson(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("matrix JSON must be an object");
    FieldDescriptor f = fieldFromJson(j.at("field"));
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    if (rows == 0 || cols == 0) throw ParseError("rows and cols must be positive");
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows) throw ParseError("entries must have 'rows' rows");
    Matrix m(rows, cols, f);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = entries.at(i);
        if (!row.is_array() || row.size() != cols) throw ParseError("each row must have 'cols' entries");
        for (std::size_t jx = 0; jx < cols; ++jx)
            m.at(i, jx) = Scalar::parse(row.at(jx).get<std::string>(), f);
    }
    return m;
}

inline nlohmann::json matrixToJson(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return {{"field", fieldToJson(m.field())},
            {"rows", m.rows()},
            {"cols", m.cols()},
            {"entries", std::move(rows)}};
}

inline Matrix loadMatrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError("bad JSON in " + path + ": " + e.what());
    }
    return matrixFromJson(j);
}

} // namespace rickart
