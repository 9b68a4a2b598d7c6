#pragma once

#include <json.hpp>

#include "icelab/asm_matrix.hpp"
#include "icelab/checks.hpp"
#include "icelab/laurent.hpp"

namespace icelab {

// Matrix schema: {"n": int, "rows": [[-1|0|1, ...], ...]}.
inline nlohmann::json matrix_to_json(const AsmMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 1; i <= m.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 1; j <= m.size(); ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return {{"n", m.size()}, {"rows", std::move(rows)}};
}

inline AsmMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.contains("n") || !j.contains("rows"))
        throw ValidationError("matrix json needs fields 'n' and 'rows'");
    std::vector<std::vector<int>> rows = j.at("rows").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(rows.size()) != j.at("n").get<int>())
        throw ValidationError("matrix json: 'n' does not match row count");
    return AsmMatrix(rows);
}

// Polynomial schema: {"vars": [...], "terms": [{"exps": [...], "coef": "..."}]},
// terms sorted lexicographically by exponent vector.
template <class F>
nlohmann::json poly_to_json(const LaurentPoly<F>& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back({{"exps", e}, {"coef", c.to_string()}});
    return {{"vars", p.vars()}, {"terms", std::move(terms)}, {"text", p.to_string()}};
}

// Report schema: list of {"name", "status", "witness"?}.
inline nlohmann::json report_to_json(const std::vector<CheckResult>& results) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : results) {
        nlohmann::json item = {{"name", r.name}, {"status", r.pass ? "pass" : "fail"}};
        if (!r.pass) item["witness"] = r.witness;
        out.push_back(std::move(item));
    }
    return out;
}

} // namespace icelab
