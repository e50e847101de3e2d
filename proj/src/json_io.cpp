#include "pforge/json_io.hpp"

#include "pforge/expr.hpp"

namespace pforge {

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(print_canonical(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j, int field_hint) {
    if (!j.is_array()) throw MathError("matrix JSON must be an array of rows");
    std::vector<std::vector<RatFunc>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw MathError("matrix row must be an array");
        std::vector<RatFunc> r;
        for (const auto& cell : row)
            r.push_back(parse_ratfunc(cell.get<std::string>(), field_hint));
        rows.push_back(std::move(r));
    }
    return Matrix::from_rows(std::move(rows));
}

Json subst_to_json(const Substitution& s) {
    Json j = Json::object();
    for (const auto& [v, img] : s.mapped()) j[v.name()] = print_canonical(img);
    return j;
}

Substitution subst_from_json(const Json& j, int field_hint) {
    if (!j.is_object()) throw MathError("substitution JSON must be an object");
    Substitution s;
    for (auto it = j.begin(); it != j.end(); ++it)
        s.set(var(it.key()), parse_ratfunc(it.value().get<std::string>(), field_hint));
    return s;
}

Json report_to_json(const Report& r) {
    Json j = Json::object();
    j["kind"] = r.kind;
    j["pass"] = r.ok();
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json cj = Json::object();
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    return j;
}

std::string report_to_text(const Report& r) {
    std::string out = r.kind + ": " + (r.ok() ? "PASS" : "FAIL") + "\n";
    for (const auto& c : r.checks) {
        out += std::string("  [") + (c.pass ? "pass" : "FAIL") + "] " + c.name;
        if (!c.detail.empty()) out += "  -- " + c.detail;
        out += "\n";
    }
    return out;
}

}  // namespace pforge
