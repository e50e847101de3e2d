#pragma once

#include <json.hpp>

#include "pforge/matrix.hpp"
#include "pforge/report.hpp"

namespace pforge {

// JSON fixture schema: expressions as canonical strings; matrices as arrays
// of arrays of expression strings; forms as {"diag": [...],
// "pfister_params": [...] | null}; substitutions as {"var": expr}. Key
// order is fixed (ordered_json) so identical inputs serialize to identical
// bytes.
using Json = nlohmann::ordered_json;

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, int field_hint = 0);

Json subst_to_json(const Substitution& s);
// unmapped variables of whatever the substitution is applied to are
// declared fixed by the loader
Substitution subst_from_json(const Json& j, int field_hint = 0);

Json report_to_json(const Report& r);
std::string report_to_text(const Report& r);

}  // namespace pforge
