#pragma once

#include <string>
#include <string_view>

#include "motbun/curve.hpp"

namespace motbun {

// Curve specs are JSON objects with integer fields only:
//
//   {"genus": 1, "q": 2, "weil": [1, 0, 2]}
//   {"genus": 1, "q": 2, "model": {"kind": "hyperelliptic-odd", "h": [1], "f": [0, 0, 0, 1]}}
//
// Exactly one of "weil" and "model" must be present; "h" and "f" default to
// empty lists. Unknown fields are rejected with FileFormat.
CurveSpec parse_curve_spec(std::string_view text);
CurveSpec load_curve_spec(const std::string& path);
std::string dump_curve_spec(const CurveSpec& spec);

}  // namespace motbun
