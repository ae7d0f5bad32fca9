#ifndef FOLEX_OPS_HPP
#define FOLEX_OPS_HPP

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "folex/extension.hpp"
#include "folex/morse.hpp"

namespace folex::ops {

using json = nlohmann::json;

// Hypersurface specifiers: `fermat:<n>:<d>`, `quadric:<n>`, or inline
// polynomial text (n inferred from the variables unless given).
Hypersurface hypersurface_from_spec(const std::string& spec, int n = -1);

RatVector parse_point(const std::string& text);

// Executes one named operation with JSON parameters and returns the JSON
// report (schema 1). Throws std::invalid_argument for unknown ops.
json run_op(const std::string& op, const json& params);

// True when every key of `expected` is present in `actual` with an equal
// value (deep comparison per key).
bool json_subset(const json& expected, const json& actual);

}  // namespace folex::ops

#endif
