/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <json.hpp>

#include "pl_function.hpp"

namespace ucforge::io {

using json = nlohmann::ordered_json;

Rational rational_from_json(const json &j);
json to_json(const Rational &r);

/// Interval unions travel as lists of [left, left_closed, right, right_closed].
IntervalUnion interval_union_from_json(const json &j, const Ambient &ambient);
json to_json(const IntervalUnion &s);
json to_json(const FinitePointSet &s);

/// {"breakpoints": ["p/q", ...], "values": ["p/q", ...]}
json to_json(const PLFunction &f);
PLFunction pl_function_from_json(const json &j, const Ambient &ambient);

/// Writes through a temporary file in the same directory and renames it
/// into place.
void write_atomically(const std::string &path, const std::string &contents);

} // namespace ucforge::io
