/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "io.hpp"
#include "verifier.hpp"

namespace ucforge::io {

json to_json(const PropertyReport &r);
json to_json(const UCCertificate &c);
json to_json(const NonUCWitness &w);
json to_json(const ScanEntry &e);
json to_json(const Deviation &d);

/// Header x_num,x_den,k,fk_num,fk_den,f_num,f_den; one row per (point, k),
/// points in the given order and k ascending.
std::string eval_csv(const ConstructionLadder &ladder, const DensePartition &partition,
                     const std::vector<Rational> &points);

/// Parses "p/q,p/q,...". Whitespace around items is ignored.
std::vector<Rational> parse_points(std::string_view text);

} // namespace ucforge::io
