/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "scenario.hpp"

namespace ucforge::reference {

/// j/den with den uniform in 1..max_den and j uniform in 0..den, mapped
/// affinely onto the ambient interval.
Rational random_rational(std::mt19937_64 &rng, const Ambient &ambient, long max_den);

/// Up to four intervals with endpoints on the 1/16 grid of the ambient
/// interval and random endpoint flags.
IntervalUnion random_union(std::mt19937_64 &rng, const Ambient &ambient);

/// Scan points for a scenario: every component endpoint of G_1..G_6, the
/// midpoint of each component of A, then random rationals (denominators up
/// to 1000) until `count` distinct points are collected.
std::vector<Rational> sample_points(const GDeltaScenario &scenario, std::size_t count, std::uint64_t seed);

} // namespace ucforge::reference
