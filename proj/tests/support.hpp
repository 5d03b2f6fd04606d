#pragma once

#include <random>
#include <string>

#include <doctest.h>

#include "sampling.hpp"
#include "scenario.hpp"

namespace testing {

using namespace ucforge;

inline Rational R(const char *s) { return Rational::parse(s); }

inline GDeltaScenario corpus(const std::string &name)
{
	return GDeltaScenario::load(std::string(UCFORGE_CORPUS_DIR) + "/" + name + ".json");
}

inline Ambient unit() { return Ambient(Rational(0), Rational(1)); }

inline Rational random_rational(std::mt19937_64 &rng, long max_den)
{
	return reference::random_rational(rng, unit(), max_den);
}

inline IntervalUnion random_union(std::mt19937_64 &rng) { return reference::random_union(rng, unit()); }

/// Every multiple of 1/64 in [0, 1]: hits each endpoint, each open gap and
/// each point of every random_union.
inline std::vector<Rational> probe_grid()
{
	std::vector<Rational> out;
	for (long j = 0; j <= 64; ++j)
		out.emplace_back(j, 64);
	return out;
}

} // namespace testing
