/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <vector>

#include "interval_union.hpp"

namespace ucforge {

enum class Pointwise { Max, Min, Difference, Abs };

enum class LevelKind {
	StrictSublevel,   // {f < c}
	ClosedSublevel,   // {f <= c}
	Level,            // {f = c}
	ClosedSuperlevel, // {f >= c}
	StrictSuperlevel, // {f > c}
};

/// Continuous piecewise-linear function on the ambient interval, given by
/// its values at strictly increasing rational breakpoints that start at lo
/// and end at hi. Collinear interior breakpoints are dropped, so equal
/// functions have equal representations.
class PLFunction {
public:
	PLFunction(Ambient ambient, std::vector<Rational> breakpoints, std::vector<Rational> values);

	static PLFunction constant(const Ambient &ambient, const Rational &c);
	/// x -> slope * x + intercept
	static PLFunction affine(const Ambient &ambient, const Rational &slope, const Rational &intercept);
	/// x -> min(cap, dist(x, s)) for a closed set s; the constant cap when s is empty.
	static PLFunction from_distance(const IntervalUnion &s, const Rational &cap);

	const Ambient &ambient() const { return ambient_; }
	const std::vector<Rational> &breakpoints() const { return xs_; }
	const std::vector<Rational> &values() const { return ys_; }

	Rational operator()(const Rational &x) const;

	Rational min_value() const;
	Rational max_value() const;

	friend bool operator==(const PLFunction &, const PLFunction &) = default;

private:
	void simplify();

	Ambient ambient_;
	std::vector<Rational> xs_;
	std::vector<Rational> ys_;
};

/// Exact pointwise combination. For Abs the second argument is ignored.
/// Crossing points of the inputs become breakpoints of the result.
PLFunction pointwise(Pointwise op, const PLFunction &f, const PLFunction &g);
PLFunction pl_max(const PLFunction &f, const PLFunction &g);
PLFunction pl_min(const PLFunction &f, const PLFunction &g);
PLFunction pl_difference(const PLFunction &f, const PLFunction &g);
PLFunction pl_abs(const PLFunction &f);

/// {x : f(x) <kind> c} as an exact IntervalUnion.
IntervalUnion level_set(const PLFunction &f, LevelKind kind, const Rational &c);

/// {x : f(x) = 0}
inline IntervalUnion zero_set(const PLFunction &f) { return level_set(f, LevelKind::Level, Rational(0)); }

} // namespace ucforge
