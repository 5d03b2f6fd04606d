/* SPDX-License-Identifier: Apache-2.0 */

#include "pl_function.hpp"

#include <algorithm>

namespace ucforge {

namespace {

Rational lerp_at(const Rational &x0, const Rational &y0, const Rational &x1, const Rational &y1,
                 const Rational &x)
{
	return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
}

// root of the segment through (x0, d0) and (x1, d1), assuming opposite strict signs
Rational crossing(const Rational &x0, const Rational &d0, const Rational &x1, const Rational &d1)
{
	return x0 + d0 * (x1 - x0) / (d0 - d1);
}

} // namespace

PLFunction::PLFunction(Ambient ambient, std::vector<Rational> breakpoints, std::vector<Rational> values)
    : ambient_(std::move(ambient)), xs_(std::move(breakpoints)), ys_(std::move(values))
{
	if (xs_.size() < 2 || xs_.size() != ys_.size())
		throw DomainError("piecewise-linear function needs matching breakpoint/value lists of length >= 2");
	if (xs_.front() != ambient_.lo() || xs_.back() != ambient_.hi())
		throw DomainError("breakpoints must start at lo and end at hi");
	for (std::size_t i = 0; i + 1 < xs_.size(); ++i)
		if (!(xs_[i] < xs_[i + 1]))
			throw DomainError("breakpoints must be strictly increasing");
	simplify();
}

PLFunction PLFunction::constant(const Ambient &ambient, const Rational &c)
{
	return PLFunction(ambient, {ambient.lo(), ambient.hi()}, {c, c});
}

PLFunction PLFunction::affine(const Ambient &ambient, const Rational &slope, const Rational &intercept)
{
	return PLFunction(ambient, {ambient.lo(), ambient.hi()},
	                  {slope * ambient.lo() + intercept, slope * ambient.hi() + intercept});
}

PLFunction PLFunction::from_distance(const IntervalUnion &s, const Rational &cap)
{
	if (cap.sign() <= 0)
		throw DomainError("distance cap must be positive");
	const Ambient &amb = s.ambient();
	if (s.empty())
		return constant(amb, cap);
	if (!s.is_closed())
		throw DomainError("distance function needs a closed set");

	std::vector<Rational> xs;
	const auto &cs = s.components();
	xs.push_back(amb.lo());
	for (std::size_t i = 0; i < cs.size(); ++i) {
		if (i > 0)
			xs.push_back((cs[i - 1].right + cs[i].left) / Rational(2));
		xs.push_back(cs[i].left);
		xs.push_back(cs[i].right);
	}
	xs.push_back(amb.hi());
	xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

	std::vector<Rational> ys;
	ys.reserve(xs.size());
	for (const Rational &x : xs)
		ys.push_back(*distance(x, s));
	return pl_min(PLFunction(amb, std::move(xs), std::move(ys)), constant(amb, cap));
}

Rational PLFunction::operator()(const Rational &x) const
{
	if (!ambient_.contains(x))
		throw DomainError("evaluation point " + x.str() + " outside the ambient space");
	auto it = std::lower_bound(xs_.begin(), xs_.end(), x);
	std::size_t i = static_cast<std::size_t>(it - xs_.begin());
	if (xs_[i] == x)
		return ys_[i];
	return lerp_at(xs_[i - 1], ys_[i - 1], xs_[i], ys_[i], x);
}

Rational PLFunction::min_value() const { return *std::min_element(ys_.begin(), ys_.end()); }
Rational PLFunction::max_value() const { return *std::max_element(ys_.begin(), ys_.end()); }

void PLFunction::simplify()
{
	std::vector<Rational> xs{xs_.front()}, ys{ys_.front()};
	for (std::size_t i = 1; i + 1 < xs_.size(); ++i) {
		// keep x_i unless it lies on the chord from the last kept point to x_{i+1}
		Rational on_chord = lerp_at(xs.back(), ys.back(), xs_[i + 1], ys_[i + 1], xs_[i]);
		if (on_chord != ys_[i]) {
			xs.push_back(xs_[i]);
			ys.push_back(ys_[i]);
		}
	}
	xs.push_back(xs_.back());
	ys.push_back(ys_.back());
	xs_ = std::move(xs);
	ys_ = std::move(ys);
}

PLFunction pointwise(Pointwise op, const PLFunction &f, const PLFunction &g)
{
	const Ambient &amb = f.ambient();
	if (op == Pointwise::Abs) {
		const auto &xs = f.breakpoints();
		const auto &ys = f.values();
		std::vector<Rational> ox{xs[0]}, oy{abs(ys[0])};
		for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
			if (ys[i].sign() * ys[i + 1].sign() < 0) {
				ox.push_back(crossing(xs[i], ys[i], xs[i + 1], ys[i + 1]));
				oy.push_back(Rational(0));
			}
			ox.push_back(xs[i + 1]);
			oy.push_back(abs(ys[i + 1]));
		}
		return PLFunction(amb, std::move(ox), std::move(oy));
	}

	if (!(amb == g.ambient()))
		throw DomainError("pointwise combination on different ambient spaces");
	std::vector<Rational> grid;
	std::set_union(f.breakpoints().begin(), f.breakpoints().end(), g.breakpoints().begin(),
	               g.breakpoints().end(), std::back_inserter(grid));
	grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

	std::vector<Rational> fv, gv;
	fv.reserve(grid.size());
	gv.reserve(grid.size());
	for (const Rational &x : grid) {
		fv.push_back(f(x));
		gv.push_back(g(x));
	}

	auto apply = [op](const Rational &a, const Rational &b) {
		switch (op) {
		case Pointwise::Max: return max(a, b);
		case Pointwise::Min: return min(a, b);
		default: return a - b;
		}
	};

	std::vector<Rational> ox, oy;
	for (std::size_t i = 0; i < grid.size(); ++i) {
		if (i > 0 && op != Pointwise::Difference) {
			Rational d0 = fv[i - 1] - gv[i - 1], d1 = fv[i] - gv[i];
			if (d0.sign() * d1.sign() < 0) {
				Rational t = crossing(grid[i - 1], d0, grid[i], d1);
				ox.push_back(t);
				oy.push_back(f(t));
			}
		}
		ox.push_back(grid[i]);
		oy.push_back(apply(fv[i], gv[i]));
	}
	return PLFunction(amb, std::move(ox), std::move(oy));
}

PLFunction pl_max(const PLFunction &f, const PLFunction &g) { return pointwise(Pointwise::Max, f, g); }
PLFunction pl_min(const PLFunction &f, const PLFunction &g) { return pointwise(Pointwise::Min, f, g); }
PLFunction pl_difference(const PLFunction &f, const PLFunction &g) { return pointwise(Pointwise::Difference, f, g); }
PLFunction pl_abs(const PLFunction &f) { return pointwise(Pointwise::Abs, f, f); }

namespace {

// {t in [x0, x1] : h(t) kind 0} for h linear with h(x0) = d0, h(x1) = d1
std::optional<Interval> segment_level(const Rational &x0, const Rational &d0, const Rational &x1,
                                      const Rational &d1, LevelKind kind)
{
	auto holds = [kind](int s) {
		switch (kind) {
		case LevelKind::StrictSublevel: return s < 0;
		case LevelKind::ClosedSublevel: return s <= 0;
		case LevelKind::Level: return s == 0;
		case LevelKind::ClosedSuperlevel: return s >= 0;
		case LevelKind::StrictSuperlevel: return s > 0;
		}
		return false;
	};
	const int s0 = d0.sign(), s1 = d1.sign();
	if (s0 == s1 && s0 == 0)
		return holds(0) ? std::optional<Interval>(Interval::closed(x0, x1)) : std::nullopt;
	bool in0 = holds(s0), in1 = holds(s1);
	if (s0 == s1)
		return in0 ? std::optional<Interval>(Interval::closed(x0, x1)) : std::nullopt;

	// h is strictly monotone here, so the set is an interval bounded by the root
	Rational t = s0 == 0 ? x0 : s1 == 0 ? x1 : crossing(x0, d0, x1, d1);
	bool at_root = holds(0);
	if (in0 && in1)
		return Interval::closed(x0, x1);
	if (in0)
		return Interval{x0, true, t, at_root};
	if (in1)
		return Interval{t, at_root, x1, true};
	if (at_root)
		return Interval::point(t);
	return std::nullopt;
}

} // namespace

IntervalUnion level_set(const PLFunction &f, LevelKind kind, const Rational &c)
{
	const auto &xs = f.breakpoints();
	const auto &ys = f.values();
	std::vector<Interval> raw;
	for (std::size_t i = 0; i + 1 < xs.size(); ++i)
		if (auto iv = segment_level(xs[i], ys[i] - c, xs[i + 1], ys[i + 1] - c, kind))
			raw.push_back(std::move(*iv));
	return IntervalUnion::normalize(raw, f.ambient());
}

} // namespace ucforge
