/* SPDX-License-Identifier: Apache-2.0 */

#include "interval_union.hpp"

#include <algorithm>

namespace ucforge {

Ambient::Ambient(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi))
{
	if (!(lo_ < hi_))
		throw DomainError("ambient interval needs lo < hi, got [" + lo_.str() + ", " + hi_.str() + "]");
}

bool Interval::contains(const Rational &x) const
{
	if (x < left || (x == left && !left_closed))
		return false;
	if (x > right || (x == right && !right_closed))
		return false;
	return true;
}

FinitePointSet::FinitePointSet(std::vector<Rational> points) : points_(std::move(points))
{
	std::sort(points_.begin(), points_.end());
	points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool FinitePointSet::contains(const Rational &x) const
{
	return std::binary_search(points_.begin(), points_.end(), x);
}

FinitePointSet FinitePointSet::unite(const FinitePointSet &o) const
{
	std::vector<Rational> out;
	std::set_union(points_.begin(), points_.end(), o.points_.begin(), o.points_.end(),
	               std::back_inserter(out));
	return FinitePointSet(std::move(out));
}

FinitePointSet FinitePointSet::intersect(const FinitePointSet &o) const
{
	std::vector<Rational> out;
	std::set_intersection(points_.begin(), points_.end(), o.points_.begin(), o.points_.end(),
	                      std::back_inserter(out));
	return FinitePointSet(std::move(out));
}

FinitePointSet FinitePointSet::subtract(const FinitePointSet &o) const
{
	std::vector<Rational> out;
	std::set_difference(points_.begin(), points_.end(), o.points_.begin(), o.points_.end(),
	                    std::back_inserter(out));
	return FinitePointSet(std::move(out));
}

/* Decomposition of the ambient space into the critical points
 * p_0 = lo < p_1 < ... < p_m = hi and the open gaps between them. Every set
 * handled here is constant on each gap, so membership flags on these atoms
 * describe it exactly. */
class AtomTable {
public:
	AtomTable(const Ambient &amb, std::initializer_list<const IntervalUnion *> sets)
	{
		pts_.push_back(amb.lo());
		pts_.push_back(amb.hi());
		for (const IntervalUnion *s : sets)
			for (const Interval &c : s->components_) {
				pts_.push_back(c.left);
				pts_.push_back(c.right);
			}
		std::sort(pts_.begin(), pts_.end());
		pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
	}

	std::size_t points() const { return pts_.size(); }
	const Rational &point(std::size_t i) const { return pts_[i]; }
	Rational gap_midpoint(std::size_t i) const { return (pts_[i] + pts_[i + 1]) / Rational(2); }

	struct Flags {
		std::vector<char> at_point;
		std::vector<char> on_gap;
	};

	Flags flags_of(const IntervalUnion &s) const
	{
		Flags f;
		f.at_point.resize(pts_.size());
		f.on_gap.resize(pts_.size() - 1);
		for (std::size_t i = 0; i < pts_.size(); ++i)
			f.at_point[i] = s.contains(pts_[i]);
		for (std::size_t i = 0; i + 1 < pts_.size(); ++i)
			f.on_gap[i] = s.contains(gap_midpoint(i));
		return f;
	}

	IntervalUnion assemble(const Ambient &amb, const Flags &f) const
	{
		IntervalUnion out(amb);
		const std::size_t m = pts_.size();
		// atoms in order: point 0, gap 0, point 1, ..., point m-1
		auto in_atom = [&](std::size_t a) { return a % 2 == 0 ? f.at_point[a / 2] : f.on_gap[a / 2]; };
		std::size_t a = 0, total = 2 * m - 1;
		while (a < total) {
			if (!in_atom(a)) {
				++a;
				continue;
			}
			std::size_t b = a;
			while (b + 1 < total && in_atom(b + 1))
				++b;
			Interval iv;
			if (a % 2 == 0) {
				iv.left = pts_[a / 2];
				iv.left_closed = true;
			} else {
				iv.left = pts_[a / 2];
				iv.left_closed = false;
			}
			if (b % 2 == 0) {
				iv.right = pts_[b / 2];
				iv.right_closed = true;
			} else {
				iv.right = pts_[b / 2 + 1];
				iv.right_closed = false;
			}
			out.components_.push_back(std::move(iv));
			a = b + 1;
		}
		return out;
	}

private:
	std::vector<Rational> pts_;
};

IntervalUnion IntervalUnion::normalize(std::span<const Interval> raw, const Ambient &ambient)
{
	std::vector<Interval> items;
	items.reserve(raw.size());
	for (const Interval &r : raw) {
		if (r.left > r.right)
			throw DomainError("interval with left " + r.left.str() + " > right " + r.right.str());
		if (r.empty())
			continue;
		Interval c = r;
		if (c.left < ambient.lo()) {
			c.left = ambient.lo();
			c.left_closed = true;
		}
		if (c.right > ambient.hi()) {
			c.right = ambient.hi();
			c.right_closed = true;
		}
		if (c.empty() || c.left > c.right)
			throw DomainError("interval lies outside the ambient space [" + ambient.lo().str() + ", " +
			                  ambient.hi().str() + "]");
		items.push_back(std::move(c));
	}
	// closed left endpoints first on ties, so a merged run keeps the closed flag
	std::sort(items.begin(), items.end(), [](const Interval &a, const Interval &b) {
		if (a.left != b.left)
			return a.left < b.left;
		return a.left_closed && !b.left_closed;
	});

	IntervalUnion out(ambient);
	for (Interval &c : items) {
		if (!out.components_.empty()) {
			Interval &cur = out.components_.back();
			bool touches = c.left < cur.right ||
			               (c.left == cur.right && (cur.right_closed || c.left_closed));
			if (touches) {
				if (c.right > cur.right) {
					cur.right = std::move(c.right);
					cur.right_closed = c.right_closed;
				} else if (c.right == cur.right) {
					cur.right_closed = cur.right_closed || c.right_closed;
				}
				continue;
			}
		}
		out.components_.push_back(std::move(c));
	}
	return out;
}

IntervalUnion IntervalUnion::whole(const Ambient &ambient)
{
	IntervalUnion out(ambient);
	out.components_.push_back(Interval::closed(ambient.lo(), ambient.hi()));
	return out;
}

IntervalUnion IntervalUnion::from_points(const FinitePointSet &pts, const Ambient &ambient)
{
	std::vector<Interval> raw;
	for (const Rational &p : pts.points())
		raw.push_back(Interval::point(p));
	return normalize(raw, ambient);
}

bool IntervalUnion::is_whole() const
{
	return components_.size() == 1 && components_[0] == Interval::closed(ambient_.lo(), ambient_.hi());
}

bool IntervalUnion::contains(const Rational &x) const
{
	// last component whose left endpoint is <= x
	auto it = std::upper_bound(components_.begin(), components_.end(), x,
	                           [](const Rational &v, const Interval &c) { return v < c.left; });
	if (it == components_.begin())
		return false;
	return std::prev(it)->contains(x);
}

bool IntervalUnion::subset_of(const IntervalUnion &o) const
{
	return subtract(o).empty();
}

bool IntervalUnion::is_open() const
{
	return interior() == *this;
}

bool IntervalUnion::is_closed() const
{
	for (const Interval &c : components_)
		if (!c.left_closed || !c.right_closed)
			return false;
	return true;
}

bool IntervalUnion::has_nonempty_interior() const
{
	for (const Interval &c : components_)
		if (c.left < c.right)
			return true;
	return false;
}

IntervalUnion IntervalUnion::closure() const
{
	IntervalUnion out(ambient_);
	for (Interval c : components_) {
		c.left_closed = c.right_closed = true;
		out.components_.push_back(std::move(c));
	}
	// closing endpoints can make neighbours (a, b) and (b, c) touch
	return normalize(out.components_, ambient_);
}

IntervalUnion IntervalUnion::interior() const
{
	AtomTable t(ambient_, {this});
	AtomTable::Flags f = t.flags_of(*this);
	const std::size_t m = t.points();
	AtomTable::Flags g = f;
	for (std::size_t i = 0; i < m; ++i) {
		bool left_ok = i == 0 || f.on_gap[i - 1];
		bool right_ok = i + 1 == m || f.on_gap[i];
		g.at_point[i] = f.at_point[i] && left_ok && right_ok;
	}
	return t.assemble(ambient_, g);
}

FinitePointSet IntervalUnion::boundary() const
{
	IntervalUnion b = closure().subtract(interior());
	std::vector<Rational> pts;
	for (const Interval &c : b.components_)
		pts.push_back(c.left); // boundary of a finite union never contains a gap
	return FinitePointSet(std::move(pts));
}

IntervalUnion IntervalUnion::complement() const
{
	return whole(ambient_).subtract(*this);
}

IntervalUnion IntervalUnion::unite(const IntervalUnion &o) const { return boolean(*this, o, SetOp::Union); }
IntervalUnion IntervalUnion::intersect(const IntervalUnion &o) const { return boolean(*this, o, SetOp::Intersect); }
IntervalUnion IntervalUnion::subtract(const IntervalUnion &o) const { return boolean(*this, o, SetOp::Difference); }

FinitePointSet IntervalUnion::isolated_points() const
{
	std::vector<Rational> pts;
	for (const Interval &c : components_)
		if (c.degenerate())
			pts.push_back(c.left);
	return FinitePointSet(std::move(pts));
}

std::optional<Rational> IntervalUnion::sample_point() const
{
	if (components_.empty())
		return std::nullopt;
	const Interval &c = components_.front();
	if (c.degenerate())
		return c.left;
	return (c.left + c.right) / Rational(2);
}

IntervalUnion boolean(const IntervalUnion &a, const IntervalUnion &b, SetOp op)
{
	if (!(a.ambient() == b.ambient()))
		throw DomainError("set operation on different ambient spaces");
	AtomTable t(a.ambient(), {&a, &b});
	AtomTable::Flags fa = t.flags_of(a), fb = t.flags_of(b);
	auto combine = [op](char x, char y) -> char {
		switch (op) {
		case SetOp::Union: return x || y;
		case SetOp::Intersect: return x && y;
		case SetOp::Difference: return x && !y;
		}
		return 0;
	};
	AtomTable::Flags out = fa;
	for (std::size_t i = 0; i < out.at_point.size(); ++i)
		out.at_point[i] = combine(fa.at_point[i], fb.at_point[i]);
	for (std::size_t i = 0; i < out.on_gap.size(); ++i)
		out.on_gap[i] = combine(fa.on_gap[i], fb.on_gap[i]);
	return t.assemble(a.ambient(), out);
}

std::optional<Rational> distance(const Rational &x, const IntervalUnion &s)
{
	if (!s.is_closed())
		throw DomainError("distance is only defined here for closed sets");
	if (s.empty())
		return std::nullopt;
	std::optional<Rational> best;
	for (const Interval &c : s.components()) {
		Rational d = x < c.left ? c.left - x : x > c.right ? x - c.right : Rational(0);
		if (!best || d < *best)
			best = std::move(d);
	}
	return best;
}

std::vector<std::pair<Rational, Rational>> open_gaps(const Interval &component,
                                                     const FinitePointSet &removed)
{
	std::vector<std::pair<Rational, Rational>> gaps;
	if (!(component.left < component.right))
		return gaps;
	Rational cursor = component.left;
	for (const Rational &p : removed.points()) {
		if (p <= component.left)
			continue;
		if (p >= component.right)
			break;
		gaps.emplace_back(cursor, p);
		cursor = p;
	}
	gaps.emplace_back(cursor, component.right);
	return gaps;
}

} // namespace ucforge
