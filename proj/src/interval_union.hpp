/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace ucforge {

/// The ambient space [lo, hi]. lo < hi is enforced, so the space has no
/// isolated points.
class Ambient {
public:
	Ambient(Rational lo, Rational hi);

	const Rational &lo() const { return lo_; }
	const Rational &hi() const { return hi_; }
	bool contains(const Rational &x) const { return lo_ <= x && x <= hi_; }

	friend bool operator==(const Ambient &, const Ambient &) = default;

private:
	Rational lo_, hi_;
};

/// One interval with independent endpoint flags. A closed degenerate
/// interval [a, a] is the singleton {a}.
struct Interval {
	Rational left;
	bool left_closed = true;
	Rational right;
	bool right_closed = true;

	static Interval closed(Rational a, Rational b) { return {std::move(a), true, std::move(b), true}; }
	static Interval open(Rational a, Rational b) { return {std::move(a), false, std::move(b), false}; }
	static Interval point(const Rational &a) { return {a, true, a, true}; }

	bool empty() const { return left > right || (left == right && !(left_closed && right_closed)); }
	bool degenerate() const { return left == right; }
	bool contains(const Rational &x) const;

	friend bool operator==(const Interval &, const Interval &) = default;
};

/// Sorted finite set of rationals, e.g. the boundary of an IntervalUnion.
class FinitePointSet {
public:
	FinitePointSet() = default;
	explicit FinitePointSet(std::vector<Rational> points);

	const std::vector<Rational> &points() const { return points_; }
	bool empty() const { return points_.empty(); }
	std::size_t size() const { return points_.size(); }
	bool contains(const Rational &x) const;

	FinitePointSet unite(const FinitePointSet &o) const;
	FinitePointSet intersect(const FinitePointSet &o) const;
	FinitePointSet subtract(const FinitePointSet &o) const;

	friend bool operator==(const FinitePointSet &, const FinitePointSet &) = default;

private:
	std::vector<Rational> points_;
};

enum class SetOp { Union, Intersect, Difference };

/// Finite union of intervals inside an ambient space, kept in canonical
/// form: components sorted, pairwise disjoint and non-adjacent. Topological
/// operations are relative to the ambient interval.
class IntervalUnion {
public:
	explicit IntervalUnion(Ambient ambient) : ambient_(std::move(ambient)) {}

	/// Canonicalizes an arbitrary list of intervals. Intervals partially
	/// outside the ambient space are clipped; an interval with left > right
	/// or one lying entirely outside the ambient space is a DomainError.
	static IntervalUnion normalize(std::span<const Interval> raw, const Ambient &ambient);
	static IntervalUnion normalize(std::initializer_list<Interval> raw, const Ambient &ambient)
	{
		return normalize(std::span<const Interval>(raw.begin(), raw.size()), ambient);
	}
	static IntervalUnion whole(const Ambient &ambient);
	static IntervalUnion from_points(const FinitePointSet &pts, const Ambient &ambient);

	const Ambient &ambient() const { return ambient_; }
	const std::vector<Interval> &components() const { return components_; }

	bool empty() const { return components_.empty(); }
	bool is_whole() const;
	bool contains(const Rational &x) const;
	bool subset_of(const IntervalUnion &o) const;
	bool is_open() const;
	bool is_closed() const;
	bool has_nonempty_interior() const;

	IntervalUnion closure() const;
	IntervalUnion interior() const;
	FinitePointSet boundary() const;
	IntervalUnion complement() const;

	IntervalUnion unite(const IntervalUnion &o) const;
	IntervalUnion intersect(const IntervalUnion &o) const;
	IntervalUnion subtract(const IntervalUnion &o) const;

	/// Singleton components.
	FinitePointSet isolated_points() const;

	/// Some point of the set, or nullopt when empty.
	std::optional<Rational> sample_point() const;

	friend bool operator==(const IntervalUnion &, const IntervalUnion &) = default;

private:
	friend class AtomTable;

	Ambient ambient_;
	std::vector<Interval> components_;
};

IntervalUnion boolean(const IntervalUnion &a, const IntervalUnion &b, SetOp op);

/// Distance from x to a closed set. nullopt stands for the infinite
/// distance to the empty set. Throws DomainError when s is not closed.
std::optional<Rational> distance(const Rational &x, const IntervalUnion &s);

/// The open gaps of a component after removing a finite set of points:
/// pairs (a, b) with a < b such that (a, b) lies in the component and
/// avoids every removed point. Empty for degenerate components.
std::vector<std::pair<Rational, Rational>> open_gaps(const Interval &component,
                                                     const FinitePointSet &removed);

} // namespace ucforge
