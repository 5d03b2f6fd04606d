/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "interval_union.hpp"

namespace ucforge {

/// Scenario input that parses but violates a structural requirement
/// (openness, monotonicity, parameter ranges).
struct ValidationError : DomainError {
	using DomainError::DomainError;
};

/// G_n = S for every n >= 1.
struct ConstantFamily {
	IntervalUnion set;
};

/// G_n = {x : dist(x, core) < initial_radius * ratio^(n-1)}.
struct GeometricShrinkFamily {
	IntervalUnion core;
	Rational initial_radius;
	Rational ratio;
};

/// G_n = anchor + ratio^(n-1) * (base - anchor): the base set contracted
/// toward a fixed point.
struct ContractionFamily {
	IntervalUnion base;
	Rational anchor;
	Rational ratio;
};

/// G_1, ..., G_L as listed, then G_n = G_L for n > L.
struct ExplicitFamily {
	std::vector<IntervalUnion> sets;
};

using Family = std::variant<ConstantFamily, GeometricShrinkFamily, ContractionFamily, ExplicitFamily>;

struct Membership {
	enum class Kind { InA, NotInA, Inconclusive };
	Kind kind = Kind::Inconclusive;
	/// max{n : x in G_n}; meaningful for NotInA only.
	int exit_level = -1;

	static Membership in_a() { return {Kind::InA, -1}; }
	static Membership not_in_a(int n0) { return {Kind::NotInA, n0}; }
	static Membership inconclusive() { return {Kind::Inconclusive, -1}; }
};

/// A decreasing sequence of relatively open sets G_0 = X ⊇ G_1 ⊇ ... in the
/// ambient interval X, together with its intersection A.
class GDeltaScenario {
public:
	GDeltaScenario(std::string name, Ambient ambient, Family family);

	/// Parses the JSON scenario format. Throws DomainError for malformed
	/// values and ValidationError for structural violations.
	static GDeltaScenario parse(std::string_view text);
	static GDeltaScenario load(const std::string &path);

	const std::string &name() const { return name_; }
	const Ambient &ambient() const { return ambient_; }
	const Family &family() const { return family_; }

	/// G_n; G_0 is the whole ambient space.
	IntervalUnion G(int n) const;

	/// Closed-form A = ⋂ G_n.
	IntervalUnion target() const;

	/// Decides x ∈ A; for x ∉ A also finds the exit level, searching at
	/// most `depth` levels.
	Membership membership(const Rational &x, int depth) const;

private:
	std::string name_;
	Ambient ambient_;
	Family family_;
};

} // namespace ucforge
