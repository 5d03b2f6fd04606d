/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pl_function.hpp"
#include "scenario.hpp"

namespace ucforge {

/// Deliberate construction faults, used by mutation tests of the checker.
enum class Fault {
	None,
	/// Close the first open right endpoint of every U[k,n].
	CloseUEndpoint,
};

/// The function ladder phi_n .. delta_n (n = 1..N) and the set families
/// U[k,n], F[k,n] (k = 1..K, n = 0..N) built from a scenario. Immutable
/// after construction.
class ConstructionLadder {
public:
	static ConstructionLadder build(const GDeltaScenario &scenario, int n_max, int k_max,
	                                Fault fault = Fault::None);

	const GDeltaScenario &scenario() const { return scenario_; }
	const Ambient &ambient() const { return scenario_.ambient(); }
	int n_max() const { return n_max_; }
	int k_max() const { return k_max_; }

	const PLFunction &phi(int n) const { return level(n).phi; }
	const PLFunction &psi(int n) const { return level(n).psi; }
	const PLFunction &alpha(int n) const { return level(n).alpha; }
	const PLFunction &beta(int n) const { return level(n).beta; }
	const PLFunction &gamma(int n) const { return level(n).gamma; }
	const PLFunction &delta(int n) const { return level(n).delta; }

	/// G_n for n = 0..N.
	const IntervalUnion &G(int n) const;
	const IntervalUnion &closure_G(int n) const;
	/// ∂G_n for n = 0..N; ∂G_0 = ∂X is empty.
	const FinitePointSet &boundary(int n) const;
	/// ⋃_{i<=n} ∂G_i.
	const FinitePointSet &boundary_union(int n) const;

	const IntervalUnion &U(int k, int n) const;
	const IntervalUnion &F(int k, int n) const;

private:
	struct Level {
		PLFunction phi, psi, alpha, beta, gamma, delta;
	};

	ConstructionLadder(GDeltaScenario scenario, int n_max, int k_max)
	    : scenario_(std::move(scenario)), n_max_(n_max), k_max_(k_max)
	{
	}

	const Level &level(int n) const;
	std::size_t set_index(int k, int n) const;

	GDeltaScenario scenario_;
	int n_max_, k_max_;
	std::vector<Level> levels_;            // index n - 1
	std::vector<IntervalUnion> g_, g_closure_;
	std::vector<FinitePointSet> boundary_, boundary_union_;
	std::vector<IntervalUnion> u_, f_;     // index (k - 1) * (N + 1) + n
};

struct PropertyCheck {
	std::string property;
	int k = 0; // 0 when the check is not indexed by k
	int n = 0;
	int i = 0; // secondary index for (G)
	bool pass = true;
	std::optional<Rational> counterexample;
	std::string detail;
};

struct PropertyReport {
	std::string scenario;
	int n_max = 0, k_max = 0;
	std::vector<PropertyCheck> checks;

	bool all_pass() const;
	/// First failing check, if any.
	const PropertyCheck *first_failure() const;
};

/// α_n < 0 on G_n, α_n = 0 on ∂G_n and α_n > 0 off the closure of G_n.
PropertyReport sign_partition_check(const ConstructionLadder &ladder, int n);

/// Properties (A)-(G) over every index pair within the ladder bounds,
/// plus the ladder invariants (zero set of β_n, δ_n <= γ_n, ranges).
PropertyReport check_properties(const ConstructionLadder &ladder);

} // namespace ucforge
