/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <optional>
#include <vector>

#include "scenario.hpp"

namespace ucforge::reference {

/// Pointwise model of the construction. Every value is computed directly
/// from distances to G_i and its complement at a single point; no PL
/// functions, no level sets, no cached ladder sets.
class PointwiseModel {
public:
	PointwiseModel(const GDeltaScenario &scenario, int n_max);

	int n_max() const { return n_max_; }

	Rational alpha(int n, const Rational &x) const;
	Rational gamma(int n, const Rational &x) const;
	Rational delta(int n, const Rational &x) const;

	bool in_u(int k, int n, const Rational &x) const;
	bool in_f(int k, int n, const Rational &x) const;

	/// Class index by repeated halving of the denominator; nullopt on closure(A).
	std::optional<int> dyadic_class(const Rational &x) const;

	/// Every n in 1..min(k, N) with x ∈ C[k,n].
	std::vector<int> rings(int k, const Rational &x) const;
	Rational f_k(int k, const Rational &x) const;
	Rational f(const Rational &x) const;

private:
	int n_max_;
	std::vector<IntervalUnion> closure_, complement_;
	std::vector<FinitePointSet> boundary_;
	IntervalUnion closure_a_;
};

/// 2-adic valuation of the reduced denominator by repeated division.
int halving_count(const Rational &x);

} // namespace ucforge::reference
