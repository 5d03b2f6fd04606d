/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <optional>

#include "scenario.hpp"

namespace ucforge {

/// Raised when a density witness is requested in a region that has no
/// interior outside the closure of A.
struct WitnessError : DomainError {
	using DomainError::DomainError;
};

/// Partition of X \ closure(A) into dense classes B_1, B_2, ... indexed by
/// the 2-adic valuation of the reduced denominator: a rational with
/// denominator 2^j * odd belongs to B_{j+1}. Irrationals would belong to
/// B_1 but are never queried.
class DensePartition {
public:
	explicit DensePartition(const GDeltaScenario &scenario);
	DensePartition(Ambient ambient, IntervalUnion exclusion);

	const IntervalUnion &exclusion() const { return exclusion_; }

	/// Class index k >= 1 of x, or nullopt when x lies in closure(A).
	std::optional<int> index(const Rational &x) const;

	bool contains(int k, const Rational &x) const { return index(x) == k; }

	/// A rational in B_k strictly between lo and hi, outside closure(A).
	/// Candidates are tried in order of odd cofactor q, then numerator, over
	/// denominators 2^(k-1) * q.
	Rational witness(const Rational &lo, const Rational &hi, int k) const;

private:
	Ambient ambient_;
	IntervalUnion exclusion_;
};

} // namespace ucforge
