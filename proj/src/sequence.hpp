/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <optional>
#include <stdexcept>

#include "dense_partition.hpp"
#include "ladder.hpp"

namespace ucforge {

/// A construction invariant failed at runtime; indicates a bug, never bad input.
struct InconsistencyError : std::logic_error {
	using std::logic_error::logic_error;
};

/// Which ring indices n may define f_k(x).
enum class SelectionRule {
	/// n in 1..k. This is the reading under which f_k -> f pointwise.
	MinimalRing,
	/// n in k..N, the condition "n >= k" taken literally. Kept for the
	/// regression showing it breaks convergence at boundary points.
	LiteralUpper,
};

enum class RegionTag { Zero, URing, FRing };

struct SequencePoint {
	Rational x;
	int k = 0;
	Rational value;
	RegionTag tag = RegionTag::Zero;
	int n = 0; // ring index when tag != Zero
};

/// The limit function: 1/n on ∂G_n \ ∂G_{n-1} for n <= N, zero elsewhere.
Rational limit_f(const ConstructionLadder &ladder, const Rational &x);

bool in_u_ring(const ConstructionLadder &ladder, int k, int n, const Rational &x);
bool in_f_ring(const ConstructionLadder &ladder, const DensePartition &partition, int k, int n,
               const Rational &x);

/// x ∈ C[k,n] = (U[k,n] \ U[k,n-1]) ∪ (B_k ∩ (F[k,n] \ F[k,n-1])).
bool c_membership(const ConstructionLadder &ladder, const DensePartition &partition, int k, int n,
                  const Rational &x);

/// f_k(x). Ring indices are capped at N, so for k > N only n <= N count.
SequencePoint f_k_eval(const ConstructionLadder &ladder, const DensePartition &partition, int k,
                       const Rational &x, SelectionRule rule = SelectionRule::MinimalRing);

/// Smallest K such that |f_k(x) - f(x)| < eps for every k in [K, k_probe],
/// or nullopt when even k_probe misses. A finite check; it never claims
/// divergence.
std::optional<int> pointwise_probe(const ConstructionLadder &ladder, const DensePartition &partition,
                                   const Rational &x, const Rational &eps, int k_probe);

} // namespace ucforge
