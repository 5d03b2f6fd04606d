/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sequence.hpp"

namespace ucforge {

/// The requested certificate or witness needs a larger N or K.
struct BoundsExhausted : std::runtime_error {
	using std::runtime_error::runtime_error;
};

/// A certificate failed revalidation. Means the construction is wrong.
struct TheoremViolation : std::logic_error {
	using std::logic_error::logic_error;
};

/// Exact supremum of |f - f_k| over a set, with a point that attains it.
struct Deviation {
	enum class Source { Zero, BoundaryPoint, URing, FRing };
	Rational value;
	Rational point;
	Source source = Source::Zero;
	int n = 0; // ring index for URing / FRing
	/// The region on which the supremum is attained (the ring part inside
	/// the queried set, or the single boundary point).
	IntervalUnion region;
};

/// sup over u in `set` of |f(u) - f_k(u)|, computed exactly from the ring
/// decomposition: finitely many boundary points are evaluated directly and
/// f vanishes elsewhere, where f_k is 1/n on the parts of the rings that
/// survive removal of those points.
Deviation sup_deviation(const ConstructionLadder &ladder, const DensePartition &partition, int k,
                        const IntervalUnion &set);

/// max of |f - f_k| over the rationals of `set` whose denominator divides
/// grid_denominator.
Rational grid_oracle_sup(const ConstructionLadder &ladder, const DensePartition &partition, int k,
                         const IntervalUnion &set, long grid_denominator);

struct UCCertificate {
	Rational x;
	Rational eps;
	int n0 = 0;
	int k0 = 0;
	IntervalUnion neighborhood;
	Rational bound; // 1/n0
	Rational worst; // largest sup_deviation seen for k in [k0, K]
};

/// Certificate that x ∈ A is a point of uniform convergence: n0 = floor(1/eps) + 1,
/// k0 the least k >= n0 with x outside U[k-1,n0] (U[0,n] is X), and the
/// neighborhood G_{n0} \ closure(U[k0,n0]). Validated for every k in [k0, K].
UCCertificate uc_certify(const ConstructionLadder &ladder, const DensePartition &partition,
                         const Rational &x, const Rational &eps);

struct NonUCWitness {
	enum class Route {
		/// x on ∂G_{n0+1}: u taken in U[k,n0+1] \ closure(U[k,n0]).
		BoundaryRing,
		/// x off closure(G_{n0+1}): u a B_k point of int F[k,n0+1] \ F[k,n0].
		DenseClass,
		/// The two routes above need k > K; u found by exact sup search instead.
		RegionSearch,
	};
	Rational x;
	int n0 = 0;
	Rational eps; // 1/(n0+1) - 1/(n0+2)
	IntervalUnion neighborhood;
	int k = 0;
	Rational u;
	Rational deviation;
	Route route = Route::BoundaryRing;
};

/// Witness that x ∉ A breaks uniform convergence inside `neighborhood`:
/// some k > max(k0, n0) and u in the neighborhood with
/// |f(u) - f_k(u)| >= 1/(n0+1) - 1/(n0+2).
NonUCWitness nonuc_witness(const ConstructionLadder &ladder, const DensePartition &partition,
                           const Rational &x, const IntervalUnion &neighborhood, int k0);

enum class Classification { CertifiedUC, WitnessedNonUC, Inconclusive };

struct ScanEntry {
	Rational x;
	Membership membership;
	Classification classification = Classification::Inconclusive;
	std::optional<UCCertificate> certificate;
	std::vector<NonUCWitness> witnesses; // one per basis level
	std::string note;
	bool bounds_exhausted = false;

	/// Classification agrees with membership in A.
	bool agrees() const;
};

/// (x - 2^-j, x + 2^-j) ∩ X
IntervalUnion dyadic_neighborhood(const Ambient &ambient, const Rational &x, int j);

/// Classifies each point: certificate for points of A, witnesses on the
/// dyadic neighborhoods j = 1..basis_depth (with k0 = j) otherwise.
/// Failures become Inconclusive; nothing is ever misclassified.
std::vector<ScanEntry> uc_scan(const ConstructionLadder &ladder, const DensePartition &partition,
                               const std::vector<Rational> &points, const Rational &eps, int basis_depth);

const char *to_string(Deviation::Source s);
const char *to_string(NonUCWitness::Route r);
const char *to_string(Classification c);

} // namespace ucforge
