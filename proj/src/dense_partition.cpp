/* SPDX-License-Identifier: Apache-2.0 */

#include "dense_partition.hpp"

namespace ucforge {

DensePartition::DensePartition(const GDeltaScenario &scenario)
    : DensePartition(scenario.ambient(), scenario.target().closure())
{
}

DensePartition::DensePartition(Ambient ambient, IntervalUnion exclusion)
    : ambient_(std::move(ambient)), exclusion_(std::move(exclusion))
{
	if (!exclusion_.is_closed())
		throw DomainError("dense partition exclusion set must be closed");
}

std::optional<int> DensePartition::index(const Rational &x) const
{
	if (!ambient_.contains(x))
		throw DomainError("point " + x.str() + " lies outside X");
	if (exclusion_.contains(x))
		return std::nullopt;
	return static_cast<int>(x.dyadic_valuation()) + 1;
}

Rational DensePartition::witness(const Rational &lo, const Rational &hi, int k) const
{
	if (k < 1)
		throw DomainError("class index must be >= 1");
	if (!(lo < hi))
		throw WitnessError("empty target interval (" + lo.str() + ", " + hi.str() + ")");
	IntervalUnion target = IntervalUnion::normalize({Interval::open(lo, hi)}, ambient_);
	IntervalUnion usable = target.subtract(exclusion_).interior();
	if (!usable.has_nonempty_interior())
		throw WitnessError("target (" + lo.str() + ", " + hi.str() + ") has no interior outside closure(A)");

	// restrict to one open piece (a, b) of the usable region
	const Interval *piece = nullptr;
	for (const Interval &c : usable.components())
		if (c.left < c.right) {
			piece = &c;
			break;
		}
	const Rational &a = piece->left;
	const Rational &b = piece->right;

	const mpz_class scale = mpz_class(1) << (k - 1);
	for (mpz_class q = 1;; q += 2) {
		mpz_class den = scale * q;
		// numerators m with a < m / den < b
		Rational lo_scaled = a * Rational(mpq_class(den));
		Rational hi_scaled = b * Rational(mpq_class(den));
		mpz_class first = lo_scaled.floor() + 1;
		mpz_class last = hi_scaled.ceil() - 1;
		for (mpz_class m = first; m <= last; ++m) {
			if (gcd(m, den) != 1)
				continue;
			Rational cand(mpq_class(m, den));
			if (piece->contains(cand) && !exclusion_.contains(cand))
				return cand;
		}
	}
}

} // namespace ucforge
