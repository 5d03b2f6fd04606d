/* SPDX-License-Identifier: Apache-2.0 */

#include "sequence.hpp"

#include <algorithm>
#include <vector>

namespace ucforge {

Rational limit_f(const ConstructionLadder &L, const Rational &x)
{
	if (!L.ambient().contains(x))
		throw DomainError("point " + x.str() + " lies outside X");
	int found = 0;
	for (int n = 1; n <= L.n_max(); ++n)
		if (L.boundary(n).contains(x) && !L.boundary(n - 1).contains(x)) {
			if (found)
				throw InconsistencyError("limit function ambiguous at " + x.str() + ": levels " +
				                         std::to_string(found) + " and " + std::to_string(n));
			found = n;
		}
	return found ? reciprocal(found) : Rational(0);
}

bool in_u_ring(const ConstructionLadder &L, int k, int n, const Rational &x)
{
	return L.U(k, n).contains(x) && !L.U(k, n - 1).contains(x);
}

bool in_f_ring(const ConstructionLadder &L, const DensePartition &P, int k, int n, const Rational &x)
{
	return L.F(k, n).contains(x) && !L.F(k, n - 1).contains(x) && P.contains(k, x);
}

bool c_membership(const ConstructionLadder &L, const DensePartition &P, int k, int n, const Rational &x)
{
	if (n < 1 || n > L.n_max())
		throw DomainError("ring index n outside 1..N");
	return in_u_ring(L, k, n, x) || in_f_ring(L, P, k, n, x);
}

SequencePoint f_k_eval(const ConstructionLadder &L, const DensePartition &P, int k, const Rational &x,
                       SelectionRule rule)
{
	if (k < 1 || k > L.k_max())
		throw DomainError("sequence index k = " + std::to_string(k) + " outside 1.." + std::to_string(L.k_max()));
	if (!L.ambient().contains(x))
		throw DomainError("point " + x.str() + " lies outside X");

	int first = 1, last = std::min(k, L.n_max());
	if (rule == SelectionRule::LiteralUpper) {
		first = k;
		last = L.n_max();
	}
	SequencePoint out{x, k, Rational(0), RegionTag::Zero, 0};
	for (int n = first; n <= last; ++n) {
		bool u = in_u_ring(L, k, n, x);
		bool f = in_f_ring(L, P, k, n, x);
		if (!u && !f)
			continue;
		if (out.tag != RegionTag::Zero || (u && f))
			throw InconsistencyError("point " + x.str() + " lies in several rings C[" + std::to_string(k) + ",n]");
		out.tag = u ? RegionTag::URing : RegionTag::FRing;
		out.n = n;
		out.value = reciprocal(n);
	}
	return out;
}

std::optional<int> pointwise_probe(const ConstructionLadder &L, const DensePartition &P, const Rational &x,
                                   const Rational &eps, int k_probe)
{
	if (eps.sign() <= 0)
		throw DomainError("epsilon must be positive");
	if (k_probe < 1 || k_probe > L.k_max())
		throw DomainError("probe bound outside 1..K");
	const Rational f = limit_f(L, x);
	std::optional<int> first;
	for (int k = k_probe; k >= 1; --k) {
		if (abs(f_k_eval(L, P, k, x).value - f) >= eps)
			break;
		first = k;
	}
	return first;
}

} // namespace ucforge
