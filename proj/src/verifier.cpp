/* SPDX-License-Identifier: Apache-2.0 */

#include "verifier.hpp"

#include <algorithm>

namespace ucforge {

namespace {

void require_same_ambient(const ConstructionLadder &L, const IntervalUnion &s)
{
	if (!(s.ambient() == L.ambient()))
		throw DomainError("set lives on a different ambient space");
}

const Interval *component_containing(const IntervalUnion &s, const Rational &x)
{
	for (const Interval &c : s.components())
		if (c.contains(x))
			return &c;
	return nullptr;
}

// A point of `region` outside `removed`, preferring the gap around `near`.
std::optional<Rational> point_avoiding(const IntervalUnion &region, const FinitePointSet &removed,
                                       const std::optional<Rational> &near = std::nullopt)
{
	std::optional<Rational> fallback;
	for (const Interval &c : region.components()) {
		if (c.degenerate()) {
			if (!removed.contains(c.left) && !fallback)
				fallback = c.left;
			continue;
		}
		for (auto &[a, b] : open_gaps(c, removed)) {
			if (near && a < *near && *near < b)
				return *near;
			if (near && (*near == a || *near == b))
				return (a + b) / Rational(2);
			if (!fallback)
				fallback = (a + b) / Rational(2);
		}
	}
	return fallback;
}

// A point of B_k inside `region` but outside `removed` and closure(A).
std::optional<Rational> dense_point(const IntervalUnion &region, const FinitePointSet &removed,
                                    const DensePartition &P, int k)
{
	IntervalUnion usable = region.subtract(P.exclusion());
	for (const Interval &c : usable.components()) {
		if (c.degenerate()) {
			if (!removed.contains(c.left) && P.contains(k, c.left))
				return c.left;
			continue;
		}
		auto gaps = open_gaps(c, removed);
		if (!gaps.empty())
			return P.witness(gaps.front().first, gaps.front().second, k);
	}
	return std::nullopt;
}

Rational deviation_at(const ConstructionLadder &L, const DensePartition &P, int k, const Rational &u)
{
	return abs(limit_f(L, u) - f_k_eval(L, P, k, u).value);
}

} // namespace

Deviation sup_deviation(const ConstructionLadder &L, const DensePartition &P, int k, const IntervalUnion &set)
{
	require_same_ambient(L, set);
	if (set.empty())
		throw DomainError("supremum over the empty set");
	if (k < 1 || k > L.k_max())
		throw DomainError("sequence index outside 1..K");
	const Ambient &amb = L.ambient();
	const FinitePointSet &bpts = L.boundary_union(L.n_max());

	Deviation best{Rational(0), *set.sample_point(), Deviation::Source::Zero, 0, IntervalUnion(amb)};

	// (a) boundary points, where f may be nonzero
	for (const Rational &p : bpts.points()) {
		if (!set.contains(p))
			continue;
		Rational d = deviation_at(L, P, k, p);
		if (d > best.value)
			best = {d, p, Deviation::Source::BoundaryPoint, 0, IntervalUnion::normalize({Interval::point(p)}, amb)};
	}

	// (b), (c) off the boundary points f = 0, and f_k = 1/n on ring n; the
	// smallest ring index met gives the largest value
	const int last = std::min(k, L.n_max());
	for (int n = 1; n <= last; ++n) {
		Rational value = reciprocal(n);
		if (value <= best.value)
			break;
		IntervalUnion uring = L.U(k, n).subtract(L.U(k, n - 1)).intersect(set);
		if (auto u = point_avoiding(uring, bpts)) {
			best = {value, *u, Deviation::Source::URing, n, std::move(uring)};
			break;
		}
		IntervalUnion fring = L.F(k, n).subtract(L.F(k, n - 1)).intersect(set);
		if (auto u = dense_point(fring, bpts, P, k)) {
			best = {value, *u, Deviation::Source::FRing, n, std::move(fring)};
			break;
		}
	}
	return best;
}

Rational grid_oracle_sup(const ConstructionLadder &L, const DensePartition &P, int k, const IntervalUnion &set,
                         long grid_denominator)
{
	require_same_ambient(L, set);
	if (grid_denominator < 2)
		throw DomainError("grid denominator must be >= 2");
	const Ambient &amb = L.ambient();
	const Rational scale(grid_denominator);
	mpz_class first = (amb.lo() * scale).ceil();
	mpz_class last = (amb.hi() * scale).floor();
	Rational best(0);
	const mpz_class den(grid_denominator);
	for (mpz_class j = first; j <= last; ++j) {
		Rational u(mpq_class(j, den));
		if (!set.contains(u))
			continue;
		best = max(best, deviation_at(L, P, k, u));
	}
	return best;
}

UCCertificate uc_certify(const ConstructionLadder &L, const DensePartition &P, const Rational &x, const Rational &eps)
{
	if (eps.sign() <= 0)
		throw DomainError("epsilon must be positive");
	Membership m = L.scenario().membership(x, L.n_max());
	if (m.kind != Membership::Kind::InA)
		throw DomainError("uc_certify needs a point of A; " + x.str() + " is not one");

	const Rational inv = Rational(1) / eps;
	const mpz_class n0z = inv.floor() + 1;
	if (n0z > L.n_max())
		throw BoundsExhausted("certificate needs n0 = " + n0z.get_str() + " > N = " + std::to_string(L.n_max()) +
		                      "; increase N_max");
	const int n0 = static_cast<int>(n0z.get_si());

	int k0 = 0;
	for (int k = std::max(n0, 1); k <= L.k_max(); ++k) {
		bool inside = k == 1 || L.U(k - 1, n0).contains(x); // U[0,n] plays the role of X
		if (!inside) {
			k0 = k;
			break;
		}
	}
	if (k0 == 0)
		throw BoundsExhausted("no k0 <= K = " + std::to_string(L.k_max()) + " with x outside U[k0-1," +
		                      std::to_string(n0) + "]; increase K_max");

	UCCertificate cert{x, eps, n0, k0, L.G(n0).subtract(L.U(k0, n0).closure()), reciprocal(n0), Rational(0)};
	if (!cert.neighborhood.contains(x))
		throw TheoremViolation("certified neighborhood misses " + x.str());
	if (!cert.neighborhood.is_open())
		throw TheoremViolation("certified neighborhood is not open");
	for (int k = k0; k <= L.k_max(); ++k) {
		Deviation d = sup_deviation(L, P, k, cert.neighborhood);
		if (d.value > cert.bound)
			throw TheoremViolation("sup deviation " + d.value.str() + " at " + d.point.str() + " exceeds 1/n0 for k = " +
			                       std::to_string(k));
		cert.worst = max(cert.worst, d.value);
	}
	return cert;
}

NonUCWitness nonuc_witness(const ConstructionLadder &L, const DensePartition &P, const Rational &x,
                           const IntervalUnion &neighborhood, int k0)
{
	require_same_ambient(L, neighborhood);
	if (!neighborhood.contains(x) || !neighborhood.is_open())
		throw DomainError("neighborhood must be open and contain " + x.str());
	Membership m = L.scenario().membership(x, L.n_max());
	if (m.kind == Membership::Kind::InA)
		throw DomainError(x.str() + " lies in A; no non-uniformity witness exists");
	if (m.kind == Membership::Kind::Inconclusive)
		throw BoundsExhausted("exit level of " + x.str() + " exceeds N; increase N_max");
	const int n0 = m.exit_level;
	if (n0 + 1 > L.n_max())
		throw BoundsExhausted("witness needs level n0 + 1 = " + std::to_string(n0 + 1) + " > N; increase N_max");

	NonUCWitness w{x, n0, reciprocal(n0 + 1) - reciprocal(n0 + 2), neighborhood, 0, x, Rational(0),
	               NonUCWitness::Route::BoundaryRing};
	const FinitePointSet &bpts = L.boundary_union(n0 + 1);
	const int k_start = std::max(k0, n0) + 1;

	auto finish = [&](int k, const Rational &u, NonUCWitness::Route route) {
		w.k = k;
		w.u = u;
		w.route = route;
		w.deviation = deviation_at(L, P, k, u);
		if (w.deviation < w.eps)
			throw TheoremViolation("witness at " + u.str() + " has deviation " + w.deviation.str() + " < eps");
		return w;
	};

	if (L.closure_G(n0 + 1).contains(x)) {
		// x ∈ ∂G_{n0+1}
		for (int k = k_start; k <= L.k_max(); ++k) {
			IntervalUnion ring = L.U(k, n0 + 1).subtract(L.U(k, n0).closure());
			if (!ring.contains(x))
				continue;
			IntervalUnion V = ring.intersect(neighborhood);
			const Interval *c = component_containing(V, x);
			auto u = point_avoiding(IntervalUnion::normalize({*c}, L.ambient()), bpts);
			if (!u)
				throw TheoremViolation("open ring around " + x.str() + " has no point off the boundaries");
			return finish(k, *u, NonUCWitness::Route::BoundaryRing);
		}
	} else {
		const Rational g = L.gamma(n0 + 1)(x);
		if (g.sign() <= 0)
			throw TheoremViolation("gamma vanishes at " + x.str() + " off closure(G_{n0+1})");
		const mpz_class m0z = (Rational(1) / g).floor() + 1;
		if (m0z < L.k_max()) {
			const int m0 = static_cast<int>(m0z.get_si());
			for (int k = std::max(k_start, m0 + 1); k <= L.k_max(); ++k) {
				IntervalUnion inner = L.F(k, n0 + 1).interior();
				if (!inner.contains(x))
					continue;
				IntervalUnion region = neighborhood.subtract(L.closure_G(n0 + 1))
				                           .intersect(inner.subtract(L.F(k, n0)));
				const Interval *c = component_containing(region, x);
				auto v = dense_point(IntervalUnion::normalize({*c}, L.ambient()), bpts, P, k);
				if (!v)
					throw TheoremViolation("no B_k point near " + x.str());
				return finish(k, *v, NonUCWitness::Route::DenseClass);
			}
		}
	}

	// the proof's k is beyond K; look for any k in range with a large enough sup
	for (int k = k_start; k <= L.k_max(); ++k) {
		Deviation d = sup_deviation(L, P, k, neighborhood);
		if (d.value >= w.eps)
			return finish(k, d.point, NonUCWitness::Route::RegionSearch);
	}
	throw BoundsExhausted("no witness for " + x.str() + " with k <= K = " + std::to_string(L.k_max()) +
	                      "; increase K_max");
}

bool ScanEntry::agrees() const
{
	switch (classification) {
	case Classification::CertifiedUC: return membership.kind == Membership::Kind::InA;
	case Classification::WitnessedNonUC: return membership.kind == Membership::Kind::NotInA;
	case Classification::Inconclusive: return false;
	}
	return false;
}

IntervalUnion dyadic_neighborhood(const Ambient &ambient, const Rational &x, int j)
{
	Rational r = pow2(-j);
	return IntervalUnion::normalize({Interval::open(x - r, x + r)}, ambient);
}

std::vector<ScanEntry> uc_scan(const ConstructionLadder &L, const DensePartition &P,
                               const std::vector<Rational> &points, const Rational &eps, int basis_depth)
{
	if (basis_depth < 1)
		throw DomainError("basis depth must be >= 1");
	std::vector<ScanEntry> out;
	out.reserve(points.size());
	for (const Rational &x : points) {
		ScanEntry e;
		e.x = x;
		try {
			e.membership = L.scenario().membership(x, L.n_max());
			switch (e.membership.kind) {
			case Membership::Kind::InA:
				e.certificate = uc_certify(L, P, x, eps);
				e.classification = Classification::CertifiedUC;
				break;
			case Membership::Kind::NotInA:
				for (int j = 1; j <= basis_depth; ++j)
					e.witnesses.push_back(nonuc_witness(L, P, x, dyadic_neighborhood(L.ambient(), x, j), j));
				e.classification = Classification::WitnessedNonUC;
				break;
			case Membership::Kind::Inconclusive:
				e.bounds_exhausted = true;
				e.note = "exit level beyond N; increase N_max";
				break;
			}
		} catch (const BoundsExhausted &err) {
			e.classification = Classification::Inconclusive;
			e.bounds_exhausted = true;
			e.certificate.reset();
			e.witnesses.clear();
			e.note = err.what();
		} catch (const std::exception &err) {
			e.classification = Classification::Inconclusive;
			e.certificate.reset();
			e.witnesses.clear();
			e.note = err.what();
		}
		out.push_back(std::move(e));
	}
	return out;
}

const char *to_string(Deviation::Source s)
{
	switch (s) {
	case Deviation::Source::Zero: return "zero";
	case Deviation::Source::BoundaryPoint: return "boundary_point";
	case Deviation::Source::URing: return "u_ring";
	case Deviation::Source::FRing: return "f_ring";
	}
	return "?";
}

const char *to_string(NonUCWitness::Route r)
{
	switch (r) {
	case NonUCWitness::Route::BoundaryRing: return "boundary_ring";
	case NonUCWitness::Route::DenseClass: return "dense_class";
	case NonUCWitness::Route::RegionSearch: return "region_search";
	}
	return "?";
}

const char *to_string(Classification c)
{
	switch (c) {
	case Classification::CertifiedUC: return "certified_UC";
	case Classification::WitnessedNonUC: return "witnessed_nonUC";
	case Classification::Inconclusive: return "inconclusive";
	}
	return "?";
}

} // namespace ucforge
