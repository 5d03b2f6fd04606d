/* SPDX-License-Identifier: Apache-2.0 */

#include "ladder.hpp"

#include <algorithm>

namespace ucforge {

namespace {

// δ_n: γ_n off the closure of G_n, zero on it. The two pieces agree on ∂G_n
// where γ_n vanishes, so sampling at the union of breakpoints is exact.
PLFunction make_delta(const PLFunction &gamma, const IntervalUnion &closure_g)
{
	std::vector<Rational> xs = gamma.breakpoints();
	for (const Interval &c : closure_g.components()) {
		xs.push_back(c.left);
		xs.push_back(c.right);
	}
	std::sort(xs.begin(), xs.end());
	xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
	std::vector<Rational> ys;
	ys.reserve(xs.size());
	for (const Rational &x : xs)
		ys.push_back(closure_g.contains(x) ? Rational(0) : gamma(x));
	return PLFunction(gamma.ambient(), std::move(xs), std::move(ys));
}

IntervalUnion close_first_open_right(const IntervalUnion &s)
{
	std::vector<Interval> raw = s.components();
	for (Interval &c : raw)
		if (!c.right_closed) {
			c.right_closed = true;
			break;
		}
	return IntervalUnion::normalize(raw, s.ambient());
}

} // namespace

ConstructionLadder ConstructionLadder::build(const GDeltaScenario &scenario, int n_max, int k_max, Fault fault)
{
	if (n_max < 1 || k_max < 1)
		throw DomainError("ladder bounds must be positive");
	ConstructionLadder L(scenario, n_max, k_max);
	const Ambient &amb = L.ambient();
	const Rational one(1);

	for (int n = 0; n <= n_max; ++n) {
		L.g_.push_back(scenario.G(n));
		L.g_closure_.push_back(L.g_.back().closure());
		L.boundary_.push_back(L.g_.back().boundary());
		L.boundary_union_.push_back(n == 0 ? L.boundary_.back()
		                                   : L.boundary_union_.back().unite(L.boundary_.back()));
	}

	for (int n = 1; n <= n_max; ++n) {
		PLFunction phi = PLFunction::from_distance(L.g_closure_[n], one);
		PLFunction psi = PLFunction::from_distance(L.g_[n].complement(), one);
		PLFunction alpha = pl_difference(phi, psi);
		PLFunction beta = n == 1 ? alpha : pl_max(L.levels_.back().beta, alpha);
		PLFunction abs_beta = pl_abs(beta);
		PLFunction gamma = n == 1 ? abs_beta : pl_min(L.levels_.back().gamma, abs_beta);
		PLFunction delta = make_delta(gamma, L.g_closure_[n]);
		L.levels_.push_back({std::move(phi), std::move(psi), std::move(alpha), std::move(beta),
		                     std::move(gamma), std::move(delta)});
	}

	L.u_.reserve(static_cast<std::size_t>(k_max) * (n_max + 1));
	L.f_.reserve(static_cast<std::size_t>(k_max) * (n_max + 1));
	for (int k = 1; k <= k_max; ++k) {
		const Rational threshold = reciprocal(k);
		for (int n = 0; n <= n_max; ++n) {
			if (n == 0) {
				L.u_.emplace_back(amb);
				L.f_.emplace_back(amb);
				continue;
			}
			IntervalUnion u = level_set(L.gamma(n), LevelKind::StrictSublevel, threshold);
			if (fault == Fault::CloseUEndpoint)
				u = close_first_open_right(u);
			L.u_.push_back(std::move(u));
			L.f_.push_back(level_set(L.delta(n), LevelKind::ClosedSuperlevel, threshold));
		}
	}
	return L;
}

const ConstructionLadder::Level &ConstructionLadder::level(int n) const
{
	if (n < 1 || n > n_max_)
		throw DomainError("ladder level " + std::to_string(n) + " outside 1.." + std::to_string(n_max_));
	return levels_[static_cast<std::size_t>(n - 1)];
}

std::size_t ConstructionLadder::set_index(int k, int n) const
{
	if (k < 1 || k > k_max_ || n < 0 || n > n_max_)
		throw DomainError("set index (" + std::to_string(k) + ", " + std::to_string(n) + ") outside ladder bounds");
	return static_cast<std::size_t>(k - 1) * static_cast<std::size_t>(n_max_ + 1) + static_cast<std::size_t>(n);
}

const IntervalUnion &ConstructionLadder::G(int n) const
{
	if (n < 0 || n > n_max_)
		throw DomainError("G index outside ladder bounds");
	return g_[static_cast<std::size_t>(n)];
}

const IntervalUnion &ConstructionLadder::closure_G(int n) const
{
	G(n);
	return g_closure_[static_cast<std::size_t>(n)];
}

const FinitePointSet &ConstructionLadder::boundary(int n) const
{
	G(n);
	return boundary_[static_cast<std::size_t>(n)];
}

const FinitePointSet &ConstructionLadder::boundary_union(int n) const
{
	G(n);
	return boundary_union_[static_cast<std::size_t>(n)];
}

const IntervalUnion &ConstructionLadder::U(int k, int n) const { return u_[set_index(k, n)]; }
const IntervalUnion &ConstructionLadder::F(int k, int n) const { return f_[set_index(k, n)]; }

bool PropertyReport::all_pass() const
{
	return first_failure() == nullptr;
}

const PropertyCheck *PropertyReport::first_failure() const
{
	for (const PropertyCheck &c : checks)
		if (!c.pass)
			return &c;
	return nullptr;
}

namespace {

class Recorder {
public:
	explicit Recorder(PropertyReport &r) : r_(r) {}

	// passes iff `bad` is empty; otherwise a point of `bad` is the counterexample
	void expect_empty(std::string prop, int k, int n, const IntervalUnion &bad, std::string detail, int i = 0)
	{
		PropertyCheck c{std::move(prop), k, n, i, bad.empty(), bad.sample_point(), std::move(detail)};
		r_.checks.push_back(std::move(c));
	}

	void expect_equal(std::string prop, int k, int n, const IntervalUnion &a, const IntervalUnion &b,
	                  std::string detail)
	{
		expect_empty(std::move(prop), k, n, a.subtract(b).unite(b.subtract(a)), std::move(detail));
	}

	void expect_true(std::string prop, int k, int n, bool ok, std::optional<Rational> where, std::string detail)
	{
		r_.checks.push_back({std::move(prop), k, n, 0, ok, ok ? std::optional<Rational>{} : std::move(where), std::move(detail)});
	}

private:
	PropertyReport &r_;
};

// first breakpoint where lo <= f <= hi fails
std::optional<Rational> range_violation(const PLFunction &f, const Rational &lo, const Rational &hi)
{
	for (std::size_t i = 0; i < f.values().size(); ++i)
		if (f.values()[i] < lo || f.values()[i] > hi)
			return f.breakpoints()[i];
	return std::nullopt;
}

} // namespace

PropertyReport sign_partition_check(const ConstructionLadder &L, int n)
{
	PropertyReport report{L.scenario().name(), L.n_max(), L.k_max(), {}};
	Recorder rec(report);
	const Ambient &amb = L.ambient();
	const PLFunction &a = L.alpha(n);
	const Rational zero(0);
	rec.expect_equal("alpha_negative", 0, n, level_set(a, LevelKind::StrictSublevel, zero), L.G(n),
	                 "{alpha_n < 0} = G_n");
	rec.expect_equal("alpha_zero", 0, n, level_set(a, LevelKind::Level, zero),
	                 IntervalUnion::from_points(L.boundary(n), amb), "{alpha_n = 0} = boundary of G_n");
	rec.expect_equal("alpha_positive", 0, n, level_set(a, LevelKind::StrictSuperlevel, zero),
	                 L.closure_G(n).complement(), "{alpha_n > 0} = X \\ closure(G_n)");
	return report;
}

PropertyReport check_properties(const ConstructionLadder &L)
{
	PropertyReport report{L.scenario().name(), L.n_max(), L.k_max(), {}};
	Recorder rec(report);
	const Ambient &amb = L.ambient();
	const int N = L.n_max(), K = L.k_max();
	const Rational zero(0), one(1);

	for (int n = 0; n <= N; ++n)
		for (int k = 1; k <= K; ++k) {
			const IntervalUnion &u = L.U(k, n);
			const IntervalUnion &f = L.F(k, n);
			// (A)
			rec.expect_equal("A", k, n, u.interior(), u, "U[k,n] is open");
			rec.expect_equal("A", k, n, f.closure(), f, "F[k,n] is closed");
			// (B)
			if (k < K)
				rec.expect_empty("B", k, n, L.U(k + 1, n).closure().subtract(u), "closure(U[k+1,n]) within U[k,n]");
			if (n < N)
				rec.expect_empty("B", k, n, u.subtract(L.U(k, n + 1)), "U[k,n] within U[k,n+1]");
			// (C)
			if (k < K)
				rec.expect_empty("C", k, n, f.subtract(L.F(k + 1, n)), "F[k,n] within F[k+1,n]");
			if (n < N)
				rec.expect_empty("C", k, n, f.subtract(L.F(k, n + 1)), "F[k,n] within F[k,n+1]");
			// (F)
			rec.expect_empty("F", k, n, u.intersect(f), "U[k,n] and F[k,n] are disjoint");
		}

	for (int n = 1; n <= N; ++n) {
		const IntervalUnion bset = IntervalUnion::from_points(L.boundary_union(n), amb);
		// (D)
		IntervalUnion positive = level_set(L.delta(n), LevelKind::StrictSuperlevel, zero);
		rec.expect_equal("D", 0, n, positive, bset.unite(L.G(n)).complement(),
		                 "{delta_n > 0} = X \\ (union of boundaries up to n, together with G_n)");
		for (int k = 1; k <= K; ++k)
			rec.expect_empty("D", k, n, L.F(k, n).subtract(positive), "F[k,n] within {delta_n > 0}");
		// (E)
		rec.expect_equal("E", 0, n, zero_set(L.gamma(n)), bset, "{gamma_n = 0} = union of boundaries up to n");
		for (int k = 1; k <= K; ++k)
			rec.expect_empty("E", k, n, bset.subtract(L.U(k, n)), "union of boundaries up to n within U[k,n]");
		// (G)
		FinitePointSet fresh = L.boundary(n).subtract(L.boundary(n - 1));
		for (int i = 1; i < n; ++i)
			rec.expect_empty("G", 0, n, IntervalUnion::from_points(fresh.intersect(L.boundary(i)), amb),
			                 "new boundary points of G_n avoid the boundary of G_i", i);

		// ladder invariants
		rec.expect_equal("beta_zero", 0, n, zero_set(L.beta(n)), IntervalUnion::from_points(L.boundary(n), amb),
		                 "{beta_n = 0} = boundary of G_n");
		PLFunction slack = pl_difference(L.gamma(n), L.delta(n));
		rec.expect_true("delta_le_gamma", 0, n, slack.min_value().sign() >= 0, range_violation(slack, zero, Rational(2)),
		                "delta_n <= gamma_n");
		auto ranged = [&](const char *what, const PLFunction &f, const Rational &lo) {
			auto bad = range_violation(f, lo, one);
			rec.expect_true("range", 0, n, !bad, bad, std::string(what) + " within its range");
		};
		ranged("phi_n", L.phi(n), zero);
		ranged("psi_n", L.psi(n), zero);
		ranged("alpha_n", L.alpha(n), -one);
		ranged("beta_n", L.beta(n), -one);
		ranged("gamma_n", L.gamma(n), zero);
		ranged("delta_n", L.delta(n), zero);
	}
	return report;
}

} // namespace ucforge
