/* SPDX-License-Identifier: Apache-2.0 */

#include "reference.hpp"

namespace ucforge::reference {

namespace {

Rational capped_distance(const Rational &x, const IntervalUnion &closed)
{
	std::optional<Rational> d = distance(x, closed);
	if (!d || *d > Rational(1))
		return Rational(1);
	return *d;
}

} // namespace

int halving_count(const Rational &x)
{
	mpz_class den = x.raw().get_den();
	int count = 0;
	while (mpz_even_p(den.get_mpz_t())) {
		den /= 2;
		++count;
	}
	return count;
}

PointwiseModel::PointwiseModel(const GDeltaScenario &scenario, int n_max)
    : n_max_(n_max), closure_a_(scenario.target().closure())
{
	for (int n = 0; n <= n_max; ++n) {
		IntervalUnion g = scenario.G(n);
		closure_.push_back(g.closure());
		complement_.push_back(g.complement());
		boundary_.push_back(g.boundary());
	}
}

Rational PointwiseModel::alpha(int n, const Rational &x) const
{
	return capped_distance(x, closure_.at(n)) - capped_distance(x, complement_.at(n));
}

Rational PointwiseModel::gamma(int n, const Rational &x) const
{
	Rational beta = alpha(1, x);
	Rational g = abs(beta);
	for (int i = 2; i <= n; ++i) {
		beta = max(beta, alpha(i, x));
		g = min(g, abs(beta));
	}
	return g;
}

Rational PointwiseModel::delta(int n, const Rational &x) const
{
	return closure_.at(n).contains(x) ? Rational(0) : gamma(n, x);
}

bool PointwiseModel::in_u(int k, int n, const Rational &x) const
{
	return n > 0 && gamma(n, x) < reciprocal(k);
}

bool PointwiseModel::in_f(int k, int n, const Rational &x) const
{
	return n > 0 && delta(n, x) >= reciprocal(k);
}

std::optional<int> PointwiseModel::dyadic_class(const Rational &x) const
{
	if (closure_a_.contains(x))
		return std::nullopt;
	return halving_count(x) + 1;
}

std::vector<int> PointwiseModel::rings(int k, const Rational &x) const
{
	std::vector<int> out;
	const bool in_class = dyadic_class(x) == k;
	for (int n = 1; n <= std::min(k, n_max_); ++n) {
		bool u_ring = in_u(k, n, x) && !in_u(k, n - 1, x);
		bool f_ring = in_class && in_f(k, n, x) && !in_f(k, n - 1, x);
		if (u_ring || f_ring)
			out.push_back(n);
	}
	return out;
}

Rational PointwiseModel::f_k(int k, const Rational &x) const
{
	std::vector<int> r = rings(k, x);
	return r.empty() ? Rational(0) : reciprocal(r.front());
}

Rational PointwiseModel::f(const Rational &x) const
{
	for (int n = 1; n <= n_max_; ++n)
		if (boundary_[n].contains(x) && !boundary_[n - 1].contains(x))
			return reciprocal(n);
	return Rational(0);
}

} // namespace ucforge::reference
