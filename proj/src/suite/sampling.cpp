/* SPDX-License-Identifier: Apache-2.0 */

#include "sampling.hpp"

#include <algorithm>

namespace ucforge::reference {

Rational random_rational(std::mt19937_64 &rng, const Ambient &amb, long max_den)
{
	long den = std::uniform_int_distribution<long>(1, max_den)(rng);
	long num = std::uniform_int_distribution<long>(0, den)(rng);
	return amb.lo() + (amb.hi() - amb.lo()) * Rational(num, den);
}

IntervalUnion random_union(std::mt19937_64 &rng, const Ambient &amb)
{
	std::uniform_int_distribution<int> count(0, 4), pos(0, 16), coin(0, 1);
	const Rational step = (amb.hi() - amb.lo()) * Rational(1, 16);
	std::vector<Interval> raw;
	for (int i = count(rng); i > 0; --i) {
		int a = pos(rng), b = pos(rng);
		if (a > b)
			std::swap(a, b);
		bool lc = coin(rng), rc = coin(rng);
		if (a == b)
			lc = rc = true;
		raw.push_back({amb.lo() + step * Rational(a), lc, amb.lo() + step * Rational(b), rc});
	}
	return IntervalUnion::normalize(raw, amb);
}

std::vector<Rational> sample_points(const GDeltaScenario &s, std::size_t count, std::uint64_t seed)
{
	std::vector<Rational> out;
	auto add = [&](const Rational &x) {
		if (s.ambient().contains(x) && std::find(out.begin(), out.end(), x) == out.end())
			out.push_back(x);
	};
	for (int n = 1; n <= 6; ++n) {
		const IntervalUnion g = s.G(n);
		for (const Interval &c : g.components()) {
			add(c.left);
			add(c.right);
		}
	}
	const IntervalUnion a = s.target();
	for (const Interval &c : a.components())
		add((c.left + c.right) * Rational(1, 2));
	std::mt19937_64 rng(seed);
	while (out.size() < count)
		add(random_rational(rng, s.ambient(), 1000));
	return out;
}

} // namespace ucforge::reference
