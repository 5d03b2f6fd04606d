/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <memory>
#include <optional>
#include <random>

#include "pl_function.hpp"

namespace ucforge::reference {

inline PLFunction random_pl(std::mt19937_64 &rng, const Ambient &amb)
{
	std::uniform_int_distribution<int> coin(0, 2), val(-12, 12);
	std::vector<Rational> xs{amb.lo()}, ys;
	for (int j = 1; j < 32; ++j)
		if (coin(rng) == 0)
			xs.push_back(amb.lo() + (amb.hi() - amb.lo()) * Rational(j, 32));
	xs.push_back(amb.hi());
	for (std::size_t i = 0; i < xs.size(); ++i)
		ys.push_back(Rational(val(rng), 12));
	return PLFunction(amb, xs, ys);
}

/// Expression tree over PL leaves, evaluated both through the algebra and
/// leaf by leaf at single points.
struct Expr {
	enum Kind { Leaf, Max, Min, Diff, Abs } kind = Leaf;
	std::optional<PLFunction> leaf;
	std::unique_ptr<Expr> a, b;

	Rational at(const Rational &x) const
	{
		switch (kind) {
		case Leaf: return (*leaf)(x);
		case Max: return max(a->at(x), b->at(x));
		case Min: return min(a->at(x), b->at(x));
		case Diff: return a->at(x) - b->at(x);
		case Abs: return abs(a->at(x));
		}
		return Rational(0);
	}

	PLFunction build() const
	{
		switch (kind) {
		case Leaf: return *leaf;
		case Max: return pl_max(a->build(), b->build());
		case Min: return pl_min(a->build(), b->build());
		case Diff: return pl_difference(a->build(), b->build());
		case Abs: return pl_abs(a->build());
		}
		return *leaf;
	}
};

inline std::unique_ptr<Expr> random_expr(std::mt19937_64 &rng, const Ambient &amb, int depth)
{
	auto e = std::make_unique<Expr>();
	int k = depth == 0 ? 0 : std::uniform_int_distribution<int>(0, 4)(rng);
	e->kind = static_cast<Expr::Kind>(k);
	if (e->kind == Expr::Leaf) {
		e->leaf = random_pl(rng, amb);
		return e;
	}
	e->a = random_expr(rng, amb, depth - 1);
	if (e->kind != Expr::Abs)
		e->b = random_expr(rng, amb, depth - 1);
	return e;
}

} // namespace ucforge::reference
