#include <algorithm>

#include "support.hpp"

using namespace testing;

namespace {

IntervalUnion iu(std::initializer_list<Interval> raw) { return IntervalUnion::normalize(raw, unit()); }

bool open_at(const IntervalUnion &s, const Rational &x)
{
	// oracle for relative interior membership on the 1/64 grid: x and both
	// neighbours at distance 1/128 (inside X) belong to s
	Rational h(1, 128);
	if (!s.contains(x))
		return false;
	bool left = x == Rational(0) || s.contains(x - h);
	bool right = x == Rational(1) || s.contains(x + h);
	return left && right;
}

} // namespace

TEST_CASE("normalize")
{
	SUBCASE("shared open endpoint is not merged")
	{
		auto s = iu({Interval::open(R("1/4"), R("1/2")), Interval::open(R("1/2"), R("3/4"))});
		CHECK(s.components().size() == 2);
		CHECK_FALSE(s.contains(R("1/2")));
	}
	SUBCASE("overlap merges")
	{
		auto s = iu({Interval::closed(R("0"), R("1/2")), Interval::closed(R("1/4"), R("1"))});
		REQUIRE(s.components().size() == 1);
		CHECK(s.is_whole());
	}
	SUBCASE("degenerate singleton")
	{
		auto s = iu({Interval::closed(R("1/3"), R("1/3"))});
		REQUIRE(s.components().size() == 1);
		CHECK(s.components()[0] == Interval::point(R("1/3")));
	}
	SUBCASE("adjacent closed and open halves merge")
	{
		auto s = iu({{R("0"), true, R("1/2"), false}, Interval::closed(R("1/2"), R("1"))});
		CHECK(s.is_whole());
	}
	SUBCASE("empty raw intervals vanish")
	{
		auto s = iu({Interval::open(R("1/3"), R("1/3"))});
		CHECK(s.empty());
	}
	SUBCASE("clipping and errors")
	{
		auto s = IntervalUnion::normalize({Interval::open(R("-1"), R("1/2"))}, unit());
		CHECK(s == iu({{R("0"), true, R("1/2"), false}}));
		CHECK_THROWS_AS(IntervalUnion::normalize({Interval::open(R("2"), R("3"))}, unit()), DomainError);
		CHECK_THROWS_AS(IntervalUnion::normalize({Interval::open(R("1/2"), R("1/4"))}, unit()), DomainError);
	}
	SUBCASE("degenerate ambient is rejected")
	{
		CHECK_THROWS_AS(Ambient(R("1/2"), R("1/2")), DomainError);
	}
}

TEST_CASE("boolean operations")
{
	auto whole = IntervalUnion::whole(unit());
	CHECK(boolean(whole, iu({Interval::open(R("1/4"), R("3/4"))}), SetOp::Difference) ==
	      iu({Interval::closed(R("0"), R("1/4")), Interval::closed(R("3/4"), R("1"))}));
	CHECK(iu({Interval::open(R("0"), R("1/2"))}).intersect(iu({Interval::open(R("1/4"), R("3/4"))})) ==
	      iu({Interval::open(R("1/4"), R("1/2"))}));
	auto u = iu({Interval::open(R("0"), R("1/2"))}).unite(iu({Interval::open(R("1/2"), R("1"))}));
	CHECK(u.components().size() == 2);
	CHECK_FALSE(u.contains(R("1/2")));

	Ambient other(R("0"), R("2"));
	CHECK_THROWS_AS(boolean(whole, IntervalUnion::whole(other), SetOp::Union), DomainError);
}

TEST_CASE("closure, interior, boundary relative to X")
{
	auto mid = iu({Interval::open(R("1/4"), R("3/4"))});
	CHECK(mid.boundary() == FinitePointSet({R("1/4"), R("3/4")}));
	auto half_open = iu({{R("0"), true, R("1/2"), false}});
	CHECK(half_open.interior() == half_open);
	CHECK(half_open.is_open());
	CHECK(iu({Interval::open(R("0"), R("1/8"))}).closure() == iu({Interval::closed(R("0"), R("1/8"))}));
	CHECK(IntervalUnion::whole(unit()).boundary().empty());
	CHECK(iu({Interval::point(R("1/3"))}).interior().empty());
	CHECK(iu({Interval::point(R("1/3"))}).boundary() == FinitePointSet({R("1/3")}));
}

TEST_CASE("distance to closed sets")
{
	CHECK(distance(R("0"), iu({Interval::closed(R("1/4"), R("3/4"))})) == R("1/4"));
	CHECK(distance(R("1/2"), iu({Interval::closed(R("1/4"), R("3/4"))})) == R("0"));
	CHECK(distance(R("1"), iu({Interval::closed(R("0"), R("1/4")), Interval::point(R("1/2"))})) == R("1/2"));
	CHECK_FALSE(distance(R("1/2"), IntervalUnion(unit())).has_value());
	CHECK_THROWS_AS(distance(R("1/2"), iu({Interval::open(R("1/4"), R("3/4"))})), DomainError);
}

TEST_CASE("open gaps avoid removed points")
{
	auto gaps = open_gaps(Interval::closed(R("0"), R("1")), FinitePointSet({R("1/2"), R("2")}));
	REQUIRE(gaps.size() == 2);
	CHECK(gaps[0] == std::pair{R("0"), R("1/2")});
	CHECK(gaps[1] == std::pair{R("1/2"), R("1")});
	CHECK(open_gaps(Interval::point(R("1/3")), {}).empty());
}

TEST_CASE("randomized set algebra against pointwise membership")
{
	std::mt19937_64 rng(7);
	const auto grid = probe_grid();
	for (int trial = 0; trial < 400; ++trial) {
		auto a = random_union(rng), b = random_union(rng), c = random_union(rng);
		auto u = a.unite(b), i = a.intersect(b), d = a.subtract(b);
		for (const Rational &x : grid) {
			CHECK(u.contains(x) == (a.contains(x) || b.contains(x)));
			CHECK(i.contains(x) == (a.contains(x) && b.contains(x)));
			CHECK(d.contains(x) == (a.contains(x) && !b.contains(x)));
			CHECK(a.complement().contains(x) == !a.contains(x));
			CHECK(a.interior().contains(x) == open_at(a, x));
		}
		// midpoints of grid cells too: between two grid points membership is constant
		for (long j = 0; j < 64; ++j) {
			Rational x(2 * j + 1, 128);
			CHECK(u.contains(x) == (a.contains(x) || b.contains(x)));
		}
		CHECK(u == b.unite(a));
		CHECK(i == b.intersect(a));
		CHECK(a.unite(b).unite(c) == a.unite(b.unite(c)));
		CHECK(a.intersect(b).intersect(c) == a.intersect(b.intersect(c)));
		CHECK(u.complement() == a.complement().intersect(b.complement()));
		CHECK(i.complement() == a.complement().unite(b.complement()));
		CHECK(IntervalUnion::normalize(a.components(), unit()) == a);
		CHECK(a.unite(a) == a);
		CHECK(a.intersect(a) == a);

		CHECK(a.subset_of(a.closure()));
		CHECK(a.interior().subset_of(a));
		CHECK(a.closure().is_closed());
		CHECK(a.interior().is_open());
		auto bd = IntervalUnion::from_points(a.boundary(), unit());
		CHECK(bd == a.closure().subtract(a.interior()));

		auto cl = a.closure();
		for (const Rational &x : grid) {
			auto dist = distance(x, cl);
			if (cl.empty())
				CHECK_FALSE(dist.has_value());
			else
				CHECK((*dist == Rational(0)) == cl.contains(x));
		}
	}
}
