#include "pl_oracle.hpp"

using namespace ucforge::reference;
#include "support.hpp"

using namespace testing;

namespace {

IntervalUnion iu(std::initializer_list<Interval> raw) { return IntervalUnion::normalize(raw, unit()); }

PLFunction identity() { return PLFunction::affine(unit(), Rational(1), Rational(0)); }

} // namespace

TEST_CASE("construction validates breakpoints")
{
	CHECK_THROWS_AS(PLFunction(unit(), {R("0"), R("1/2")}, {R("0"), R("1")}), DomainError);
	CHECK_THROWS_AS(PLFunction(unit(), {R("0"), R("1/2"), R("1/2"), R("1")}, {R("0"), R("0"), R("0"), R("0")}),
	                DomainError);
	CHECK_THROWS_AS(PLFunction(unit(), {R("0"), R("1")}, {R("0")}), DomainError);
	// collinear breakpoints are dropped
	PLFunction f(unit(), {R("0"), R("1/3"), R("1")}, {R("0"), R("1/3"), R("1")});
	CHECK(f == identity());
}

TEST_CASE("distance functions")
{
	auto d = PLFunction::from_distance(iu({Interval::closed(R("1/4"), R("3/4"))}), Rational(1));
	CHECK(d(R("0")) == R("1/4"));
	CHECK(d(R("1/2")) == R("0"));
	CHECK(d(R("7/8")) == R("1/8"));
	CHECK(PLFunction::from_distance(IntervalUnion::whole(unit()), Rational(1)) == PLFunction::constant(unit(), Rational(0)));
	CHECK(PLFunction::from_distance(IntervalUnion(unit()), Rational(1)) == PLFunction::constant(unit(), Rational(1)));
	// cap binds on a long ambient
	Ambient wide(R("0"), R("4"));
	auto capped = PLFunction::from_distance(IntervalUnion::normalize({Interval::point(R("0"))}, wide), Rational(1));
	CHECK(capped(R("3")) == R("1"));
	CHECK(capped(R("1/2")) == R("1/2"));
}

TEST_CASE("pointwise operations")
{
	auto x = identity();
	auto one_minus = PLFunction::affine(unit(), Rational(-1), Rational(1));
	auto m = pl_max(x, one_minus);
	CHECK(m.breakpoints() == std::vector<Rational>{R("0"), R("1/2"), R("1")});
	CHECK(m(R("1/2")) == R("1/2"));
	CHECK(m.min_value() == R("1/2"));

	auto a = pl_abs(PLFunction::affine(unit(), Rational(1), R("-1/4")));
	CHECK(a(R("1/4")) == R("0"));
	CHECK(std::count(a.breakpoints().begin(), a.breakpoints().end(), R("1/4")) == 1);

	CHECK(pl_difference(m, m) == PLFunction::constant(unit(), Rational(0)));
	CHECK_THROWS_AS(pl_max(x, PLFunction::constant(Ambient(R("0"), R("2")), Rational(0))), DomainError);
}

TEST_CASE("level sets")
{
	// |alpha_1| for G_1 = (1/4, 3/4)
	auto g1 = iu({Interval::open(R("1/4"), R("3/4"))});
	auto phi = PLFunction::from_distance(g1.closure(), Rational(1));
	auto psi = PLFunction::from_distance(g1.complement(), Rational(1));
	auto gamma1 = pl_abs(pl_difference(phi, psi));
	CHECK(level_set(gamma1, LevelKind::StrictSublevel, R("1/4")) ==
	      iu({Interval::open(R("0"), R("1/2")), Interval::open(R("1/2"), R("1"))}));

	CHECK(level_set(PLFunction::constant(unit(), Rational(0)), LevelKind::ClosedSuperlevel, R("1/3")).empty());
	CHECK(zero_set(identity()) == iu({Interval::point(R("0"))}));

	// tangency produces a degenerate component
	auto tent = pl_min(identity(), PLFunction::affine(unit(), Rational(-1), Rational(1)));
	CHECK(level_set(tent, LevelKind::ClosedSuperlevel, R("1/2")) == iu({Interval::point(R("1/2"))}));
	CHECK(level_set(tent, LevelKind::StrictSuperlevel, R("1/2")).empty());
	CHECK(level_set(tent, LevelKind::ClosedSublevel, R("0")) ==
	      iu({Interval::point(R("0")), Interval::point(R("1"))}));
	// constant segments at the level
	auto flat = pl_min(PLFunction::constant(unit(), R("1/4")), identity());
	CHECK(level_set(flat, LevelKind::Level, R("1/4")) == iu({Interval::closed(R("1/4"), R("1"))}));
	CHECK(level_set(flat, LevelKind::StrictSublevel, R("1/4")) == iu({{R("0"), true, R("1/4"), false}}));
}

TEST_CASE("randomized compositions agree with pointwise evaluation")
{
	std::mt19937_64 rng(11);
	Ambient amb = unit();
	int checks = 0;
	for (int trial = 0; trial < 1000; ++trial) {
		auto e = random_expr(rng, amb, 3);
		PLFunction f = e->build();
		for (int s = 0; s < 4; ++s) {
			Rational x = random_rational(rng, 97);
			REQUIRE(f(x) == e->at(x));
			++checks;
		}
		// breakpoints, where crossings live, too
		for (const Rational &b : f.breakpoints())
			REQUIRE(f(b) == e->at(b));
	}
	CHECK(checks == 4000);
}

TEST_CASE("level sets partition X")
{
	std::mt19937_64 rng(12);
	for (int trial = 0; trial < 300; ++trial) {
		PLFunction f = random_pl(rng, unit());
		Rational c(std::uniform_int_distribution<int>(-12, 12)(rng), 12);
		auto below = level_set(f, LevelKind::StrictSublevel, c);
		auto at = level_set(f, LevelKind::Level, c);
		auto above = level_set(f, LevelKind::StrictSuperlevel, c);
		CHECK(below.unite(at).unite(above).is_whole());
		CHECK(below.intersect(at).empty());
		CHECK(below.intersect(above).empty());
		CHECK(at.intersect(above).empty());
		CHECK(level_set(f, LevelKind::ClosedSuperlevel, c) == at.unite(above));
		CHECK(level_set(f, LevelKind::ClosedSublevel, c) == at.unite(below));
		CHECK(below.is_open());
		CHECK(above.is_open());
		CHECK(at.is_closed());
		for (const Rational &x : f.breakpoints()) {
			CHECK(below.contains(x) == (f(x) < c));
			CHECK(at.contains(x) == (f(x) == c));
		}
		for (int s = 0; s < 10; ++s) {
			Rational x = random_rational(rng, 97);
			CHECK(below.contains(x) == (f(x) < c));
			CHECK(above.contains(x) == (f(x) > c));
		}
	}
}

TEST_CASE("distance zero set equals the closed set")
{
	std::mt19937_64 rng(13);
	for (int trial = 0; trial < 100; ++trial) {
		auto s = random_union(rng).closure();
		auto d = PLFunction::from_distance(s, Rational(1));
		CHECK(zero_set(d) == s);
		for (const Rational &x : probe_grid()) {
			auto exact = distance(x, s);
			CHECK(d(x) == (exact ? min(*exact, Rational(1)) : Rational(1)));
		}
	}
}
