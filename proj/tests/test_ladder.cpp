#include "ladder.hpp"
#include "reference.hpp"
#include <set>

#include "support.hpp"

using namespace testing;

namespace {

IntervalUnion iu(std::initializer_list<Interval> raw) { return IntervalUnion::normalize(raw, unit()); }

std::string failures(const PropertyReport &r)
{
	std::string out;
	for (const auto &c : r.checks)
		if (!c.pass)
			out += c.property + " k=" + std::to_string(c.k) + " n=" + std::to_string(c.n) + " " + c.detail + "\n";
	return out;
}

} // namespace

TEST_CASE("ladder values on S_POINT")
{
	auto L = ConstructionLadder::build(corpus("S_POINT"), 8, 12);
	CHECK(L.alpha(1)(R("0")) == R("1/4"));
	CHECK(L.alpha(1)(R("1/2")) == R("-1/4"));
	CHECK(L.alpha(1)(R("1/4")) == R("0"));
	CHECK(L.gamma(2)(R("1/2")) == R("1/8"));
	for (int n = 1; n <= 8; ++n)
		CHECK(L.gamma(n)(R("1/2")) == pow2(-n - 1));
	CHECK(L.U(4, 1) == iu({Interval::open(R("0"), R("1/2")), Interval::open(R("1/2"), R("1"))}));
	CHECK(L.U(3, 0).empty());
	CHECK(L.F(3, 0).empty());
	CHECK(L.boundary(0).empty());
	CHECK(L.boundary(2) == FinitePointSet({R("3/8"), R("5/8")}));
	CHECK(L.boundary_union(2) == FinitePointSet({R("1/4"), R("3/8"), R("5/8"), R("3/4")}));
	CHECK_THROWS_AS(L.U(13, 1), DomainError);
	CHECK_THROWS_AS(L.gamma(0), DomainError);
	CHECK_THROWS_AS(ConstructionLadder::build(corpus("S_POINT"), 0, 4), DomainError);
}

TEST_CASE("ladder on S_FULL is trivial")
{
	auto L = ConstructionLadder::build(corpus("S_FULL"), 6, 12);
	auto zero = PLFunction::constant(unit(), Rational(0));
	for (int n = 1; n <= 6; ++n) {
		CHECK(L.alpha(n) == PLFunction::constant(unit(), Rational(-1)));
		CHECK(L.beta(n) == PLFunction::constant(unit(), Rational(-1)));
		CHECK(L.gamma(n) == PLFunction::constant(unit(), Rational(1)));
		CHECK(L.delta(n) == zero);
		for (int k = 1; k <= 12; ++k) {
			CHECK(L.U(k, n).empty());
			CHECK(L.F(k, n).empty());
		}
	}
	CHECK(check_properties(L).all_pass());
}

TEST_CASE("sign partition")
{
	auto L = ConstructionLadder::build(corpus("S_POINT"), 3, 4);
	CHECK(sign_partition_check(L, 1).all_pass());
	CHECK(level_set(L.alpha(1), LevelKind::StrictSublevel, Rational(0)) == iu({Interval::open(R("1/4"), R("3/4"))}));
	CHECK(zero_set(L.alpha(1)) == iu({Interval::point(R("1/4")), Interval::point(R("3/4"))}));
	CHECK(level_set(L.alpha(1), LevelKind::StrictSuperlevel, Rational(0)) ==
	      iu({{R("0"), true, R("1/4"), false}, {R("3/4"), false, R("1"), true}}));

	auto full = ConstructionLadder::build(corpus("S_FULL"), 2, 2);
	CHECK(sign_partition_check(full, 1).all_pass());

	auto empty = ConstructionLadder::build(corpus("S_EMPTY"), 2, 2);
	CHECK(sign_partition_check(empty, 1).all_pass());
	CHECK(zero_set(empty.alpha(1)) == iu({Interval::point(R("0")), Interval::point(R("1/4"))}));
}

TEST_CASE("properties hold on the corpus")
{
	for (const char *name : {"S_FULL", "S_POINT", "S_EMPTY", "S_INTERVAL"}) {
		CAPTURE(name);
		auto report = check_properties(ConstructionLadder::build(corpus(name), 8, 12));
		CHECK_MESSAGE(report.all_pass(), failures(report));
		CHECK(report.first_failure() == nullptr);
		std::set<std::string> seen;
		for (const auto &c : report.checks)
			seen.insert(c.property);
		for (const char *p : {"A", "B", "C", "D", "E", "F", "G"})
			CHECK(seen.count(p) == 1);
	}
}

TEST_CASE("boundaries of S_INTERVAL are distinct across levels")
{
	auto L = ConstructionLadder::build(corpus("S_INTERVAL"), 8, 4);
	for (int n = 1; n <= 8; ++n) {
		Rational r = pow2(-n - 2);
		CHECK(L.boundary(n) == FinitePointSet({R("1/4") - r, R("3/4") + r}));
		for (int i = 1; i < n; ++i)
			CHECK(L.boundary(n).intersect(L.boundary(i)).empty());
	}
}

TEST_CASE("ladder invariants")
{
	for (const char *name : {"S_FULL", "S_POINT", "S_EMPTY", "S_INTERVAL"}) {
		auto L = ConstructionLadder::build(corpus(name), 8, 12);
		for (int n = 1; n <= 8; ++n) {
			CHECK(zero_set(L.beta(n)) == IntervalUnion::from_points(L.boundary(n), unit()));
			CHECK(pl_difference(L.gamma(n), L.delta(n)).min_value() >= Rational(0));
			CHECK(L.phi(n).min_value() >= Rational(0));
			CHECK(L.psi(n).max_value() <= Rational(1));
			CHECK(L.gamma(n).max_value() <= Rational(1));
			CHECK(L.delta(n).min_value() >= Rational(0));
			for (int k = 1; k <= 12; ++k) {
				CHECK(L.U(k, n).is_open());
				CHECK(L.F(k, n).is_closed());
				CHECK(L.U(k, n).intersect(L.F(k, n)).empty());
			}
		}
	}
}

TEST_CASE("rings are pairwise disjoint")
{
	for (const char *name : {"S_FULL", "S_POINT", "S_EMPTY", "S_INTERVAL"}) {
		auto L = ConstructionLadder::build(corpus(name), 8, 12);
		for (int k = 1; k <= 12; ++k) {
			std::vector<IntervalUnion> u_rings, f_rings;
			for (int n = 1; n <= 8; ++n) {
				u_rings.push_back(L.U(k, n).subtract(L.U(k, n - 1)));
				f_rings.push_back(L.F(k, n).subtract(L.F(k, n - 1)));
			}
			for (std::size_t i = 0; i < u_rings.size(); ++i)
				for (std::size_t j = 0; j < u_rings.size(); ++j) {
					CHECK(u_rings[i].intersect(f_rings[j]).empty());
					if (i != j) {
						CHECK(u_rings[i].intersect(u_rings[j]).empty());
						CHECK(f_rings[i].intersect(f_rings[j]).empty());
					}
				}
		}
	}
}

TEST_CASE("ladder agrees with the pointwise reference model")
{
	std::mt19937_64 rng(21);
	for (const char *name : {"S_POINT", "S_EMPTY", "S_INTERVAL"}) {
		auto s = corpus(name);
		auto L = ConstructionLadder::build(s, 8, 12);
		reference::PointwiseModel ref(s, 8);
		for (int trial = 0; trial < 300; ++trial) {
			Rational x = random_rational(rng, 600);
			int n = std::uniform_int_distribution<int>(1, 8)(rng);
			int k = std::uniform_int_distribution<int>(1, 12)(rng);
			CHECK(L.alpha(n)(x) == ref.alpha(n, x));
			CHECK(L.gamma(n)(x) == ref.gamma(n, x));
			CHECK(L.delta(n)(x) == ref.delta(n, x));
			CHECK(L.U(k, n).contains(x) == ref.in_u(k, n, x));
			CHECK(L.F(k, n).contains(x) == ref.in_f(k, n, x));
		}
	}
}

TEST_CASE("an injected endpoint fault is caught")
{
	auto L = ConstructionLadder::build(corpus("S_POINT"), 8, 12, Fault::CloseUEndpoint);
	auto report = check_properties(L);
	REQUIRE_FALSE(report.all_pass());
	const PropertyCheck *first = report.first_failure();
	REQUIRE(first != nullptr);
	CHECK((first->property == "A" || first->property == "F"));
	CHECK(first->counterexample.has_value());
}
