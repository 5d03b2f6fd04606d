#include "support.hpp"

using namespace testing;

namespace {

IntervalUnion iu(std::initializer_list<Interval> raw) { return IntervalUnion::normalize(raw, unit()); }

std::string explicit_json(const std::string &sets)
{
	return R"({"name": "E", "ambient": ["0/1", "1/1"], "family": {"kind": "explicit", "tail": "repeat_last", "sets": )" +
	       sets + "}}";
}

} // namespace

TEST_CASE("parsing the corpus")
{
	auto full = corpus("S_FULL");
	CHECK(full.name() == "S_FULL");
	CHECK(full.target().is_whole());

	auto point = corpus("S_POINT");
	CHECK(point.target() == iu({Interval::point(R("1/2"))}));
	CHECK(point.G(1) == iu({Interval::open(R("1/4"), R("3/4"))}));
	CHECK(point.G(2) == iu({Interval::open(R("3/8"), R("5/8"))}));

	auto empty = corpus("S_EMPTY");
	CHECK(empty.target().empty());
	CHECK(empty.G(3) == iu({Interval::open(R("0"), R("1/16"))}));

	auto interval = corpus("S_INTERVAL");
	CHECK(interval.target() == iu({Interval::closed(R("1/4"), R("3/4"))}));
	CHECK(interval.G(1) == iu({Interval::open(R("1/8"), R("7/8"))}));

	for (const auto &s : {full, point, empty, interval})
		CHECK(s.G(0).is_whole());
}

TEST_CASE("explicit families")
{
	auto s = GDeltaScenario::parse(explicit_json(R"([[["0/1", false, "1/8", false]]])"));
	CHECK(s.target() == iu({Interval::open(R("0"), R("1/8"))}));
	CHECK(s.G(5) == s.G(1));
	CHECK(s.membership(R("1/16"), 4).kind == Membership::Kind::InA);
	auto out = s.membership(R("1/2"), 4);
	CHECK(out.kind == Membership::Kind::NotInA);
	CHECK(out.exit_level == 0);
}

TEST_CASE("validation errors")
{
	SUBCASE("non-monotone explicit family names the offending index")
	{
		try {
			GDeltaScenario::parse(explicit_json(
			    R"([[["0/1", false, "1/2", false]], [["0/1", false, "1/4", false]], [["0/1", false, "3/4", false]]])"));
			FAIL("accepted a non-monotone family");
		} catch (const ValidationError &e) {
			CHECK(std::string(e.what()).find("n = 3") != std::string::npos);
		}
	}
	SUBCASE("non-open set")
	{
		CHECK_THROWS_AS(GDeltaScenario::parse(explicit_json(R"([[["1/4", true, "1/2", false]]])")), ValidationError);
	}
	SUBCASE("malformed input")
	{
		CHECK_THROWS_AS(GDeltaScenario::parse(explicit_json(R"([[["0/1", false, "1/0", false]]])")), DomainError);
		CHECK_THROWS_AS(GDeltaScenario::parse("{not json"), DomainError);
		CHECK_THROWS_AS(GDeltaScenario::parse(R"({"ambient": ["0/1"], "family": {"kind": "constant", "set": []}})"),
		                DomainError);
		CHECK_THROWS_AS(GDeltaScenario::parse(R"({"ambient": ["1/1", "1/1"], "family": {"kind": "constant", "set": []}})"),
		                DomainError);
		CHECK_THROWS_AS(GDeltaScenario::parse(R"({"ambient": ["0/1", "1/1"], "family": {"kind": "spiral"}})"),
		                DomainError);
		CHECK_THROWS_AS(GDeltaScenario::load("/nonexistent/scenario.json"), DomainError);
	}
	SUBCASE("bad ratios")
	{
		CHECK_THROWS_AS(GDeltaScenario::parse(R"({"ambient": ["0/1", "1/1"], "family": {"kind": "geometric_shrink",
			"core": [["1/2", true, "1/2", true]], "initial_radius": "1/4", "ratio": "1/1"}})"),
		                ValidationError);
		CHECK_THROWS_AS(GDeltaScenario::parse(R"({"ambient": ["0/1", "1/1"], "family": {"kind": "geometric_shrink",
			"core": [["1/4", false, "1/2", true]], "initial_radius": "1/4", "ratio": "1/2"}})"),
		                ValidationError);
	}
}

TEST_CASE("membership and exit levels")
{
	auto point = corpus("S_POINT");
	CHECK(point.membership(R("1/2"), 16).kind == Membership::Kind::InA);
	auto quarter = point.membership(R("1/4"), 16);
	CHECK(quarter.kind == Membership::Kind::NotInA);
	CHECK(quarter.exit_level == 0);

	auto empty = corpus("S_EMPTY");
	auto m = empty.membership(R("1/16"), 16);
	CHECK(m.kind == Membership::Kind::NotInA);
	CHECK(m.exit_level == 2);
	CHECK(empty.membership(R("1/4096"), 4).kind == Membership::Kind::Inconclusive);

	auto full = corpus("S_FULL");
	for (const char *x : {"0", "1/3", "1"})
		CHECK(full.membership(R(x), 1).kind == Membership::Kind::InA);
	CHECK_THROWS_AS(full.membership(R("2"), 1), DomainError);
}

TEST_CASE("families are monotone and the target lies in every G_n")
{
	for (const char *name : {"S_FULL", "S_POINT", "S_EMPTY", "S_INTERVAL"}) {
		auto s = corpus(name);
		auto running = s.G(0);
		for (int n = 1; n <= 17; ++n) {
			auto g = s.G(n);
			CHECK(g.is_open());
			CHECK(g.subset_of(s.G(n - 1)));
			CHECK(s.target().subset_of(g));
			running = running.intersect(g);
		}
		// every point of the 1/64 grid outside the target leaves some G_n
		for (const Rational &x : probe_grid())
			if (!s.target().contains(x))
				CHECK(s.membership(x, 17).kind == Membership::Kind::NotInA);
		// points that survive 16 levels lie within 2^-17 of the target
		CHECK(running.subset_of(s.G(16)));
	}
}

TEST_CASE("eventually constant families reach their target exactly")
{
	auto s = GDeltaScenario::parse(explicit_json(
	    R"([[["0/1", true, "1/2", false]], [["0/1", false, "1/4", false], ["1/4", false, "1/3", false]], [["1/8", false, "1/4", false]]])"));
	auto meet = s.G(0);
	for (int n = 1; n <= 8; ++n) {
		meet = meet.intersect(s.G(n));
		if (n >= 3)
			CHECK(meet == s.target());
	}
	auto full = corpus("S_FULL");
	CHECK(full.G(1).intersect(full.G(7)) == full.target());
}

TEST_CASE("contraction family")
{
	auto s = GDeltaScenario::parse(R"({"ambient": ["0/1", "1/1"], "family": {"kind": "contraction",
		"base": [["1/4", false, "3/4", false]], "anchor": "1/2", "ratio": "1/2"}})");
	CHECK(s.G(2) == iu({Interval::open(R("3/8"), R("5/8"))}));
	CHECK(s.target() == iu({Interval::point(R("1/2"))}));
	CHECK_THROWS_AS(GDeltaScenario::parse(R"({"ambient": ["0/1", "1/1"], "family": {"kind": "contraction",
		"base": [["1/4", false, "3/4", false]], "anchor": "0/1", "ratio": "1/2"}})"),
	                ValidationError);
}
