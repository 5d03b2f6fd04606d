/* SPDX-License-Identifier: Apache-2.0 */

#include "scenario.hpp"

#include <fstream>
#include <sstream>

#include "io.hpp"

namespace ucforge {

namespace {

template <class... Ts>
struct overloaded : Ts... {
	using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Rational power(const Rational &base, int e)
{
	Rational r(1);
	for (int i = 0; i < e; ++i)
		r *= base;
	return r;
}

IntervalUnion contract(const IntervalUnion &s, const Rational &anchor, const Rational &factor)
{
	std::vector<Interval> raw;
	for (const Interval &c : s.components())
		raw.push_back({anchor + factor * (c.left - anchor), c.left_closed,
		               anchor + factor * (c.right - anchor), c.right_closed});
	return IntervalUnion::normalize(raw, s.ambient());
}

void require_ratio(const Rational &ratio)
{
	if (!(ratio.sign() > 0 && ratio < Rational(1)))
		throw ValidationError("ratio must lie in (0, 1), got " + ratio.str());
}

void validate(const Ambient &amb, const Family &family)
{
	std::visit(overloaded{
	               [&](const ConstantFamily &f) {
		               if (!f.set.is_open())
			               throw ValidationError("constant family set is not open in X");
	               },
	               [&](const GeometricShrinkFamily &f) {
		               if (!f.core.is_closed())
			               throw ValidationError("geometric_shrink core must be closed");
		               if (f.initial_radius.sign() <= 0)
			               throw ValidationError("initial_radius must be positive");
		               require_ratio(f.ratio);
	               },
	               [&](const ContractionFamily &f) {
		               require_ratio(f.ratio);
		               if (!amb.contains(f.anchor))
			               throw ValidationError("contraction anchor " + f.anchor.str() + " lies outside X");
		               if (!f.base.is_open())
			               throw ValidationError("contraction base is not open in X (n = 1)");
		               IntervalUnion next = contract(f.base, f.anchor, f.ratio);
		               if (!next.is_open())
			               throw ValidationError("contracted base is not open in X (n = 2)");
		               // G_{n+1} = T(G_n) with T monotone, so G_2 ⊆ G_1 propagates
		               if (!next.subset_of(f.base))
			               throw ValidationError("non-monotone family: G_2 is not contained in G_1 (n = 2)");
	               },
	               [&](const ExplicitFamily &f) {
		               if (f.sets.empty())
			               throw ValidationError("explicit family needs at least one set");
		               for (std::size_t i = 0; i < f.sets.size(); ++i) {
			               if (!f.sets[i].is_open())
				               throw ValidationError("explicit set G_" + std::to_string(i + 1) +
				                                     " is not open in X");
			               if (i > 0 && !f.sets[i].subset_of(f.sets[i - 1]))
				               throw ValidationError("non-monotone family: G_" + std::to_string(i + 1) +
				                                     " is not contained in G_" + std::to_string(i) +
				                                     " (n = " + std::to_string(i + 1) + ")");
		               }
	               },
	           },
	           family);
}

} // namespace

GDeltaScenario::GDeltaScenario(std::string name, Ambient ambient, Family family)
    : name_(std::move(name)), ambient_(std::move(ambient)), family_(std::move(family))
{
	std::visit([&](const auto &f) {
		using T = std::decay_t<decltype(f)>;
		auto check = [&](const IntervalUnion &s) {
			if (!(s.ambient() == ambient_))
				throw ValidationError("family set built on a different ambient space");
		};
		if constexpr (std::is_same_v<T, ConstantFamily>)
			check(f.set);
		else if constexpr (std::is_same_v<T, GeometricShrinkFamily>)
			check(f.core);
		else if constexpr (std::is_same_v<T, ContractionFamily>)
			check(f.base);
		else
			for (const auto &s : f.sets)
				check(s);
	}, family_);
	validate(ambient_, family_);
}

GDeltaScenario GDeltaScenario::parse(std::string_view text)
{
	io::json j;
	try {
		j = io::json::parse(text);
	} catch (const io::json::parse_error &e) {
		throw DomainError(std::string("scenario is not valid JSON: ") + e.what());
	}
	try {
		const io::json &amb = j.at("ambient");
		if (!amb.is_array() || amb.size() != 2)
			throw DomainError("ambient must be [lo, hi]");
		Ambient ambient(io::rational_from_json(amb[0]), io::rational_from_json(amb[1]));
		std::string name = j.value("name", std::string("unnamed"));

		const io::json &fam = j.at("family");
		std::string kind = fam.at("kind").get<std::string>();
		auto family = [&]() -> Family {
			if (kind == "constant")
				return ConstantFamily{io::interval_union_from_json(fam.at("set"), ambient)};
			if (kind == "geometric_shrink")
				return GeometricShrinkFamily{io::interval_union_from_json(fam.at("core"), ambient),
				                             io::rational_from_json(fam.at("initial_radius")),
				                             io::rational_from_json(fam.at("ratio"))};
			if (kind == "contraction")
				return ContractionFamily{io::interval_union_from_json(fam.at("base"), ambient),
				                         io::rational_from_json(fam.at("anchor")),
				                         io::rational_from_json(fam.at("ratio"))};
			if (kind == "explicit") {
				std::string tail = fam.value("tail", std::string("repeat_last"));
				if (tail != "repeat_last")
					throw DomainError("unsupported explicit tail '" + tail + "'");
				ExplicitFamily f;
				for (const io::json &s : fam.at("sets"))
					f.sets.push_back(io::interval_union_from_json(s, ambient));
				return f;
			}
			throw DomainError("unknown family kind '" + kind + "'");
		}();
		return GDeltaScenario(std::move(name), std::move(ambient), std::move(family));
	} catch (const io::json::exception &e) {
		throw DomainError(std::string("malformed scenario: ") + e.what());
	}
}

GDeltaScenario GDeltaScenario::load(const std::string &path)
{
	std::ifstream in(path);
	if (!in)
		throw DomainError("cannot read scenario file " + path);
	std::stringstream ss;
	ss << in.rdbuf();
	return parse(ss.str());
}

IntervalUnion GDeltaScenario::G(int n) const
{
	if (n < 0)
		throw DomainError("G_n needs n >= 0");
	if (n == 0)
		return IntervalUnion::whole(ambient_);
	return std::visit(overloaded{
	                      [&](const ConstantFamily &f) { return f.set; },
	                      [&](const GeometricShrinkFamily &f) {
		                      Rational r = f.initial_radius * power(f.ratio, n - 1);
		                      std::vector<Interval> raw;
		                      for (const Interval &c : f.core.components())
			                      raw.push_back(Interval::open(c.left - r, c.right + r));
		                      return IntervalUnion::normalize(raw, ambient_);
	                      },
	                      [&](const ContractionFamily &f) {
		                      return contract(f.base, f.anchor, power(f.ratio, n - 1));
	                      },
	                      [&](const ExplicitFamily &f) {
		                      std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(n), f.sets.size());
		                      return f.sets[i - 1];
	                      },
	                  },
	                  family_);
}

IntervalUnion GDeltaScenario::target() const
{
	return std::visit(overloaded{
	                      [&](const ConstantFamily &f) { return f.set; },
	                      [&](const GeometricShrinkFamily &f) { return f.core; },
	                      [&](const ContractionFamily &f) {
		                      if (f.base.contains(f.anchor))
			                      return IntervalUnion::normalize({Interval::point(f.anchor)}, ambient_);
		                      return IntervalUnion(ambient_);
	                      },
	                      [&](const ExplicitFamily &f) { return f.sets.back(); },
	                  },
	                  family_);
}

Membership GDeltaScenario::membership(const Rational &x, int depth) const
{
	if (!ambient_.contains(x))
		throw DomainError("point " + x.str() + " lies outside X");
	if (depth < 1)
		throw DomainError("membership depth must be >= 1");
	if (target().contains(x))
		return Membership::in_a();
	for (int n = 1; n <= depth; ++n)
		if (!G(n).contains(x))
			return Membership::not_in_a(n - 1);
	return Membership::inconclusive();
}

} // namespace ucforge
