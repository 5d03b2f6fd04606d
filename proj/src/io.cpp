/* SPDX-License-Identifier: Apache-2.0 */

#include "io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace ucforge::io {

Rational rational_from_json(const json &j)
{
	if (j.is_string())
		return Rational::parse(j.get<std::string>());
	if (j.is_number_integer())
		return Rational(j.get<long>());
	throw DomainError("expected a rational as \"p/q\" text, got " + j.dump());
}

json to_json(const Rational &r)
{
	return r.str();
}

IntervalUnion interval_union_from_json(const json &j, const Ambient &ambient)
{
	if (!j.is_array())
		throw DomainError("expected a list of intervals, got " + j.dump());
	std::vector<Interval> raw;
	for (const json &e : j) {
		if (!e.is_array() || e.size() != 4 || !e[1].is_boolean() || !e[3].is_boolean())
			throw DomainError("interval must be [left, left_closed, right, right_closed], got " + e.dump());
		raw.push_back({rational_from_json(e[0]), e[1].get<bool>(), rational_from_json(e[2]), e[3].get<bool>()});
	}
	return IntervalUnion::normalize(raw, ambient);
}

json to_json(const IntervalUnion &s)
{
	json out = json::array();
	for (const Interval &c : s.components())
		out.push_back({c.left.str(), c.left_closed, c.right.str(), c.right_closed});
	return out;
}

json to_json(const FinitePointSet &s)
{
	json out = json::array();
	for (const Rational &p : s.points())
		out.push_back(p.str());
	return out;
}

json to_json(const PLFunction &f)
{
	json xs = json::array(), ys = json::array();
	for (const Rational &x : f.breakpoints())
		xs.push_back(x.str());
	for (const Rational &y : f.values())
		ys.push_back(y.str());
	return {{"breakpoints", xs}, {"values", ys}};
}

PLFunction pl_function_from_json(const json &j, const Ambient &ambient)
{
	std::vector<Rational> xs, ys;
	for (const json &e : j.at("breakpoints"))
		xs.push_back(rational_from_json(e));
	for (const json &e : j.at("values"))
		ys.push_back(rational_from_json(e));
	return PLFunction(ambient, std::move(xs), std::move(ys));
}

void write_atomically(const std::string &path, const std::string &contents)
{
	namespace fs = std::filesystem;
	fs::path target(path);
	fs::path tmp = target;
	tmp += ".tmp";
	{
		std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
		if (!out)
			throw std::runtime_error("cannot open " + tmp.string() + " for writing");
		out << contents;
		if (!out.flush())
			throw std::runtime_error("write to " + tmp.string() + " failed");
	}
	fs::rename(tmp, target);
}

} // namespace ucforge::io
