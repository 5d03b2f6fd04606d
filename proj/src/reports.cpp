/* SPDX-License-Identifier: Apache-2.0 */

#include "reports.hpp"

#include <sstream>

namespace ucforge::io {

namespace {

json optional_rational(const std::optional<Rational> &r)
{
	return r ? json(r->str()) : json(nullptr);
}

const char *membership_name(Membership::Kind k)
{
	switch (k) {
	case Membership::Kind::InA: return "in_A";
	case Membership::Kind::NotInA: return "not_in_A";
	case Membership::Kind::Inconclusive: return "inconclusive";
	}
	return "?";
}

} // namespace

json to_json(const PropertyReport &r)
{
	json checks = json::array();
	std::size_t failed = 0;
	for (const PropertyCheck &c : r.checks) {
		json e = {{"property", c.property}, {"k", c.k}, {"n", c.n}, {"pass", c.pass},
		          {"counterexample", optional_rational(c.counterexample)}, {"detail", c.detail}};
		if (c.i)
			e["i"] = c.i;
		checks.push_back(std::move(e));
		failed += !c.pass;
	}
	return {{"scenario", r.scenario}, {"n_max", r.n_max}, {"k_max", r.k_max}, {"pass", failed == 0},
	        {"checked", r.checks.size()}, {"failed", failed}, {"checks", std::move(checks)}};
}

json to_json(const UCCertificate &c)
{
	return {{"x", c.x.str()}, {"epsilon", c.eps.str()}, {"n0", c.n0}, {"k0", c.k0},
	        {"neighborhood", to_json(c.neighborhood)}, {"bound", c.bound.str()}, {"worst_sup", c.worst.str()}};
}

json to_json(const NonUCWitness &w)
{
	return {{"x", w.x.str()}, {"n0", w.n0}, {"epsilon", w.eps.str()}, {"neighborhood", to_json(w.neighborhood)},
	        {"k", w.k}, {"u", w.u.str()}, {"deviation", w.deviation.str()}, {"route", to_string(w.route)}};
}

json to_json(const ScanEntry &e)
{
	json out = {{"x", e.x.str()},
	            {"membership", membership_name(e.membership.kind)},
	            {"classification", to_string(e.classification)},
	            {"agrees", e.agrees()}};
	if (e.membership.kind == Membership::Kind::NotInA)
		out["exit_level"] = e.membership.exit_level;
	if (e.certificate)
		out["certificate"] = to_json(*e.certificate);
	if (!e.witnesses.empty()) {
		json ws = json::array();
		for (const NonUCWitness &w : e.witnesses)
			ws.push_back(to_json(w));
		out["witnesses"] = std::move(ws);
	}
	if (!e.note.empty())
		out["note"] = e.note;
	if (e.bounds_exhausted)
		out["bounds_exhausted"] = true;
	return out;
}

json to_json(const Deviation &d)
{
	return {{"sup", d.value.str()}, {"attained_at", d.point.str()}, {"source", to_string(d.source)}, {"n", d.n},
	        {"region", to_json(d.region)}};
}

std::string eval_csv(const ConstructionLadder &L, const DensePartition &P, const std::vector<Rational> &points)
{
	std::ostringstream os;
	os << "x_num,x_den,k,fk_num,fk_den,f_num,f_den\n";
	for (const Rational &x : points) {
		const Rational f = limit_f(L, x);
		for (int k = 1; k <= L.k_max(); ++k) {
			const Rational fk = f_k_eval(L, P, k, x).value;
			os << x.numerator() << ',' << x.denominator() << ',' << k << ',' << fk.numerator() << ','
			   << fk.denominator() << ',' << f.numerator() << ',' << f.denominator() << '\n';
		}
	}
	return os.str();
}

std::vector<Rational> parse_points(std::string_view text)
{
	std::vector<Rational> out;
	std::size_t start = 0;
	while (start <= text.size()) {
		std::size_t comma = text.find(',', start);
		std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
		while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front())))
			item.remove_prefix(1);
		while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back())))
			item.remove_suffix(1);
		if (item.empty())
			throw DomainError("empty entry in point list");
		out.push_back(Rational::parse(item));
		if (comma == std::string_view::npos)
			break;
		start = comma + 1;
	}
	return out;
}

} // namespace ucforge::io
