/* SPDX-License-Identifier: Apache-2.0 */

#include <cstring>
#include <string>

#include <ucforge/ucforge.h>

#include "reports.hpp"
#include "sampling.hpp"
#include "suite.hpp"

using namespace ucforge;

struct ucf_scenario {
	GDeltaScenario scenario;
};

struct ucf_ladder {
	ConstructionLadder ladder;
	DensePartition partition;
};

namespace {

thread_local std::string last_error;

char *dup(const std::string &s)
{
	char *out = static_cast<char *>(std::malloc(s.size() + 1));
	if (!out)
		throw std::bad_alloc();
	std::memcpy(out, s.c_str(), s.size() + 1);
	return out;
}

ucf_status fail(ucf_status status, const std::string &message)
{
	last_error = message;
	return status;
}

template <class F>
ucf_status guard(F &&body)
{
	try {
		last_error.clear();
		return body();
	} catch (const BoundsExhausted &e) {
		return fail(UCF_BOUNDS_EXHAUSTED, e.what());
	} catch (const DomainError &e) {
		return fail(UCF_INPUT_ERROR, e.what());
	} catch (const io::json::exception &e) {
		return fail(UCF_INPUT_ERROR, std::string("malformed JSON: ") + e.what());
	} catch (const TheoremViolation &e) {
		return fail(UCF_FAILED, std::string("theorem violation: ") + e.what());
	} catch (const InconsistencyError &e) {
		return fail(UCF_FAILED, std::string("construction inconsistency: ") + e.what());
	} catch (const std::exception &e) {
		return fail(UCF_INTERNAL_ERROR, e.what());
	}
}

void require(const void *p, const char *what)
{
	if (!p)
		throw DomainError(std::string(what) + " is NULL");
}

Rational arg(const char *text, const char *what)
{
	require(text, what);
	return Rational::parse(text);
}

Fault to_fault(ucf_fault f)
{
	switch (f) {
	case UCF_FAULT_NONE: return Fault::None;
	case UCF_FAULT_CLOSE_U_ENDPOINT: return Fault::CloseUEndpoint;
	}
	throw DomainError("unknown fault id " + std::to_string(static_cast<int>(f)));
}

const char *membership_name(Membership::Kind k)
{
	switch (k) {
	case Membership::Kind::InA: return "in_A";
	case Membership::Kind::NotInA: return "not_in_A";
	case Membership::Kind::Inconclusive: return "inconclusive";
	}
	return "inconclusive";
}

std::string join(const std::vector<Rational> &xs)
{
	std::string out;
	for (const Rational &x : xs) {
		if (!out.empty())
			out += ',';
		out += x.str();
	}
	return out;
}

} // namespace

extern "C" {

const char *ucf_last_error(void) { return last_error.c_str(); }

const char *ucf_version(void) { return "0.1.0"; }

void ucf_string_free(char *s) { std::free(s); }

ucf_status ucf_scenario_load(const char *path, ucf_scenario **out)
{
	return guard([&] {
		require(path, "path");
		require(out, "out");
		*out = new ucf_scenario{GDeltaScenario::load(path)};
		return UCF_OK;
	});
}

ucf_status ucf_scenario_parse(const char *json_text, ucf_scenario **out)
{
	return guard([&] {
		require(json_text, "json_text");
		require(out, "out");
		*out = new ucf_scenario{GDeltaScenario::parse(json_text)};
		return UCF_OK;
	});
}

void ucf_scenario_free(ucf_scenario *s) { delete s; }

ucf_status ucf_scenario_membership(const ucf_scenario *s, const char *x, int depth, char **kind, int *exit_level)
{
	return guard([&] {
		require(s, "scenario");
		require(kind, "kind");
		Membership m = s->scenario.membership(arg(x, "x"), depth);
		*kind = dup(membership_name(m.kind));
		if (exit_level)
			*exit_level = m.kind == Membership::Kind::NotInA ? m.exit_level : -1;
		return UCF_OK;
	});
}

ucf_status ucf_ladder_build(const ucf_scenario *s, int n_max, int k_max, ucf_fault fault, ucf_ladder **out)
{
	return guard([&] {
		require(s, "scenario");
		require(out, "out");
		*out = new ucf_ladder{ConstructionLadder::build(s->scenario, n_max, k_max, to_fault(fault)),
		                      DensePartition(s->scenario)};
		return UCF_OK;
	});
}

void ucf_ladder_free(ucf_ladder *l) { delete l; }

ucf_status ucf_check_properties(const ucf_ladder *l, char **report_json)
{
	return guard([&] {
		require(l, "ladder");
		require(report_json, "report_json");
		PropertyReport r = check_properties(l->ladder);
		*report_json = dup(io::to_json(r).dump(2));
		if (const PropertyCheck *c = r.first_failure()) {
			std::string msg = "property " + c->property + " fails at k=" + std::to_string(c->k) +
			                  " n=" + std::to_string(c->n) + ": " + c->detail;
			if (c->counterexample)
				msg += " (counterexample " + c->counterexample->str() + ")";
			return fail(UCF_FAILED, msg);
		}
		return UCF_OK;
	});
}

ucf_status ucf_eval(const ucf_ladder *l, const char *x, int k, char **fk, char **f)
{
	return guard([&] {
		require(l, "ladder");
		require(fk, "fk");
		require(f, "f");
		Rational p = arg(x, "x");
		Rational limit = limit_f(l->ladder, p);
		Rational value = f_k_eval(l->ladder, l->partition, k, p).value;
		*fk = dup(value.str());
		*f = dup(limit.str());
		return UCF_OK;
	});
}

ucf_status ucf_eval_csv(const ucf_ladder *l, const char *points, char **csv)
{
	return guard([&] {
		require(l, "ladder");
		require(points, "points");
		require(csv, "csv");
		*csv = dup(io::eval_csv(l->ladder, l->partition, io::parse_points(points)));
		return UCF_OK;
	});
}

ucf_status ucf_sample_points(const ucf_ladder *l, int count, char **points)
{
	return guard([&] {
		require(l, "ladder");
		require(points, "points");
		if (count < 1)
			throw DomainError("point count must be positive");
		*points = dup(join(reference::sample_points(l->ladder.scenario(), static_cast<std::size_t>(count), 6000)));
		return UCF_OK;
	});
}

ucf_status ucf_sup_deviation(const ucf_ladder *l, int k, const char *set_json, char **result_json)
{
	return guard([&] {
		require(l, "ladder");
		require(set_json, "set_json");
		require(result_json, "result_json");
		IntervalUnion set = io::interval_union_from_json(io::json::parse(set_json), l->ladder.ambient());
		if (set.empty())
			throw DomainError("sup_deviation needs a nonempty set");
		*result_json = dup(io::to_json(sup_deviation(l->ladder, l->partition, k, set)).dump(2));
		return UCF_OK;
	});
}

ucf_status ucf_certify(const ucf_ladder *l, const char *x, const char *epsilon, char **certificate_json)
{
	return guard([&] {
		require(l, "ladder");
		require(certificate_json, "certificate_json");
		UCCertificate c = uc_certify(l->ladder, l->partition, arg(x, "x"), arg(epsilon, "epsilon"));
		*certificate_json = dup(io::to_json(c).dump(2));
		return UCF_OK;
	});
}

ucf_status ucf_witness(const ucf_ladder *l, const char *x, int basis_level, char **witness_json)
{
	return guard([&] {
		require(l, "ladder");
		require(witness_json, "witness_json");
		if (basis_level < 1)
			throw DomainError("basis level must be >= 1");
		Rational p = arg(x, "x");
		if (!l->ladder.ambient().contains(p))
			throw DomainError("point " + p.str() + " lies outside X");
		IntervalUnion nb = dyadic_neighborhood(l->ladder.ambient(), p, basis_level);
		*witness_json = dup(io::to_json(nonuc_witness(l->ladder, l->partition, p, nb, basis_level)).dump(2));
		return UCF_OK;
	});
}

ucf_status ucf_scan(const ucf_ladder *l, const char *points, const char *epsilon, int basis_depth,
                    long grid_denominator, char **report_json)
{
	return guard([&] {
		require(l, "ladder");
		require(points, "points");
		require(report_json, "report_json");
		const Rational eps = arg(epsilon, "epsilon");
		if (eps.sign() <= 0)
			throw DomainError("epsilon must be positive");
		if (basis_depth < 1)
			throw DomainError("basis depth must be >= 1");
		const std::vector<Rational> xs = io::parse_points(points);
		for (const Rational &x : xs)
			if (!l->ladder.ambient().contains(x))
				throw DomainError("point " + x.str() + " lies outside X");

		std::vector<ScanEntry> entries = uc_scan(l->ladder, l->partition, xs, eps, basis_depth);
		int certified = 0, witnessed = 0, inconclusive = 0, wrong = 0, exhausted = 0, grid_bad = 0;
		io::json rows = io::json::array();
		for (const ScanEntry &e : entries) {
			io::json row = io::to_json(e);
			switch (e.classification) {
			case Classification::CertifiedUC: ++certified; break;
			case Classification::WitnessedNonUC: ++witnessed; break;
			case Classification::Inconclusive: ++inconclusive; break;
			}
			wrong += e.classification != Classification::Inconclusive && !e.agrees();
			exhausted += e.bounds_exhausted;
			if (e.certificate && grid_denominator > 0) {
				const UCCertificate &c = *e.certificate;
				Rational worst(0);
				for (int k : {c.k0, l->ladder.k_max()})
					worst = max(worst, grid_oracle_sup(l->ladder, l->partition, k, c.neighborhood, grid_denominator));
				bool ok = worst <= c.bound;
				grid_bad += !ok;
				row["grid_check"] = {{"denominator", grid_denominator}, {"k", {c.k0, l->ladder.k_max()}},
				                     {"max", worst.str()}, {"within_bound", ok}};
			}
			rows.push_back(std::move(row));
		}
		io::json report = {{"scenario", l->ladder.scenario().name()},
		                   {"n_max", l->ladder.n_max()},
		                   {"k_max", l->ladder.k_max()},
		                   {"epsilon", eps.str()},
		                   {"basis_depth", basis_depth},
		                   {"grid_denominator", grid_denominator},
		                   {"summary",
		                    {{"points", entries.size()},
		                     {"certified_UC", certified},
		                     {"witnessed_nonUC", witnessed},
		                     {"inconclusive", inconclusive},
		                     {"misclassified", wrong},
		                     {"bounds_exhausted", exhausted},
		                     {"grid_check_failures", grid_bad}}},
		                   {"points", std::move(rows)}};
		*report_json = dup(report.dump(2));
		if (wrong || grid_bad)
			return fail(UCF_FAILED, std::to_string(wrong) + " misclassified point(s), " + std::to_string(grid_bad) +
			                            " grid check failure(s)");
		if (exhausted)
			return fail(UCF_BOUNDS_EXHAUSTED, std::to_string(exhausted) +
			                                      " point(s) need larger bounds; increase --kmax or --nmax");
		if (inconclusive)
			return fail(UCF_FAILED, std::to_string(inconclusive) + " point(s) inconclusive");
		return UCF_OK;
	});
}

ucf_status ucf_suite_run(const char *corpus_dir, ucf_fault fault, char **summary_json)
{
	return guard([&] {
		require(corpus_dir, "corpus_dir");
		require(summary_json, "summary_json");
		suite::SuiteOptions options{corpus_dir, to_fault(fault)};
		suite::SuiteReport report = suite::run(options);
		*summary_json = dup(suite::to_json(report).dump(2));
		if (const suite::CriterionResult *r = report.first_failure())
			return fail(UCF_FAILED, "criterion " + std::to_string(r->id) + " failed: " + r->detail);
		return UCF_OK;
	});
}

} // extern "C"
