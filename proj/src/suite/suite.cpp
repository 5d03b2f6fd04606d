/* SPDX-License-Identifier: Apache-2.0 */

#include "suite.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <sstream>

#include "pl_oracle.hpp"
#include "reference.hpp"
#include "sampling.hpp"
#include "verifier.hpp"

namespace ucforge::suite {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kNmax = 16;
constexpr int kKmax = 64;
constexpr std::size_t kSamples = 50;
constexpr int kBasis = 6;
constexpr long kGrid = 4096;

struct Tally {
	long checked = 0;
	std::vector<std::string> failures;

	void expect(bool ok, const std::function<std::string()> &what)
	{
		++checked;
		if (!ok && failures.size() < 8)
			failures.push_back(what());
		else if (!ok)
			failures.emplace_back();
	}

	bool pass() const { return failures.empty(); }

	std::string summary(const std::string &ok_text) const
	{
		if (pass())
			return ok_text;
		std::ostringstream os;
		os << failures.size() << " of " << checked << " checks failed";
		for (const std::string &f : failures)
			if (!f.empty())
				os << "; " << f;
		return os.str();
	}
};

struct Context {
	const SuiteOptions &options;
	std::vector<GDeltaScenario> scenarios;
	std::vector<DensePartition> partitions;
	std::vector<std::vector<Rational>> samples;
	std::vector<std::optional<ConstructionLadder>> ladders;

	explicit Context(const SuiteOptions &opt) : options(opt)
	{
		for (const std::string &name : canonical_scenarios()) {
			const std::string path = (std::filesystem::path(opt.corpus_dir) / (name + ".json")).string();
			try {
				scenarios.push_back(GDeltaScenario::load(path));
			} catch (const DomainError &e) {
				throw CorpusError("canonical scenario " + name + " unavailable: " + e.what());
			}
		}
		for (std::size_t i = 0; i < scenarios.size(); ++i) {
			partitions.emplace_back(scenarios[i]);
			samples.push_back(reference::sample_points(scenarios[i], kSamples, 6000 + i));
		}
		ladders.resize(scenarios.size());
	}

	std::size_t index(const std::string &name) const
	{
		for (std::size_t i = 0; i < scenarios.size(); ++i)
			if (canonical_scenarios()[i] == name)
				return i;
		throw DomainError("unknown scenario " + name);
	}

	const GDeltaScenario &scenario(const std::string &name) const { return scenarios[index(name)]; }
	const DensePartition &partition(const std::string &name) const { return partitions[index(name)]; }
	const std::vector<Rational> &sample(const std::string &name) const { return samples[index(name)]; }

	const ConstructionLadder &ladder(const std::string &name)
	{
		std::size_t i = index(name);
		if (!ladders[i])
			ladders[i] = ConstructionLadder::build(scenarios[i], kNmax, kKmax, options.fault);
		return *ladders[i];
	}
};

CriterionResult criterion(int id, std::string title)
{
	CriterionResult r;
	r.id = id;
	r.title = std::move(title);
	return r;
}

std::string show(const Rational &r) { return r.str(); }

Rational deviation_at(const ConstructionLadder &L, const DensePartition &P, int k, const Rational &u)
{
	return abs(limit_f(L, u) - f_k_eval(L, P, k, u).value);
}

CriterionResult properties(Context &ctx)
{
	CriterionResult r = criterion(1, "properties (A)-(G) on the canonical corpus, N = 8, K = 12");
	Tally t;
	io::json per = io::json::object();
	auto start = Clock::now();
	for (std::size_t i = 0; i < ctx.scenarios.size(); ++i) {
		const std::string &name = canonical_scenarios()[i];
		auto L = ConstructionLadder::build(ctx.scenarios[i], 8, 12, ctx.options.fault);
		PropertyReport report = check_properties(L);
		std::size_t failed = 0;
		for (const PropertyCheck &c : report.checks) {
			failed += !c.pass;
			t.expect(c.pass, [&] {
				std::string s = name + " property " + c.property + " k=" + std::to_string(c.k) +
				                " n=" + std::to_string(c.n) + ": " + c.detail;
				if (c.counterexample)
					s += " at " + c.counterexample->str();
				return s;
			});
		}
		per[name] = {{"checks", report.checks.size()}, {"failed", failed}};
	}
	double secs = std::chrono::duration<double>(Clock::now() - start).count();
	t.expect(secs < 10.0, [&] { return "took " + std::to_string(secs) + " s, limit 10 s"; });
	r.pass = t.pass();
	r.detail = t.summary(std::to_string(t.checked - 1) + " indexed assertions pass");
	r.data = {{"scenarios", per}};
	return r;
}

CriterionResult convergence(Context &ctx)
{
	CriterionResult r = criterion(2, "f_{2^m}(1/2) = 1/m and f_k(1/4) = 1 on S_POINT; literal reading regression");
	Tally t;
	const auto &L = ctx.ladder("S_POINT");
	const auto &P = ctx.partition("S_POINT");
	reference::PointwiseModel ref(ctx.scenario("S_POINT"), kNmax);
	const Rational half(1, 2), quarter(1, 4);
	for (int m = 2; m <= 6; ++m) {
		int k = 1 << m;
		Rational v = f_k_eval(L, P, k, half).value;
		t.expect(v == reciprocal(m), [&] { return "f_" + std::to_string(k) + "(1/2) = " + show(v); });
		t.expect(ref.f_k(k, half) == reciprocal(m), [&] { return "reference f_" + std::to_string(k) + "(1/2) differs"; });
		t.expect(ref.rings(k, half).size() == 1, [&] { return "reference ring count at 1/2 is not 1"; });
	}
	t.expect(limit_f(L, quarter) == Rational(1), [] { return "f(1/4) != 1"; });
	int literal_zero = 0;
	for (int k = 1; k <= kKmax; ++k) {
		Rational v = f_k_eval(L, P, k, quarter).value;
		t.expect(v == Rational(1), [&] { return "f_" + std::to_string(k) + "(1/4) = " + show(v); });
		t.expect(ref.f_k(k, quarter) == Rational(1), [&] { return "reference f_" + std::to_string(k) + "(1/4) differs"; });
		if (k >= 2) {
			Rational lit = f_k_eval(L, P, k, quarter, SelectionRule::LiteralUpper).value;
			t.expect(lit == Rational(0), [&] { return "literal reading gives f_" + std::to_string(k) + "(1/4) = " + show(lit); });
			literal_zero += lit == Rational(0);
		}
	}
	r.pass = t.pass();
	r.detail = t.summary("implemented reading converges; literal reading gives f_k(1/4) = 0 for k = 2.." +
	                     std::to_string(kKmax) + " (regression reproduced)");
	r.data = {{"literal_reading_zero_count", literal_zero}, {"f_quarter", "1/1"}};
	return r;
}

CriterionResult ring_disjointness(Context &ctx)
{
	CriterionResult r = criterion(3, "at most one ring index per (k <= 12, x), 500 random points per scenario");
	Tally t;
	long evaluations = 0;
	for (std::size_t i = 0; i < ctx.scenarios.size(); ++i) {
		const std::string &name = canonical_scenarios()[i];
		const auto &L = ctx.ladder(name);
		const auto &P = ctx.partitions[i];
		reference::PointwiseModel ref(ctx.scenarios[i], kNmax);
		std::mt19937_64 rng(3000 + i);
		for (int trial = 0; trial < 500; ++trial) {
			Rational x = reference::random_rational(rng, L.ambient(), 1000);
			for (int k = 1; k <= 12; ++k) {
				int hits = 0;
				for (int n = 1; n <= std::min(k, kNmax); ++n)
					hits += c_membership(L, P, k, n, x);
				++evaluations;
				t.expect(hits <= 1, [&] {
					return name + ": " + std::to_string(hits) + " rings contain " + x.str() + " at k=" + std::to_string(k);
				});
				t.expect(static_cast<std::size_t>(hits) == ref.rings(k, x).size(), [&] {
					return name + ": reference ring count differs at " + x.str() + " k=" + std::to_string(k);
				});
			}
		}
	}
	r.pass = t.pass();
	r.detail = t.summary(std::to_string(evaluations) + " (scenario, k, x) evaluations, zero violations");
	return r;
}

CriterionResult certification(Context &ctx)
{
	CriterionResult r = criterion(4, "certificate at 1/2 in S_POINT (eps 1/3); S_FULL certifies with sup 0");
	Tally t;
	const auto &L = ctx.ladder("S_POINT");
	const auto &P = ctx.partition("S_POINT");
	UCCertificate c = uc_certify(L, P, Rational(1, 2), Rational(1, 3));
	t.expect(c.n0 == 4, [&] { return "n0 = " + std::to_string(c.n0); });
	t.expect(c.k0 == 33, [&] { return "k0 = " + std::to_string(c.k0); });
	t.expect(c.neighborhood.contains(Rational(1, 2)), [] { return "neighborhood misses 1/2"; });
	Rational worst(0);
	for (int k = 33; k <= kKmax; ++k) {
		Rational s = sup_deviation(L, P, k, c.neighborhood).value;
		worst = max(worst, s);
		t.expect(s <= Rational(1, 4), [&] { return "sup at k=" + std::to_string(k) + " is " + s.str(); });
	}
	const auto &F = ctx.ladder("S_FULL");
	const auto &PF = ctx.partition("S_FULL");
	for (const Rational &x : ctx.sample("S_FULL")) {
		UCCertificate cf = uc_certify(F, PF, x, Rational(1, 3));
		t.expect(cf.worst == Rational(0), [&] { return "S_FULL sup at " + x.str() + " is " + cf.worst.str(); });
		for (int k = cf.k0; k <= kKmax; k += 7)
			t.expect(sup_deviation(F, PF, k, cf.neighborhood).value == Rational(0),
			         [&] { return "S_FULL recomputed sup nonzero at " + x.str(); });
	}
	r.pass = t.pass();
	r.detail = t.summary("n0 = 4, k0 = 33, worst sup over k in [33, 64] is " + worst.str() + "; " +
	                     std::to_string(ctx.sample("S_FULL").size()) + " S_FULL points certify with sup 0");
	r.data = {{"certificate", io::json{{"n0", c.n0}, {"k0", c.k0}, {"worst_sup", worst.str()}}}};
	return r;
}

CriterionResult witnessing(Context &ctx)
{
	CriterionResult r = criterion(5, "non-UC witnesses: 1/16 in S_EMPTY; every S_POINT sample outside A at levels 1..6");
	Tally t;
	auto check = [&](const std::string &name, const NonUCWitness &w, int k0) {
		const auto &L = ctx.ladder(name);
		const auto &P = ctx.partition(name);
		reference::PointwiseModel ref(ctx.scenario(name), kNmax);
		const std::string where = name + " x=" + w.x.str() + " u=" + w.u.str() + " k=" + std::to_string(w.k);
		t.expect(w.neighborhood.contains(w.u), [&] { return where + ": u outside the neighborhood"; });
		t.expect(w.k > std::max(k0, w.n0), [&] { return where + ": k too small"; });
		t.expect(w.deviation >= w.eps, [&] { return where + ": deviation " + w.deviation.str() + " < " + w.eps.str(); });
		t.expect(deviation_at(L, P, w.k, w.u) == w.deviation, [&] { return where + ": recomputed deviation differs"; });
		t.expect(abs(ref.f(w.u) - ref.f_k(w.k, w.u)) == w.deviation, [&] { return where + ": reference deviation differs"; });
	};

	const auto &E = ctx.ladder("S_EMPTY");
	const auto &PE = ctx.partition("S_EMPTY");
	const Rational x(1, 16);
	std::vector<std::pair<IntervalUnion, int>> nbhds{
	    {IntervalUnion::normalize({Interval::open(Rational(1, 32), Rational(1, 8))}, E.ambient()), 1}};
	for (int j = 1; j <= kBasis; ++j)
		nbhds.emplace_back(dyadic_neighborhood(E.ambient(), x, j), j);
	for (const auto &[nb, k0] : nbhds) {
		NonUCWitness w = nonuc_witness(E, PE, x, nb, k0);
		t.expect(w.n0 == 2, [&] { return "S_EMPTY exit level " + std::to_string(w.n0); });
		t.expect(w.eps == Rational(1, 12), [&] { return "S_EMPTY eps " + w.eps.str(); });
		check("S_EMPTY", w, k0);
	}

	const auto &L = ctx.ladder("S_POINT");
	const auto &P = ctx.partition("S_POINT");
	int points = 0, witnesses = 0;
	for (const Rational &p : ctx.sample("S_POINT")) {
		Membership m = ctx.scenario("S_POINT").membership(p, kNmax);
		if (m.kind == Membership::Kind::InA)
			continue;
		t.expect(m.kind == Membership::Kind::NotInA, [&] { return "S_POINT membership undecided at " + p.str(); });
		++points;
		for (int j = 1; j <= kBasis; ++j) {
			try {
				check("S_POINT", nonuc_witness(L, P, p, dyadic_neighborhood(L.ambient(), p, j), j), j);
				++witnesses;
			} catch (const std::exception &e) {
				t.expect(false, [&] { return "S_POINT " + p.str() + " level " + std::to_string(j) + ": " + e.what(); });
			}
		}
	}
	r.pass = t.pass();
	r.detail = t.summary("1/16: n0 = 2, deviation >= 1/12 on " + std::to_string(nbhds.size()) + " neighborhoods; S_POINT: " +
	                     std::to_string(witnesses) + " witnesses for " + std::to_string(points) + " points");
	return r;
}

CriterionResult end_to_end(Context &ctx)
{
	CriterionResult r = criterion(6, "uc_scan on 50 points per scenario, N = 16, K = 64, eps = 1/3");
	Tally t;
	io::json per = io::json::object();
	auto start = Clock::now();
	for (std::size_t i = 0; i < ctx.scenarios.size(); ++i) {
		const std::string &name = canonical_scenarios()[i];
		const auto &L = ctx.ladder(name);
		std::vector<ScanEntry> entries = uc_scan(L, ctx.partitions[i], ctx.samples[i], Rational(1, 3), kBasis);
		int certified = 0, witnessed = 0, inconclusive = 0, wrong = 0;
		io::json open_points = io::json::array();
		for (const ScanEntry &e : entries) {
			switch (e.classification) {
			case Classification::CertifiedUC: ++certified; break;
			case Classification::WitnessedNonUC: ++witnessed; break;
			case Classification::Inconclusive: ++inconclusive; break;
			}
			bool misclassified = e.classification != Classification::Inconclusive && !e.agrees();
			wrong += misclassified;
			t.expect(!misclassified, [&] { return name + ": misclassified " + e.x.str(); });
			t.expect(e.classification != Classification::Inconclusive,
			         [&] { return name + ": inconclusive at " + e.x.str() + " (" + e.note + ")"; });
			if (e.classification == Classification::Inconclusive)
				open_points.push_back({{"x", e.x.str()}, {"note", e.note}});
		}
		per[name] = {{"points", entries.size()}, {"certified_UC", certified}, {"witnessed_nonUC", witnessed},
		             {"inconclusive", inconclusive}, {"misclassified", wrong}, {"inconclusive_points", open_points}};
	}
	double secs = std::chrono::duration<double>(Clock::now() - start).count();
	t.expect(secs < 60.0, [&] { return "took " + std::to_string(secs) + " s, limit 60 s"; });
	r.pass = t.pass();
	r.detail = t.summary("200 points classified, zero misclassified, zero inconclusive");
	r.data = {{"scenarios", per}, {"seconds", secs}};
	return r;
}

CriterionResult oracle_agreement(Context &ctx)
{
	CriterionResult r = criterion(7, "grid oracle (denominator 2^12) against the exact supremum on 10 triples");
	Tally t;
	struct Triple {
		const char *scenario;
		int k;
		Interval set;
	};
	auto R = [](long p, long q) { return Rational(p, q); };
	const std::vector<Triple> triples{
	    {"S_FULL", 5, Interval::closed(R(0, 1), R(1, 1))},
	    {"S_POINT", 8, Interval::open(R(3, 8), R(5, 8))},
	    {"S_POINT", 4, Interval::open(R(0, 1), R(1, 8))},
	    {"S_POINT", 8, Interval::point(R(1, 2))},
	    {"S_POINT", 64, Interval::open(R(31, 64), R(33, 64))},
	    {"S_EMPTY", 12, Interval::open(R(1, 32), R(1, 8))},
	    {"S_EMPTY", 3, Interval::open(R(1, 2), R(1, 1))},
	    {"S_EMPTY", 14, Interval::open(R(1, 2), R(1, 1))},
	    {"S_INTERVAL", 12, Interval::open(R(7, 16), R(9, 16))},
	    {"S_INTERVAL", 20, Interval::open(R(0, 1), R(1, 8))},
	};
	io::json rows = io::json::array();
	int gaps = 0;
	for (const Triple &tr : triples) {
		const auto &L = ctx.ladder(tr.scenario);
		const auto &P = ctx.partition(tr.scenario);
		IntervalUnion set = IntervalUnion::normalize({tr.set}, L.ambient());
		Deviation exact = sup_deviation(L, P, tr.k, set);
		Rational grid = grid_oracle_sup(L, P, tr.k, set, kGrid);
		const FinitePointSet &bd = L.boundary_union(L.n_max());

		// a grid point of the achieving region at which f_k - f equals the sup
		bool eligible = exact.source == Deviation::Source::Zero;
		for (long j = 0; j <= kGrid && !eligible; ++j) {
			Rational g = L.ambient().lo() + (L.ambient().hi() - L.ambient().lo()) * Rational(j, kGrid);
			if (!exact.region.contains(g))
				continue;
			switch (exact.source) {
			case Deviation::Source::BoundaryPoint: eligible = g == exact.point; break;
			case Deviation::Source::URing: eligible = !bd.contains(g); break;
			case Deviation::Source::FRing: eligible = !bd.contains(g) && P.contains(tr.k, g); break;
			case Deviation::Source::Zero: break;
			}
		}
		const std::string where = std::string(tr.scenario) + " k=" + std::to_string(tr.k);
		t.expect(grid <= exact.value, [&] { return where + ": grid " + grid.str() + " exceeds sup " + exact.value.str(); });
		if (eligible)
			t.expect(grid == exact.value, [&] { return where + ": grid " + grid.str() + " below sup " + exact.value.str(); });
		std::string explanation;
		if (grid < exact.value) {
			++gaps;
			explanation = exact.source == Deviation::Source::FRing
			                  ? "sup attained only on B_" + std::to_string(tr.k) +
			                        " points of the F ring; grid points j/4096 have class at most 13"
			                  : "achieving region contains no grid point";
			t.expect(!eligible, [&] { return where + ": unexplained gap"; });
		}
		rows.push_back({{"scenario", tr.scenario}, {"k", tr.k}, {"set", io::to_json(set)}, {"sup", exact.value.str()},
		                {"source", to_string(exact.source)}, {"grid", grid.str()}, {"grid_reaches_region", eligible},
		                {"gap_explanation", explanation.empty() ? io::json(nullptr) : io::json(explanation)}});
	}
	r.pass = t.pass();
	r.detail = t.summary("10 triples: grid <= sup everywhere, equal wherever the achieving region has a grid point; " +
	                     std::to_string(gaps) + " explained gap(s)");
	r.data = {{"triples", rows}};
	return r;
}

CriterionResult pl_engine(Context &)
{
	CriterionResult r = criterion(8, "PL algebra: 1000 compositions vs pointwise, 100 distance zero sets");
	Tally t;
	Ambient amb(Rational(0), Rational(1));
	std::mt19937_64 rng(8001);
	for (int trial = 0; trial < 1000; ++trial) {
		auto e = reference::random_expr(rng, amb, 3);
		PLFunction f = e->build();
		Rational x = reference::random_rational(rng, amb, 997);
		t.expect(f(x) == e->at(x), [&] { return "composition differs at " + x.str(); });
	}
	for (int trial = 0; trial < 100; ++trial) {
		IntervalUnion s = reference::random_union(rng, amb).closure();
		PLFunction d = PLFunction::from_distance(s, Rational(1));
		t.expect(zero_set(d) == s, [&] { return "zero set of a distance function differs from its set"; });
	}
	r.pass = t.pass();
	r.detail = t.summary("1100 exact checks pass");
	return r;
}

CriterionResult dense_partition(Context &ctx)
{
	CriterionResult r = criterion(9, "dense partition: 200 density witnesses, class index on 1000 rationals");
	Tally t;
	const auto &s = ctx.scenario("S_POINT");
	const auto &P = ctx.partition("S_POINT");
	const IntervalUnion excl = s.target().closure();
	std::mt19937_64 rng(9001);
	int done = 0;
	while (done < 200) {
		Rational a = reference::random_rational(rng, s.ambient(), 64);
		Rational b = reference::random_rational(rng, s.ambient(), 64);
		if (a == b)
			continue;
		if (b < a)
			std::swap(a, b);
		IntervalUnion window = IntervalUnion::normalize({Interval::open(a, b)}, s.ambient());
		if (!window.intersect(excl).empty())
			continue;
		int k = std::uniform_int_distribution<int>(1, 8)(rng);
		Rational w = P.witness(a, b, k);
		t.expect(a < w && w < b && !excl.contains(w) && reference::halving_count(w) + 1 == k, [&] {
			return "witness " + w.str() + " for (" + a.str() + ", " + b.str() + "), k=" + std::to_string(k);
		});
		++done;
	}
	const auto &PI = ctx.partition("S_INTERVAL");
	const IntervalUnion excl_i = ctx.scenario("S_INTERVAL").target().closure();
	for (int trial = 0; trial < 1000; ++trial) {
		Rational x = reference::random_rational(rng, s.ambient(), 4096);
		for (const auto &[part, ex] : {std::pair{&P, &excl}, std::pair{&PI, &excl_i}}) {
			int classes = 0;
			for (int k = 1; k <= 16; ++k)
				classes += part->contains(k, x);
			bool excluded = ex->contains(x);
			t.expect(classes == (excluded ? 0 : 1) && part->index(x).has_value() == !excluded, [&] {
				return "class index of " + x.str() + " is not a function";
			});
		}
	}
	r.pass = t.pass();
	r.detail = t.summary("200 witnesses land in the requested class; 2000 index lookups are single-valued");
	return r;
}

} // namespace

bool SuiteReport::all_pass() const { return first_failure() == nullptr; }

const CriterionResult *SuiteReport::first_failure() const
{
	for (const CriterionResult &r : results)
		if (!r.pass)
			return &r;
	return nullptr;
}

SuiteReport run(const SuiteOptions &options)
{
	Context ctx(options);
	SuiteReport report;
	const std::vector<std::function<CriterionResult(Context &)>> criteria{
	    properties, convergence, ring_disjointness, certification, witnessing,
	    end_to_end, oracle_agreement, pl_engine, dense_partition};
	for (std::size_t i = 0; i < criteria.size(); ++i) {
		auto start = Clock::now();
		CriterionResult r;
		try {
			r = criteria[i](ctx);
		} catch (const std::exception &e) {
			r.id = static_cast<int>(i + 1);
			r.title = "criterion " + std::to_string(r.id);
			r.pass = false;
			r.detail = std::string("aborted: ") + e.what();
		}
		r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
		report.results.push_back(std::move(r));
	}
	return report;
}

io::json to_json(const SuiteReport &report)
{
	io::json rows = io::json::array();
	for (const CriterionResult &r : report.results) {
		io::json row = {{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail},
		                {"seconds", r.seconds}};
		if (!r.data.is_null())
			row["data"] = r.data;
		rows.push_back(std::move(row));
	}
	const CriterionResult *first = report.first_failure();
	return {{"pass", report.all_pass()}, {"first_failure", first ? io::json(first->id) : io::json(nullptr)},
	        {"criteria", std::move(rows)}};
}

} // namespace ucforge::suite
