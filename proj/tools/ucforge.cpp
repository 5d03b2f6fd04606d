/* SPDX-License-Identifier: Apache-2.0 */

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <ucforge/ucforge.h>

namespace fs = std::filesystem;

namespace {

struct Config {
	std::string scenario;
	int nmax = 16;
	int kmax = 64;
	std::string epsilon = "1/3";
	std::string points;
	long grid = 4096;
	int basis = 6;
	std::string out;
	bool inject_fault = false;
};

/// Owned string from the C API.
struct Text {
	char *p = nullptr;
	~Text() { ucf_string_free(p); }
	std::string str() const { return p ? p : ""; }
};

struct Failure {
	int code;
	std::string message;
};

void check(ucf_status st)
{
	if (st != UCF_OK)
		throw Failure{st, ucf_last_error()};
}

std::string corpus_dir()
{
	const char *env = std::getenv("UCFORGE_CORPUS");
	return env && *env ? env : UCFORGE_DEFAULT_CORPUS;
}

/// A path, or the name of a corpus scenario such as S_POINT.
std::string resolve_scenario(const std::string &arg)
{
	if (arg.empty())
		throw Failure{UCF_INPUT_ERROR, "--scenario is required"};
	if (fs::exists(arg))
		return arg;
	fs::path candidate = fs::path(corpus_dir()) / (arg + ".json");
	if (arg.find('/') == std::string::npos && fs::exists(candidate))
		return candidate.string();
	throw Failure{UCF_INPUT_ERROR, "scenario file not found: " + arg};
}

void emit(const Config &cfg, const std::string &contents)
{
	if (cfg.out.empty()) {
		std::cout << contents;
		if (!contents.empty() && contents.back() != '\n')
			std::cout << '\n';
		return;
	}
	fs::path target(cfg.out);
	fs::path tmp = target;
	tmp += ".tmp";
	{
		std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
		if (!os)
			throw Failure{UCF_INPUT_ERROR, "cannot write " + tmp.string()};
		os << contents;
		if (!os.flush())
			throw Failure{UCF_INPUT_ERROR, "cannot write " + tmp.string()};
	}
	std::error_code ec;
	fs::rename(tmp, target, ec);
	if (ec)
		throw Failure{UCF_INPUT_ERROR, "cannot move output into place: " + ec.message()};
}

using ScenarioPtr = std::unique_ptr<ucf_scenario, decltype(&ucf_scenario_free)>;
using LadderPtr = std::unique_ptr<ucf_ladder, decltype(&ucf_ladder_free)>;

ScenarioPtr load(const Config &cfg)
{
	ucf_scenario *s = nullptr;
	check(ucf_scenario_load(resolve_scenario(cfg.scenario).c_str(), &s));
	return ScenarioPtr(s, ucf_scenario_free);
}

LadderPtr build(const Config &cfg, const ucf_scenario *s)
{
	ucf_ladder *l = nullptr;
	check(ucf_ladder_build(s, cfg.nmax, cfg.kmax, cfg.inject_fault ? UCF_FAULT_CLOSE_U_ENDPOINT : UCF_FAULT_NONE, &l));
	return LadderPtr(l, ucf_ladder_free);
}

int cmd_props(const Config &cfg)
{
	auto s = load(cfg);
	auto l = build(cfg, s.get());
	Text report;
	ucf_status st = ucf_check_properties(l.get(), &report.p);
	if (report.p)
		emit(cfg, report.str());
	check(st);
	return 0;
}

int cmd_eval(const Config &cfg)
{
	if (cfg.points.empty())
		throw Failure{UCF_INPUT_ERROR, "eval needs --points"};
	auto s = load(cfg);
	auto l = build(cfg, s.get());
	Text csv;
	check(ucf_eval_csv(l.get(), cfg.points.c_str(), &csv.p));

	std::string rest = cfg.points;
	while (!rest.empty()) {
		std::size_t comma = rest.find(',');
		std::string x = rest.substr(0, comma);
		rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
		Text kind;
		int exit_level = -1;
		check(ucf_scenario_membership(s.get(), x.c_str(), cfg.nmax, &kind.p, &exit_level));
		if (kind.str() == "inconclusive")
			std::cerr << "ucforge: warning: " << x << " lies in G_" << cfg.nmax
			          << " but not in A; f and f_k there are only resolved up to N_max\n";
	}
	emit(cfg, csv.str());
	return 0;
}

int cmd_scan(const Config &cfg)
{
	auto s = load(cfg);
	auto l = build(cfg, s.get());
	std::string points = cfg.points;
	if (points.empty()) {
		Text sampled;
		check(ucf_sample_points(l.get(), 50, &sampled.p));
		points = sampled.str();
	}
	Text report;
	ucf_status st = ucf_scan(l.get(), points.c_str(), cfg.epsilon.c_str(), cfg.basis, cfg.grid, &report.p);
	if (report.p)
		emit(cfg, report.str());
	check(st);
	return 0;
}

int cmd_suite(const Config &cfg)
{
	Text summary;
	ucf_status st = ucf_suite_run(corpus_dir().c_str(), cfg.inject_fault ? UCF_FAULT_CLOSE_U_ENDPOINT : UCF_FAULT_NONE,
	                              &summary.p);
	if (summary.p)
		emit(cfg, summary.str());
	check(st);
	return 0;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Exact construction and verification of sequences whose uniform convergence set is a given G-delta set"};
	app.require_subcommand(1);
	Config cfg;

	auto bounds = [&](CLI::App *sub) {
		sub->add_option("--nmax", cfg.nmax, "largest n of G_n")->check(CLI::PositiveNumber)->capture_default_str();
		sub->add_option("--kmax", cfg.kmax, "largest k of f_k")->check(CLI::PositiveNumber)->capture_default_str();
		sub->add_option("--out", cfg.out, "output file (written atomically); stdout when omitted");
	};
	auto scenario = [&](CLI::App *sub) {
		sub->add_option("--scenario", cfg.scenario, "scenario JSON file, or a corpus name such as S_POINT")->required();
	};
	auto fault = [&](CLI::App *sub) {
		sub->add_flag("--inject-fault", cfg.inject_fault)->group("");
	};

	CLI::App *props = app.add_subcommand("props", "check the set-family properties (A)-(G)");
	scenario(props);
	bounds(props);
	fault(props);

	CLI::App *eval = app.add_subcommand("eval", "tabulate f_k(x) and f(x) as CSV");
	scenario(eval);
	bounds(eval);
	eval->add_option("--points", cfg.points, "comma-separated rationals p/q")->required();

	CLI::App *scan = app.add_subcommand("scan", "classify points as uniform or non-uniform convergence points");
	scenario(scan);
	bounds(scan);
	scan->add_option("--epsilon", cfg.epsilon, "certificate tolerance p/q")->capture_default_str();
	scan->add_option("--points", cfg.points, "comma-separated rationals p/q; sampled when omitted");
	scan->add_option("--basis", cfg.basis, "dyadic neighborhood levels per non-UC point")
	    ->check(CLI::PositiveNumber)
	    ->capture_default_str();
	scan->add_option("--grid", cfg.grid, "grid denominator for certificate cross-checks, 0 to skip")
	    ->check(CLI::NonNegativeNumber)
	    ->capture_default_str();
	fault(scan);

	CLI::App *suite = app.add_subcommand("suite", "run the acceptance suite over the corpus (UCFORGE_CORPUS)");
	suite->add_option("--out", cfg.out, "summary file (written atomically); stdout when omitted");
	fault(suite);

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError &e) {
		int rc = app.exit(e);
		return rc == 0 ? 0 : UCF_INPUT_ERROR;
	}

	try {
		if (*props)
			return cmd_props(cfg);
		if (*eval)
			return cmd_eval(cfg);
		if (*scan)
			return cmd_scan(cfg);
		return cmd_suite(cfg);
	} catch (const Failure &f) {
		std::cerr << "ucforge: " << (f.code == UCF_FAILED ? "check failed: " : "error: ") << f.message << '\n';
		if (f.code == UCF_BOUNDS_EXHAUSTED && f.message.find("increase") == std::string::npos)
			std::cerr << "ucforge: increase --kmax or --nmax\n";
		return f.code == UCF_INTERNAL_ERROR ? 1 : f.code;
	} catch (const std::exception &e) {
		std::cerr << "ucforge: error: " << e.what() << '\n';
		return 1;
	}
}
