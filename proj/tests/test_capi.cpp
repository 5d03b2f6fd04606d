#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstring>
#include <string>

#include <nlohmann/json.hpp>
#include <ucforge/ucforge.h>

namespace {

struct Text {
	char *p = nullptr;
	~Text() { ucf_string_free(p); }
	std::string str() const { return p ? p : ""; }
};

std::string corpus(const char *name) { return std::string(UCFORGE_CORPUS_DIR) + "/" + name + ".json"; }

struct Loaded {
	ucf_scenario *s = nullptr;
	ucf_ladder *l = nullptr;
	Loaded(const char *name, int n, int k, ucf_fault fault = UCF_FAULT_NONE)
	{
		REQUIRE(ucf_scenario_load(corpus(name).c_str(), &s) == UCF_OK);
		REQUIRE(ucf_ladder_build(s, n, k, fault, &l) == UCF_OK);
	}
	~Loaded()
	{
		ucf_ladder_free(l);
		ucf_scenario_free(s);
	}
};

} // namespace

TEST_CASE("scenario handles and error codes")
{
	ucf_scenario *s = nullptr;
	CHECK(ucf_scenario_load("/nonexistent.json", &s) == UCF_INPUT_ERROR);
	CHECK(std::string(ucf_last_error()).find("cannot read") != std::string::npos);
	CHECK(s == nullptr);
	CHECK(ucf_scenario_parse("{", &s) == UCF_INPUT_ERROR);
	CHECK(ucf_scenario_parse(nullptr, &s) == UCF_INPUT_ERROR);
	CHECK(ucf_scenario_parse(R"({"ambient": ["0/1", "1/1"], "family": {"kind": "explicit", "sets":
		[[["0/1", false, "1/4", false]], [["0/1", false, "1/2", false]]]}})",
	                         &s) == UCF_INPUT_ERROR);
	CHECK(std::string(ucf_last_error()).find("n = 2") != std::string::npos);

	REQUIRE(ucf_scenario_load(corpus("S_EMPTY").c_str(), &s) == UCF_OK);
	Text kind;
	int level = 0;
	REQUIRE(ucf_scenario_membership(s, "1/16", 16, &kind.p, &level) == UCF_OK);
	CHECK(kind.str() == "not_in_A");
	CHECK(level == 2);
	Text bad;
	CHECK(ucf_scenario_membership(s, "1/0", 16, &bad.p, &level) == UCF_INPUT_ERROR);
	ucf_ladder *l = nullptr;
	CHECK(ucf_ladder_build(s, 0, 4, UCF_FAULT_NONE, &l) == UCF_INPUT_ERROR);
	ucf_scenario_free(s);
	ucf_scenario_free(nullptr);
	ucf_ladder_free(nullptr);
	CHECK(std::string(ucf_version()) == "0.1.0");
}

TEST_CASE("properties through the C API")
{
	Loaded ok("S_POINT", 8, 12);
	Text report;
	CHECK(ucf_check_properties(ok.l, &report.p) == UCF_OK);
	auto j = nlohmann::json::parse(report.str());
	CHECK(j["pass"] == true);
	CHECK(j["scenario"] == "S_POINT");

	Loaded bad("S_POINT", 8, 12, UCF_FAULT_CLOSE_U_ENDPOINT);
	Text failed;
	CHECK(ucf_check_properties(bad.l, &failed.p) == UCF_FAILED);
	CHECK(nlohmann::json::parse(failed.str())["pass"] == false);
	CHECK(std::string(ucf_last_error()).find("property A") != std::string::npos);
}

TEST_CASE("evaluation")
{
	Loaded p("S_POINT", 16, 64);
	Text fk, f;
	REQUIRE(ucf_eval(p.l, "1/2", 8, &fk.p, &f.p) == UCF_OK);
	CHECK(fk.str() == "1/3");
	CHECK(f.str() == "0/1");
	Text csv;
	REQUIRE(ucf_eval_csv(p.l, "1/4", &csv.p) == UCF_OK);
	std::string text = csv.str();
	CHECK(text.rfind("x_num,x_den,k,fk_num,fk_den,f_num,f_den\n1,4,1,1,1,1,1\n", 0) == 0);
	CHECK(std::count(text.begin(), text.end(), '\n') == 65);
	Text out1, out2;
	CHECK(ucf_eval(p.l, "5/4", 1, &out1.p, &out2.p) == UCF_INPUT_ERROR);
	CHECK(ucf_eval(p.l, "1/2", 65, &out1.p, &out2.p) == UCF_INPUT_ERROR);
	Text none;
	CHECK(ucf_eval_csv(p.l, "1/2,,1/3", &none.p) == UCF_INPUT_ERROR);
}

TEST_CASE("certificates, witnesses and suprema")
{
	Loaded p("S_POINT", 16, 64);
	Text cert;
	REQUIRE(ucf_certify(p.l, "1/2", "1/3", &cert.p) == UCF_OK);
	auto c = nlohmann::json::parse(cert.str());
	CHECK(c["n0"] == 4);
	CHECK(c["k0"] == 33);
	CHECK(c["bound"] == "1/4");
	Text none;
	CHECK(ucf_certify(p.l, "1/2", "1/10", &none.p) == UCF_BOUNDS_EXHAUSTED);
	CHECK(ucf_certify(p.l, "1/4", "1/3", &none.p) == UCF_INPUT_ERROR);

	Text w;
	REQUIRE(ucf_witness(p.l, "7/8", 3, &w.p) == UCF_OK);
	auto wj = nlohmann::json::parse(w.str());
	CHECK(wj["n0"] == 0);
	CHECK(wj["route"] == "dense_class");
	CHECK(ucf_witness(p.l, "1/2", 3, &none.p) == UCF_INPUT_ERROR);

	Text sup;
	REQUIRE(ucf_sup_deviation(p.l, 4, R"([["0/1", false, "1/8", false]])", &sup.p) == UCF_OK);
	CHECK(nlohmann::json::parse(sup.str())["sup"] == "1/1");
	CHECK(ucf_sup_deviation(p.l, 4, "[]", &none.p) == UCF_INPUT_ERROR);
}

TEST_CASE("scan statuses")
{
	Loaded p("S_POINT", 16, 64);
	Text report;
	REQUIRE(ucf_scan(p.l, "1/2,1/4,7/8", "1/3", 6, 1024, &report.p) == UCF_OK);
	auto j = nlohmann::json::parse(report.str());
	CHECK(j["summary"]["certified_UC"] == 1);
	CHECK(j["summary"]["witnessed_nonUC"] == 2);
	CHECK(j["points"][0]["grid_check"]["within_bound"] == true);

	Text sampled;
	REQUIRE(ucf_sample_points(p.l, 50, &sampled.p) == UCF_OK);
	CHECK(std::count(sampled.p, sampled.p + std::strlen(sampled.p), ',') == 49);

	Loaded tight("S_POINT", 16, 2);
	Text t;
	CHECK(ucf_scan(tight.l, "1/2", "1/10", 6, 0, &t.p) == UCF_BOUNDS_EXHAUSTED);
	CHECK(nlohmann::json::parse(t.str())["summary"]["bounds_exhausted"] == 1);
	Text none;
	CHECK(ucf_scan(p.l, "1/2", "0", 6, 0, &none.p) == UCF_INPUT_ERROR);
	CHECK(ucf_scan(p.l, "2", "1/3", 6, 0, &none.p) == UCF_INPUT_ERROR);
}

TEST_CASE("suite entry point rejects an incomplete corpus")
{
	Text summary;
	CHECK(ucf_suite_run("/nonexistent-corpus", UCF_FAULT_NONE, &summary.p) == UCF_INPUT_ERROR);
	CHECK(summary.p == nullptr);
}
