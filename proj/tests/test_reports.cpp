#include "octoclif/checks.hpp"
#include "octoclif/reports.hpp"

#include <doctest.h>

using namespace octoclif;

namespace {
ReportContext ctx(const std::string &cmd) { return {cmd, "split", "A", {"Table 1"}}; }
} // namespace

TEST_CASE("verification suites: internal checks all pass, findings recorded") {
    SuiteResult all = run_suite("all");
    CHECK(all.internal_failures() == 0);
    bool saw_eq14 = false, saw_norm = false;
    for (const CheckResult &c : all.checks) {
        if (c.id == "eq14.derived_vs_printed") {
            saw_eq14 = true;
            CHECK(c.category == CheckCategory::fixture);
            CHECK_FALSE(c.agreed); // the printed fifth/seventh blocks disagree
        }
        if (c.id == "rotation.norm_claim") {
            saw_norm = true;
            CHECK_FALSE(c.agreed);
            CHECK(c.checks_run == 21);
            CHECK(c.checks_passed == 9); // the same-sign planes only
        }
    }
    CHECK(saw_eq14);
    CHECK(saw_norm);
}

TEST_CASE("table1 suite counts its 64 cells") {
    SuiteResult s = run_suite("table1");
    CHECK(s.ok());
    CHECK(s.total_run() == 64);
    CHECK(s.total_passed() == 64);
}

TEST_CASE("empty summary renders as a valid document") {
    SuiteResult empty;
    empty.suite = "none";
    json j = json::parse(render_summary(empty, Format::json, ctx("verify")));
    CHECK(j["checks_run"] == 0);
    CHECK(j["checks"].empty());
    CHECK(j["internal_failures"] == 0);
    CHECK_FALSE(render_summary(empty, Format::text, ctx("verify")).empty());
}

TEST_CASE("unknown suite is rejected") {
    CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
}

TEST_CASE("summary rendering embeds version metadata and is stable") {
    SuiteResult s = run_suite("table1");
    std::string text = render_summary(s, Format::text, ctx("verify"));
    CHECK(text.find("octoclif " + std::string(kToolVersion)) != std::string::npos);
    CHECK(text.find("table1.closure") != std::string::npos);
    CHECK(text == render_summary(run_suite("table1"), Format::text, ctx("verify")));

    json j = json::parse(render_summary(s, Format::json, ctx("verify")));
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["basis_source"] == "split");
    CHECK(j["internal_failures"] == 0);
    CHECK(j["checks"][0]["id"] == "table1.closure");
}

TEST_CASE("u-table rendering reproduces the printed grid") {
    std::string text = render_u_table(Format::text, ctx("tables"));
    CHECK(text.find("u3*") != std::string::npos);
    json j = json::parse(render_u_table(Format::json, ctx("tables")));
    CHECK(j["order"][0] == "u0*");
    CHECK(j["cells"][1][2] == "u3");  // row u1*, col u2*
    CHECK(j["cells"][4][4] == "u0");  // row u0, col u0
    CHECK(j["cells"][0][4] == "0");   // row u0*, col u0
    // 64 cells, none missing
    int n = 0;
    for (const auto &row : j["cells"]) n += static_cast<int>(row.size());
    CHECK(n == 64);
}

TEST_CASE("left-multiplication emitter") {
    json j = json::parse(render_left_mul(Format::json, ctx("tables")));
    REQUIRE(j["left_multiplication"].size() == 8);
    CHECK(j["left_multiplication"][0]["basis"] == "u0");
    CHECK(j["left_multiplication"][5]["label"] == "Eq.13/U_L1*");
    CHECK(j["left_multiplication"][0]["matrix"]["entries"][0][0]["re"] == "1");
    std::string text = render_left_mul(Format::text, ctx("tables"));
    CHECK(text.find("left multiplication by u3*") != std::string::npos);
}

TEST_CASE("e-table rendering") {
    json j = json::parse(render_e_table(Format::json, ctx("tables")));
    CHECK(j["cells"][0][3] == "e3");
    CHECK(j["cells"][1][1] == "-e0");
    CHECK(j["cells"][1][2] == "e3");
}

TEST_CASE("generator rendering") {
    std::string latex = render_generators(split_generator_set(), Format::latex, ctx("generators"));
    std::size_t blocks = 0, pos = 0;
    while ((pos = latex.find("\\begin{bmatrix}", pos)) != std::string::npos) {
        ++blocks;
        pos += 1;
    }
    CHECK(blocks == 7);
    json j = json::parse(render_generators(split_generator_set(), Format::json, ctx("generators")));
    CHECK(j["generators"].size() == 7);
    CHECK(j["generators"][0]["matrix"]["n"] == 8);
}

TEST_CASE("signature json schema") {
    json j = signature_to_json(signature_check(split_generator_set()));
    CHECK(j["eta"].size() == 7);
    CHECK(j["eta"][0][0]["re"] == "-1");
    CHECK(j["eta"][3][3]["re"] == "1");
    CHECK(j["is_diagonal"] == true);
    CHECK(j["mismatches_vs_delta"].size() == 3);
}

TEST_CASE("table2 report") {
    GeneratorSet g = split_generator_set();
    TransformTable derived = transform_table(Convention::A, g);
    Table2Diff diff = compare_table2(derived, table2_fixture());
    json j = json::parse(render_table2(derived, diff, Format::json, ctx("table2")));
    CHECK(j["rows"].size() == 21);
    CHECK(j["summary"]["matches"] == 3);
    CHECK(j["summary"]["mismatches"] == 39);
    CHECK(j["rows"][0]["pair"][0] == 1);
    CHECK(j["rows"][0]["residual_zero"] == true);
    CHECK(j["rows"][0]["matches"] == 0);
    CHECK(j["rows"][0]["mismatches"] == 2);
    CHECK(j["rows"][15]["matches"] == 1); // the (4,5) row agrees at f4
    std::string csv = render_table2(derived, diff, Format::csv, ctx("table2"));
    CHECK(csv.find("R12,derived") != std::string::npos);
    CHECK(csv.find("R67,verdict") != std::string::npos);
}

TEST_CASE("full report renders identically across runs") {
    std::string a = render_full_report(Format::text, ctx("report"));
    std::string b = render_full_report(Format::text, ctx("report"));
    CHECK(a == b);
    CHECK(a.find("signature census") != std::string::npos);
    CHECK(a.find("convention B matches") != std::string::npos);
    json j = json::parse(render_full_report(Format::json, ctx("report")));
    CHECK(j["eq25_convention"]["matching"] == "B");
    CHECK(j["signatures"].size() == 4);
    CHECK(j["construction_diffs"].size() == 6);
    CHECK(j["verification"]["internal_failures"] == 0);
}
