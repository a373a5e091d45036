#include "octoclif/reports.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace octoclif;

int emit(const std::string &doc, const std::string &out_path) {
    if (out_path.empty()) {
        std::cout << doc;
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "octoclif: cannot open output path: " << out_path << "\n";
        return 1;
    }
    f << doc;
    f.flush();
    if (!f.good()) {
        std::cerr << "octoclif: failed writing output path: " << out_path << "\n";
        return 1;
    }
    return 0;
}

GeneratorSet set_for(const std::string &src) {
    if (src == "split") return split_generator_set();
    if (src == "kronecker") return kron_generator_set();
    if (src == "fixture") return fixture_generator_set();
    return corrected_generator_set(split_generator_set()).first;
}

std::vector<std::string> fixtures_for_set(const std::string &src) {
    if (src == "split") return {"Table 1", "Eq.9", "Eq.10"};
    if (src == "kronecker") return {"Eq.1", "Eq.2", "Eq.3", "Eq.4"};
    if (src == "fixture") return {"Eq.4"};
    return {"Eq.1", "Eq.2", "Eq.3", "Eq.4", "Table 1"};
}

std::vector<std::string> fixtures_for_suite(const std::string &suite) {
    if (suite == "table1") return {"Table 1"};
    if (suite == "eq8") return {"Table 1", "Eq.8"};
    if (suite == "bridge") return {"Table 1", "Eq.7", "Eq.10"};
    if (suite == "clifford") return {"Eq.1", "Eq.2", "Eq.3", "Eq.5", "Eq.6", "Table 1"};
    if (suite == "eq16") return {"Eq.4", "Eq.12", "Eq.13", "Eq.14", "Eq.16", "Table 1"};
    if (suite == "rotation")
        return {"Table 1", "Eq.17", "Eq.18", "Eq.19", "Eq.20", "Eq.21", "Eq.22",
                "Eq.23", "Eq.24", "Eq.25", "Eq.26", "Eq.27", "Table 2"};
    return {"Table 1", "Table 2", "Eq.1",  "Eq.2",  "Eq.3",  "Eq.4",  "Eq.5",
            "Eq.7",   "Eq.8",   "Eq.12", "Eq.13", "Eq.14", "Eq.16", "Eq.19",
            "Eq.20",  "Eq.21",  "Eq.22", "Eq.23", "Eq.25", "Eq.26", "Eq.27"};
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"octoclif: exact construction and verification of the split-octonion "
                 "SO(8)/SO(7) generator tables"};
    app.fallthrough();

    std::string format_name_opt = "text";
    std::string out_path;
    std::string basis = "split";
    std::string convention = "A";
    std::string suite = "all";
    std::string table = "u";
    std::vector<int> pair;

    app.add_option("--format", format_name_opt, "output format")
        ->check(CLI::IsMember({"text", "json", "csv", "latex"}))
        ->envname("OCTOCLIF_FORMAT");
    app.add_option("--out", out_path, "write the report to this path instead of stdout")
        ->envname("OCTOCLIF_OUT");
    app.add_option("--basis-source", basis, "generator construction to operate on")
        ->check(CLI::IsMember({"kronecker", "fixture", "split", "corrected"}));
    app.add_option("--convention", convention, "rotation operator convention")
        ->check(CLI::IsMember({"A", "B"}));

    CLI::App *cmd_generators =
        app.add_subcommand("generators", "emit the seven 8x8 generator matrices");
    CLI::App *cmd_tables =
        app.add_subcommand("tables", "emit the split-basis or derived e-basis product table");
    cmd_tables->add_option("--table", table, "u (printed product table), e (derived), or left\n(left-multiplication matrices)")
        ->check(CLI::IsMember({"u", "e", "left"}));
    CLI::App *cmd_verify = app.add_subcommand("verify", "run a verification suite");
    cmd_verify->add_option("--suite", suite, "check suite to run")
        ->check(CLI::IsMember(suite_names()));
    CLI::App *cmd_rotate =
        app.add_subcommand("rotate", "rotate X in one plane and report the component maps");
    cmd_rotate->add_option("--pair", pair, "plane indices k l (1..7, distinct)")
        ->expected(2)
        ->required();
    CLI::App *cmd_table2 =
        app.add_subcommand("table2", "full 21-row component-transformation report");
    CLI::App *cmd_report = app.add_subcommand("report", "full discrepancy ledger");

    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &e) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError &e) {
        std::cerr << "octoclif: " << e.what() << "\n" << app.help();
        return 2;
    }

    Format fmt = parse_format(format_name_opt);
    Convention conv = convention == "A" ? Convention::A : Convention::B;

    try {
        if (cmd_generators->parsed()) {
            ReportContext ctx{"generators", basis, convention, fixtures_for_set(basis)};
            return emit(render_generators(set_for(basis), fmt, ctx), out_path);
        }
        if (cmd_tables->parsed()) {
            std::vector<std::string> fixtures{"Table 1"};
            if (table == "e") fixtures.push_back("Eq.7");
            if (table == "left") fixtures.insert(fixtures.end(), {"Eq.10", "Eq.12", "Eq.13"});
            ReportContext ctx{"tables", basis, convention, fixtures};
            std::string doc = table == "u"   ? render_u_table(fmt, ctx)
                              : table == "e" ? render_e_table(fmt, ctx)
                                             : render_left_mul(fmt, ctx);
            return emit(doc, out_path);
        }
        if (cmd_verify->parsed()) {
            ReportContext ctx{"verify", basis, convention, fixtures_for_suite(suite)};
            SuiteResult result = run_suite(suite);
            int rc = emit(render_summary(result, fmt, ctx), out_path);
            if (rc != 0) return rc;
            return result.ok() ? 0 : 1;
        }
        if (cmd_rotate->parsed()) {
            if (pair[0] < 1 || pair[0] > 7 || pair[1] < 1 || pair[1] > 7 || pair[0] == pair[1]) {
                std::cerr << "octoclif: --pair expects two distinct indices in 1..7\n";
                return 2;
            }
            ReportContext ctx{"rotate", basis, convention, {"Table 1", "Eq.23", "Eq.24"}};
            GeneratorSet g = set_for(basis);
            LMat x = assemble_X(ComponentVector::pure_symbols(), g);
            RotationOutcome out = rotate(x, rotation_operator(pair[0], pair[1], conv, g), g);
            return emit(render_rotation(out, fmt, ctx), out_path);
        }
        if (cmd_table2->parsed()) {
            ReportContext ctx{"table2", basis, convention, {"Table 1", "Table 2", "Eq.23"}};
            GeneratorSet g = set_for(basis);
            TransformTable derived = transform_table(conv, g);
            Table2Diff diff = compare_table2(derived, table2_fixture());
            return emit(render_table2(derived, diff, fmt, ctx), out_path);
        }
        if (cmd_report->parsed()) {
            ReportContext ctx{"report", basis, convention, fixtures_for_suite("all")};
            return emit(render_full_report(fmt, ctx), out_path);
        }
    } catch (const std::exception &e) {
        std::cerr << "octoclif: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "octoclif: no command\n";
    return 2;
}
