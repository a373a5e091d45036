#include "octoclif/reports.hpp"

#include <stdexcept>

namespace octoclif {

namespace {

std::string text_header(const ReportContext &ctx) {
    std::string out = "octoclif " + std::string(kToolVersion) + " | command: " + ctx.command +
                      " | basis: " + ctx.basis_source + " | convention: " + ctx.convention + "\n";
    if (!ctx.fixtures.empty()) {
        out += "fixtures:";
        for (const auto &f : ctx.fixtures) out += " " + f;
        out += "\n";
    }
    return out;
}

std::string comment_header(const ReportContext &ctx, const std::string &lead) {
    std::string out;
    out += lead + " octoclif " + kToolVersion + " | command: " + ctx.command + " | basis: " +
           ctx.basis_source + " | convention: " + ctx.convention + "\n";
    std::string fx;
    for (const auto &f : ctx.fixtures) fx += " " + f;
    if (!fx.empty()) out += lead + " fixtures:" + fx + "\n";
    return out;
}

json meta_json(const ReportContext &ctx) {
    return json{{"schema_version", kSchemaVersion},
                {"tool_version", kToolVersion},
                {"command", ctx.command},
                {"basis_source", ctx.basis_source},
                {"convention", ctx.convention},
                {"fixtures", ctx.fixtures}};
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

std::string csv_escape(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    return out + "\"";
}

std::string product_text(const BasisProduct &p) {
    if (p.is_zero()) return "0";
    return (p.sign < 0 ? "-" : "") + basis_name(p.basis);
}

std::string product_latex(const BasisProduct &p) {
    if (p.is_zero()) return "0";
    return std::string(p.sign < 0 ? "-" : "") + basis_latex(p.basis);
}

std::string e_cell_text(const ETableCell &c) {
    if (c.single) return (c.sign < 0 ? "-e" : "e") + std::to_string(c.index);
    std::string out;
    for (int k = 0; k < 8; ++k) {
        const GaussianRational &v = c.coeffs[static_cast<std::size_t>(k)];
        if (v.is_zero()) continue;
        join_term(out, coeff_prefix(v) + "e" + std::to_string(k));
    }
    return out.empty() ? "0" : out;
}

json optional_form_json(const std::optional<LinearForm> &v) {
    if (!v) return nullptr;
    return to_json(*v);
}

std::string optional_form_text(const std::optional<LinearForm> &v) {
    return v ? to_text(*v) : "";
}

std::string class_name(CellClass c) {
    switch (c) {
    case CellClass::match: return "match";
    case CellClass::mismatch: return "mismatch";
    case CellClass::blank_agree: return "blank_agree";
    }
    return "?";
}

std::string generator_symbol(const GeneratorSet &g) {
    return g.source == GeneratorSource::split_octonion ? "U" : "beta";
}

} // namespace

Format parse_format(const std::string &name) {
    if (name == "text") return Format::text;
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "latex") return Format::latex;
    throw std::invalid_argument("unknown format: " + name);
}

std::string format_name(Format f) {
    switch (f) {
    case Format::text: return "text";
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::latex: return "latex";
    }
    return "?";
}

json signature_to_json(const SignatureReport &sig) {
    json eta = json::array();
    for (int a = 1; a <= 7; ++a) {
        json row = json::array();
        for (int b = 1; b <= 7; ++b) {
            const auto &v = sig.eta_at(a, b);
            row.push_back(v ? to_json(*v) : json(nullptr));
        }
        eta.push_back(row);
    }
    json signs = json::array();
    for (const auto &s : sig.diagonal_signs) signs.push_back(s ? to_json(*s) : json(nullptr));
    json mism = json::array();
    for (auto [a, b] : sig.mismatches_vs_delta) mism.push_back(json::array({a, b}));
    json nonscalar = json::array();
    for (auto [a, b] : sig.non_scalar_pairs) nonscalar.push_back(json::array({a, b}));
    return json{{"label", sig.label},          {"eta", eta},
                {"is_diagonal", sig.is_diagonal}, {"diagonal_signs", signs},
                {"mismatches_vs_delta", mism}, {"non_scalar_pairs", nonscalar}};
}

json diff_report_to_json(const DiffReport &d) {
    json gens = json::array();
    for (int a = 1; a <= 7; ++a) {
        const GeneratorDiff &gd = d.diff(a);
        json cells = json::array();
        for (const DiffCell &c : gd.cells)
            cells.push_back(json{{"row", c.row},
                                 {"col", c.col},
                                 {"left", to_json(c.left)},
                                 {"right", to_json(c.right)}});
        gens.push_back(json{{"generator", a}, {"cells", cells}});
    }
    return json{{"left", d.left_label},
                {"right", d.right_label},
                {"matching_generators", d.num_matching},
                {"generators", gens}};
}

std::string render_generators(const GeneratorSet &g, Format f, const ReportContext &ctx) {
    const std::string sym = generator_symbol(g);
    switch (f) {
    case Format::json: {
        json arr = json::array();
        for (int a = 1; a <= 7; ++a)
            arr.push_back(json{{"index", a}, {"matrix", to_json(g.mat(a))}});
        json out = meta_json(ctx);
        out["label"] = g.label;
        out["generators"] = arr;
        return dump(out);
    }
    case Format::text: {
        std::string out = text_header(ctx) + "set: " + g.label + "\n";
        for (int a = 1; a <= 7; ++a)
            out += "\n" + sym + std::to_string(a) + " =\n" + to_grid(g.mat(a));
        return out;
    }
    case Format::latex: {
        std::string out = comment_header(ctx, "%") + "% set: " + g.label + "\n";
        for (int a = 1; a <= 7; ++a)
            out += sym + "_{" + std::to_string(a) + "} =\n" + to_bmatrix(g.mat(a));
        return out;
    }
    case Format::csv: {
        std::string out = comment_header(ctx, "#");
        out += "generator,row,c1,c2,c3,c4,c5,c6,c7,c8\n";
        for (int a = 1; a <= 7; ++a)
            for (std::size_t i = 0; i < 8; ++i) {
                out += std::to_string(a) + "," + std::to_string(i + 1);
                for (std::size_t j = 0; j < 8; ++j)
                    out += "," + csv_escape(to_text(g.mat(a).at(i, j)));
                out += "\n";
            }
        return out;
    }
    }
    return {};
}

std::string render_u_table(Format f, const ReportContext &ctx) {
    const auto &order = kTableOrder;
    switch (f) {
    case Format::json: {
        json names = json::array();
        for (SplitBasis b : order) names.push_back(basis_name(b));
        json cells = json::array();
        for (int i = 0; i < 8; ++i) {
            json row = json::array();
            for (int j = 0; j < 8; ++j) row.push_back(product_text(table_cell(i, j)));
            cells.push_back(row);
        }
        json out = meta_json(ctx);
        out["table"] = "u-basis";
        out["order"] = names;
        out["cells"] = cells;
        return dump(out);
    }
    case Format::text: {
        std::string out = text_header(ctx);
        std::vector<std::vector<std::string>> grid(9, std::vector<std::string>(9));
        grid[0][0] = ".";
        for (int i = 0; i < 8; ++i) {
            grid[0][static_cast<std::size_t>(i + 1)] = basis_name(order[static_cast<std::size_t>(i)]);
            grid[static_cast<std::size_t>(i + 1)][0] = basis_name(order[static_cast<std::size_t>(i)]);
            for (int j = 0; j < 8; ++j)
                grid[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j + 1)] =
                    product_text(table_cell(i, j));
        }
        std::vector<std::size_t> w(9, 0);
        for (const auto &row : grid)
            for (std::size_t j = 0; j < 9; ++j) w[j] = std::max(w[j], row[j].size());
        for (const auto &row : grid) {
            for (std::size_t j = 0; j < 9; ++j)
                out += row[j] + std::string(w[j] - row[j].size() + 2, ' ');
            out += "\n";
        }
        return out;
    }
    case Format::latex: {
        std::string out = comment_header(ctx, "%");
        out += "\\begin{tabular}{c|cccccccc}\n. ";
        for (SplitBasis b : order) out += "& $" + basis_latex(b) + "$ ";
        out += "\\\\\n\\hline\n";
        for (int i = 0; i < 8; ++i) {
            out += "$" + basis_latex(order[static_cast<std::size_t>(i)]) + "$ ";
            for (int j = 0; j < 8; ++j) out += "& $" + product_latex(table_cell(i, j)) + "$ ";
            out += "\\\\\n";
        }
        out += "\\end{tabular}\n";
        return out;
    }
    case Format::csv: {
        std::string out = comment_header(ctx, "#") + ".";
        for (SplitBasis b : order) out += "," + basis_name(b);
        out += "\n";
        for (int i = 0; i < 8; ++i) {
            out += basis_name(order[static_cast<std::size_t>(i)]);
            for (int j = 0; j < 8; ++j) out += "," + product_text(table_cell(i, j));
            out += "\n";
        }
        return out;
    }
    }
    return {};
}

std::string render_e_table(Format f, const ReportContext &ctx) {
    auto t = derive_e_table();
    switch (f) {
    case Format::json: {
        json cells = json::array();
        for (int a = 0; a < 8; ++a) {
            json row = json::array();
            for (int b = 0; b < 8; ++b) row.push_back(e_cell_text(t[a][b]));
            cells.push_back(row);
        }
        json out = meta_json(ctx);
        out["table"] = "e-basis (derived)";
        out["cells"] = cells;
        return dump(out);
    }
    case Format::text: {
        std::string out = text_header(ctx);
        std::vector<std::vector<std::string>> grid(9, std::vector<std::string>(9));
        grid[0][0] = ".";
        for (int a = 0; a < 8; ++a) {
            grid[0][static_cast<std::size_t>(a + 1)] = "e" + std::to_string(a);
            grid[static_cast<std::size_t>(a + 1)][0] = "e" + std::to_string(a);
            for (int b = 0; b < 8; ++b)
                grid[static_cast<std::size_t>(a + 1)][static_cast<std::size_t>(b + 1)] =
                    e_cell_text(t[a][b]);
        }
        std::vector<std::size_t> w(9, 0);
        for (const auto &row : grid)
            for (std::size_t j = 0; j < 9; ++j) w[j] = std::max(w[j], row[j].size());
        for (const auto &row : grid) {
            for (std::size_t j = 0; j < 9; ++j)
                out += row[j] + std::string(w[j] - row[j].size() + 2, ' ');
            out += "\n";
        }
        return out;
    }
    case Format::latex: {
        std::string out = comment_header(ctx, "%");
        out += "\\begin{tabular}{c|cccccccc}\n. ";
        for (int b = 0; b < 8; ++b) out += "& $e_{" + std::to_string(b) + "}$ ";
        out += "\\\\\n\\hline\n";
        for (int a = 0; a < 8; ++a) {
            out += "$e_{" + std::to_string(a) + "}$ ";
            for (int b = 0; b < 8; ++b) {
                const ETableCell &c = t[a][b];
                out += "& $" + (c.single ? std::string(c.sign < 0 ? "-" : "") + "e_{" +
                                               std::to_string(c.index) + "}"
                                         : e_cell_text(c)) +
                       "$ ";
            }
            out += "\\\\\n";
        }
        out += "\\end{tabular}\n";
        return out;
    }
    case Format::csv: {
        std::string out = comment_header(ctx, "#") + ".";
        for (int b = 0; b < 8; ++b) out += ",e" + std::to_string(b);
        out += "\n";
        for (int a = 0; a < 8; ++a) {
            out += "e" + std::to_string(a);
            for (int b = 0; b < 8; ++b) out += "," + e_cell_text(t[a][b]);
            out += "\n";
        }
        return out;
    }
    }
    return {};
}

std::string render_left_mul(Format f, const ReportContext &ctx) {
    switch (f) {
    case Format::json: {
        json arr = json::array();
        for (int i = 0; i < 8; ++i) {
            SplitBasis b = spinor_basis(i);
            arr.push_back(json{{"basis", basis_name(b)},
                               {"label", left_mul_label(b)},
                               {"matrix", to_json(left_mul_matrix(b))}});
        }
        json out = meta_json(ctx);
        out["left_multiplication"] = arr;
        return dump(out);
    }
    case Format::text: {
        std::string out = text_header(ctx);
        for (int i = 0; i < 8; ++i) {
            SplitBasis b = spinor_basis(i);
            out += "\nleft multiplication by " + basis_name(b) + " (" + left_mul_label(b) +
                   ")\n" + to_grid(left_mul_matrix(b));
        }
        return out;
    }
    case Format::latex: {
        std::string out = comment_header(ctx, "%");
        for (int i = 0; i < 8; ++i) {
            SplitBasis b = spinor_basis(i);
            out += "% " + left_mul_label(b) + "\nL_{" + basis_latex(b) + "} =\n" +
                   to_bmatrix(left_mul_matrix(b));
        }
        return out;
    }
    case Format::csv: {
        std::string out = comment_header(ctx, "#");
        out += "basis,row,c1,c2,c3,c4,c5,c6,c7,c8\n";
        for (int i = 0; i < 8; ++i) {
            SplitBasis b = spinor_basis(i);
            GMat m = left_mul_matrix(b);
            for (std::size_t r = 0; r < 8; ++r) {
                out += basis_name(b) + "," + std::to_string(r + 1);
                for (std::size_t c = 0; c < 8; ++c) out += "," + to_text(m.at(r, c));
                out += "\n";
            }
        }
        return out;
    }
    }
    return {};
}

std::string render_summary(const SuiteResult &s, Format f, const ReportContext &ctx) {
    switch (f) {
    case Format::json: {
        json checks = json::array();
        for (const CheckResult &c : s.checks)
            checks.push_back(json{{"id", c.id},
                                  {"label", c.label},
                                  {"category",
                                   c.category == CheckCategory::internal ? "internal" : "fixture"},
                                  {"agreed", c.agreed},
                                  {"checks_run", c.checks_run},
                                  {"checks_passed", c.checks_passed},
                                  {"details", c.details}});
        json out = meta_json(ctx);
        out["suite"] = s.suite;
        out["checks"] = checks;
        out["checks_run"] = s.total_run();
        out["checks_passed"] = s.total_passed();
        out["internal_failures"] = s.internal_failures();
        return dump(out);
    }
    case Format::text: {
        std::string out = text_header(ctx) + "suite: " + s.suite + "\n";
        for (const CheckResult &c : s.checks) {
            std::string status =
                c.agreed ? "ok     "
                         : (c.category == CheckCategory::internal ? "FAIL   " : "FINDING");
            out += status + " " + c.id + " (" + c.label + "): " + std::to_string(c.checks_passed) +
                   "/" + std::to_string(c.checks_run) + "\n";
            for (const std::string &d : c.details) out += "         " + d + "\n";
        }
        out += "total: " + std::to_string(s.total_passed()) + "/" + std::to_string(s.total_run()) +
               " granular checks agree; internal failures: " +
               std::to_string(s.internal_failures()) + "\n";
        return out;
    }
    case Format::csv: {
        std::string out = comment_header(ctx, "#");
        out += "id,label,category,agreed,checks_run,checks_passed\n";
        for (const CheckResult &c : s.checks)
            out += c.id + "," + csv_escape(c.label) + "," +
                   (c.category == CheckCategory::internal ? "internal" : "fixture") + "," +
                   (c.agreed ? "true" : "false") + "," + std::to_string(c.checks_run) + "," +
                   std::to_string(c.checks_passed) + "\n";
        return out;
    }
    case Format::latex: {
        std::string out = comment_header(ctx, "%");
        out += "\\begin{tabular}{llllrr}\nid & label & category & agreed & run & passed \\\\\n\\hline\n";
        for (const CheckResult &c : s.checks)
            out += c.id + " & " + c.label + " & " +
                   (c.category == CheckCategory::internal ? "internal" : "fixture") + " & " +
                   (c.agreed ? "yes" : "no") + " & " + std::to_string(c.checks_run) + " & " +
                   std::to_string(c.checks_passed) + " \\\\\n";
        out += "\\end{tabular}\n";
        return out;
    }
    }
    return {};
}

std::string render_rotation(const RotationOutcome &out, Format f, const ReportContext &ctx) {
    switch (f) {
    case Format::json: {
        json maps = json::array();
        for (int a = 1; a <= 7; ++a)
            maps.push_back(json{{"component", a},
                                {"image", to_json(out.projected.components[static_cast<std::size_t>(a - 1)])}});
        json doc = meta_json(ctx);
        doc["pair"] = json::array({out.k, out.l});
        doc["maps"] = maps;
        doc["residual_zero"] = out.projected.residual_zero;
        return dump(doc);
    }
    case Format::text: {
        std::string s = text_header(ctx) + "rotation plane (" + std::to_string(out.k) + "," +
                        std::to_string(out.l) + ")\n";
        for (int a = 1; a <= 7; ++a)
            s += "f" + std::to_string(a) + " -> " +
                 to_text(out.projected.components[static_cast<std::size_t>(a - 1)]) + "\n";
        s += std::string("residual zero: ") + (out.projected.residual_zero ? "true" : "false") +
             "\n";
        return s;
    }
    case Format::csv: {
        std::string s = comment_header(ctx, "#") + "component,image\n";
        for (int a = 1; a <= 7; ++a)
            s += "f" + std::to_string(a) + "," +
                 csv_escape(to_text(out.projected.components[static_cast<std::size_t>(a - 1)])) + "\n";
        return s;
    }
    case Format::latex: {
        std::string s = comment_header(ctx, "%") + "\\begin{aligned}\n";
        for (int a = 1; a <= 7; ++a)
            s += "f_{" + std::to_string(a) + "} &\\mapsto " +
                 to_latex(out.projected.components[static_cast<std::size_t>(a - 1)]) + " \\\\\n";
        s += "\\end{aligned}\n";
        return s;
    }
    }
    return {};
}

std::string render_table2(const TransformTable &derived, const Table2Diff &diff, Format f,
                          const ReportContext &ctx) {
    const auto &fixture = table2_fixture();
    auto row_name = [](int k, int l) { return "R" + std::to_string(k) + std::to_string(l); };
    switch (f) {
    case Format::json: {
        json rows = json::array();
        for (std::size_t r = 0; r < 21; ++r) {
            const TransformRow &dr = derived.rows[r];
            json cells = json::array();
            int row_matches = 0, row_mismatches = 0;
            for (int a = 1; a <= 7; ++a) {
                const auto &cell = diff.cells[r * 7 + static_cast<std::size_t>(a - 1)];
                if (cell.cls == CellClass::match) ++row_matches;
                if (cell.cls == CellClass::mismatch) ++row_mismatches;
                cells.push_back(json{{"component", a},
                                     {"derived", optional_form_json(cell.derived)},
                                     {"fixture", optional_form_json(cell.fixture)},
                                     {"class", class_name(cell.cls)}});
            }
            json maps = json::array();
            for (int a = 1; a <= 7; ++a)
                maps.push_back(json{{"component", a},
                                    {"image", to_json(dr.images[static_cast<std::size_t>(a - 1)])}});
            rows.push_back(json{{"pair", json::array({dr.k, dr.l})},
                                {"convention", convention_name(derived.convention)},
                                {"maps", maps},
                                {"cells", cells},
                                {"matches", row_matches},
                                {"mismatches", row_mismatches},
                                {"residual_zero", dr.residual_zero}});
        }
        json out = meta_json(ctx);
        out["rows"] = rows;
        out["summary"] = json{{"matches", diff.matches},
                              {"mismatches", diff.mismatches},
                              {"blank_agrees", diff.blank_agrees}};
        return dump(out);
    }
    case Format::text: {
        std::string out = text_header(ctx);
        out += "cells hold g with f_A -> f_A + 2θ g; '.' = unchanged\n\n";
        std::vector<std::vector<std::string>> grid;
        std::vector<std::string> head = {"pair", "side"};
        for (int a = 1; a <= 7; ++a) head.push_back("f" + std::to_string(a));
        grid.push_back(head);
        for (std::size_t r = 0; r < 21; ++r) {
            const TransformRow &dr = derived.rows[r];
            std::vector<std::string> drow = {row_name(dr.k, dr.l), "derived"};
            std::vector<std::string> frow = {"", "printed"};
            std::vector<std::string> crow = {"", "verdict"};
            for (int a = 1; a <= 7; ++a) {
                const auto &cell = diff.cells[r * 7 + static_cast<std::size_t>(a - 1)];
                drow.push_back(cell.derived ? to_text(*cell.derived) : ".");
                frow.push_back(cell.fixture ? to_text(*cell.fixture) : ".");
                crow.push_back(cell.cls == CellClass::blank_agree
                                   ? "."
                                   : class_name(cell.cls));
            }
            grid.push_back(drow);
            grid.push_back(frow);
            grid.push_back(crow);
        }
        std::vector<std::size_t> w(9, 0);
        for (const auto &row : grid)
            for (std::size_t j = 0; j < 9; ++j) w[j] = std::max(w[j], row[j].size());
        for (const auto &row : grid) {
            for (std::size_t j = 0; j < 9; ++j)
                out += row[j] + std::string(w[j] - row[j].size() + 2, ' ');
            out += "\n";
        }
        out += "\nsummary: " + std::to_string(diff.matches) + " match, " +
               std::to_string(diff.mismatches) + " mismatch, " +
               std::to_string(diff.blank_agrees) + " blank-agree\n";
        return out;
    }
    case Format::csv: {
        std::string out = comment_header(ctx, "#");
        out += "pair,side,f1,f2,f3,f4,f5,f6,f7\n";
        for (std::size_t r = 0; r < 21; ++r) {
            const TransformRow &dr = derived.rows[r];
            const FixtureRow &fr = fixture[r];
            out += row_name(dr.k, dr.l) + ",derived";
            for (int a = 1; a <= 7; ++a)
                out += "," + csv_escape(optional_form_text(dr.cell(a)));
            out += "\n" + row_name(fr.k, fr.l) + ",printed";
            for (int a = 1; a <= 7; ++a)
                out += "," + csv_escape(optional_form_text(fr.cells[static_cast<std::size_t>(a - 1)]));
            out += "\n" + row_name(dr.k, dr.l) + ",verdict";
            for (int a = 1; a <= 7; ++a)
                out += "," + class_name(diff.cells[r * 7 + static_cast<std::size_t>(a - 1)].cls);
            out += "\n";
        }
        return out;
    }
    case Format::latex: {
        std::string out = comment_header(ctx, "%");
        out += "\\begin{tabular}{ll|ccccccc}\npair & side";
        for (int a = 1; a <= 7; ++a) out += " & $f_{" + std::to_string(a) + "}$";
        out += " \\\\\n\\hline\n";
        for (std::size_t r = 0; r < 21; ++r) {
            const TransformRow &dr = derived.rows[r];
            const FixtureRow &fr = fixture[r];
            out += "$R_{" + std::to_string(dr.k) + std::to_string(dr.l) + "}$ & derived";
            for (int a = 1; a <= 7; ++a) {
                auto cell = dr.cell(a);
                out += " & $" + (cell ? to_latex(*cell) : std::string("\\cdot")) + "$";
            }
            out += " \\\\\n & printed";
            for (int a = 1; a <= 7; ++a) {
                const auto &cell = fr.cells[static_cast<std::size_t>(a - 1)];
                out += " & $" + (cell ? to_latex(*cell) : std::string("\\cdot")) + "$";
            }
            out += " \\\\\n";
        }
        out += "\\end{tabular}\n";
        return out;
    }
    }
    return {};
}

std::string render_full_report(Format f, const ReportContext &ctx) {
    // assemble every structured finding once, then serialise
    GeneratorSet split = split_generator_set();
    GeneratorSet kron_set = kron_generator_set();
    GeneratorSet fix_set = fixture_generator_set();
    auto [corr_set, corr_info] = corrected_generator_set(split);

    std::vector<const GeneratorSet *> sources = {&kron_set, &fix_set, &split, &corr_set};
    std::vector<SignatureReport> sigs;
    for (const GeneratorSet *g : sources) sigs.push_back(signature_check(*g));

    std::vector<DiffReport> diffs;
    for (std::size_t i = 0; i < sources.size(); ++i)
        for (std::size_t j = i + 1; j < sources.size(); ++j)
            diffs.push_back(compare_constructions(*sources[i], *sources[j]));

    DiffReport eq14_diff = compare_constructions(split, eq14_printed_set());

    RotationOperator opA = rotation_operator(1, 2, Convention::A, split);
    RotationOperator opB = rotation_operator(1, 2, Convention::B, split);
    DMat printed_r12 = r12_printed();
    bool b_matches = opB.matrix == printed_r12;
    bool a_matches = opA.matrix == printed_r12;
    std::vector<std::string> r12_delta;
    {
        const DMat &other = a_matches ? opB.matrix : opA.matrix;
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j)
                if (other.at(i, j) != printed_r12.at(i, j))
                    r12_delta.push_back("cell (" + std::to_string(i + 1) + "," +
                                        std::to_string(j + 1) + "): " + to_text(other.at(i, j)) +
                                        " vs printed " + to_text(printed_r12.at(i, j)));
    }

    SuiteResult all = run_suite("all");
    Table2Diff t2a = compare_table2(transform_table(Convention::A, split), table2_fixture());
    Table2Diff t2b = compare_table2(transform_table(Convention::B, split), table2_fixture());

    if (f == Format::json) {
        json sigj = json::array();
        for (const auto &s : sigs) sigj.push_back(signature_to_json(s));
        json diffj = json::array();
        for (const auto &d : diffs) diffj.push_back(diff_report_to_json(d));
        json scalars = json::array();
        for (int a = 1; a <= 7; ++a) {
            const auto &s = corr_info.scalars[static_cast<std::size_t>(a - 1)];
            scalars.push_back(json{{"generator", a},
                                   {"scalar", s ? to_json(*s) : json(nullptr)}});
        }
        json out = meta_json(ctx);
        out["signatures"] = sigj;
        out["construction_diffs"] = diffj;
        out["eq14_diff"] = diff_report_to_json(eq14_diff);
        out["corrected_scalars"] = scalars;
        out["eq25_convention"] =
            json{{"matching", b_matches ? "B" : (a_matches ? "A" : "none")},
                 {"other_delta", r12_delta}};
        out["table2_summary"] = json{
            {"A", {{"matches", t2a.matches}, {"mismatches", t2a.mismatches},
                   {"blank_agrees", t2a.blank_agrees}}},
            {"B", {{"matches", t2b.matches}, {"mismatches", t2b.mismatches},
                   {"blank_agrees", t2b.blank_agrees}}}};
        out["verification"] = json{{"checks_run", all.total_run()},
                                   {"checks_passed", all.total_passed()},
                                   {"internal_failures", all.internal_failures()}};
        return dump(out);
    }

    if (f == Format::csv || f == Format::latex) {
        // the ledger reduces naturally to the summary table in these formats
        ReportContext sub = ctx;
        return render_summary(all, f, sub);
    }

    std::string out = text_header(ctx);
    out += "\n== signature census (eta with {G_a,G_b} = 2 eta_ab I) ==\n";
    for (const auto &s : sigs) {
        out += s.label + ": diagonal signs";
        for (const auto &d : s.diagonal_signs) out += " " + (d ? to_text(*d) : std::string("?"));
        out += s.is_diagonal ? "; off-diagonals vanish" : "; off-diagonals NOT all zero";
        if (!s.non_scalar_pairs.empty()) {
            out += "; non-scalar pairs:";
            for (auto [a, b] : s.non_scalar_pairs)
                out += " (" + std::to_string(a) + "," + std::to_string(b) + ")";
        }
        out += "\n";
    }
    out += "\n== pairwise construction diffs ==\n";
    for (const auto &d : diffs) {
        out += d.left_label + " vs " + d.right_label + ": " + std::to_string(d.num_matching) +
               "/7 generators equal";
        for (int a = 1; a <= 7; ++a)
            if (!d.diff(a).equal())
                out += "; gen " + std::to_string(a) + " differs in " +
                       std::to_string(d.diff(a).cells.size()) + " cells";
        out += "\n";
    }
    out += "\n== derived U vs printed block matrices ==\n";
    for (int a = 1; a <= 7; ++a) {
        const auto &gd = eq14_diff.diff(a);
        out += "U" + std::to_string(a) + ": " +
               (gd.equal() ? "match" : std::to_string(gd.cells.size()) + " differing cells") + "\n";
        for (const DiffCell &c : gd.cells)
            out += "    cell (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                   "): derived " + to_text(c.left) + ", printed " + to_text(c.right) + "\n";
    }
    out += "\n== scalar corrections to the Kronecker formulas ==\n";
    for (int a = 1; a <= 7; ++a) {
        const auto &s = corr_info.scalars[static_cast<std::size_t>(a - 1)];
        out += "generator " + std::to_string(a) + ": " +
               (s ? "scalar " + to_text(*s) : "uncorrectable by scalar") + "\n";
    }
    out += "\n== printed R12 vs conventions ==\n";
    out += std::string("convention A ") + (a_matches ? "matches" : "differs") +
           ", convention B " + (b_matches ? "matches" : "differs") + "\n";
    for (const std::string &d : r12_delta) out += "    " + d + "\n";
    out += "\n== component table vs printed table ==\n";
    out += "convention A: " + std::to_string(t2a.matches) + " match, " +
           std::to_string(t2a.mismatches) + " mismatch, " + std::to_string(t2a.blank_agrees) +
           " blank-agree\n";
    out += "convention B: " + std::to_string(t2b.matches) + " match, " +
           std::to_string(t2b.mismatches) + " mismatch, " + std::to_string(t2b.blank_agrees) +
           " blank-agree\n";
    out += "\n== verification totals ==\n";
    out += std::to_string(all.total_passed()) + "/" + std::to_string(all.total_run()) +
           " granular checks agree; internal failures: " + std::to_string(all.internal_failures()) +
           "\n";
    out += "\nper-check findings:\n" ;
    for (const CheckResult &c : all.checks) {
        if (c.agreed) continue;
        out += "  " + c.id + " (" + c.label + "): " + std::to_string(c.checks_passed) + "/" +
               std::to_string(c.checks_run) + "\n";
        for (const std::string &d : c.details) out += "      " + d + "\n";
    }
    return out;
}

} // namespace octoclif
