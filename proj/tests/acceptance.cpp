// Acceptance suite: one criterion per runner, one PASS/FAIL line each, exit
// nonzero if any criterion fails. Every comparison is exact; there are no
// tolerances anywhere.

#include "octoclif/format.hpp"
#include "octoclif/reports.hpp"
#include "octoclif/rotation.hpp"
#include "octoclif/split_octonion.hpp"

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace octoclif;

namespace {

struct Criterion {
    int number;
    std::string name;
    std::function<bool(std::string &)> run;
};

bool require(bool cond, const std::string &msg, std::string &detail) {
    if (!cond && detail.empty()) detail = msg;
    return cond;
}

// ------------------------------------------------------------- criterion 1

bool c1_table1_closure(std::string &detail) {
    int agree = 0;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            SplitBasis x = kTableOrder[static_cast<std::size_t>(i)];
            SplitBasis y = kTableOrder[static_cast<std::size_t>(j)];
            if (mul_basis(x, y) == table_cell(i, j)) ++agree;
        }
    detail = std::to_string(agree) + "/64 product cells match the printed table";
    return agree == 64;
}

// ------------------------------------------------------------- criterion 2

bool c2_eq8(std::string &detail) {
    TableValidation v = validate_table();
    detail = std::to_string(v.checks_run - static_cast<int>(v.violations.size())) + "/" +
             std::to_string(v.checks_run) + " algebra identities hold against the table";
    return v.violations.empty();
}

// ------------------------------------------------------------- criterion 3

bool c3_bridge(std::string &detail) {
    bool ok = true;
    for (int a = 0; a < 8; ++a) {
        std::array<GaussianRational, 8> pure{};
        pure[static_cast<std::size_t>(a)] = GaussianRational::one();
        ok = require(to_e_coeffs(from_e_coeffs(pure)) == pure, "e->u->e round trip broke", detail) && ok;
    }
    for (int i = 0; i < 8; ++i) {
        SplitOctonion u = SplitOctonion::basis(spinor_basis(i));
        ok = require(from_e_coeffs(to_e_coeffs(u)) == u, "u->e->u round trip broke", detail) && ok;
    }
    auto t = derive_e_table();
    for (int a = 0; a < 8; ++a) {
        ok = require(t[0][a].single && t[0][a].sign == 1 && t[0][a].index == a,
                     "e0 is not left-neutral", detail) && ok;
        ok = require(t[a][0].single && t[a][0].sign == 1 && t[a][0].index == a,
                     "e0 is not right-neutral", detail) && ok;
    }
    for (int a = 1; a < 8; ++a)
        ok = require(t[a][a].single && t[a][a].sign == -1 && t[a][a].index == 0,
                     "a square is not -e0", detail) && ok;
    for (int a = 1; a < 8; ++a)
        for (int b = 1; b < 8; ++b)
            if (a != b)
                ok = require(t[a][b].index == t[b][a].index && t[a][b].sign == -t[b][a].sign,
                             "anticommutativity fails", detail) && ok;
    AssociativityScan s = associativity_scan();
    ok = require(s.violations > 0, "no non-associative triple in 512", detail) && ok;
    if (ok)
        detail = "round trips exact; e0 neutral; squares -e0; anticommuting; " +
                 std::to_string(s.violations) + "/512 triples witness non-associativity (first: " +
                 basis_name(s.first_witness[0]) + "," + basis_name(s.first_witness[1]) + "," +
                 basis_name(s.first_witness[2]) + ")";
    return ok;
}

// ------------------------------------------------------------- criterion 4

bool c4_left_mul(std::string &detail) {
    std::mt19937_64 rng(0xacce57);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    int agree = 0;
    for (int t = 0; t < 100; ++t) {
        SplitOctonion z;
        for (int i = 0; i < 8; ++i)
            z.coeff_ref(i) =
                GaussianRational(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        for (int k = 0; k < 8; ++k) {
            SplitBasis b = spinor_basis(k);
            if (apply_left(left_mul_matrix(b), z) == SplitOctonion::basis(b) * z) ++agree;
        }
    }
    detail = std::to_string(agree) + "/800 matrix actions equal direct multiplication";
    return agree == 800;
}

// ------------------------------------------------------------- criterion 5

bool c5_eq14(std::string &detail) {
    DiffReport d = compare_constructions(split_generator_set(), eq14_printed_set());
    std::string mism;
    for (int a = 1; a <= 7; ++a)
        if (!d.diff(a).equal())
            mism += (mism.empty() ? "" : ", ") + std::string("U") + std::to_string(a) + " (" +
                    std::to_string(d.diff(a).cells.size()) + " cells)";
    bool u0_match = u_matrix(0) == u_matrix_printed(0);
    detail = std::to_string(d.num_matching) +
             "/7 derived matrices equal the printed blocks" +
             (mism.empty() ? "" : "; differing: " + mism) +
             "; U0 status recorded: derived sum " + (u0_match ? "equals" : "differs from") +
             " the printed identity block";
    if (!mism.empty())
        detail += "; the printed Kronecker formulas side with the derivation on U5 and U7, "
                  "marking the printed blocks as the misprint";
    return d.num_matching == 7;
}

// ------------------------------------------------------------- criterion 6

bool c6_clifford(std::string &detail) {
    GeneratorSet g = split_generator_set();
    bool ok = true;
    for (int a = 1; a <= 7; ++a)
        for (int b = a + 1; b <= 7; ++b)
            ok = require(anticommutator(g.mat(a), g.mat(b)).is_zero(),
                         "an off-diagonal anticommutator is nonzero", detail) && ok;
    SignatureReport sig = signature_check(g);
    std::string eta = "eta = diag(";
    for (int a = 1; a <= 7; ++a) {
        const auto &s = sig.diagonal_signs[static_cast<std::size_t>(a - 1)];
        ok = require(s.has_value() && (s->is_one() || *s == -GaussianRational::one()),
                     "a square is not +-identity", detail) && ok;
        eta += (a > 1 ? "," : "") + (s ? to_text(*s) : std::string("?"));
    }
    eta += ")";
    std::string mism = "; differs from the printed delta claim at";
    for (auto [a, b] : sig.mismatches_vs_delta)
        mism += " (" + std::to_string(a) + "," + std::to_string(b) + ")";
    if (sig.mismatches_vs_delta.empty()) mism = "; agrees with the printed delta claim";
    if (ok) detail = "21/21 off-diagonal anticommutators vanish; " + eta + mism +
                     " (reported, not failing)";
    return ok;
}

// ------------------------------------------------------------- criterion 7

bool c7_rank(std::string &detail) {
    GeneratorSet g = split_generator_set();
    auto brackets = bracket_generators(g);
    bool ok = require(brackets.size() == 21, "bracket count is not 21", detail);
    for (const GMat &m : brackets)
        ok = require(trace(m).is_zero(), "a bracket generator has nonzero trace", detail) && ok;
    std::size_t rank = generator_space_rank(g);
    ok = require(rank == 28, "rank " + std::to_string(rank) + " != 28", detail) && ok;
    if (ok) detail = "21 traceless brackets; 7 + 21 vectorized generators have exact rank 28";
    return ok;
}

// ------------------------------------------------------------- criterion 8

bool c8_rotation(std::string &detail) {
    GeneratorSet g = split_generator_set();
    LMat x = assemble_X(ComponentVector::pure_symbols(), g);
    QuadraticForm tr2_in = trace_of_square(x);
    DMat id = DMat::identity(8);
    bool ok = true;
    std::vector<std::string> bad_pairs;
    for (auto [k, l] : rotation_pairs()) {
        RotationOperator r = rotation_operator(k, l, Convention::A, g);
        std::string tag = "R" + std::to_string(k) + std::to_string(l);
        ok = require(r.matrix * r.inverse() == id && r.inverse() * r.matrix == id,
                     tag + ": truncated inverse identity fails", detail) && ok;
        RotationOutcome out = rotate(x, r, g);
        ok = require(out.x_out.trace().is_zero(), tag + ": trace(X') != 0", detail) && ok;
        auto tr2 = trace_of_square(out.x_out);
        ok = require(tr2.c0() == tr2_in && tr2.c1().is_zero(),
                     tag + ": trace(X'^2) != trace(X^2)", detail) && ok;
        ok = require(out.projected.residual_zero, tag + ": projection residual nonzero", detail) && ok;
        if (!component_square_sum(out.projected.components).c1().is_zero())
            bad_pairs.push_back(tag);
    }
    if (!bad_pairs.empty()) {
        ok = false;
        std::string list;
        for (const auto &p : bad_pairs) list += (list.empty() ? "" : " ") + p;
        detail = "inverse/trace/residual clauses hold for all 21 pairs, but the theta "
                 "coefficient of sum f'_A^2 is nonzero for " +
                 std::to_string(bad_pairs.size()) + " mixed-signature pairs (" + list +
                 "); it equals 4(eta_ll - eta_kk) f_k f_l, and the eta-weighted sum is "
                 "preserved for all 21 pairs";
    } else if (ok) {
        detail = "all five clauses hold for all 21 pairs";
    }
    return ok;
}

// ------------------------------------------------------------- criterion 9

std::string convention_finding() {
    GeneratorSet g = split_generator_set();
    DMat printed = r12_printed();
    bool a_match = rotation_operator(1, 2, Convention::A, g).matrix == printed;
    bool b_match = rotation_operator(1, 2, Convention::B, g).matrix == printed;
    std::string finding = std::string("A ") + (a_match ? "matches" : "differs") + ", B " +
                          (b_match ? "matches" : "differs");
    const DMat other = a_match ? rotation_operator(1, 2, Convention::B, g).matrix
                               : rotation_operator(1, 2, Convention::A, g).matrix;
    int delta = 0;
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            if (other.at(i, j) != printed.at(i, j)) ++delta;
    finding += "; per-entry delta of the other convention: " + std::to_string(delta) + " cells";
    return finding;
}

bool c9_convention(std::string &detail) {
    std::string first = convention_finding();
    std::string second = convention_finding();
    bool stable = first == second;
    bool identified = first.find("matches") != std::string::npos;
    detail = first + (stable ? "; stable across runs" : "; UNSTABLE across runs");
    return stable && identified;
}

// ------------------------------------------------------------ criterion 10

bool c10_table2(std::string &detail) {
    // second, independent transcription of the printed rows; F(a) is the
    // symbol f_a, FI(a) is i f_a, cells read left to right off the table
    auto F = [](int a) { return LinearForm::symbol(a); };
    auto FI = [](int a) { return LinearForm::symbol(a).scaled(GaussianRational::i()); };
    struct Entry {
        int k, l, comp;
        LinearForm value;
    };
    const std::vector<Entry> printed = {
        {1, 2, 1, F(2) - FI(5)}, {1, 2, 2, -F(1) - FI(6)},
        {1, 3, 1, F(3) - FI(5)}, {1, 3, 3, -F(1) - FI(7)},
        {1, 4, 1, F(4) - FI(5)}, {1, 4, 4, -F(1)},
        {1, 5, 1, -FI(1)},       {1, 5, 5, -FI(5)},
        {1, 6, 1, F(6) - FI(5)}, {1, 6, 6, -F(1) + FI(2)},
        {1, 7, 1, F(7) - FI(5)}, {1, 7, 7, -F(1) + FI(3)},
        {2, 3, 2, F(3) - FI(6)}, {2, 3, 3, -F(2) - FI(7)},
        {2, 4, 2, F(4) - FI(6)}, {2, 4, 4, -F(2)},
        {2, 5, 2, F(5) - FI(6)}, {2, 5, 5, -F(2) + FI(1)},
        {2, 6, 2, -FI(2)},       {2, 6, 6, -FI(6)},
        {2, 7, 2, F(7) - FI(6)}, {2, 7, 7, -F(2) + FI(3)},
        {3, 4, 3, F(4) - FI(7)}, {3, 4, 4, -F(3)},
        {3, 5, 3, F(5) - FI(7)}, {3, 5, 5, -F(3) + FI(1)},
        {3, 6, 3, F(6) - FI(7)}, {3, 6, 6, -F(3) + FI(2)},
        {3, 7, 3, -FI(3)},       {3, 7, 7, -FI(7)},
        {4, 5, 4, F(5)},         {4, 5, 5, -F(4) + FI(1)},
        {4, 6, 4, F(6)},         {4, 6, 6, -F(4) + FI(2)},
        {4, 7, 4, F(7)},         {4, 7, 7, -F(4) + FI(3)},
        {5, 6, 5, F(6) + FI(1)}, {5, 6, 6, -F(5) + FI(2)},
        {5, 7, 5, F(7) + FI(1)}, {5, 7, 7, -F(5) + FI(3)},
        {6, 7, 6, F(7) + FI(2)}, {6, 7, 7, -F(6) + FI(3)},
    };
    const auto &fix = table2_fixture();
    bool ok = true;
    int filled = 0;
    for (std::size_t r = 0; r < 21; ++r) {
        std::string name = "R" + std::to_string(fix[r].k) + std::to_string(fix[r].l);
        for (int a = 1; a <= 7; ++a) {
            const auto &cell = fix[r].cells[static_cast<std::size_t>(a - 1)];
            const Entry *want = nullptr;
            for (const Entry &e : printed)
                if (e.k == fix[r].k && e.l == fix[r].l && e.comp == a) want = &e;
            if (want) {
                ++filled;
                ok = require(cell.has_value() && *cell == want->value,
                             name + " f" + std::to_string(a) + " differs from the printed cell",
                             detail) && ok;
            } else {
                ok = require(!cell.has_value(),
                             name + " f" + std::to_string(a) + " should be blank (unchanged)",
                             detail) && ok;
            }
        }
    }
    ok = require(filled == 42, "printed table should have 42 filled cells", detail) && ok;
    GeneratorSet g = split_generator_set();
    TransformTable derived = transform_table(Convention::A, g);
    Table2Diff diff = compare_table2(derived, fix);
    ok = require(diff.matches + diff.mismatches + diff.blank_agrees == 147,
                 "cell classification is not total", detail) && ok;
    ReportContext ctx{"table2", "split", "A", {"Table 2"}};
    std::string doc1 = render_table2(derived, diff, Format::json, ctx);
    std::string doc2 = render_table2(transform_table(Convention::A, g),
                                     compare_table2(transform_table(Convention::A, g), fix),
                                     Format::json, ctx);
    ok = require(doc1 == doc2, "report is not byte-identical across runs", detail) && ok;
    if (ok)
        detail = "21/21 printed rows reproduced verbatim; per-cell classification " +
                 std::to_string(diff.matches) + " match / " + std::to_string(diff.mismatches) +
                 " mismatch / " + std::to_string(diff.blank_agrees) +
                 " blank-agree; byte-identical across runs";
    return ok;
}

// ------------------------------------------------------------ criterion 11

bool c11_cross(std::string &detail) {
    GeneratorSet split = split_generator_set();
    GeneratorSet kron_set = kron_generator_set();
    GeneratorSet fix_set = fixture_generator_set();
    auto [corr, info] = corrected_generator_set(split);

    std::vector<const GeneratorSet *> sources = {&kron_set, &fix_set, &split, &corr};
    // agreement counts frozen from the entrywise diffs, in pair order
    // (kron,fixture) (kron,split) (kron,corrected) (fixture,split)
    // (fixture,corrected) (split,corrected)
    const int expect_equal[6] = {2, 5, 6, 4, 3, 6};
    int reports = 0;
    bool ok = true;
    for (std::size_t i = 0; i < sources.size(); ++i)
        for (std::size_t j = i + 1; j < sources.size(); ++j) {
            DiffReport d = compare_constructions(*sources[i], *sources[j]);
            ok = require(d.num_matching == expect_equal[reports],
                         d.left_label + " vs " + d.right_label + ": " +
                             std::to_string(d.num_matching) + "/7 equal, expected " +
                             std::to_string(expect_equal[reports]),
                         detail) && ok;
            ++reports;
        }
    ok = require(reports == 6, "pairwise ledger incomplete", detail) && ok;

    std::string scalars;
    for (int a = 1; a <= 7; ++a) {
        const auto &s = info.scalars[static_cast<std::size_t>(a - 1)];
        if (s) {
            ok = require(corr.mat(a) == split.mat(a),
                         "corrected generator " + std::to_string(a) + " != split", detail) && ok;
            scalars += (scalars.empty() ? "" : ",") + to_text(*s);
        } else {
            scalars += (scalars.empty() ? "" : ",") + std::string("flagged");
        }
    }
    ok = require(info.uncorrectable == std::vector<int>{4},
                 "uncorrectable flags are not exactly {4}", detail) && ok;
    if (ok)
        detail = "6 pairwise construction diffs emitted; scalar prefactors (" + scalars +
                 "); generator 4 flagged uncorrectable-by-scalar";
    return ok;
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "Table 1 closure", c1_table1_closure},
        {2, "Eq. 8 validation", c2_eq8},
        {3, "e-basis bridge", c3_bridge},
        {4, "left-multiplication faithfulness", c4_left_mul},
        {5, "Eq. 14 reproduction", c5_eq14},
        {6, "generalized Clifford check", c6_clifford},
        {7, "generator completeness", c7_rank},
        {8, "rotation invariants", c8_rotation},
        {9, "convention diff", c9_convention},
        {10, "Table 2 report", c10_table2},
        {11, "cross-construction report", c11_cross},
    };
    int failures = 0;
    for (const Criterion &c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception &e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": " << c.name
                  << " — " << detail << "\n";
    }
    std::cout << (failures == 0 ? "all criteria passed"
                                : std::to_string(failures) + " criterion(s) failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
