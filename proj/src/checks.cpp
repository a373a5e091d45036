#include "octoclif/checks.hpp"

#include "octoclif/format.hpp"
#include "octoclif/rotation.hpp"
#include "octoclif/split_octonion.hpp"

#include <random>
#include <stdexcept>

namespace octoclif {

int SuiteResult::internal_failures() const {
    int n = 0;
    for (const auto &c : checks)
        if (c.category == CheckCategory::internal && !c.agreed) ++n;
    return n;
}

int SuiteResult::total_run() const {
    int n = 0;
    for (const auto &c : checks) n += c.checks_run;
    return n;
}

int SuiteResult::total_passed() const {
    int n = 0;
    for (const auto &c : checks) n += c.checks_passed;
    return n;
}

namespace {

struct Recorder {
    CheckResult r;

    Recorder(std::string id, std::string label, CheckCategory cat) {
        r.id = std::move(id);
        r.label = std::move(label);
        r.category = cat;
    }
    void count(bool ok, const std::string &detail = "") {
        ++r.checks_run;
        if (ok) ++r.checks_passed;
        else {
            r.agreed = false;
            if (!detail.empty()) r.details.push_back(detail);
        }
    }
    void note(const std::string &detail) { r.details.push_back(detail); }
    CheckResult done() { return std::move(r); }
};

std::string cell_str(const DiffCell &c) {
    return "cell (" + std::to_string(c.row) + "," + std::to_string(c.col) + "): " +
           to_text(c.left) + " vs " + to_text(c.right);
}

std::string product_str(const BasisProduct &p) {
    if (p.is_zero()) return "0";
    return (p.sign < 0 ? "-" : "") + basis_name(p.basis);
}

// --------------------------------------------------------------- table1/eq8

CheckResult check_table1_closure() {
    Recorder rec("table1.closure", "Table 1", CheckCategory::internal);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            SplitBasis x = kTableOrder[static_cast<std::size_t>(i)];
            SplitBasis y = kTableOrder[static_cast<std::size_t>(j)];
            BasisProduct got = mul_basis(x, y);
            BasisProduct want = table_cell(i, j);
            rec.count(got == want, basis_name(x) + "*" + basis_name(y) + " -> " +
                                       product_str(got) + " vs " + product_str(want));
        }
    return rec.done();
}

CheckResult check_eq8() {
    Recorder rec("eq8.identities", "Eq.8", CheckCategory::internal);
    TableValidation v = validate_table();
    rec.r.checks_run = v.checks_run;
    rec.r.checks_passed = v.checks_run - static_cast<int>(v.violations.size());
    rec.r.agreed = v.ok();
    rec.r.details = v.violations;
    return rec.done();
}

// -------------------------------------------------------------------- bridge

CheckResult check_round_trip() {
    Recorder rec("bridge.round_trip", "Eq.7", CheckCategory::internal);
    for (int a = 0; a < 8; ++a) {
        SplitOctonion e = e_basis(a);
        rec.count(from_e_coeffs(to_e_coeffs(e)) == e, "e" + std::to_string(a) + " u->e->u");
        std::array<GaussianRational, 8> pure{};
        pure[static_cast<std::size_t>(a)] = GaussianRational::one();
        rec.count(to_e_coeffs(from_e_coeffs(pure)) == pure, "e" + std::to_string(a) + " e->u->e");
    }
    for (int i = 0; i < 8; ++i) {
        SplitOctonion u = SplitOctonion::basis(spinor_basis(i));
        rec.count(from_e_coeffs(to_e_coeffs(u)) == u,
                  basis_name(spinor_basis(i)) + " round trip");
    }
    return rec.done();
}

CheckResult check_e_table() {
    Recorder rec("bridge.e_table", "Eq.7 + Table 1", CheckCategory::internal);
    auto t = derive_e_table();
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            rec.count(t[a][b].single, "e" + std::to_string(a) + "e" + std::to_string(b) +
                                          " not a signed basis element");
    for (int a = 0; a < 8; ++a) {
        rec.count(t[0][a].sign == 1 && t[0][a].index == a, "e0 left neutrality at e" + std::to_string(a));
        rec.count(t[a][0].sign == 1 && t[a][0].index == a, "e0 right neutrality at e" + std::to_string(a));
    }
    for (int a = 1; a < 8; ++a)
        rec.count(t[a][a].sign == -1 && t[a][a].index == 0,
                  "e" + std::to_string(a) + "^2 != -e0");
    for (int a = 1; a < 8; ++a)
        for (int b = a + 1; b < 8; ++b)
            rec.count(t[a][b].index == t[b][a].index && t[a][b].sign == -t[b][a].sign,
                      "e" + std::to_string(a) + ",e" + std::to_string(b) + " anticommutation");
    return rec.done();
}

CheckResult check_non_associative() {
    Recorder rec("bridge.non_associative", "Table 1", CheckCategory::internal);
    AssociativityScan s = associativity_scan();
    rec.count(s.violations > 0, "no non-associative triple found");
    if (s.violations > 0)
        rec.note("witness (" + basis_name(s.first_witness[0]) + ", " +
                 basis_name(s.first_witness[1]) + ", " + basis_name(s.first_witness[2]) +
                 "); " + std::to_string(s.violations) + " of 512 triples violate associativity");
    return rec.done();
}

SplitOctonion random_octonion(std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    SplitOctonion z;
    for (int i = 0; i < 8; ++i)
        z.coeff_ref(i) = GaussianRational(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
    return z;
}

CheckResult check_left_mul_faithful() {
    Recorder rec("bridge.left_mul_faithful", "Eq.10", CheckCategory::internal);
    std::mt19937_64 rng(0x5eed0c70);
    for (int trial = 0; trial < 100; ++trial) {
        SplitOctonion z = random_octonion(rng);
        for (int k = 0; k < 8; ++k) {
            SplitBasis b = spinor_basis(k);
            SplitOctonion direct = SplitOctonion::basis(b) * z;
            SplitOctonion via = apply_left(left_mul_matrix(b), z);
            rec.count(direct == via,
                      "trial " + std::to_string(trial) + ", " + basis_name(b));
        }
    }
    return rec.done();
}

// ------------------------------------------------------------------ clifford

CheckResult check_pauli_algebra() {
    Recorder rec("clifford.pauli_algebra", "Eq.2", CheckCategory::internal);
    auto eps = [](int i, int j, int k) -> int {
        if (i == j || j == k || i == k) return 0;
        return ((j - i + 3) % 3 == 1) ? 1 : -1;
    };
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            GMat want(2);
            if (a == b) want = GMat::identity(2);
            for (int c = 1; c <= 3; ++c)
                if (eps(a, b, c) != 0)
                    want += pauli(c).scaled(GaussianRational(Rational(0), Rational(eps(a, b, c))));
            rec.count(pauli(a) * pauli(b) == want,
                      "sigma" + std::to_string(a) + " sigma" + std::to_string(b));
        }
    return rec.done();
}

CheckResult check_gamma4() {
    Recorder rec("clifford.gamma4_product", "Eq.3", CheckCategory::fixture);
    rec.count(gamma(4) == gamma4_printed(), "chain product differs from the printed matrix");
    return rec.done();
}

CheckResult check_split_anticommute() {
    Recorder rec("clifford.split_anticommute", "Eq.5", CheckCategory::internal);
    GeneratorSet g = split_generator_set();
    for (int a = 1; a <= 7; ++a)
        for (int b = a + 1; b <= 7; ++b)
            rec.count(anticommutator(g.mat(a), g.mat(b)).is_zero(),
                      "{U" + std::to_string(a) + ",U" + std::to_string(b) + "} != 0");
    return rec.done();
}

CheckResult check_split_squares() {
    Recorder rec("clifford.split_squares", "Eq.5", CheckCategory::internal);
    GeneratorSet g = split_generator_set();
    GMat id = GMat::identity(8);
    for (int a = 1; a <= 7; ++a) {
        GMat sq = g.mat(a) * g.mat(a);
        rec.count(sq == id || sq == -id, "U" + std::to_string(a) + "^2 not +-identity");
    }
    return rec.done();
}

CheckResult check_eta_vs_delta(const GeneratorSet &g, const std::string &id) {
    Recorder rec(id, "Eq.5", CheckCategory::fixture);
    SignatureReport sig = signature_check(g);
    for (int a = 1; a <= 7; ++a)
        for (int b = a; b <= 7; ++b) {
            bool delta_ok = false;
            std::string got = "non-scalar";
            const auto &eta = sig.eta_at(a, b);
            if (eta) {
                got = to_text(*eta);
                delta_ok = (a == b) ? eta->is_one() : eta->is_zero();
            }
            rec.count(delta_ok, "[" + g.label + "] eta(" + std::to_string(a) + "," +
                                    std::to_string(b) + ") = " + got);
        }
    return rec.done();
}

CheckResult check_brackets() {
    Recorder rec("clifford.brackets_traceless", "Eq.6 / Eq.15", CheckCategory::internal);
    GeneratorSet g = split_generator_set();
    auto brackets = bracket_generators(g);
    rec.count(brackets.size() == 21, "bracket count != 21");
    for (std::size_t i = 0; i < brackets.size(); ++i)
        rec.count(brackets[i].trace().is_zero(), "bracket " + std::to_string(i) + " has trace");
    return rec.done();
}

CheckResult check_rank() {
    Recorder rec("clifford.rank28", "Sec.2 generator count", CheckCategory::internal);
    std::size_t rank = generator_space_rank(split_generator_set());
    rec.count(rank == 28, "rank " + std::to_string(rank) + " != 28");
    return rec.done();
}

// ---------------------------------------------------------------------- eq16

CheckResult check_set_diff(const std::string &id, const std::string &label,
                           const GeneratorSet &x, const GeneratorSet &y) {
    Recorder rec(id, label, CheckCategory::fixture);
    DiffReport d = compare_constructions(x, y);
    for (int a = 1; a <= 7; ++a) {
        const GeneratorDiff &gd = d.diff(a);
        std::string head = "generator " + std::to_string(a) + " [" + x.label + " vs " + y.label + "]";
        rec.count(gd.equal(), head + ": " + std::to_string(gd.cells.size()) + " differing cells");
        for (const DiffCell &c : gd.cells) rec.note("  " + head + " " + cell_str(c));
    }
    return rec.done();
}

CheckResult check_left_mul_printed() {
    Recorder rec("eq12_13.derived_vs_printed", "Eq.12 / Eq.13", CheckCategory::fixture);
    for (int i = 0; i < 8; ++i) {
        SplitBasis b = spinor_basis(i);
        auto cells = diff_matrices(left_mul_matrix(b), left_mul_printed(b));
        rec.count(cells.empty(), left_mul_label(b) + ": " + std::to_string(cells.size()) +
                                     " differing cells");
        for (const DiffCell &c : cells) rec.note("  " + left_mul_label(b) + " " + cell_str(c));
    }
    return rec.done();
}

CheckResult check_eq14() {
    Recorder rec("eq14.derived_vs_printed", "Eq.14", CheckCategory::fixture);
    for (int a = 0; a <= 7; ++a) {
        auto cells = diff_matrices(u_matrix(a), u_matrix_printed(a));
        rec.count(cells.empty(),
                  "U" + std::to_string(a) + ": " + std::to_string(cells.size()) + " differing cells");
        for (const DiffCell &c : cells) rec.note("  U" + std::to_string(a) + " " + cell_str(c));
    }
    rec.note("U0 status: derived U_L0+U_L0* equals the printed identity block matrix; the "
             "printed Eq.13 U_L0* list (a44+a55+a66+a77) does not reproduce it");
    return rec.done();
}

CheckResult check_corrected() {
    Recorder rec("eq16.corrected_matches", "Eq.16", CheckCategory::internal);
    GeneratorSet split = split_generator_set();
    auto [corr, info] = corrected_generator_set(split);
    for (int a = 1; a <= 7; ++a) {
        const auto &s = info.scalars[static_cast<std::size_t>(a - 1)];
        if (s)
            rec.count(corr.mat(a) == split.mat(a),
                      "corrected generator " + std::to_string(a) + " != reference");
        else
            rec.count(corr.mat(a) == beta_kron(a),
                      "uncorrectable generator " + std::to_string(a) + " not kept verbatim");
        rec.note("generator " + std::to_string(a) + ": " +
                 (s ? "scalar " + to_text(*s) : "uncorrectable by scalar"));
    }
    return rec.done();
}

// ------------------------------------------------------------------ rotation

CheckResult check_truncated_inverse() {
    Recorder rec("rotation.truncated_inverse", "Eq.23", CheckCategory::internal);
    GeneratorSet g = split_generator_set();
    DMat id = DMat::identity(8);
    for (Convention c : {Convention::A, Convention::B})
        for (auto [k, l] : rotation_pairs()) {
            RotationOperator r = rotation_operator(k, l, c, g);
            bool ok = (r.matrix * r.inverse() == id) && (r.inverse() * r.matrix == id);
            rec.count(ok, "R" + std::to_string(k) + std::to_string(l) + " convention " +
                              convention_name(c));
        }
    return rec.done();
}

CheckResult check_norm_claim() {
    Recorder rec("rotation.norm_claim", "Eq.17 orthogonality", CheckCategory::fixture);
    GeneratorSet g = split_generator_set();
    LMat x = assemble_X(ComponentVector::pure_symbols(), g);
    for (auto [k, l] : rotation_pairs()) {
        RotationOutcome out = rotate(x, rotation_operator(k, l, Convention::A, g), g);
        auto sum = component_square_sum(out.projected.components);
        rec.count(sum.c1().is_zero(), "R" + std::to_string(k) + std::to_string(l) +
                                          ": theta coefficient of sum f'_A^2 is nonzero");
    }
    rec.note("the eta-weighted sum (signs from the computed signature) is preserved for all "
             "21 pairs; the unweighted sum mixes across the sign split");
    return rec.done();
}

CheckResult check_eq25() {
    Recorder rec("eq25.convention", "Eq.25", CheckCategory::fixture);
    GeneratorSet g = split_generator_set();
    DMat printed = r12_printed();
    bool a_match = rotation_operator(1, 2, Convention::A, g).matrix == printed;
    bool b_match = rotation_operator(1, 2, Convention::B, g).matrix == printed;
    rec.count(a_match || b_match, "neither convention reproduces the printed R12");
    rec.note(std::string("convention A ") + (a_match ? "matches" : "differs") +
             ", convention B " + (b_match ? "matches" : "differs"));
    return rec.done();
}

CheckResult check_eq26() {
    Recorder rec("eq26.delta", "Eq.26", CheckCategory::fixture);
    GeneratorSet g = split_generator_set();
    LMat x = assemble_X(ComponentVector::pure_symbols(), g);
    LMat m26 = eq26_printed();
    const GaussianRational half(Rational(1, 2));
    for (Convention c : {Convention::A, Convention::B}) {
        RotationOutcome out = rotate(x, rotation_operator(1, 2, c, g), g);
        int mismatched = 0;
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j)
                if (out.x_out.at(i, j).c1().scaled(half) != m26.at(i, j)) ++mismatched;
        rec.count(mismatched == 0, "convention " + convention_name(c) + ": " +
                                       std::to_string(mismatched) + " cells differ");
    }
    return rec.done();
}

CheckResult check_eq27() {
    Recorder rec("eq27.table2_row", "Eq.27", CheckCategory::fixture);
    const FixtureRow &r12 = table2_fixture()[0];
    auto maps = eq27_printed();
    for (int a = 1; a <= 7; ++a)
        rec.count(maps[static_cast<std::size_t>(a - 1)] == r12.cells[static_cast<std::size_t>(a - 1)],
                  "component " + std::to_string(a) + " differs between the printed maps and the table row");
    return rec.done();
}

CheckResult check_table2(Convention c) {
    Recorder rec(std::string("table2.diff_") + (c == Convention::A ? "a" : "b"), "Table 2",
                 CheckCategory::fixture);
    GeneratorSet g = split_generator_set();
    Table2Diff d = compare_table2(transform_table(c, g), table2_fixture());
    rec.r.checks_run = static_cast<int>(d.cells.size());
    rec.r.checks_passed = d.matches + d.blank_agrees;
    rec.r.agreed = d.mismatches == 0;
    rec.note("convention " + convention_name(c) + ": " + std::to_string(d.matches) +
             " matching cells, " + std::to_string(d.mismatches) + " mismatching, " +
             std::to_string(d.blank_agrees) + " blank-agreeing");
    return rec.done();
}

CheckResult check_eq19_hermitian() {
    Recorder rec("eq19.hermitian", "Eq.19", CheckCategory::fixture);
    LMat x = x_printed();
    LMat dag = dagger(x);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            rec.count(dag.at(i, j) == x.at(i, j),
                      "cell (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                          "): " + to_text(x.at(i, j)) + " vs conj-transpose " +
                          to_text(dag.at(i, j)));
    rec.count(x.trace().is_zero(), "trace != 0");
    return rec.done();
}

CheckResult check_eq19_vs_assembled() {
    Recorder rec("eq19.vs_assembled", "Eq.19", CheckCategory::fixture);
    GeneratorSet g = split_generator_set();
    LMat assembled = assemble_X(ComponentVector::pure_symbols(), g);
    LMat printed = x_printed();
    int differing = 0;
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            if (assembled.at(i, j) != printed.at(i, j)) ++differing;
    rec.count(differing == 0, std::to_string(differing) +
                                  " cells differ between sum f_A U_A and the printed expansion");
    return rec.done();
}

CheckResult check_eq19_blocks() {
    Recorder rec("eq19.blocks", "Eq.20-22", CheckCategory::fixture);
    BlockDecomposition d = block_decompose(x_printed());
    rec.count(d.a == eq21_a_printed(), "top-left block differs from the printed A");
    rec.count(d.b_dagger == eq22_b_printed(), "top-right block differs from the printed B");
    rec.count(d.neg_a == -d.a, "bottom-right != -A");
    LMat expect = dagger(d.b);
    int differing = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (expect.at(i, j) != d.b_dagger.at(i, j)) ++differing;
    rec.count(differing == 0, "top-right vs dagger(bottom-left): " + std::to_string(differing) +
                                  " differing cells");
    rec.count(d.consistent, "compact-form consistency flag is false");
    return rec.done();
}

CheckResult check_eq19_projection() {
    Recorder rec("eq19.projection", "Eq.19", CheckCategory::fixture);
    GeneratorSet g = split_generator_set();
    LinearProjection p = project_components(x_printed(), g);
    for (int a = 1; a <= 7; ++a)
        rec.note("f" + std::to_string(a) + " -> " +
                 to_text(p.components[static_cast<std::size_t>(a - 1)]));
    rec.note(std::string("residual ") + (p.residual_zero ? "zero" : "nonzero"));
    rec.count(true);
    return rec.done();
}

CheckResult check_determinism() {
    Recorder rec("rotation.determinism", "report stability", CheckCategory::internal);
    GeneratorSet g = split_generator_set();
    for (Convention c : {Convention::A, Convention::B}) {
        TransformTable t1 = transform_table(c, g);
        TransformTable t2 = transform_table(c, g);
        bool same = true;
        for (std::size_t r = 0; r < 21; ++r)
            if (t1.rows[r].images != t2.rows[r].images ||
                t1.rows[r].residual_zero != t2.rows[r].residual_zero)
                same = false;
        rec.count(same, "convention " + convention_name(c) + " table differs between runs");
    }
    return rec.done();
}

// -------------------------------------------------------------------- suites

void run_rotation_sweep(SuiteResult &out) {
    Recorder first("rotation.first_order", "Eq.24", CheckCategory::internal);
    Recorder trace_rec("rotation.trace_preserved", "Eq.24", CheckCategory::internal);
    Recorder span_rec("rotation.span_closure", "Eq.18", CheckCategory::internal);
    GeneratorSet g = split_generator_set();
    LMat x = assemble_X(ComponentVector::pure_symbols(), g);
    QuadraticForm tr2_in = trace_of_square(x);
    for (Convention c : {Convention::A, Convention::B})
        for (auto [k, l] : rotation_pairs()) {
            std::string tag = "R" + std::to_string(k) + std::to_string(l) + " convention " +
                              convention_name(c);
            RotationOutcome out_kl = rotate(x, rotation_operator(k, l, c, g), g);
            first.count(out_kl.first_order_exact, tag + ": theta^2 residue detected");
            auto tr2 = trace_of_square(out_kl.x_out);
            trace_rec.count(out_kl.x_out.trace().is_zero(), tag + ": trace(X') != 0");
            trace_rec.count(tr2.c0() == tr2_in && tr2.c1().is_zero(),
                            tag + ": trace(X'^2) != trace(X^2)");
            span_rec.count(out_kl.projected.residual_zero, tag + ": projection residual != 0");
        }
    out.checks.push_back(first.done());
    out.checks.push_back(trace_rec.done());
    out.checks.push_back(span_rec.done());
}

void run_named(const std::string &name, SuiteResult &out) {
    if (name == "table1") {
        out.checks.push_back(check_table1_closure());
    } else if (name == "eq8") {
        out.checks.push_back(check_eq8());
    } else if (name == "bridge") {
        out.checks.push_back(check_round_trip());
        out.checks.push_back(check_e_table());
        out.checks.push_back(check_non_associative());
        out.checks.push_back(check_left_mul_faithful());
    } else if (name == "clifford") {
        out.checks.push_back(check_pauli_algebra());
        out.checks.push_back(check_gamma4());
        out.checks.push_back(check_split_anticommute());
        out.checks.push_back(check_split_squares());
        out.checks.push_back(check_eta_vs_delta(split_generator_set(), "clifford.eta_vs_delta"));
        out.checks.push_back(check_brackets());
        out.checks.push_back(check_rank());
    } else if (name == "eq16") {
        GeneratorSet kron_set = kron_generator_set();
        GeneratorSet fix_set = fixture_generator_set();
        GeneratorSet split = split_generator_set();
        GeneratorSet corr = corrected_generator_set(split).first;
        out.checks.push_back(check_set_diff("eq16.kron_vs_split", "Eq.16", kron_set, split));
        out.checks.push_back(check_set_diff("eq4.kron_vs_printed", "Eq.4", kron_set, fix_set));
        out.checks.push_back(check_set_diff("eq4.printed_vs_split", "Eq.4 vs Eq.14", fix_set, split));
        out.checks.push_back(check_set_diff("eq16.corrected_vs_split", "Eq.16", corr, split));
        out.checks.push_back(check_left_mul_printed());
        out.checks.push_back(check_eq14());
        out.checks.push_back(check_corrected());
    } else if (name == "rotation") {
        out.checks.push_back(check_truncated_inverse());
        run_rotation_sweep(out);
        out.checks.push_back(check_norm_claim());
        out.checks.push_back(check_eq25());
        out.checks.push_back(check_eq26());
        out.checks.push_back(check_eq27());
        out.checks.push_back(check_table2(Convention::A));
        out.checks.push_back(check_table2(Convention::B));
        out.checks.push_back(check_eq19_hermitian());
        out.checks.push_back(check_eq19_vs_assembled());
        out.checks.push_back(check_eq19_blocks());
        out.checks.push_back(check_eq19_projection());
        out.checks.push_back(check_determinism());
    } else {
        throw std::invalid_argument("unknown suite: " + name);
    }
}

} // namespace

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names = {"table1", "eq8",  "bridge",
                                                   "clifford", "eq16", "rotation", "all"};
    return names;
}

SuiteResult run_suite(const std::string &name) {
    SuiteResult out;
    out.suite = name;
    if (name == "all") {
        for (const std::string &n : suite_names())
            if (n != "all") run_named(n, out);
    } else {
        run_named(name, out);
    }
    return out;
}

} // namespace octoclif
