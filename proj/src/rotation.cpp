#include "octoclif/rotation.hpp"

#include <stdexcept>

namespace octoclif {

namespace {

const GaussianRational kI = GaussianRational::i();

LinearForm fsym(int a) { return LinearForm::symbol(a); }
LinearForm fi(int a) { return LinearForm::symbol(a).scaled(kI); }   // i f_a
LinearForm fmi(int a) { return LinearForm::symbol(a).scaled(-kI); } // -i f_a

void put(LMat &m, int i, int j, const LinearForm &v) {
    m.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = v;
}

} // namespace

ComponentVector ComponentVector::pure_symbols() {
    ComponentVector v;
    for (int a = 1; a <= 7; ++a) v.at(a) = LinearForm::symbol(a);
    return v;
}

LMat embed_linear(const GMat &m) {
    return m.map<LinearForm>([](const GaussianRational &g) { return LinearForm::constant(g); });
}

DLMat embed_dual_form(const GMat &m) {
    return m.map<DualForm>(
        [](const GaussianRational &g) { return DualForm(LinearForm::constant(g)); });
}

DLMat lift_dual(const LMat &m) {
    return m.map<DualForm>([](const LinearForm &v) { return DualForm(v); });
}

DLMat lift_dual(const DMat &m) {
    return m.map<DualForm>([](const DualScalar &v) {
        return DualForm(LinearForm::constant(v.c0()), LinearForm::constant(v.c1()));
    });
}

LMat assemble_X(const ComponentVector &f, const GeneratorSet &basis) {
    LMat x(8);
    for (int a = 1; a <= 7; ++a)
        x += embed_linear(basis.mat(a)).scaled(f.at(a));
    return x;
}

LMat x_printed() {
    LMat x(8);
    put(x, 1, 1, fsym(4));
    put(x, 2, 2, fsym(4));
    put(x, 3, 3, fsym(4));
    put(x, 4, 4, fsym(4));
    put(x, 5, 5, -fsym(4));
    put(x, 6, 6, -fsym(4));
    put(x, 7, 7, -fsym(4));
    put(x, 8, 8, -fsym(4));
    put(x, 1, 6, fi(1) - fsym(5));
    put(x, 1, 7, fi(2) - fsym(6));
    put(x, 1, 8, fi(3) - fsym(7));
    put(x, 2, 5, fsym(5) - fi(1));
    put(x, 2, 7, fi(3) + fsym(7));
    put(x, 2, 8, fmi(2) - fsym(6));
    put(x, 3, 5, fsym(6) - fi(2));
    put(x, 3, 6, fmi(3) - fsym(7));
    put(x, 3, 8, fi(1) + fsym(5));
    put(x, 4, 5, fsym(7) - fi(3));
    put(x, 4, 6, fi(2) + fsym(6));
    put(x, 4, 7, fmi(1) - fsym(5));
    put(x, 5, 2, fi(1) + fsym(5));
    put(x, 5, 3, fi(2) + fsym(6));
    put(x, 5, 4, fi(3) - fsym(7));
    put(x, 6, 1, fmi(1) - fsym(5));
    put(x, 6, 3, fmi(3) - fsym(7));
    put(x, 6, 4, fsym(6) - fi(2));
    put(x, 7, 1, fi(2) - fsym(6));
    put(x, 7, 2, fsym(7) - fi(3));
    put(x, 7, 4, fi(1) - fsym(5));
    put(x, 8, 1, fi(3) - fsym(7));
    put(x, 8, 2, fi(2) - fsym(6));
    put(x, 8, 3, fsym(5) - fi(1));
    return x;
}

LMat eq21_a_printed() {
    LMat a(4);
    for (int i = 1; i <= 4; ++i) put(a, i, i, fsym(4));
    return a;
}

LMat eq22_b_printed() {
    LMat b(4);
    put(b, 1, 2, fi(1) - fsym(5));
    put(b, 1, 3, fi(2) - fsym(6));
    put(b, 1, 4, fi(3) - fsym(7));
    put(b, 2, 1, fsym(5) - fi(1));
    put(b, 2, 3, fi(3) + fsym(7));
    put(b, 2, 4, fmi(2) - fsym(6));
    put(b, 3, 1, fsym(6) - fi(2));
    put(b, 3, 2, fmi(3) - fsym(7));
    put(b, 3, 4, fi(1) + fsym(5));
    put(b, 4, 1, fsym(7) - fi(3));
    put(b, 4, 2, fi(2) + fsym(6));
    put(b, 4, 3, fmi(1) - fsym(5));
    return b;
}

BlockDecomposition block_decompose(const LMat &x) {
    if (x.size() != 8) throw std::invalid_argument("block_decompose: expected an 8x8 matrix");
    BlockDecomposition d{x.block(0, 0, 4), x.block(4, 0, 4), x.block(0, 4, 4),
                         x.block(4, 4, 4), false};
    d.consistent = (d.neg_a == -d.a) && (d.b_dagger == dagger(d.b));
    return d;
}

std::string convention_name(Convention c) { return c == Convention::A ? "A" : "B"; }

DMat RotationOperator::inverse() const {
    DMat inv = DMat::identity(8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            const GaussianRational &g = theta_part.at(i, j);
            if (!g.is_zero())
                inv.at(i, j) -= DualScalar(GaussianRational::zero(), g);
        }
    return inv;
}

RotationOperator rotation_operator(int k, int l, Convention c, const GeneratorSet &basis) {
    if (k < 1 || k > 7 || l < 1 || l > 7) throw std::out_of_range("rotation plane outside 1..7");
    if (k == l) throw std::invalid_argument("rotation plane indices must differ");
    RotationOperator r;
    r.k = k;
    r.l = l;
    r.convention = c;
    if (c == Convention::A)
        r.theta_part = basis.mat(k) * basis.mat(l);
    else // (1/2i)[U_k, U_l]; equals -i U_k U_l whenever the pair anticommutes
        r.theta_part = commutator(basis.mat(k), basis.mat(l))
                           .scaled(GaussianRational(Rational(0), Rational(-1, 2)));
    r.matrix = DMat::identity(8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            const GaussianRational &g = r.theta_part.at(i, j);
            if (!g.is_zero()) r.matrix.at(i, j) += DualScalar(GaussianRational::zero(), g);
        }
    return r;
}

DMat r12_printed() {
    DMat m = DMat::identity(8);
    const DualScalar it(GaussianRational::zero(), kI);
    const DualScalar mit(GaussianRational::zero(), -kI);
    auto set = [&m](int i, int j, const DualScalar &v) {
        m.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = v;
    };
    set(1, 4, it);
    set(2, 3, it);
    set(3, 2, mit);
    set(4, 1, mit);
    set(5, 8, it);
    set(6, 7, it);
    set(7, 6, mit);
    set(8, 5, mit);
    return m;
}

ProjectionResult project_components(const DLMat &x, const GeneratorSet &basis) {
    ProjectionResult p;
    DLMat recombined(8);
    for (int a = 1; a <= 7; ++a) {
        GaussianRational norm = hs_inner(basis.mat(a), basis.mat(a));
        if (norm.is_zero())
            throw std::domain_error("project_components: degenerate basis element");
        DLMat ua = embed_dual_form(basis.mat(a));
        DualForm ip = hs_inner(ua, x);
        DualForm comp = ip * DualForm(LinearForm::constant(norm.inv()));
        p.components[static_cast<std::size_t>(a - 1)] = comp;
        recombined += ua.scaled(comp);
    }
    p.residual = x - recombined;
    p.residual_zero = p.residual.is_zero();
    return p;
}

LinearProjection project_components(const LMat &x, const GeneratorSet &basis) {
    LinearProjection p;
    LMat recombined(8);
    for (int a = 1; a <= 7; ++a) {
        GaussianRational norm = hs_inner(basis.mat(a), basis.mat(a));
        if (norm.is_zero())
            throw std::domain_error("project_components: degenerate basis element");
        LMat ua = embed_linear(basis.mat(a));
        LinearForm comp = hs_inner(ua, x).scaled(norm.inv());
        p.components[static_cast<std::size_t>(a - 1)] = comp;
        recombined += ua.scaled(comp);
    }
    p.residual = x - recombined;
    p.residual_zero = p.residual.is_zero();
    return p;
}

RotationOutcome rotate(const LMat &x, const RotationOperator &r, const GeneratorSet &basis) {
    RotationOutcome out;
    out.k = r.k;
    out.l = r.l;
    out.convention = r.convention;
    out.x_in = lift_dual(x);
    DLMat rot = lift_dual(r.matrix);
    DLMat rot_inv = lift_dual(r.inverse());
    out.x_out = rot * out.x_in * rot_inv;

    LMat g = embed_linear(r.theta_part);
    LMat c = g * x - x * g;
    out.first_order_form = DLMat(8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            out.first_order_form.at(i, j) = DualForm(x.at(i, j), c.at(i, j));
    out.first_order_exact = out.first_order_form == out.x_out;
    out.projected = project_components(out.x_out, basis);
    return out;
}

DualTheta<QuadraticForm> trace_of_square(const DLMat &x) {
    QuadraticForm c0, c1;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) {
            const DualForm &a = x.at(i, j);
            const DualForm &b = x.at(j, i);
            c0 += quad_mul(a.c0(), b.c0());
            c1 += quad_mul(a.c0(), b.c1()) + quad_mul(a.c1(), b.c0());
        }
    return {c0, c1};
}

QuadraticForm trace_of_square(const LMat &x) {
    QuadraticForm t;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) t += quad_mul(x.at(i, j), x.at(j, i));
    return t;
}

DualTheta<QuadraticForm> component_square_sum(const std::array<DualForm, 7> &c) {
    QuadraticForm c0, c1;
    for (const DualForm &v : c) {
        c0 += quad_mul(v.c0(), v.c0());
        c1 += quad_mul(v.c0(), v.c1()) + quad_mul(v.c1(), v.c0());
    }
    return {c0, c1};
}

std::vector<std::pair<int, int>> rotation_pairs() {
    std::vector<std::pair<int, int>> p;
    for (int k = 1; k <= 7; ++k)
        for (int l = k + 1; l <= 7; ++l) p.emplace_back(k, l);
    return p;
}

std::optional<LinearForm> TransformRow::cell(int a) const {
    const DualForm &img = images.at(static_cast<std::size_t>(a - 1));
    if (img.c1().is_zero()) return std::nullopt;
    return img.c1().scaled(GaussianRational(Rational(1, 2)));
}

TransformTable transform_table(Convention c, const GeneratorSet &basis) {
    TransformTable t;
    t.convention = c;
    LMat x = assemble_X(ComponentVector::pure_symbols(), basis);
    std::size_t row = 0;
    for (auto [k, l] : rotation_pairs()) {
        RotationOutcome out = rotate(x, rotation_operator(k, l, c, basis), basis);
        TransformRow &r = t.rows.at(row++);
        r.k = k;
        r.l = l;
        r.images = out.projected.components;
        r.residual_zero = out.projected.residual_zero;
    }
    return t;
}

namespace {

std::array<FixtureRow, 21> build_table2() {
    std::array<FixtureRow, 21> t{};
    std::size_t row = 0;
    auto add = [&t, &row](int k, int l, int a1, LinearForm v1, int a2, LinearForm v2) {
        FixtureRow &r = t.at(row++);
        r.k = k;
        r.l = l;
        r.cells[static_cast<std::size_t>(a1 - 1)] = v1;
        r.cells[static_cast<std::size_t>(a2 - 1)] = v2;
    };
    add(1, 2, 1, fsym(2) - fi(5), 2, -fsym(1) - fi(6));
    add(1, 3, 1, fsym(3) - fi(5), 3, -fsym(1) - fi(7));
    add(1, 4, 1, fsym(4) - fi(5), 4, -fsym(1));
    add(1, 5, 1, fmi(1), 5, fmi(5));
    add(1, 6, 1, fsym(6) - fi(5), 6, -fsym(1) + fi(2));
    add(1, 7, 1, fsym(7) - fi(5), 7, -fsym(1) + fi(3));
    add(2, 3, 2, fsym(3) - fi(6), 3, -fsym(2) - fi(7));
    add(2, 4, 2, fsym(4) - fi(6), 4, -fsym(2));
    add(2, 5, 2, fsym(5) - fi(6), 5, -fsym(2) + fi(1));
    add(2, 6, 2, fmi(2), 6, fmi(6));
    add(2, 7, 2, fsym(7) - fi(6), 7, -fsym(2) + fi(3));
    add(3, 4, 3, fsym(4) - fi(7), 4, -fsym(3));
    add(3, 5, 3, fsym(5) - fi(7), 5, -fsym(3) + fi(1));
    add(3, 6, 3, fsym(6) - fi(7), 6, -fsym(3) + fi(2));
    add(3, 7, 3, fmi(3), 7, fmi(7));
    add(4, 5, 4, fsym(5), 5, -fsym(4) + fi(1));
    add(4, 6, 4, fsym(6), 6, -fsym(4) + fi(2));
    add(4, 7, 4, fsym(7), 7, -fsym(4) + fi(3));
    add(5, 6, 5, fsym(6) + fi(1), 6, -fsym(5) + fi(2));
    add(5, 7, 5, fsym(7) + fi(1), 7, -fsym(5) + fi(3));
    add(6, 7, 6, fsym(7) + fi(2), 7, -fsym(6) + fi(3));
    return t;
}

} // namespace

const std::array<FixtureRow, 21> &table2_fixture() {
    static const std::array<FixtureRow, 21> t = build_table2();
    return t;
}

std::array<std::optional<LinearForm>, 7> eq27_printed() {
    std::array<std::optional<LinearForm>, 7> maps{};
    maps[0] = fsym(2) - fi(5);
    maps[1] = -fsym(1) - fi(6);
    return maps;
}

LMat eq26_printed() {
    LMat m(8);
    put(m, 1, 6, fi(2));
    put(m, 1, 7, fmi(1));
    put(m, 2, 5, fmi(2));
    put(m, 2, 8, fi(1));
    put(m, 3, 5, fi(1));
    put(m, 3, 8, fi(2));
    put(m, 4, 6, fmi(1));
    put(m, 4, 7, fmi(2));
    put(m, 5, 2, fi(2));
    put(m, 5, 3, fmi(1));
    put(m, 6, 1, fmi(2));
    put(m, 6, 4, fi(1));
    put(m, 7, 1, fi(1));
    put(m, 7, 4, fi(2));
    put(m, 8, 2, fmi(1));
    put(m, 8, 3, fmi(2));
    return m;
}

Table2Diff compare_table2(const TransformTable &derived,
                          const std::array<FixtureRow, 21> &fixture) {
    Table2Diff d;
    d.convention = derived.convention;
    for (std::size_t r = 0; r < 21; ++r) {
        const TransformRow &dr = derived.rows[r];
        const FixtureRow &fr = fixture[r];
        for (int a = 1; a <= 7; ++a) {
            Table2Diff::Cell cell;
            cell.k = dr.k;
            cell.l = dr.l;
            cell.component = a;
            cell.derived = dr.cell(a);
            cell.fixture = fr.cells[static_cast<std::size_t>(a - 1)];
            if (!cell.derived && !cell.fixture) {
                cell.cls = CellClass::blank_agree;
                ++d.blank_agrees;
            } else if (cell.derived && cell.fixture && *cell.derived == *cell.fixture) {
                cell.cls = CellClass::match;
                ++d.matches;
            } else {
                cell.cls = CellClass::mismatch;
                ++d.mismatches;
            }
            d.cells.push_back(std::move(cell));
        }
    }
    return d;
}

} // namespace octoclif
