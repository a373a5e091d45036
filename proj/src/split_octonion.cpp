#include "octoclif/split_octonion.hpp"

#include <stdexcept>

namespace octoclif {

namespace {

using B = SplitBasis;

constexpr BasisProduct Z{0, B::u0};
constexpr BasisProduct P(B b) { return {1, b}; }
constexpr BasisProduct M(B b) { return {-1, b}; }

// The printed multiplication table, verbatim, row/col in kTableOrder
// (u0*, u1*, u2*, u3*, u0, u1, u2, u3). Single source of truth for the
// algebra; the identity sweep in validate_table is an overlay, not a
// second source.
const std::array<std::array<BasisProduct, 8>, 8> kTable1 = {{
    // u0* row
    {{P(B::u0c), P(B::u1c), P(B::u2c), P(B::u3c), Z, Z, Z, Z}},
    // u1* row
    {{Z, Z, P(B::u3), M(B::u2), P(B::u1c), M(B::u0c), Z, Z}},
    // u2* row
    {{Z, M(B::u3), Z, P(B::u1), P(B::u2c), Z, M(B::u0c), Z}},
    // u3* row
    {{Z, P(B::u2), M(B::u1), Z, P(B::u3c), Z, Z, M(B::u0c)}},
    // u0 row
    {{Z, Z, Z, Z, P(B::u0), P(B::u1), P(B::u2), P(B::u3)}},
    // u1 row
    {{P(B::u1), M(B::u0), Z, Z, Z, Z, P(B::u3c), M(B::u2c)}},
    // u2 row
    {{P(B::u2), Z, M(B::u0), Z, Z, M(B::u3c), Z, P(B::u1c)}},
    // u3 row
    {{P(B::u3), Z, Z, M(B::u0), Z, P(B::u2c), M(B::u1c), Z}},
}};

int table_index(SplitBasis b) {
    for (int k = 0; k < 8; ++k)
        if (kTableOrder[static_cast<std::size_t>(k)] == b) return k;
    return -1;
}

const GaussianRational kI = GaussianRational::i();
const GaussianRational kHalf = GaussianRational(Rational(1, 2));

GMat from_cells(std::initializer_list<std::array<int, 3>> cells) {
    GMat m(8);
    for (const auto &c : cells)
        m.at(static_cast<std::size_t>(c[0] - 1), static_cast<std::size_t>(c[1] - 1)) =
            GaussianRational(c[2]);
    return m;
}

// 8x8 from 2x2 blocks: four block rows of {scale, block}, block in
// {0: zero, 1: s0, 2: s1, 3: s2-with-i-prefactor...}. Simpler to just place
// 2x2 payloads directly.
GMat from_blocks(const std::array<std::array<GMat, 4>, 4> &blocks) {
    GMat m(8);
    for (std::size_t bi = 0; bi < 4; ++bi)
        for (std::size_t bj = 0; bj < 4; ++bj)
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j)
                    m.at(2 * bi + i, 2 * bj + j) = blocks[bi][bj].at(i, j);
    return m;
}

} // namespace

int spinor_index(SplitBasis b) {
    for (int k = 0; k < 8; ++k)
        if (kSpinorOrder[static_cast<std::size_t>(k)] == b) return k;
    return -1;
}

SplitBasis spinor_basis(int i) {
    if (i < 0 || i > 7) throw std::out_of_range("spinor_basis: index outside 0..7");
    return kSpinorOrder[static_cast<std::size_t>(i)];
}

std::string basis_name(SplitBasis b) {
    switch (b) {
    case B::u0: return "u0";
    case B::u1: return "u1";
    case B::u2: return "u2";
    case B::u3: return "u3";
    case B::u0c: return "u0*";
    case B::u1c: return "u1*";
    case B::u2c: return "u2*";
    case B::u3c: return "u3*";
    }
    return "?";
}

std::string basis_latex(SplitBasis b) {
    int i = spinor_index(b);
    bool starred = i >= 4;
    return "u_" + std::to_string(i % 4) + (starred ? "^*" : "");
}

BasisProduct mul_basis(SplitBasis x, SplitBasis y) {
    return kTable1[static_cast<std::size_t>(table_index(x))]
                  [static_cast<std::size_t>(table_index(y))];
}

BasisProduct table_cell(int row, int col) {
    if (row < 0 || row > 7 || col < 0 || col > 7)
        throw std::out_of_range("table_cell: index outside 0..7");
    return kTable1[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
}

SplitOctonion SplitOctonion::operator*(const SplitOctonion &o) const {
    SplitOctonion s;
    for (int i = 0; i < 8; ++i) {
        if (c_[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < 8; ++j) {
            if (o.c_[static_cast<std::size_t>(j)].is_zero()) continue;
            BasisProduct p = mul_basis(spinor_basis(i), spinor_basis(j));
            if (p.is_zero()) continue;
            GaussianRational term =
                c_[static_cast<std::size_t>(i)] * o.c_[static_cast<std::size_t>(j)];
            if (p.sign < 0) term = -term;
            s.c_[static_cast<std::size_t>(spinor_index(p.basis))] += term;
        }
    }
    return s;
}

TableValidation validate_table() {
    TableValidation v;
    auto check = [&v](bool ok, const std::string &what) {
        ++v.checks_run;
        if (!ok) v.violations.push_back(what);
    };
    auto eps = [](int i, int j, int k) -> int {
        if (i == j || j == k || i == k) return 0;
        // parity of the permutation (i j k) of (1 2 3)
        return ((j - i + 3) % 3 == 1) ? 1 : -1;
    };
    const B u[4] = {B::u0, B::u1, B::u2, B::u3};
    const B uc[4] = {B::u0c, B::u1c, B::u2c, B::u3c};

    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            // u_i u_j = eps_ijk u_k*   and antisymmetry
            BasisProduct got = mul_basis(u[i], u[j]);
            BasisProduct want = Z;
            for (int k = 1; k <= 3; ++k)
                if (eps(i, j, k) != 0) want = {eps(i, j, k), uc[k]};
            check(got == want, "u" + std::to_string(i) + "u" + std::to_string(j));
            // u_i* u_j* = eps_ijk u_k
            got = mul_basis(uc[i], uc[j]);
            want = Z;
            for (int k = 1; k <= 3; ++k)
                if (eps(i, j, k) != 0) want = {eps(i, j, k), u[k]};
            check(got == want, "u" + std::to_string(i) + "*u" + std::to_string(j) + "*");
            // u_i u_j* = -delta_ij u0 ; u_i* u_j = -delta_ij u0*
            check(mul_basis(u[i], uc[j]) == (i == j ? M(B::u0) : Z),
                  "u" + std::to_string(i) + "u" + std::to_string(j) + "*");
            check(mul_basis(uc[i], u[j]) == (i == j ? M(B::u0c) : Z),
                  "u" + std::to_string(i) + "*u" + std::to_string(j));
        }
    for (int i = 1; i <= 3; ++i) {
        check(mul_basis(B::u0, u[i]) == P(u[i]), "u0u" + std::to_string(i));
        check(mul_basis(u[i], B::u0c) == P(u[i]), "u" + std::to_string(i) + "u0*");
        check(mul_basis(B::u0c, uc[i]) == P(uc[i]), "u0*u" + std::to_string(i) + "*");
        check(mul_basis(uc[i], B::u0) == P(uc[i]), "u" + std::to_string(i) + "*u0");
        check(mul_basis(u[i], B::u0) == Z, "u" + std::to_string(i) + "u0");
        check(mul_basis(B::u0, uc[i]) == Z, "u0u" + std::to_string(i) + "*");
        check(mul_basis(uc[i], B::u0c) == Z, "u" + std::to_string(i) + "*u0*");
        check(mul_basis(B::u0c, u[i]) == Z, "u0*u" + std::to_string(i));
    }
    check(mul_basis(B::u0, B::u0c) == Z, "u0u0*");
    check(mul_basis(B::u0c, B::u0) == Z, "u0*u0");
    check(mul_basis(B::u0, B::u0) == P(B::u0), "u0^2");
    check(mul_basis(B::u0c, B::u0c) == P(B::u0c), "u0*^2");
    return v;
}

SplitOctonion e_basis(int a) {
    if (a < 0 || a > 7) throw std::out_of_range("e_basis: index outside 0..7");
    SplitOctonion s;
    auto set = [&s](B b, GaussianRational v) {
        s = s + SplitOctonion::basis(b).scaled(v);
    };
    if (a == 0) { set(B::u0, 1); set(B::u0c, 1); }
    else if (a <= 3) {
        set(spinor_basis(a), 1);
        set(spinor_basis(a + 4), 1);
    } else if (a <= 6) {
        // e_{j+3} = -i (u_j - u_j*)
        set(spinor_basis(a - 3), -kI);
        set(spinor_basis(a + 1), kI);
    } else { // e_7 = -i (u0 - u0*)
        set(B::u0, -kI);
        set(B::u0c, kI);
    }
    return s;
}

std::array<GaussianRational, 8> to_e_coeffs(const SplitOctonion &s) {
    std::array<GaussianRational, 8> e{};
    const GaussianRational neg_halfi = -(kHalf * kI);
    e[0] = (s.coeff(0) + s.coeff(4)) * kHalf;
    e[7] = (s.coeff(4) - s.coeff(0)) * neg_halfi;
    for (int j = 1; j <= 3; ++j) {
        e[static_cast<std::size_t>(j)] = (s.coeff(j) + s.coeff(j + 4)) * kHalf;
        e[static_cast<std::size_t>(j + 3)] = (s.coeff(j + 4) - s.coeff(j)) * neg_halfi;
    }
    return e;
}

SplitOctonion from_e_coeffs(const std::array<GaussianRational, 8> &e) {
    SplitOctonion s;
    for (int a = 0; a < 8; ++a)
        if (!e[static_cast<std::size_t>(a)].is_zero())
            s = s + e_basis(a).scaled(e[static_cast<std::size_t>(a)]);
    return s;
}

std::array<std::array<ETableCell, 8>, 8> derive_e_table() {
    std::array<std::array<ETableCell, 8>, 8> t;
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            ETableCell cell;
            cell.coeffs = to_e_coeffs(e_basis(a) * e_basis(b));
            int nonzero = 0;
            for (int k = 0; k < 8; ++k) {
                const GaussianRational &c = cell.coeffs[static_cast<std::size_t>(k)];
                if (c.is_zero()) continue;
                ++nonzero;
                cell.index = k;
                if (c == GaussianRational::one()) cell.sign = 1;
                else if (c == -GaussianRational::one()) cell.sign = -1;
                else cell.sign = 0;
            }
            cell.single = nonzero == 1 && cell.sign != 0;
            t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = cell;
        }
    return t;
}

AssociativityScan associativity_scan() {
    AssociativityScan scan;
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            for (int c = 0; c < 8; ++c) {
                SplitOctonion x = SplitOctonion::basis(spinor_basis(a));
                SplitOctonion y = SplitOctonion::basis(spinor_basis(b));
                SplitOctonion z = SplitOctonion::basis(spinor_basis(c));
                if ((x * y) * z != x * (y * z)) {
                    if (scan.violations == 0)
                        scan.first_witness = {spinor_basis(a), spinor_basis(b), spinor_basis(c)};
                    ++scan.violations;
                }
            }
    return scan;
}

GMat left_mul_matrix(SplitBasis k) {
    GMat m(8);
    for (int i = 0; i < 8; ++i) {
        BasisProduct p = mul_basis(k, spinor_basis(i));
        if (p.is_zero()) continue;
        m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(spinor_index(p.basis))) =
            GaussianRational(p.sign);
    }
    return m;
}

GMat left_mul_printed(SplitBasis k) {
    switch (k) {
    case B::u0: return from_cells({{1, 1, 1}, {2, 2, 1}, {3, 3, 1}, {4, 4, 1}});
    case B::u1: return from_cells({{3, 8, 1}, {4, 7, -1}, {5, 2, 1}, {6, 1, -1}});
    case B::u2: return from_cells({{2, 8, -1}, {4, 6, 1}, {5, 3, 1}, {7, 1, -1}});
    case B::u3: return from_cells({{2, 7, 1}, {3, 6, -1}, {5, 4, 1}, {8, 1, -1}});
    // the printed starred lists carry the a44 / a64 index slips, kept as-is
    case B::u0c: return from_cells({{4, 4, 1}, {5, 5, 1}, {6, 6, 1}, {7, 7, 1}});
    case B::u1c: return from_cells({{1, 6, 1}, {2, 5, -1}, {6, 4, 1}, {7, 4, -1}});
    case B::u2c: return from_cells({{1, 7, 1}, {3, 5, -1}, {6, 4, -1}, {8, 2, 1}});
    case B::u3c: return from_cells({{1, 8, 1}, {4, 5, -1}, {6, 3, 1}, {7, 2, -1}});
    }
    throw std::out_of_range("left_mul_printed");
}

std::string left_mul_label(SplitBasis k) {
    int i = spinor_index(k);
    if (i < 4) return "Eq.12/U_L" + std::to_string(i);
    return "Eq.13/U_L" + std::to_string(i - 4) + "*";
}

SplitOctonion apply_left(const GMat &m, const SplitOctonion &z) {
    // row i of m expands k*basis_i, so coefficient vectors pick up m^T
    SplitOctonion out;
    for (int j = 0; j < 8; ++j) {
        GaussianRational acc;
        for (int i = 0; i < 8; ++i)
            acc += m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) * z.coeff(i);
        out.coeff_ref(j) = acc;
    }
    return out;
}

GMat u_matrix(int a) {
    if (a < 0 || a > 7) throw std::out_of_range("u_matrix: index outside 0..7");
    if (a <= 3)
        return left_mul_matrix(spinor_basis(a)) + left_mul_matrix(spinor_basis(a + 4));
    return left_mul_matrix(spinor_basis(a - 4)) - left_mul_matrix(spinor_basis(a));
}

GMat u_matrix_printed(int a) {
    GMat z2(2);
    GMat s0 = pauli(0), s1 = pauli(1), s2 = pauli(2), s3 = pauli(3);
    GMat is2 = s2.scaled(kI), mis2 = s2.scaled(-kI);
    switch (a) {
    case 0: return from_blocks({{{{s0, z2, z2, z2}}, {{z2, s0, z2, z2}},
                                 {{z2, z2, s0, z2}}, {{z2, z2, z2, s0}}}});
    case 1: return from_blocks({{{{z2, z2, is2, z2}}, {{z2, z2, z2, is2}},
                                 {{is2, z2, z2, z2}}, {{z2, is2, z2, z2}}}});
    case 2: return from_blocks({{{{z2, z2, z2, s3}}, {{z2, z2, -s3, z2}},
                                 {{z2, s3, z2, z2}}, {{-s3, z2, z2, z2}}}});
    case 3: return from_blocks({{{{z2, z2, z2, s1}}, {{z2, z2, -s1, z2}},
                                 {{z2, s1, z2, z2}}, {{-s1, z2, z2, z2}}}});
    case 4: return from_blocks({{{{s0, z2, z2, z2}}, {{z2, s0, z2, z2}},
                                 {{z2, z2, -s0, z2}}, {{z2, z2, z2, -s0}}}});
    case 5: return from_blocks({{{{z2, z2, is2, z2}}, {{z2, z2, z2, mis2}},
                                 {{is2, z2, z2, z2}}, {{z2, mis2, z2, z2}}}});
    case 6: return from_blocks({{{{z2, z2, z2, -s0}}, {{z2, z2, s0, z2}},
                                 {{z2, s0, z2, z2}}, {{-s0, z2, z2, z2}}}});
    case 7: return from_blocks({{{{z2, z2, z2, is2}}, {{z2, z2, is2, z2}},
                                 {{z2, mis2, z2, z2}}, {{mis2, z2, z2, z2}}}});
    default: throw std::out_of_range("u_matrix_printed: index outside 0..7");
    }
}

GeneratorSet split_generator_set() {
    GeneratorSet g;
    g.label = "Table 1 derived U set";
    g.source = GeneratorSource::split_octonion;
    for (int a = 1; a <= 7; ++a) g.mat(a) = u_matrix(a);
    return g;
}

GeneratorSet eq14_printed_set() {
    GeneratorSet g;
    g.label = "Eq.14 printed blocks";
    g.source = GeneratorSource::fixture;
    for (int a = 1; a <= 7; ++a) g.mat(a) = u_matrix_printed(a);
    return g;
}

} // namespace octoclif
