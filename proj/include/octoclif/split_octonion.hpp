#pragma once

#include "octoclif/clifford.hpp"
#include "octoclif/exact_matrix.hpp"

#include <array>
#include <string>
#include <vector>

namespace octoclif {

/// The eight split basis symbols in spinor column order; this order fixes
/// row/column indexing for every 8x8 matrix in the library.
enum class SplitBasis { u0, u1, u2, u3, u0c, u1c, u2c, u3c };

constexpr std::array<SplitBasis, 8> kSpinorOrder = {
    SplitBasis::u0, SplitBasis::u1, SplitBasis::u2, SplitBasis::u3,
    SplitBasis::u0c, SplitBasis::u1c, SplitBasis::u2c, SplitBasis::u3c};

/// Row/column order of the printed multiplication table (starred first).
constexpr std::array<SplitBasis, 8> kTableOrder = {
    SplitBasis::u0c, SplitBasis::u1c, SplitBasis::u2c, SplitBasis::u3c,
    SplitBasis::u0, SplitBasis::u1, SplitBasis::u2, SplitBasis::u3};

int spinor_index(SplitBasis b);          // 0..7
SplitBasis spinor_basis(int i);          // inverse
std::string basis_name(SplitBasis b);    // "u0", "u1*", ...
std::string basis_latex(SplitBasis b);   // "u_0", "u_1^*", ...

/// A signed basis symbol or zero; the value of any basis product.
struct BasisProduct {
    int sign = 0; // 0 means the product is zero
    SplitBasis basis = SplitBasis::u0;

    bool is_zero() const { return sign == 0; }
    bool operator==(const BasisProduct &o) const {
        return sign == o.sign && (sign == 0 || basis == o.basis);
    }
};

/// Product of two basis symbols, straight table lookup.
BasisProduct mul_basis(SplitBasis x, SplitBasis y);

/// Verbatim cell of the printed table, row/col in kTableOrder, 0-based.
BasisProduct table_cell(int row, int col);

/// Element of the split-octonion algebra: 8 Gaussian-rational coefficients
/// over the spinor-order basis.
class SplitOctonion {
public:
    SplitOctonion() = default;

    static SplitOctonion basis(SplitBasis b) {
        SplitOctonion s;
        s.c_[static_cast<std::size_t>(spinor_index(b))] = GaussianRational::one();
        return s;
    }

    const GaussianRational &coeff(SplitBasis b) const {
        return c_[static_cast<std::size_t>(spinor_index(b))];
    }
    const GaussianRational &coeff(int i) const { return c_.at(static_cast<std::size_t>(i)); }
    GaussianRational &coeff_ref(int i) { return c_.at(static_cast<std::size_t>(i)); }

    bool is_zero() const {
        for (const auto &c : c_)
            if (!c.is_zero()) return false;
        return true;
    }

    SplitOctonion operator-() const { return scaled(-GaussianRational::one()); }
    SplitOctonion operator+(const SplitOctonion &o) const {
        SplitOctonion s;
        for (std::size_t k = 0; k < 8; ++k) s.c_[k] = c_[k] + o.c_[k];
        return s;
    }
    SplitOctonion operator-(const SplitOctonion &o) const { return *this + (-o); }
    SplitOctonion scaled(const GaussianRational &g) const {
        SplitOctonion s;
        for (std::size_t k = 0; k < 8; ++k) s.c_[k] = c_[k] * g;
        return s;
    }

    /// Bilinear extension of the basis table.
    SplitOctonion operator*(const SplitOctonion &o) const;

    bool operator==(const SplitOctonion &o) const { return c_ == o.c_; }
    bool operator!=(const SplitOctonion &o) const { return !(*this == o); }

private:
    std::array<GaussianRational, 8> c_{};
};

inline SplitOctonion mul(const SplitOctonion &x, const SplitOctonion &y) { return x * y; }

/// Checks every algebra identity the split basis is supposed to satisfy
/// (epsilon/delta products, annihilations, idempotents, antisymmetry)
/// against the table.
struct TableValidation {
    int checks_run = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

TableValidation validate_table();

// ------------------------------------------------------------- e-basis bridge

/// e_a expressed over the split basis (a in 0..7).
SplitOctonion e_basis(int a);

/// Coefficients over e_0..e_7 of a split octonion; exact inverse of e_basis.
std::array<GaussianRational, 8> to_e_coeffs(const SplitOctonion &s);

SplitOctonion from_e_coeffs(const std::array<GaussianRational, 8> &e);

/// One cell of the derived e-basis product table.
struct ETableCell {
    std::array<GaussianRational, 8> coeffs{};
    bool single = false; // exactly one coefficient, equal to +-1
    int sign = 0;
    int index = 0;
};

std::array<std::array<ETableCell, 8>, 8> derive_e_table();

/// Exhaustive (x*y)*z vs x*(y*z) sweep over basis triples.
struct AssociativityScan {
    int violations = 0;
    std::array<SplitBasis, 3> first_witness{};
};

AssociativityScan associativity_scan();

// ------------------------------------------------- left-multiplication layer

/// Matrix of "multiply by basis element k on the left", laid out so that it
/// acts on the formal basis column: row i holds the expansion coefficients
/// of k * basis_i. Coefficient vectors therefore transform by the transpose
/// (see apply_left).
GMat left_mul_matrix(SplitBasis k);

/// The printed index-list version of the same matrix, kept verbatim.
GMat left_mul_printed(SplitBasis k);

std::string left_mul_label(SplitBasis k); // e.g. "Eq.12/U_L1", "Eq.13/U_L1*"

/// Action of a left-multiplication matrix on coefficient vectors.
SplitOctonion apply_left(const GMat &m, const SplitOctonion &z);

/// Derived combination matrices: sums for A = 0..3, differences for 4..7.
GMat u_matrix(int a);

/// The printed 8x8 block matrices for the same combinations.
GMat u_matrix_printed(int a);

/// Derived generators U_1..U_7 rebuilt from the table alone.
GeneratorSet split_generator_set();

/// The printed block matrices as a comparison set (A = 1..7).
GeneratorSet eq14_printed_set();

} // namespace octoclif
