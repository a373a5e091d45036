#pragma once

#include "octoclif/clifford.hpp"
#include "octoclif/dual_theta.hpp"
#include "octoclif/linear_form.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace octoclif {

using LMat = ExactMatrix<LinearForm>;
using DualScalar = DualTheta<GaussianRational>;
using DualForm = DualTheta<LinearForm>;
using DMat = ExactMatrix<DualScalar>;
using DLMat = ExactMatrix<DualForm>;

/// The seven vector components; normally the pure symbols f_1..f_7, after a
/// rotation linear mixtures of them.
struct ComponentVector {
    std::array<LinearForm, 7> f{};

    static ComponentVector pure_symbols();

    const LinearForm &at(int a) const { return f.at(static_cast<std::size_t>(a - 1)); }
    LinearForm &at(int a) { return f.at(static_cast<std::size_t>(a - 1)); }
};

/// Entrywise constant embeddings between the scalar rings.
LMat embed_linear(const GMat &m);
DLMat embed_dual_form(const GMat &m);
DLMat lift_dual(const LMat &m);
DLMat lift_dual(const DMat &m);

/// X = sum_A f_A U_A over the given generator basis.
LMat assemble_X(const ComponentVector &f, const GeneratorSet &basis);

/// The printed expansion of X, kept verbatim (it is not entrywise equal to
/// the assembled sum, and it fails its own Hermiticity claim in four
/// conjugate cell pairs; both facts are reported, not repaired).
LMat x_printed();

LMat eq21_a_printed(); // 4x4 diagonal block
LMat eq22_b_printed(); // 4x4 off-diagonal block

/// Quadrant split of an 8x8 matrix with the compact-form consistency probe:
/// bottom-right == -top-left and top-right == dagger(bottom-left).
struct BlockDecomposition {
    LMat a;        // top-left
    LMat b;        // bottom-left
    LMat b_dagger; // top-right
    LMat neg_a;    // bottom-right
    bool consistent = false;
};

BlockDecomposition block_decompose(const LMat &x);

/// Two rotation-operator conventions are kept side by side: the stated
/// formula 1 + theta U_k U_l (A) and the bracket form 1 + theta U_kl with
/// U_kl = (1/2i)[U_k, U_l] (B). They differ by a scalar on the theta part;
/// reports label every row with its convention.
enum class Convention { A, B };

std::string convention_name(Convention c);

struct RotationOperator {
    int k = 0, l = 0;
    Convention convention = Convention::A;
    GMat theta_part = GMat(8); // G with R = 1 + theta G
    DMat matrix = DMat(8);
    DMat inverse() const; // 1 - theta G, the exact truncated inverse
};

RotationOperator rotation_operator(int k, int l, Convention c, const GeneratorSet &basis);

/// The printed rotation matrix for the (1,2) plane.
DMat r12_printed();

struct ProjectionResult {
    std::array<DualForm, 7> components{};
    DLMat residual = DLMat(8);
    bool residual_zero = false;
};

ProjectionResult project_components(const DLMat &x, const GeneratorSet &basis);

struct LinearProjection {
    std::array<LinearForm, 7> components{};
    LMat residual = LMat(8);
    bool residual_zero = false;
};

LinearProjection project_components(const LMat &x, const GeneratorSet &basis);

struct RotationOutcome {
    int k = 0, l = 0;
    Convention convention = Convention::A;
    DLMat x_in = DLMat(8);
    DLMat x_out = DLMat(8);
    /// x_in + theta*(G x_in - x_in G); equality with x_out certifies that the
    /// conjugation produced no stray theta^2 residue.
    DLMat first_order_form = DLMat(8);
    bool first_order_exact = false;
    ProjectionResult projected;
};

RotationOutcome rotate(const LMat &x, const RotationOperator &r, const GeneratorSet &basis);

/// trace(x^2) with entry products expanded in the quadratic accumulator.
DualTheta<QuadraticForm> trace_of_square(const DLMat &x);
QuadraticForm trace_of_square(const LMat &x);

/// sum_A c_A^2 for dual-valued components, in the quadratic accumulator.
DualTheta<QuadraticForm> component_square_sum(const std::array<DualForm, 7> &c);

std::vector<std::pair<int, int>> rotation_pairs(); // (k,l), k<l, lexicographic

// ------------------------------------------------------- transformation table

struct TransformRow {
    int k = 0, l = 0;
    std::array<DualForm, 7> images{};
    bool residual_zero = false;

    /// Table cell for component A: g with image f_A + 2*theta*g, or nullopt
    /// when the component is unchanged.
    std::optional<LinearForm> cell(int a) const;
};

struct TransformTable {
    Convention convention = Convention::A;
    std::array<TransformRow, 21> rows{};
};

TransformTable transform_table(Convention c, const GeneratorSet &basis);

/// Verbatim rows of the printed component-transformation table; a blank cell
/// means "unchanged under the transformation".
struct FixtureRow {
    int k = 0, l = 0;
    std::array<std::optional<LinearForm>, 7> cells{};
};

const std::array<FixtureRow, 21> &table2_fixture();

/// The two printed component maps for the (1,2) rotation (they coincide with
/// the printed table's first row; the coincidence is itself a check).
std::array<std::optional<LinearForm>, 7> eq27_printed();

/// Printed first-order increment for the (1,2) rotation: X' = X + 2 theta M.
LMat eq26_printed();

enum class CellClass { match, mismatch, blank_agree };

struct Table2Diff {
    Convention convention = Convention::A;
    struct Cell {
        int k = 0, l = 0, component = 0;
        CellClass cls = CellClass::blank_agree;
        std::optional<LinearForm> derived, fixture;
    };
    std::vector<Cell> cells;
    int matches = 0, mismatches = 0, blank_agrees = 0;
};

Table2Diff compare_table2(const TransformTable &derived,
                          const std::array<FixtureRow, 21> &fixture);

} // namespace octoclif
