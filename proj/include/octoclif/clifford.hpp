#pragma once

#include "octoclif/exact_matrix.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace octoclif {

using GMat = ExactMatrix<GaussianRational>;

/// Pauli matrices sigma^0..sigma^3 (sigma^0 is the 2x2 identity).
GMat pauli(int k);

/// Dirac gamma matrices in the block representation, plus gamma^4 computed
/// as the chain product i*g0*g1*g2*g3. mu in 0..4.
GMat gamma(int mu);

/// The antidiagonal-block matrix the source article prints for gamma^4;
/// gamma(4) must reproduce it entrywise.
GMat gamma4_printed();

/// The seven 8x8 generators assembled from the printed Kronecker formulas
/// (e.g. -i g4 (x) s2), evaluated literally. a in 1..7.
GMat beta_kron(int a);

/// The seven generators assembled verbatim from the printed unit-matrix
/// index expansions, retained typos and all. a in 1..7.
GMat beta_fixture(int a);

enum class GeneratorSource { kronecker, fixture, split_octonion, corrected };

std::string source_name(GeneratorSource s);

/// A family of seven 8x8 Gaussian-rational generator candidates. The three
/// printed constructions and the scalar-corrected set are never merged;
/// every cross-claim between them is an explicit compare operation.
struct GeneratorSet {
    std::string label;
    GeneratorSource source = GeneratorSource::kronecker;
    std::array<GMat, 7> mats{GMat(8), GMat(8), GMat(8), GMat(8), GMat(8), GMat(8), GMat(8)};

    const GMat &mat(int a) const { return mats.at(static_cast<std::size_t>(a - 1)); }
    GMat &mat(int a) { return mats.at(static_cast<std::size_t>(a - 1)); }
};

GeneratorSet kron_generator_set();
GeneratorSet fixture_generator_set();

/// Scalar prefactors that turn the Kronecker set into the given reference
/// set. A generator with no such scalar is flagged uncorrectable and kept
/// as the literal formula value.
struct CorrectionInfo {
    std::array<std::optional<GaussianRational>, 7> scalars;
    std::vector<int> uncorrectable;
};

std::pair<GeneratorSet, CorrectionInfo> corrected_generator_set(const GeneratorSet &reference);

/// The 21 bracket generators (1/2i)[G_a, G_b] for a < b, lexicographic.
std::vector<GMat> bracket_generators(const GeneratorSet &g);

/// Anticommutator census of a candidate set: eta[a][b] with
/// {G_a, G_b} = 2*eta[a][b]*I when that anticommutator is a scalar multiple
/// of the identity, and a recorded non-scalar pair otherwise.
struct SignatureReport {
    std::string label;
    std::array<std::array<std::optional<GaussianRational>, 7>, 7> eta;
    std::vector<std::pair<int, int>> non_scalar_pairs; // 1-based, a <= b
    bool is_diagonal = false;                          // off-diagonals all scalar zero
    std::array<std::optional<GaussianRational>, 7> diagonal_signs;
    std::vector<std::pair<int, int>> mismatches_vs_delta; // eta != delta_ab

    const std::optional<GaussianRational> &eta_at(int a, int b) const {
        return eta.at(static_cast<std::size_t>(a - 1)).at(static_cast<std::size_t>(b - 1));
    }
};

SignatureReport signature_check(const GeneratorSet &g);

struct DiffCell {
    int row = 0, col = 0; // 1-based
    GaussianRational left, right;
};

struct GeneratorDiff {
    int generator = 0;
    std::vector<DiffCell> cells;
    bool equal() const { return cells.empty(); }
};

/// Entrywise comparison of two generator families.
struct DiffReport {
    std::string left_label, right_label;
    std::array<GeneratorDiff, 7> per_generator;
    int num_matching = 0;
    bool all_equal() const { return num_matching == 7; }
    const GeneratorDiff &diff(int a) const {
        return per_generator.at(static_cast<std::size_t>(a - 1));
    }
};

DiffReport compare_constructions(const GeneratorSet &x, const GeneratorSet &y);

std::vector<DiffCell> diff_matrices(const GMat &left, const GMat &right);

/// Rank over the Gaussian rationals of the 7 generators plus their 21
/// brackets, each flattened to a 64-vector. 28 means linear independence.
std::size_t generator_space_rank(const GeneratorSet &g);

} // namespace octoclif
