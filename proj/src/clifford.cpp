#include "octoclif/clifford.hpp"

#include <stdexcept>

namespace octoclif {

namespace {

const GaussianRational kOne = GaussianRational::one();
const GaussianRational kI = GaussianRational::i();

GMat from_cells(std::size_t n, std::initializer_list<std::array<int, 3>> cells) {
    GMat m(n);
    for (const auto &c : cells)
        m.at(static_cast<std::size_t>(c[0] - 1), static_cast<std::size_t>(c[1] - 1)) =
            GaussianRational(c[2]);
    return m;
}

} // namespace

GMat pauli(int k) {
    switch (k) {
    case 0: return GMat::identity(2);
    case 1: return from_cells(2, {{1, 2, 1}, {2, 1, 1}});
    case 2: {
        GMat m(2);
        m.at(0, 1) = -kI;
        m.at(1, 0) = kI;
        return m;
    }
    case 3: return from_cells(2, {{1, 1, 1}, {2, 2, -1}});
    default: throw std::out_of_range("pauli: index outside 0..3");
    }
}

GMat gamma(int mu) {
    if (mu == 0) return from_cells(4, {{1, 1, 1}, {2, 2, 1}, {3, 3, -1}, {4, 4, -1}});
    if (mu >= 1 && mu <= 3) {
        GMat m(4);
        GMat s = pauli(mu);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                m.at(i, j + 2) = s.at(i, j);
                m.at(i + 2, j) = -s.at(i, j);
            }
        return m;
    }
    if (mu == 4)
        return (gamma(0) * gamma(1) * gamma(2) * gamma(3)).scaled(kI);
    throw std::out_of_range("gamma: index outside 0..4");
}

GMat gamma4_printed() {
    return from_cells(4, {{1, 3, 1}, {2, 4, 1}, {3, 1, 1}, {4, 2, 1}});
}

GMat beta_kron(int a) {
    switch (a) {
    case 1: return kron(gamma(4), pauli(2)).scaled(-kI);
    case 2: return kron(pauli(1), gamma(3));
    case 3: return kron(pauli(1), gamma(1));
    case 4: return kron(gamma(4), pauli(0));
    case 5: return kron(gamma(3), pauli(2)).scaled(-kI);
    case 6: return kron(gamma(2), pauli(0)).scaled(-kI);
    case 7: return kron(gamma(1), pauli(2)).scaled(-kI);
    default: throw std::out_of_range("beta_kron: index outside 1..7");
    }
}

GMat beta_fixture(int a) {
    switch (a) {
    case 1:
        return from_cells(8, {{1, 6, 1}, {2, 5, -1}, {3, 8, 1}, {4, 7, -1},
                              {5, 2, 1}, {6, 1, -1}, {7, 4, 1}, {8, 3, -1}});
    case 2:
        // trailing cell is (7,2) in the printed list, not (8,2)
        return from_cells(8, {{1, 7, 1}, {2, 8, -1}, {3, 5, -1}, {4, 6, 1},
                              {5, 3, 1}, {6, 4, -1}, {7, 1, -1}, {7, 2, 1}});
    case 3:
        return from_cells(8, {{1, 8, 1}, {2, 7, 1}, {3, 6, -1}, {4, 5, -1},
                              {5, 4, 1}, {6, 3, 1}, {7, 2, -1}, {8, 1, -1}});
    case 4:
        return from_cells(8, {{1, 1, 1}, {2, 2, 1}, {3, 3, 1}, {4, 4, 1},
                              {5, 5, -1}, {6, 6, -1}, {7, 7, -1}, {8, 8, -1}});
    case 5:
        return from_cells(8, {{1, 6, 1}, {2, 5, -1}, {3, 7, -1}, {4, 6, 1},
                              {5, 2, 1}, {6, 1, -1}, {7, 4, -1}, {8, 3, 1}});
    case 6:
        return from_cells(8, {{1, 7, -1}, {2, 8, -1}, {3, 5, 1}, {4, 6, 1},
                              {5, 3, 1}, {6, 4, 1}, {7, 1, -1}, {8, 2, -1}});
    case 7:
        return from_cells(8, {{1, 8, 1}, {2, 7, -1}, {3, 6, 1}, {4, 5, -1},
                              {5, 4, -1}, {6, 3, 1}, {7, 2, -1}, {8, 1, 1}});
    default: throw std::out_of_range("beta_fixture: index outside 1..7");
    }
}

std::string source_name(GeneratorSource s) {
    switch (s) {
    case GeneratorSource::kronecker: return "kronecker";
    case GeneratorSource::fixture: return "fixture";
    case GeneratorSource::split_octonion: return "split";
    case GeneratorSource::corrected: return "corrected";
    }
    return "?";
}

GeneratorSet kron_generator_set() {
    GeneratorSet g;
    g.label = "Eq.4 Kronecker formulas";
    g.source = GeneratorSource::kronecker;
    for (int a = 1; a <= 7; ++a) g.mat(a) = beta_kron(a);
    return g;
}

GeneratorSet fixture_generator_set() {
    GeneratorSet g;
    g.label = "Eq.4 printed expansions";
    g.source = GeneratorSource::fixture;
    for (int a = 1; a <= 7; ++a) g.mat(a) = beta_fixture(a);
    return g;
}

std::pair<GeneratorSet, CorrectionInfo> corrected_generator_set(const GeneratorSet &reference) {
    GeneratorSet g;
    g.label = "scalar-corrected Kronecker";
    g.source = GeneratorSource::corrected;
    CorrectionInfo info;
    for (int a = 1; a <= 7; ++a) {
        GMat k = beta_kron(a);
        const GMat &ref = reference.mat(a);
        std::optional<GaussianRational> scalar;
        for (std::size_t i = 0; i < 8 && !scalar; ++i)
            for (std::size_t j = 0; j < 8; ++j)
                if (!k.at(i, j).is_zero()) {
                    scalar = ref.at(i, j) / k.at(i, j);
                    break;
                }
        if (scalar && !scalar->is_zero() && k.scaled(*scalar) == ref) {
            g.mat(a) = k.scaled(*scalar);
            info.scalars[static_cast<std::size_t>(a - 1)] = *scalar;
        } else {
            g.mat(a) = k;
            info.uncorrectable.push_back(a);
        }
    }
    return {g, info};
}

std::vector<GMat> bracket_generators(const GeneratorSet &g) {
    const GaussianRational half_over_i(Rational(0), Rational(-1, 2)); // 1/(2i)
    std::vector<GMat> out;
    out.reserve(21);
    for (int a = 1; a <= 7; ++a)
        for (int b = a + 1; b <= 7; ++b)
            out.push_back(commutator(g.mat(a), g.mat(b)).scaled(half_over_i));
    return out;
}

SignatureReport signature_check(const GeneratorSet &g) {
    SignatureReport r;
    r.label = g.label;
    const GMat id = GMat::identity(8);
    bool diag = true;
    for (int a = 1; a <= 7; ++a)
        for (int b = a; b <= 7; ++b) {
            GMat anti = anticommutator(g.mat(a), g.mat(b));
            auto [is_scalar, twice_eta] = scalar_multiple_of_identity(anti);
            std::optional<GaussianRational> eta;
            if (is_scalar) eta = twice_eta / GaussianRational(2);
            else r.non_scalar_pairs.emplace_back(a, b);
            r.eta[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = eta;
            r.eta[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a - 1)] = eta;
            if (a != b && (!eta || !eta->is_zero())) diag = false;
            const GaussianRational delta = a == b ? kOne : GaussianRational::zero();
            if (!eta || *eta != delta) r.mismatches_vs_delta.emplace_back(a, b);
            if (a == b) r.diagonal_signs[static_cast<std::size_t>(a - 1)] = eta;
        }
    r.is_diagonal = diag;
    return r;
}

std::vector<DiffCell> diff_matrices(const GMat &left, const GMat &right) {
    std::vector<DiffCell> cells;
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < left.size(); ++j)
            if (left.at(i, j) != right.at(i, j))
                cells.push_back({static_cast<int>(i + 1), static_cast<int>(j + 1),
                                 left.at(i, j), right.at(i, j)});
    return cells;
}

DiffReport compare_constructions(const GeneratorSet &x, const GeneratorSet &y) {
    DiffReport r;
    r.left_label = x.label;
    r.right_label = y.label;
    for (int a = 1; a <= 7; ++a) {
        GeneratorDiff d;
        d.generator = a;
        d.cells = diff_matrices(x.mat(a), y.mat(a));
        if (d.equal()) ++r.num_matching;
        r.per_generator[static_cast<std::size_t>(a - 1)] = std::move(d);
    }
    return r;
}

std::size_t generator_space_rank(const GeneratorSet &g) {
    std::vector<std::vector<GaussianRational>> rows;
    rows.reserve(28);
    auto push = [&rows](const GMat &m) {
        std::vector<GaussianRational> v;
        v.reserve(64);
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) v.push_back(m.at(i, j));
        rows.push_back(std::move(v));
    };
    for (int a = 1; a <= 7; ++a) push(g.mat(a));
    for (const GMat &m : bracket_generators(g)) push(m);
    return exact_rank(std::move(rows));
}

} // namespace octoclif
