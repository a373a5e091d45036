#include "octoclif/clifford.hpp"
#include "octoclif/split_octonion.hpp"

#include <doctest.h>

using namespace octoclif;

namespace {

const GaussianRational kOne = GaussianRational::one();
const GaussianRational kI = GaussianRational::i();

int eps(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

} // namespace

TEST_CASE("pauli matrices") {
    CHECK(pauli(0) == GMat::identity(2));
    CHECK(pauli(2).at(0, 1) == -kI);
    CHECK(pauli(2).at(1, 0) == kI);
    CHECK(pauli(3).at(0, 0) == kOne);
    CHECK(pauli(3).at(1, 1) == -kOne);
    CHECK_THROWS_AS(pauli(4), std::out_of_range);
}

TEST_CASE("pauli product algebra, exhaustive") {
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            GMat want(2);
            if (a == b) want = GMat::identity(2);
            for (int c = 1; c <= 3; ++c)
                if (eps(a, b, c) != 0)
                    want += pauli(c).scaled(GaussianRational(Rational(0), Rational(eps(a, b, c))));
            CHECK(pauli(a) * pauli(b) == want);
        }
}

TEST_CASE("gamma matrices") {
    GMat g0 = gamma(0);
    CHECK(g0.at(0, 0) == kOne);
    CHECK(g0.at(1, 1) == kOne);
    CHECK(g0.at(2, 2) == -kOne);
    CHECK(g0.at(3, 3) == -kOne);
    // the product chain lands exactly on the printed antidiagonal-block form
    CHECK(gamma(4) == gamma4_printed());
    for (int mu = 0; mu <= 3; ++mu)
        for (int nu = 0; nu <= 3; ++nu) {
            GMat want = GMat(4);
            if (mu == nu) want = GMat::identity(4).scaled(mu == 0 ? GaussianRational(2) : GaussianRational(-2));
            CHECK(anticommutator(gamma(mu), gamma(nu)) == want);
        }
    CHECK_THROWS_AS(gamma(5), std::out_of_range);
}

TEST_CASE("kronecker generator formulas") {
    CHECK(beta_kron(3) == kron(pauli(1), gamma(1)));
    CHECK(beta_kron(4).at(0, 0) == GaussianRational::zero()); // antidiagonal blocks
    CHECK(beta_kron(1).at(0, 5) == -kOne);
}

TEST_CASE("printed generator expansions") {
    CHECK(beta_fixture(4) ==
          kron(gamma(0), pauli(0))); // the printed diagonal equals g0 (x) s0, not g4 (x) s0
    CHECK(beta_fixture(1).at(0, 5) == kOne);
    CHECK(beta_fixture(2).at(7, 1) == GaussianRational::zero()); // list ends at (7,2) instead
    CHECK(beta_fixture(2).at(6, 1) == kOne);
}

TEST_CASE("bracket generators") {
    GeneratorSet g = split_generator_set();
    auto brackets = bracket_generators(g);
    REQUIRE(brackets.size() == 21);
    for (const GMat &m : brackets) CHECK(trace(m).is_zero());
    // (1/2i)[G,G] vanishes
    GMat self = commutator(g.mat(3), g.mat(3)).scaled(GaussianRational(Rational(0), Rational(-1, 2)));
    CHECK(self.is_zero());
}

TEST_CASE("signature of the table-derived set") {
    SignatureReport sig = signature_check(split_generator_set());
    CHECK(sig.is_diagonal);
    CHECK(sig.non_scalar_pairs.empty());
    // squares frozen from the exhaustive product sweep: -1 for 1..3, +1 for 4..7
    for (int a = 1; a <= 7; ++a) {
        REQUIRE(sig.diagonal_signs[static_cast<std::size_t>(a - 1)].has_value());
        GaussianRational want = a <= 3 ? -kOne : kOne;
        CHECK(*sig.diagonal_signs[static_cast<std::size_t>(a - 1)] == want);
    }
    // the printed claim eta = delta fails exactly on the first three diagonals
    std::vector<std::pair<int, int>> want = {{1, 1}, {2, 2}, {3, 3}};
    CHECK(sig.mismatches_vs_delta == want);
}

TEST_CASE("signature of the literal Kronecker formulas") {
    SignatureReport sig = signature_check(kron_generator_set());
    // the mislabeled fourth generator commutes with the first three instead of
    // anticommuting; everything else is clean
    std::vector<std::pair<int, int>> want = {{1, 4}, {2, 4}, {3, 4}};
    CHECK(sig.non_scalar_pairs == want);
    CHECK_FALSE(sig.is_diagonal);
}

TEST_CASE("signature of the printed expansions") {
    SignatureReport sig = signature_check(fixture_generator_set());
    // the typo-bearing second and fifth squares are not scalar at all
    bool two_bad = !sig.eta_at(2, 2).has_value();
    bool five_bad = !sig.eta_at(5, 5).has_value();
    CHECK(two_bad);
    CHECK(five_bad);
}

TEST_CASE("construction comparisons") {
    GeneratorSet kron_set = kron_generator_set();
    GeneratorSet fix_set = fixture_generator_set();
    GeneratorSet split = split_generator_set();

    DiffReport self = compare_constructions(split, split);
    CHECK(self.all_equal());

    DiffReport kf = compare_constructions(kron_set, fix_set);
    CHECK_FALSE(kf.diff(4).equal()); // antidiagonal blocks vs printed diagonal
    CHECK(kf.diff(4).cells.size() == 16);
    CHECK(kf.diff(3).equal());
    CHECK(kf.diff(6).equal());
    CHECK(kf.diff(1).cells.size() == 8); // global sign
    CHECK(kf.diff(2).cells.size() == 2); // the (7,2)/(8,2) slip
    CHECK(kf.diff(5).cells.size() == 6);
    CHECK(kf.diff(7).cells.size() == 8);

    DiffReport fs = compare_constructions(fix_set, split);
    CHECK(fs.diff(1).equal());
    CHECK(fs.diff(4).equal());
    CHECK(fs.diff(2).cells.size() == 2);
    CHECK(fs.diff(5).cells.size() == 6);
    CHECK(fs.diff(7).cells.size() == 8);

    DiffReport ks = compare_constructions(kron_set, split);
    CHECK(ks.num_matching == 5); // all but the first and fourth
    CHECK_FALSE(ks.diff(1).equal());
    CHECK_FALSE(ks.diff(4).equal());
}

TEST_CASE("scalar-corrected set") {
    GeneratorSet split = split_generator_set();
    auto [corr, info] = corrected_generator_set(split);
    CHECK(info.uncorrectable == std::vector<int>{4});
    REQUIRE(info.scalars[0].has_value());
    CHECK(*info.scalars[0] == -kOne);
    for (int a : {2, 3, 5, 6, 7}) {
        REQUIRE(info.scalars[static_cast<std::size_t>(a - 1)].has_value());
        CHECK(*info.scalars[static_cast<std::size_t>(a - 1)] == kOne);
        CHECK(corr.mat(a) == split.mat(a));
    }
    CHECK(corr.mat(1) == split.mat(1));
    CHECK(corr.mat(4) == beta_kron(4));
}

TEST_CASE("28 generators are linearly independent") {
    CHECK(generator_space_rank(split_generator_set()) == 28);
}
