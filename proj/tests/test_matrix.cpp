#include "octoclif/clifford.hpp"
#include "octoclif/exact_matrix.hpp"

#include <doctest.h>

#include <random>

using namespace octoclif;

namespace {

std::mt19937_64 rng(0xbead5);

GaussianRational rand_gaussian() {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

GMat rand_matrix(std::size_t n) {
    GMat m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rand_gaussian();
    return m;
}

// independent product oracle: plain triple loop, no shortcuts
GMat slow_mul(const GMat &x, const GMat &y) {
    GMat m(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) {
            GaussianRational acc;
            for (std::size_t k = 0; k < x.size(); ++k) acc += x.at(i, k) * y.at(k, j);
            m.at(i, j) = acc;
        }
    return m;
}

} // namespace

TEST_CASE("matrix product basics") {
    CHECK(mat_mul(pauli(1), pauli(1)) == GMat::identity(2));
    // sigma2 sigma3 = i sigma1, frozen from the entrywise 2x2 expansion
    CHECK(mat_mul(pauli(2), pauli(3)) == pauli(1).scaled(GaussianRational::i()));
    CHECK(mat_mul(pauli(2), pauli(3)) == slow_mul(pauli(2), pauli(3)));
    // unit-matrix composition
    GMat b12 = GMat::unit(8, 0, 1), b23 = GMat::unit(8, 1, 2), b13 = GMat::unit(8, 0, 2);
    CHECK(mat_mul(b12, b23) == b13);
    GMat a(2), b(4);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("unit matrix algebra") {
    // b_ij b_kl = delta_jk b_il, swept exhaustively at n = 4
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k)
                for (std::size_t l = 0; l < 4; ++l) {
                    GMat got = GMat::unit(4, i, j) * GMat::unit(4, k, l);
                    GMat want = j == k ? GMat::unit(4, i, l) : GMat(4);
                    CHECK(got == want);
                }
}

TEST_CASE("kronecker product") {
    CHECK(kron(GMat::identity(4), pauli(0)) == GMat::identity(8));
    CHECK(kron(pauli(0), pauli(0)) == GMat::identity(4));

    GMat g4s0 = kron(gamma(4), pauli(0));
    for (auto [bi, bj] : {std::pair<int, int>{0, 2}, {1, 3}, {2, 0}, {3, 1}})
        for (std::size_t i = 0; i < 2; ++i)
            CHECK(g4s0.at(2 * static_cast<std::size_t>(bi) + i,
                          2 * static_cast<std::size_t>(bj) + i) == GaussianRational::one());
    CHECK(g4s0.at(0, 0) == GaussianRational::zero());
    CHECK(trace(g4s0) == GaussianRational::zero());
}

TEST_CASE("kronecker identities on random matrices") {
    for (int t = 0; t < 20; ++t) {
        GMat a = rand_matrix(2), b = rand_matrix(2), c = rand_matrix(2), d = rand_matrix(2);
        CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
        CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
    }
    // mixed 2x2 / 4x4 factors, the shape every generator formula uses
    for (int t = 0; t < 5; ++t) {
        GMat a = rand_matrix(2), c = rand_matrix(2);
        GMat b = rand_matrix(4), d = rand_matrix(4);
        CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
        CHECK(kron(b, a) * kron(d, c) == kron(b * d, a * c));
    }
}

TEST_CASE("commutator and anticommutator") {
    GMat two_i_s3 = pauli(3).scaled(GaussianRational(Rational(0), Rational(2)));
    CHECK(commutator(pauli(1), pauli(2)) == two_i_s3);
    CHECK(anticommutator(pauli(1), pauli(2)).is_zero());
    GMat x = rand_matrix(4);
    CHECK(commutator(x, x).is_zero());
}

TEST_CASE("trace identities") {
    CHECK(trace(GMat::identity(8)) == GaussianRational(8));
    GMat beta4 = beta_fixture(4);
    CHECK(trace(beta4) == GaussianRational::zero());
    for (int t = 0; t < 10; ++t) {
        GMat x = rand_matrix(8), y = rand_matrix(8);
        CHECK(trace(x * y) == trace(y * x));
        CHECK(trace(commutator(x, y)) == GaussianRational::zero());
    }
}

TEST_CASE("dagger") {
    CHECK(dagger(pauli(2)) == pauli(2));
    GMat i_id = GMat::identity(4).scaled(GaussianRational::i());
    CHECK(dagger(i_id) == -i_id);
    CHECK(dagger(GMat::unit(8, 0, 1)) == GMat::unit(8, 1, 0));
    for (int t = 0; t < 10; ++t) {
        GMat x = rand_matrix(4), y = rand_matrix(4);
        CHECK(dagger(dagger(x)) == x);
        CHECK(dagger(x * y) == dagger(y) * dagger(x));
    }
}

TEST_CASE("hilbert-schmidt inner product") {
    CHECK(hs_inner(GMat::unit(8, 0, 1), GMat::unit(8, 0, 1)) == GaussianRational::one());
    for (int t = 0; t < 10; ++t) {
        GMat x = rand_matrix(4), y = rand_matrix(4);
        CHECK(hs_inner(x, y) == trace(dagger(x) * y));
        CHECK(hs_inner(x, x).im().is_zero());
        CHECK(hs_inner(x, x).re().sign() >= 0);
    }
}

TEST_CASE("exact rank by fraction-free elimination") {
    using Row = std::vector<GaussianRational>;
    GaussianRational one = GaussianRational::one(), two(2);
    CHECK(exact_rank({Row{one, two}, Row{two, GaussianRational(4)}}) == 1);
    CHECK(exact_rank({Row{one, GaussianRational::zero()}, Row{GaussianRational::zero(), one}}) == 2);
    // rank detects a hidden dependency among random-looking rows
    Row r1, r2;
    for (int k = 0; k < 6; ++k) r1.push_back(rand_gaussian());
    for (const auto &v : r1) r2.push_back(v * GaussianRational(Rational(3, 7)));
    Row r3;
    for (int k = 0; k < 6; ++k) r3.push_back(rand_gaussian());
    CHECK(exact_rank({r1, r2, r3}) <= 2);
}
