#include "octoclif/dual_theta.hpp"
#include "octoclif/format.hpp"
#include "octoclif/linear_form.hpp"

#include <doctest.h>

#include <random>

using namespace octoclif;

namespace {

std::mt19937_64 rng(0xa11ce);

Rational rand_rational() {
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 12);
    return Rational(num(rng), den(rng));
}

GaussianRational rand_gaussian() { return {rand_rational(), rand_rational()}; }

LinearForm rand_form(bool with_symbols) {
    LinearForm v = LinearForm::constant(rand_gaussian());
    if (with_symbols)
        for (int a = 1; a <= 7; ++a)
            v += LinearForm::symbol(a).scaled(rand_gaussian());
    return v;
}

} // namespace

TEST_CASE("rational normalization") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0, 1));
    CHECK(Rational(0, 7).den() == 1);
    CHECK(Rational(3, -9) == Rational(-1, 3));
    CHECK(Rational(3, -9).den() == 3);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);

    Rational q(14, 21);
    CHECK(normalize(q) == q);
    CHECK(normalize(normalize(q)) == normalize(q));
}

TEST_CASE("rational arithmetic is exact at any magnitude") {
    Int big = 1;
    for (int k = 0; k < 30; ++k) big *= 10;
    Rational a(big, Int(7));
    Rational b(Int(7), big);
    CHECK(a * b == Rational(1));
    Rational sum;
    for (int k = 0; k < 100; ++k) sum += Rational(1, 101);
    CHECK(sum == Rational(100, 101));
}

TEST_CASE("rational ring axioms on random values") {
    for (int t = 0; t < 200; ++t) {
        Rational a = rand_rational(), b = rand_rational(), c = rand_rational();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Rational::zero() == a);
        CHECK(a * Rational::one() == a);
        CHECK(a + (-a) == Rational::zero());
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("gaussian rational conjugation") {
    GaussianRational i = GaussianRational::i();
    CHECK(gr_conj(i) == -i);
    CHECK(gr_conj(GaussianRational::one()) == GaussianRational::one());
    GaussianRational z(Rational(1, 2), Rational(1, 2));
    CHECK(gr_conj(z) == GaussianRational(Rational(1, 2), Rational(-1, 2)));
    for (int t = 0; t < 100; ++t) {
        GaussianRational w = rand_gaussian();
        CHECK(conj(conj(w)) == w);
        CHECK(conj(w * z) == conj(z) * conj(w));
        CHECK(w.norm_sq().sign() >= 0);
    }
}

TEST_CASE("gaussian rational field structure") {
    CHECK(GaussianRational::i() * GaussianRational::i() == -GaussianRational::one());
    for (int t = 0; t < 100; ++t) {
        GaussianRational a = rand_gaussian(), b = rand_gaussian(), c = rand_gaussian();
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
    CHECK_THROWS_AS(GaussianRational::one() / GaussianRational::zero(), std::domain_error);
}

TEST_CASE("dual theta truncated products") {
    using D = DualTheta<GaussianRational>;
    D one = D::one();
    D theta = D::theta();
    CHECK(dual_mul(one + theta, one - theta) == one);
    CHECK(dual_mul(theta, theta) == D::zero());
    D lhs(GaussianRational(2), GaussianRational(3));
    D rhs(GaussianRational(1), GaussianRational(1));
    CHECK(dual_mul(lhs, rhs) == D(GaussianRational(2), GaussianRational(5)));
}

TEST_CASE("dual theta first-order inverse for any slope") {
    using D = DualTheta<GaussianRational>;
    for (int t = 0; t < 100; ++t) {
        GaussianRational m = rand_gaussian();
        D plus(GaussianRational::one(), m);
        D minus(GaussianRational::one(), -m);
        CHECK(plus * minus == D::one());
        CHECK(minus * plus == D::one());
    }
}

TEST_CASE("dual theta ring axioms") {
    using D = DualTheta<GaussianRational>;
    for (int t = 0; t < 100; ++t) {
        D a(rand_gaussian(), rand_gaussian());
        D b(rand_gaussian(), rand_gaussian());
        D c(rand_gaussian(), rand_gaussian());
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * D::one() == a);
    }
}

TEST_CASE("linear form coefficients") {
    LinearForm entry = LinearForm::symbol(1).scaled(GaussianRational::i()) - LinearForm::symbol(5);
    CHECK(linform_coeff(entry, 1) == GaussianRational::i());
    CHECK(linform_coeff(entry, 5) == -GaussianRational::one());
    CHECK(linform_coeff(LinearForm::symbol(4), 3) == GaussianRational::zero());
    CHECK_THROWS_AS(linform_coeff(entry, 0), std::out_of_range);
    CHECK_THROWS_AS(linform_coeff(entry, 8), std::out_of_range);
}

TEST_CASE("linear form stays linear") {
    LinearForm a = rand_form(true);
    LinearForm b = rand_form(true);
    CHECK_THROWS_AS(a * b, std::domain_error);
    // constants multiply freely, from either side
    LinearForm c = LinearForm::constant(rand_gaussian());
    CHECK((c * a).f_coeff(1) == c.const_coeff() * a.f_coeff(1));
    CHECK(a * c == c * a);
}

TEST_CASE("linear form module axioms and conjugation involution") {
    for (int t = 0; t < 100; ++t) {
        LinearForm x = rand_form(true), y = rand_form(true);
        LinearForm a = rand_form(false), b = rand_form(false);
        CHECK(x + y == y + x);
        CHECK(a * (x + y) == a * x + a * y);
        CHECK((a * b) * x == a * (b * x));
        CHECK(conj(conj(x)) == x);
        CHECK(conj(x + y) == conj(x) + conj(y));
        CHECK(conj(a * x) == conj(a) * conj(x));
    }
}

TEST_CASE("quadratic accumulator keyed by unordered pairs") {
    LinearForm f1 = LinearForm::symbol(1), f2 = LinearForm::symbol(2);
    QuadraticForm q = quad_mul(f1 + f2, f1 - f2);
    CHECK(q.quad_coeff(1, 1) == GaussianRational::one());
    CHECK(q.quad_coeff(2, 2) == -GaussianRational::one());
    CHECK(q.quad_coeff(1, 2) == GaussianRational::zero());
    CHECK(q.lin_coeff(1) == GaussianRational::zero());

    // cross terms fold onto the unordered key
    QuadraticForm cross = quad_mul(f1, f2) + quad_mul(f2, f1);
    CHECK(cross.quad_coeff(1, 2) == GaussianRational(2));
    CHECK(cross.quad_coeff(2, 1) == GaussianRational(2));

    QuadraticForm mixed = quad_mul(LinearForm::constant(GaussianRational(3)) + f1, f1);
    CHECK(mixed.lin_coeff(1) == GaussianRational(3));
    CHECK(mixed.quad_coeff(1, 1) == GaussianRational::one());
}

TEST_CASE("scalar text rendering is stable") {
    CHECK(to_text(Rational(-1, 3)) == "-1/3");
    CHECK(to_text(GaussianRational::i()) == "i");
    CHECK(to_text(GaussianRational(Rational(0), Rational(-1))) == "-i");
    CHECK(to_text(GaussianRational(Rational(1), Rational(-1))) == "1-i");
    LinearForm cell = LinearForm::symbol(2) - LinearForm::symbol(5).scaled(GaussianRational::i());
    CHECK(to_text(cell) == "f2 - i f5");
    DualTheta<LinearForm> img(LinearForm::symbol(1), LinearForm::symbol(2).scaled(GaussianRational(2)));
    CHECK(to_text(img) == "f1 + (2f2)θ");
    CHECK(to_json(Rational(1, 2)) == json("1/2"));
    CHECK(to_json(GaussianRational::i()) == json({{"re", "0"}, {"im", "1"}}));
}
