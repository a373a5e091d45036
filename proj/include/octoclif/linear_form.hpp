#pragma once

#include "octoclif/gaussian_rational.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>

namespace octoclif {

constexpr int kNumComponents = 7;

/// Formal linear combination c0 + sum_A c_A f_A over the seven real symbols
/// f_1..f_7, with Gaussian-rational coefficients. The ring is deliberately
/// kept linear: a product is only defined when at least one factor is a pure
/// constant. Genuinely quadratic expressions go through QuadraticForm.
class LinearForm {
public:
    LinearForm() = default;
    LinearForm(int n) : c_(n) {}
    LinearForm(GaussianRational c) : c_(std::move(c)) {}

    static LinearForm zero() { return {}; }
    static LinearForm one() { return LinearForm(GaussianRational::one()); }
    static LinearForm constant(GaussianRational c) { return LinearForm(std::move(c)); }

    /// The pure symbol f_A, A in 1..7.
    static LinearForm symbol(int a) {
        LinearForm v;
        v.f_coeff_ref(a) = GaussianRational::one();
        return v;
    }

    const GaussianRational &const_coeff() const { return c_; }

    /// Coefficient of f_A, A in 1..7.
    const GaussianRational &f_coeff(int a) const {
        check_index(a);
        return f_[static_cast<std::size_t>(a - 1)];
    }
    GaussianRational &f_coeff_ref(int a) {
        check_index(a);
        return f_[static_cast<std::size_t>(a - 1)];
    }

    bool has_symbols() const {
        for (const auto &c : f_)
            if (!c.is_zero()) return true;
        return false;
    }

    bool is_zero() const {
        if (!c_.is_zero()) return false;
        for (const auto &c : f_)
            if (!c.is_zero()) return false;
        return true;
    }
    bool is_constant() const { return !has_symbols(); }

    LinearForm operator-() const {
        LinearForm v;
        v.c_ = -c_;
        for (int a = 1; a <= kNumComponents; ++a) v.f_coeff_ref(a) = -f_coeff(a);
        return v;
    }

    LinearForm operator+(const LinearForm &o) const {
        LinearForm v;
        v.c_ = c_ + o.c_;
        for (int a = 1; a <= kNumComponents; ++a)
            v.f_coeff_ref(a) = f_coeff(a) + o.f_coeff(a);
        return v;
    }
    LinearForm operator-(const LinearForm &o) const { return *this + (-o); }

    /// Product; throws if both factors carry f-symbols (the result would leave
    /// the linear ring).
    LinearForm operator*(const LinearForm &o) const {
        if (has_symbols() && o.has_symbols())
            throw std::domain_error("LinearForm: product of two non-constant forms");
        if (o.has_symbols()) return o.scaled(c_);
        return scaled(o.c_);
    }

    LinearForm scaled(const GaussianRational &s) const {
        LinearForm v;
        v.c_ = c_ * s;
        for (int a = 1; a <= kNumComponents; ++a) v.f_coeff_ref(a) = f_coeff(a) * s;
        return v;
    }

    LinearForm &operator+=(const LinearForm &o) { return *this = *this + o; }
    LinearForm &operator-=(const LinearForm &o) { return *this = *this - o; }
    LinearForm &operator*=(const LinearForm &o) { return *this = *this * o; }

    bool operator==(const LinearForm &o) const {
        return c_ == o.c_ && f_ == o.f_;
    }
    bool operator!=(const LinearForm &o) const { return !(*this == o); }

private:
    static void check_index(int a) {
        if (a < 1 || a > kNumComponents)
            throw std::out_of_range("LinearForm: component index outside 1..7");
    }

    GaussianRational c_;
    std::array<GaussianRational, kNumComponents> f_{};
};

inline LinearForm operator*(const GaussianRational &s, const LinearForm &x) {
    return x.scaled(s);
}

/// The f_A are real symbols: conjugation conjugates coefficients only.
inline LinearForm conj(const LinearForm &x) {
    LinearForm v(conj(x.const_coeff()));
    for (int a = 1; a <= kNumComponents; ++a) v.f_coeff_ref(a) = conj(x.f_coeff(a));
    return v;
}
inline bool is_zero(const LinearForm &x) { return x.is_zero(); }

inline GaussianRational linform_coeff(const LinearForm &x, int a) { return x.f_coeff(a); }

/// Quadratic accumulator: q0 + sum l_A f_A + sum_{A<=B} q_AB f_A f_B, keyed by
/// unordered symbol pairs. Only the trace-of-square and sum-of-squares checks
/// need it; it never feeds back into LinearForm.
class QuadraticForm {
public:
    QuadraticForm() = default;

    static QuadraticForm zero() { return {}; }
    static QuadraticForm one() {
        QuadraticForm q;
        q.c_ = GaussianRational::one();
        return q;
    }

    static std::size_t pair_index(int a, int b) {
        if (a > b) std::swap(a, b);
        if (a < 1 || b > kNumComponents)
            throw std::out_of_range("QuadraticForm: symbol pair outside 1..7");
        // position of (a,b), a<=b, in lexicographic order
        std::size_t idx = 0;
        for (int r = 1; r < a; ++r) idx += static_cast<std::size_t>(kNumComponents - r + 1);
        return idx + static_cast<std::size_t>(b - a);
    }

    const GaussianRational &const_coeff() const { return c_; }
    const GaussianRational &lin_coeff(int a) const { return lin_[check(a)]; }
    const GaussianRational &quad_coeff(int a, int b) const { return quad_[pair_index(a, b)]; }

    bool is_zero() const {
        if (!c_.is_zero()) return false;
        for (const auto &v : lin_)
            if (!v.is_zero()) return false;
        for (const auto &v : quad_)
            if (!v.is_zero()) return false;
        return true;
    }

    QuadraticForm operator-() const { return scaled(-GaussianRational::one()); }
    QuadraticForm operator+(const QuadraticForm &o) const {
        QuadraticForm q;
        q.c_ = c_ + o.c_;
        for (std::size_t k = 0; k < lin_.size(); ++k) q.lin_[k] = lin_[k] + o.lin_[k];
        for (std::size_t k = 0; k < quad_.size(); ++k) q.quad_[k] = quad_[k] + o.quad_[k];
        return q;
    }
    QuadraticForm operator-(const QuadraticForm &o) const { return *this + (-o); }
    QuadraticForm &operator+=(const QuadraticForm &o) { return *this = *this + o; }

    QuadraticForm scaled(const GaussianRational &s) const {
        QuadraticForm q;
        q.c_ = c_ * s;
        for (std::size_t k = 0; k < lin_.size(); ++k) q.lin_[k] = lin_[k] * s;
        for (std::size_t k = 0; k < quad_.size(); ++k) q.quad_[k] = quad_[k] * s;
        return q;
    }

    bool operator==(const QuadraticForm &o) const {
        return c_ == o.c_ && lin_ == o.lin_ && quad_ == o.quad_;
    }
    bool operator!=(const QuadraticForm &o) const { return !(*this == o); }

    /// General product of two linear forms.
    friend QuadraticForm quad_mul(const LinearForm &x, const LinearForm &y);

private:
    static std::size_t check(int a) {
        if (a < 1 || a > kNumComponents)
            throw std::out_of_range("QuadraticForm: component index outside 1..7");
        return static_cast<std::size_t>(a - 1);
    }

    GaussianRational c_;
    std::array<GaussianRational, kNumComponents> lin_{};
    std::array<GaussianRational, kNumComponents *(kNumComponents + 1) / 2> quad_{};
};

inline QuadraticForm quad_mul(const LinearForm &x, const LinearForm &y) {
    QuadraticForm q;
    q.c_ = x.const_coeff() * y.const_coeff();
    for (int a = 1; a <= kNumComponents; ++a)
        q.lin_[static_cast<std::size_t>(a - 1)] =
            x.const_coeff() * y.f_coeff(a) + x.f_coeff(a) * y.const_coeff();
    for (int a = 1; a <= kNumComponents; ++a)
        for (int b = 1; b <= kNumComponents; ++b) {
            GaussianRational t = x.f_coeff(a) * y.f_coeff(b);
            if (!t.is_zero()) q.quad_[QuadraticForm::pair_index(a, b)] += t;
        }
    return q;
}

/// A linear form viewed inside the quadratic ring.
inline QuadraticForm lift_quadratic(const LinearForm &x) {
    return quad_mul(x, LinearForm::one());
}

inline bool is_zero(const QuadraticForm &q) { return q.is_zero(); }

} // namespace octoclif
