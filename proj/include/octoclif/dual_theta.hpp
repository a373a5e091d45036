#pragma once

#include "octoclif/ring.hpp"

#include <utility>

namespace octoclif {

/// First-order polynomial c0 + c1*theta with theta^2 == 0. Multiplication
/// truncates the theta^2 coefficient by construction, which makes every
/// "first order in theta" statement exact: (a+bt)(c+dt) = ac + (ad+bc)t.
///
/// R is any of the exact scalar rings (GaussianRational, LinearForm, ...).
template <typename R>
class DualTheta {
public:
    DualTheta() = default;
    DualTheta(R c0) : c0_(std::move(c0)) {}
    DualTheta(R c0, R c1) : c0_(std::move(c0)), c1_(std::move(c1)) {}

    static DualTheta zero() { return {}; }
    static DualTheta one() { return DualTheta(R::one()); }
    static DualTheta theta() { return DualTheta(R::zero(), R::one()); }

    const R &c0() const { return c0_; }
    const R &c1() const { return c1_; }

    bool is_zero() const { return detail::is_zero_v(c0_) && detail::is_zero_v(c1_); }

    DualTheta operator-() const { return {-c0_, -c1_}; }

    DualTheta operator+(const DualTheta &o) const { return {c0_ + o.c0_, c1_ + o.c1_}; }
    DualTheta operator-(const DualTheta &o) const { return {c0_ - o.c0_, c1_ - o.c1_}; }
    DualTheta operator*(const DualTheta &o) const {
        return {c0_ * o.c0_, c0_ * o.c1_ + c1_ * o.c0_};
    }

    DualTheta &operator+=(const DualTheta &o) { return *this = *this + o; }
    DualTheta &operator-=(const DualTheta &o) { return *this = *this - o; }
    DualTheta &operator*=(const DualTheta &o) { return *this = *this * o; }

    bool operator==(const DualTheta &o) const { return c0_ == o.c0_ && c1_ == o.c1_; }
    bool operator!=(const DualTheta &o) const { return !(*this == o); }

private:
    R c0_{};
    R c1_{};
};

template <typename R>
DualTheta<R> dual_mul(const DualTheta<R> &x, const DualTheta<R> &y) { return x * y; }

/// theta is a real infinitesimal: conjugation acts on the coefficients only.
template <typename R>
DualTheta<R> conj(const DualTheta<R> &x) {
    return {conj(x.c0()), conj(x.c1())};
}

template <typename R>
bool is_zero(const DualTheta<R> &x) { return x.is_zero(); }

} // namespace octoclif
