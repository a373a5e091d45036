#pragma once

#include "octoclif/rational.hpp"

namespace octoclif {

/// Exact complex scalar a + b*i with rational parts. This is the ground field
/// for every matrix in the library.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(int n) : re_(n) {}
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational zero() { return {}; }
    static GaussianRational one() { return GaussianRational(1); }
    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational &re() const { return re_; }
    const Rational &im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational operator+(const GaussianRational &o) const {
        return {re_ + o.re_, im_ + o.im_};
    }
    GaussianRational operator-(const GaussianRational &o) const {
        return {re_ - o.re_, im_ - o.im_};
    }
    GaussianRational operator*(const GaussianRational &o) const {
        return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }
    GaussianRational operator/(const GaussianRational &o) const {
        Rational n = o.norm_sq();
        if (n.is_zero())
            throw std::domain_error("GaussianRational: division by zero");
        GaussianRational p = *this * GaussianRational(o.re_, -o.im_);
        return {p.re_ / n, p.im_ / n};
    }

    GaussianRational &operator+=(const GaussianRational &o) { return *this = *this + o; }
    GaussianRational &operator-=(const GaussianRational &o) { return *this = *this - o; }
    GaussianRational &operator*=(const GaussianRational &o) { return *this = *this * o; }

    bool operator==(const GaussianRational &o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussianRational &o) const { return !(*this == o); }

    /// |z|^2 = re^2 + im^2, a nonnegative rational.
    Rational norm_sq() const { return re_ * re_ + im_ * im_; }

    GaussianRational inv() const { return one() / *this; }

private:
    Rational re_;
    Rational im_;
};

inline GaussianRational conj(const GaussianRational &z) {
    return {z.re(), -z.im()};
}
inline bool is_zero(const GaussianRational &z) { return z.is_zero(); }

/// gr_conj is the operation name used by the report layer; same involution.
inline GaussianRational gr_conj(const GaussianRational &z) { return conj(z); }

} // namespace octoclif
