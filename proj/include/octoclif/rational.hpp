#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace octoclif {

/// Arbitrary-precision integer. All scalar rings sit on top of this so that
/// intermediate trace/product sums can never overflow.
using Int = boost::multiprecision::cpp_int;

/// Exact rational p/q kept in canonical form: gcd(|p|,q) = 1, q > 0,
/// zero stored as 0/1. Equality is structural on the canonical form.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}
    Rational(Int n) : num_(std::move(n)), den_(1) {}
    Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
    Rational(int n, int d) : num_(n), den_(d) { reduce(); }

    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }

    const Int &num() const { return num_; }
    const Int &den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const { return raw(-num_, den_); }

    Rational operator+(const Rational &o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational &o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational &o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    Rational operator/(const Rational &o) const {
        if (o.num_ == 0)
            throw std::domain_error("Rational: division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }

    Rational &operator+=(const Rational &o) { return *this = *this + o; }
    Rational &operator-=(const Rational &o) { return *this = *this - o; }
    Rational &operator*=(const Rational &o) { return *this = *this * o; }

    bool operator==(const Rational &o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational &o) const { return !(*this == o); }

    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

private:
    static Rational raw(Int n, Int d) {
        Rational r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }

    void reduce() {
        if (den_ == 0)
            throw std::invalid_argument("Rational: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        if (num_ == 0) { den_ = 1; return; }
        Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    Int num_;
    Int den_;
};

/// Re-canonicalises a rational. Values are canonical by construction, so this
/// is the identity on any reachable value; it exists so canonical-form
/// idempotence is testable as a named operation.
inline Rational normalize(const Rational &q) { return Rational(q.num(), q.den()); }

inline Rational conj(const Rational &q) { return q; }
inline bool is_zero(const Rational &q) { return q.is_zero(); }

} // namespace octoclif
