#pragma once

#include "octoclif/gaussian_rational.hpp"
#include "octoclif/ring.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace octoclif {

/// Dense square matrix over an exact scalar ring R. Sizes here are tiny
/// (2, 4 or 8), so storage is a flat row-major vector and every operation is
/// a straightforward exact loop. Matrices are value types; operations never
/// mutate their inputs.
template <typename R>
class ExactMatrix {
public:
    explicit ExactMatrix(std::size_t n) : n_(n), e_(n * n) {}

    static ExactMatrix zero(std::size_t n) { return ExactMatrix(n); }

    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = R::one();
        return m;
    }

    /// Matrix with a single 1 at (i, j); the b_ij / a_ij building block.
    static ExactMatrix unit(std::size_t n, std::size_t i, std::size_t j) {
        ExactMatrix m(n);
        m.at(i, j) = R::one();
        return m;
    }

    std::size_t size() const { return n_; }

    R &at(std::size_t i, std::size_t j) { return e_[index(i, j)]; }
    const R &at(std::size_t i, std::size_t j) const { return e_[index(i, j)]; }

    bool is_zero() const {
        for (const R &x : e_)
            if (!detail::is_zero_v(x)) return false;
        return true;
    }

    ExactMatrix operator-() const {
        ExactMatrix m(n_);
        for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = -e_[k];
        return m;
    }

    ExactMatrix operator+(const ExactMatrix &o) const {
        check_same(o);
        ExactMatrix m(n_);
        for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] + o.e_[k];
        return m;
    }

    ExactMatrix operator-(const ExactMatrix &o) const {
        check_same(o);
        ExactMatrix m(n_);
        for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] - o.e_[k];
        return m;
    }

    ExactMatrix operator*(const ExactMatrix &o) const {
        check_same(o);
        ExactMatrix m(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k) {
                const R &a = at(i, k);
                if (detail::is_zero_v(a)) continue;
                for (std::size_t j = 0; j < n_; ++j)
                    m.at(i, j) += a * o.at(k, j);
            }
        return m;
    }

    ExactMatrix scaled(const R &s) const {
        ExactMatrix m(n_);
        for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] * s;
        return m;
    }

    ExactMatrix &operator+=(const ExactMatrix &o) { return *this = *this + o; }
    ExactMatrix &operator-=(const ExactMatrix &o) { return *this = *this - o; }

    bool operator==(const ExactMatrix &o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const ExactMatrix &o) const { return !(*this == o); }

    ExactMatrix transpose() const {
        ExactMatrix m(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    R trace() const {
        R t = R::zero();
        for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
        return t;
    }

    /// Entrywise conversion into another scalar ring.
    template <typename S, typename F>
    ExactMatrix<S> map(F f) const {
        ExactMatrix<S> m(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) m.at(i, j) = f(at(i, j));
        return m;
    }

    /// The bn x bn sub-block with top-left corner (r0, c0).
    ExactMatrix block(std::size_t r0, std::size_t c0, std::size_t bn) const {
        if (r0 + bn > n_ || c0 + bn > n_)
            throw std::invalid_argument("ExactMatrix: block out of range");
        ExactMatrix m(bn);
        for (std::size_t i = 0; i < bn; ++i)
            for (std::size_t j = 0; j < bn; ++j) m.at(i, j) = at(r0 + i, c0 + j);
        return m;
    }

private:
    std::size_t index(std::size_t i, std::size_t j) const {
        if (i >= n_ || j >= n_)
            throw std::out_of_range("ExactMatrix: index out of range");
        return i * n_ + j;
    }
    void check_same(const ExactMatrix &o) const {
        if (n_ != o.n_)
            throw std::invalid_argument("ExactMatrix: dimension mismatch");
    }

    std::size_t n_;
    std::vector<R> e_;
};

template <typename R>
ExactMatrix<R> operator*(const R &s, const ExactMatrix<R> &m) { return m.scaled(s); }

template <typename R>
ExactMatrix<R> mat_mul(const ExactMatrix<R> &x, const ExactMatrix<R> &y) { return x * y; }

/// Standard Kronecker product: block (i, j) of the result is x[i][j] * y.
template <typename R>
ExactMatrix<R> kron(const ExactMatrix<R> &x, const ExactMatrix<R> &y) {
    const std::size_t m = x.size(), n = y.size();
    ExactMatrix<R> out(m * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const R &s = x.at(i, j);
            if (is_zero(s)) continue;
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    out.at(i * n + k, j * n + l) = s * y.at(k, l);
        }
    return out;
}

template <typename R>
ExactMatrix<R> commutator(const ExactMatrix<R> &x, const ExactMatrix<R> &y) {
    return x * y - y * x;
}

template <typename R>
ExactMatrix<R> anticommutator(const ExactMatrix<R> &x, const ExactMatrix<R> &y) {
    return x * y + y * x;
}

/// Conjugate transpose. Requires a ring with a conjugation involution.
template <typename R>
ExactMatrix<R> dagger(const ExactMatrix<R> &x) {
    ExactMatrix<R> m(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) m.at(j, i) = conj(x.at(i, j));
    return m;
}

template <typename R>
R trace(const ExactMatrix<R> &x) { return x.trace(); }

/// Hilbert-Schmidt inner product trace(dagger(x) * y).
template <typename R>
R hs_inner(const ExactMatrix<R> &x, const ExactMatrix<R> &y) {
    if (x.size() != y.size())
        throw std::invalid_argument("hs_inner: dimension mismatch");
    R t = R::zero();
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) t += conj(x.at(i, j)) * y.at(i, j);
    return t;
}

/// Checks whether x == s * identity for some scalar s; returns the scalar.
template <typename R>
std::pair<bool, R> scalar_multiple_of_identity(const ExactMatrix<R> &x) {
    const R &s = x.at(0, 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (i == j ? x.at(i, j) != s : !is_zero(x.at(i, j)))
                return {false, R::zero()};
        }
    return {true, s};
}

/// Exact rank of a rectangular Gaussian-rational matrix by fraction-free
/// (Bareiss) elimination. Rows are vectors, e.g. vectorised 8x8 matrices.
inline std::size_t exact_rank(std::vector<std::vector<GaussianRational>> rows) {
    if (rows.empty()) return 0;
    const std::size_t nr = rows.size(), nc = rows[0].size();
    GaussianRational prev = GaussianRational::one();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < nc && rank < nr; ++col) {
        std::size_t pivot = rank;
        while (pivot < nr && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == nr) continue;
        std::swap(rows[rank], rows[pivot]);
        const GaussianRational p = rows[rank][col];
        for (std::size_t i = rank + 1; i < nr; ++i) {
            const GaussianRational m = rows[i][col];
            for (std::size_t j = col; j < nc; ++j)
                rows[i][j] = (p * rows[i][j] - m * rows[rank][j]) / prev;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

} // namespace octoclif
