#pragma once

// Dense complex matrices and vectors sized for small spectral problems.
// Everything is value-semantic; dimensions here never exceed a few hundred,
// so plain O(n^3) arithmetic is deliberate.

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace hexamer {

using Complex = std::complex<double>;
using Cvec = std::vector<Complex>;

class Matrix {
public:
    Matrix() = default;

    explicit Matrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {
        if (n <= 0) throw std::invalid_argument("Matrix: dimension must be positive");
    }

    static Matrix identity(int n) {
        Matrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int dim() const { return n_; }

    Complex& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Complex& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    Matrix adjoint() const {
        Matrix m(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) m(j, i) = std::conj((*this)(i, j));
        return m;
    }

    Matrix operator+(const Matrix& o) const {
        check_same_dim(o);
        Matrix m(n_);
        for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] + o.a_[k];
        return m;
    }

    Matrix operator-(const Matrix& o) const {
        check_same_dim(o);
        Matrix m(n_);
        for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] - o.a_[k];
        return m;
    }

    Matrix operator*(const Matrix& o) const {
        check_same_dim(o);
        Matrix m(n_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                const Complex aik = (*this)(i, k);
                if (aik == Complex{}) continue;
                for (int j = 0; j < n_; ++j) m(i, j) += aik * o(k, j);
            }
        return m;
    }

    friend Matrix operator*(Complex s, const Matrix& m) {
        Matrix r(m.n_);
        for (size_t k = 0; k < m.a_.size(); ++k) r.a_[k] = s * m.a_[k];
        return r;
    }

    friend Matrix operator*(double s, const Matrix& m) { return Complex(s, 0.0) * m; }

    Cvec apply(const Cvec& v) const {
        if (static_cast<int>(v.size()) != n_)
            throw std::invalid_argument("Matrix::apply: size mismatch");
        Cvec w(n_);
        for (int i = 0; i < n_; ++i) {
            Complex s{};
            for (int j = 0; j < n_; ++j) s += (*this)(i, j) * v[j];
            w[i] = s;
        }
        return w;
    }

    Complex trace() const {
        Complex t{};
        for (int i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& z : a_) m = std::max(m, std::abs(z));
        return m;
    }

    double max_imag() const {
        double m = 0.0;
        for (const auto& z : a_) m = std::max(m, std::abs(z.imag()));
        return m;
    }

    double frobenius() const {
        double s = 0.0;
        for (const auto& z : a_) s += std::norm(z);
        return std::sqrt(s);
    }

    // Largest |a_ij - conj(a_ji)|; zero for an exactly Hermitian matrix.
    double hermiticity_error() const {
        double m = 0.0;
        for (int i = 0; i < n_; ++i)
            for (int j = i; j < n_; ++j)
                m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        return m;
    }

    bool is_hermitian(double tol) const { return hermiticity_error() <= tol; }

private:
    void check_same_dim(const Matrix& o) const {
        if (n_ != o.n_) throw std::invalid_argument("Matrix: dimension mismatch");
    }

    int n_ = 0;
    Cvec a_;
};

inline Matrix kron(const Matrix& a, const Matrix& b) {
    const int na = a.dim(), nb = b.dim();
    Matrix m(na * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{}) continue;
            for (int k = 0; k < nb; ++k)
                for (int l = 0; l < nb; ++l) m(i * nb + k, j * nb + l) = aij * b(k, l);
        }
    return m;
}

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

// <a|b>, conjugate-linear in the first argument.
inline Complex inner(const Cvec& a, const Cvec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("inner: size mismatch");
    Complex s{};
    for (size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

inline double norm(const Cvec& v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s);
}

inline void scale(Cvec& v, Complex s) {
    for (auto& z : v) z *= s;
}

inline Cvec normalized(Cvec v) {
    const double n = norm(v);
    if (n == 0.0) throw std::invalid_argument("normalized: zero vector");
    scale(v, Complex(1.0 / n, 0.0));
    return v;
}

}  // namespace hexamer
