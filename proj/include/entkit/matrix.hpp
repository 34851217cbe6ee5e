#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "entkit/errors.hpp"

namespace entkit {

using cplx = std::complex<double>;

// Default cap on any matrix dimension produced by kron (2^12).
inline constexpr std::size_t default_dim_cap = 4096;

inline bool finite(cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Dense row-major complex matrix. Values are immutable in spirit: library
// code builds a matrix, hands it out by value, and never mutates shared
// instances, so concurrent reads are safe.
class complex_matrix {
public:
    complex_matrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(check_dims(rows, cols)) {}

    complex_matrix(int rows, int cols, std::vector<cplx> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        check_dims(rows, cols);
        if (entries_.size() != static_cast<std::size_t>(rows_) * cols_)
            throw shape_error("matrix entries length does not match rows*cols");
        for (const cplx& z : entries_)
            if (!finite(z)) throw domain_error("non-finite matrix entry");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const cplx& operator()(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }
    cplx& operator()(int i, int j) {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }

    const std::vector<cplx>& entries() const { return entries_; }

    bool operator==(const complex_matrix&) const = default;

private:
    static std::size_t check_dims(int rows, int cols) {
        if (rows < 1 || cols < 1) throw shape_error("matrix dimensions must be positive");
        return static_cast<std::size_t>(rows) * cols;
    }

    int rows_;
    int cols_;
    std::vector<cplx> entries_;
};

// Fixed-length complex vector.
class complex_vector {
public:
    explicit complex_vector(int dim) : entries_(check_dim(dim)) {}

    explicit complex_vector(std::vector<cplx> entries) : entries_(std::move(entries)) {
        check_dim(static_cast<int>(entries_.size()));
        for (const cplx& z : entries_)
            if (!finite(z)) throw domain_error("non-finite vector entry");
    }

    int dim() const { return static_cast<int>(entries_.size()); }

    const cplx& operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    cplx& operator[](int i) { return entries_[static_cast<std::size_t>(i)]; }

    const std::vector<cplx>& entries() const { return entries_; }

    bool operator==(const complex_vector&) const = default;

private:
    static std::size_t check_dim(int dim) {
        if (dim < 1) throw shape_error("vector dimension must be positive");
        return static_cast<std::size_t>(dim);
    }

    std::vector<cplx> entries_;
};

inline complex_matrix identity(int n) {
    complex_matrix id(n, n);
    for (int i = 0; i < n; ++i) id(i, i) = 1.0;
    return id;
}

inline complex_matrix pauli_x() {
    return {2, 2, {0.0, 1.0, 1.0, 0.0}};
}

inline complex_matrix pauli_y() {
    return {2, 2, {0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0}};
}

inline complex_matrix pauli_z() {
    return {2, 2, {1.0, 0.0, 0.0, -1.0}};
}

/// Kronecker product. Entry ((ia*b.rows+ib),(ja*b.cols+jb)) = a(ia,ja)*b(ib,jb).
/// Throws size_limit_error when a result dimension would exceed dim_cap.
inline complex_matrix kron(const complex_matrix& a, const complex_matrix& b,
                           std::size_t dim_cap = default_dim_cap) {
    const std::size_t rr = static_cast<std::size_t>(a.rows()) * b.rows();
    const std::size_t rc = static_cast<std::size_t>(a.cols()) * b.cols();
    if (rr > dim_cap || rc > dim_cap)
        throw size_limit_error("kron result dimension exceeds cap");
    complex_matrix out(static_cast<int>(rr), static_cast<int>(rc));
    for (int ia = 0; ia < a.rows(); ++ia)
        for (int ja = 0; ja < a.cols(); ++ja) {
            const cplx f = a(ia, ja);
            if (f == 0.0) continue;
            for (int ib = 0; ib < b.rows(); ++ib)
                for (int jb = 0; jb < b.cols(); ++jb)
                    out(ia * b.rows() + ib, ja * b.cols() + jb) = f * b(ib, jb);
        }
    return out;
}

/// Conjugate transpose.
inline complex_matrix dagger(const complex_matrix& a) {
    complex_matrix out(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out(j, i) = std::conj(a(i, j));
    return out;
}

inline complex_matrix matmul(const complex_matrix& a, const complex_matrix& b) {
    if (a.cols() != b.rows()) throw shape_error("matmul inner dimensions differ");
    complex_matrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const cplx f = a(i, k);
            if (f == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j)
                out(i, j) += f * b(k, j);
        }
    return out;
}

inline complex_vector matvec(const complex_matrix& a, const complex_vector& v) {
    if (a.cols() != v.dim()) throw shape_error("matvec dimensions differ");
    complex_vector out(a.rows());
    for (int i = 0; i < a.rows(); ++i) {
        cplx acc = 0.0;
        for (int j = 0; j < a.cols(); ++j) acc += a(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

inline complex_matrix operator+(const complex_matrix& a, const complex_matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw shape_error("matrix addition shape mismatch");
    complex_matrix out = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
    return out;
}

inline complex_matrix operator-(const complex_matrix& a, const complex_matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw shape_error("matrix subtraction shape mismatch");
    complex_matrix out = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
    return out;
}

inline complex_matrix operator*(cplx s, const complex_matrix& a) {
    complex_matrix out = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) *= s;
    return out;
}

// Max-norm: largest entry modulus.
inline double max_abs(const complex_matrix& a) {
    double best = 0.0;
    for (const cplx& z : a.entries()) best = std::max(best, std::abs(z));
    return best;
}

inline double max_abs_diff(const complex_matrix& a, const complex_matrix& b) {
    return max_abs(a - b);
}

/// True iff max-norm of (a† a - I) is at most tol. Non-square input is a
/// shape error.
inline bool is_unitary(const complex_matrix& a, double tol = 1e-12) {
    if (a.rows() != a.cols()) throw shape_error("is_unitary requires a square matrix");
    return max_abs_diff(matmul(dagger(a), a), identity(a.rows())) <= tol;
}

// Debug text format: one row per line, tab-separated "re+imi" entries.
// Not a stability contract.
inline std::string to_debug_text(const complex_matrix& a) {
    std::string out;
    char buf[64];
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            const cplx& z = a(i, j);
            std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
            out += buf;
            out += (j + 1 < a.cols()) ? '\t' : '\n';
        }
    }
    return out;
}

} // namespace entkit
