#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "entkit/eigen_bridge.hpp"
#include "entkit/errors.hpp"
#include "entkit/matrix.hpp"

namespace entkit {

// Qubit 1 is the most significant bit of a basis index: basis label
// |x_1 x_2 ... x_m> maps to the integer x_1*2^(m-1) + ... + x_m.
inline int qubit_bit(int m, int qubit) { return m - qubit; }

inline int pow2(int m) { return 1 << m; }

// Pure m-qubit state. Immutable after construction; the normalized flag
// records whether the squared norm was within 1e-10 of 1 at build time.
class pure_state {
public:
    pure_state(int m, complex_vector amplitudes, bool normalized)
        : m_(m), amplitudes_(std::move(amplitudes)), normalized_(normalized) {}

    int num_qubits() const { return m_; }
    const complex_vector& amplitudes() const { return amplitudes_; }
    const cplx& amplitude(int x) const { return amplitudes_[x]; }
    bool normalized() const { return normalized_; }

    double norm() const {
        double n2 = 0.0;
        for (const cplx& a : amplitudes_.entries()) n2 += std::norm(a);
        return std::sqrt(n2);
    }

    bool operator==(const pure_state&) const = default;

private:
    int m_;
    complex_vector amplitudes_;
    bool normalized_;
};

/// Wraps raw amplitudes as an m-qubit state. With normalize the vector is
/// scaled to unit norm; otherwise it is kept as-is and the normalized flag
/// reflects whether the squared norm is within 1e-10 of 1.
inline pure_state make_state(int m, complex_vector amplitudes, bool normalize) {
    if (m < 1) throw domain_error("state needs at least one qubit");
    if (amplitudes.dim() != pow2(m))
        throw shape_error("amplitude count must be 2^m");
    double n2 = 0.0;
    for (const cplx& a : amplitudes.entries()) n2 += std::norm(a);
    if (n2 == 0.0) throw degenerate_error("all-zero amplitude vector");
    if (normalize) {
        const double scale = 1.0 / std::sqrt(n2);
        for (int x = 0; x < amplitudes.dim(); ++x) amplitudes[x] *= scale;
        return {m, std::move(amplitudes), true};
    }
    return {m, std::move(amplitudes), std::abs(n2 - 1.0) <= 1e-10};
}

inline pure_state basis_state(int m, int x) {
    if (m < 1) throw domain_error("state needs at least one qubit");
    if (x < 0 || x >= pow2(m)) throw domain_error("basis index out of range");
    complex_vector v(pow2(m));
    v[x] = 1.0;
    return {m, std::move(v), true};
}

/// (|0...0> + |1...1>)/sqrt(2)
inline pure_state ghz_state(int m) {
    if (m < 2) throw domain_error("GHZ state needs at least two qubits");
    complex_vector v(pow2(m));
    const double r = 1.0 / std::sqrt(2.0);
    v[0] = r;
    v[pow2(m) - 1] = r;
    return {m, std::move(v), true};
}

/// (1/sqrt(m)) * sum_j |0...1_j...0>
inline pure_state w_state(int m) {
    if (m < 2) throw domain_error("W state needs at least two qubits");
    complex_vector v(pow2(m));
    const double r = 1.0 / std::sqrt(static_cast<double>(m));
    for (int j = 1; j <= m; ++j) v[1 << qubit_bit(m, j)] = r;
    return {m, std::move(v), true};
}

/// Tensor product of m single-qubit states, normalized. factors[j-1] holds
/// the (|0>, |1>) amplitudes of qubit j.
inline pure_state product_state(const std::vector<std::array<cplx, 2>>& factors) {
    const int m = static_cast<int>(factors.size());
    if (m < 1) throw domain_error("product state needs at least one factor");
    complex_vector v(pow2(m));
    for (int x = 0; x < pow2(m); ++x) {
        cplx a = 1.0;
        for (int j = 1; j <= m; ++j)
            a *= factors[j - 1][(x >> qubit_bit(m, j)) & 1];
        v[x] = a;
    }
    return make_state(m, std::move(v), true);
}

/// Component-wise complex conjugation in the computational basis. This is
/// the antiunitary partner used inside every pairwise concurrence term;
/// applying it twice gives back the original state exactly.
inline pure_state conjugate_state(const pure_state& s) {
    complex_vector v = s.amplitudes();
    for (int x = 0; x < v.dim(); ++x) v[x] = std::conj(v[x]);
    return {s.num_qubits(), std::move(v), s.normalized()};
}

/// <a|b> = sum_x conj(a_x) * b_x.
inline cplx inner(const pure_state& a, const complex_vector& b) {
    if (a.amplitudes().dim() != b.dim()) throw shape_error("inner dimension mismatch");
    cplx acc = 0.0;
    for (int x = 0; x < b.dim(); ++x) acc += std::conj(a.amplitude(x)) * b[x];
    return acc;
}

inline std::vector<int> checked_qubit_subset(const pure_state& s,
                                             std::vector<int> qubits,
                                             const char* what) {
    std::sort(qubits.begin(), qubits.end());
    qubits.erase(std::unique(qubits.begin(), qubits.end()), qubits.end());
    if (qubits.empty()) throw domain_error(std::string(what) + ": empty qubit set");
    if (qubits.front() < 1 || qubits.back() > s.num_qubits())
        throw domain_error(std::string(what) + ": qubit index out of range");
    return qubits;
}

inline std::vector<int> complement_qubits(int m, const std::vector<int>& keep) {
    std::vector<int> rest;
    for (int j = 1; j <= m; ++j)
        if (!std::binary_search(keep.begin(), keep.end(), j)) rest.push_back(j);
    return rest;
}

inline int gather_bits(int m, int x, const std::vector<int>& qubits) {
    int out = 0;
    for (int q : qubits) out = (out << 1) | ((x >> qubit_bit(m, q)) & 1);
    return out;
}

/// Density matrix of the kept qubits with the complement traced out.
/// Row/column index bits follow the kept qubits in ascending order.
inline complex_matrix reduced_density(const pure_state& s, std::vector<int> keep) {
    keep = checked_qubit_subset(s, std::move(keep), "reduced_density");
    const int m = s.num_qubits();
    const std::vector<int> rest = complement_qubits(m, keep);
    const int dk = pow2(static_cast<int>(keep.size()));
    const int dr = pow2(static_cast<int>(rest.size()));
    // Regroup amplitudes as psi(kept, rest); rho = sum_r psi(.,r) psi(.,r)^dagger.
    std::vector<std::vector<cplx>> col(dr, std::vector<cplx>(dk));
    for (int x = 0; x < pow2(m); ++x)
        col[gather_bits(m, x, rest)][gather_bits(m, x, keep)] = s.amplitude(x);
    complex_matrix rho(dk, dk);
    for (int r = 0; r < dr; ++r)
        for (int i = 0; i < dk; ++i) {
            if (col[r][i] == 0.0) continue;
            for (int j = 0; j < dk; ++j)
                rho(i, j) += col[r][i] * std::conj(col[r][j]);
        }
    return rho;
}

/// Tr(rho^2), real part. 1 for pure rho.
inline double purity(const complex_matrix& rho) {
    const complex_matrix rho2 = matmul(rho, rho);
    double tr = 0.0;
    for (int i = 0; i < rho2.rows(); ++i) tr += rho2(i, i).real();
    return tr;
}

/// Number of singular values of the reshaped amplitude matrix above tol;
/// 1 means the state is a product across the cut.
inline int schmidt_rank(const pure_state& s, std::vector<int> left, double tol = 1e-10) {
    left = checked_qubit_subset(s, std::move(left), "schmidt_rank");
    const int m = s.num_qubits();
    if (static_cast<int>(left.size()) == m)
        throw domain_error("schmidt_rank: bipartition needs a non-empty right side");
    const std::vector<int> right = complement_qubits(m, left);
    complex_matrix a(pow2(static_cast<int>(left.size())),
                     pow2(static_cast<int>(right.size())));
    for (int x = 0; x < pow2(m); ++x)
        a(gather_bits(m, x, left), gather_bits(m, x, right)) = s.amplitude(x);
    int rank = 0;
    for (double sv : singular_values(a))
        if (sv > tol) ++rank;
    return rank;
}

/// True iff every single-qubit marginal has purity Tr(rho^2) >= 1 - tol.
/// For pure states this is exactly full product structure.
inline bool is_fully_separable(const pure_state& s, double tol = 1e-10) {
    for (int j = 1; j <= s.num_qubits(); ++j)
        if (purity(reduced_density(s, {j})) < 1.0 - tol) return false;
    return true;
}

} // namespace entkit
