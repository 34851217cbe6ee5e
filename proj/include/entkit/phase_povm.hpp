#pragma once

#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "entkit/eigen_bridge.hpp"
#include "entkit/errors.hpp"
#include "entkit/matrix.hpp"

namespace entkit {

// Symmetric phase matrix specification: dimension N and one angle per
// index pair (k,l), 1 <= k < l <= N.
struct phase_spec {
    int dim = 2;
    std::map<std::pair<int, int>, double> phases;
};

inline phase_spec single_phase(double phi) {
    return {2, {{{1, 2}, phi}}};
}

inline void check_phase_spec(const phase_spec& spec) {
    if (spec.dim < 2) throw domain_error("phase spec dimension must be at least 2");
    for (const auto& [key, phi] : spec.phases) {
        const auto [k, l] = key;
        if (k < 1 || l <= k || l > spec.dim)
            throw incomplete_spec_error("phase entry for invalid index pair");
        if (!std::isfinite(phi)) throw domain_error("non-finite phase angle");
    }
    const std::size_t want = static_cast<std::size_t>(spec.dim) * (spec.dim - 1) / 2;
    if (spec.phases.size() != want)
        throw incomplete_spec_error("phase spec needs exactly one angle per pair k<l");
}

/// N x N phase matrix: 1 on the diagonal, e^{i phi_{k,l}} above it and the
/// conjugate below. Hermitian by construction.
inline complex_matrix delta(const phase_spec& spec) {
    check_phase_spec(spec);
    complex_matrix out(spec.dim, spec.dim);
    for (int k = 0; k < spec.dim; ++k) out(k, k) = 1.0;
    for (const auto& [key, phi] : spec.phases) {
        const cplx e(std::cos(phi), std::sin(phi));
        out(key.first - 1, key.second - 1) = e;
        out(key.second - 1, key.first - 1) = std::conj(e);
    }
    return out;
}

/// delta with the diagonal removed: only the phase-bearing off-diagonal
/// part survives. Equals delta(spec) - I exactly.
inline complex_matrix delta_tilde(const phase_spec& spec) {
    complex_matrix out = delta(spec);
    for (int k = 0; k < spec.dim; ++k) out(k, k) = 0.0;
    return out;
}

// Per-qubit operator choice for the tensor families. half_pi and pi name
// the phase angle whose off-diagonal matrix realizes the factor.
enum class qubit_setting { half_pi, pi, identity };

/// 2x2 realization: half_pi -> sigma_y, pi -> sigma_x, identity -> I. The
/// raw phase matrices are -sigma_y and -sigma_x; the sign is dropped here
/// because every downstream quantity is a squared magnitude.
inline complex_matrix qubit_op(qubit_setting s) {
    switch (s) {
        case qubit_setting::half_pi: return pauli_y();
        case qubit_setting::pi: return pauli_x();
        default: return identity(2);
    }
}

inline char setting_char(qubit_setting s) {
    switch (s) {
        case qubit_setting::half_pi: return 'Y';
        case qubit_setting::pi: return 'X';
        default: return 'I';
    }
}

// A per-qubit setting list together with its realized 2^m x 2^m matrix.
// indices carries the defining qubit tuple when an enumerator built the
// operator (empty for ad-hoc tensor_operator calls).
struct phase_operator {
    std::vector<qubit_setting> settings;
    complex_matrix matrix;
    std::string label;
    std::vector<int> indices;
};

/// Kron of qubit_op over the settings, qubit 1 leftmost.
inline phase_operator tensor_operator(const std::vector<qubit_setting>& settings) {
    if (settings.empty()) throw domain_error("tensor_operator needs at least one qubit");
    complex_matrix mat = qubit_op(settings[0]);
    std::string label(1, setting_char(settings[0]));
    for (std::size_t j = 1; j < settings.size(); ++j) {
        mat = kron(mat, qubit_op(settings[j]));
        label += setting_char(settings[j]);
    }
    return {settings, std::move(mat), std::move(label), {}};
}

/// Max-norm residual of (1/K) * sum_k delta(2 pi k / K) minus the identity.
/// Equally spaced phases average each off-diagonal e^{i phi} to zero, so
/// the result is rounding noise. Only the qubit case is supported.
inline double povm_resolution_check(int n, int grid_points) {
    if (n != 2) throw unsupported_error("povm_resolution_check supports N=2 only");
    if (grid_points < 2) throw domain_error("need at least two grid points");
    complex_matrix acc(2, 2);
    for (int k = 0; k < grid_points; ++k) {
        const double phi = 2.0 * std::numbers::pi * k / grid_points;
        acc = acc + delta(single_phase(phi));
    }
    return max_abs_diff((1.0 / grid_points) * acc, identity(2));
}

/// Tr(rho * delta(spec)) for a valid density matrix rho. The trace of a
/// Hermitian product is real; the residual imaginary part is checked and
/// discarded.
inline double povm_probability(const complex_matrix& rho, const phase_spec& spec) {
    check_phase_spec(spec);
    if (rho.rows() != rho.cols() || rho.rows() != spec.dim)
        throw shape_error("density matrix dimension does not match phase spec");
    if (max_abs_diff(rho, dagger(rho)) > 1e-10)
        throw domain_error("density matrix is not Hermitian");
    cplx tr = 0.0;
    for (int i = 0; i < rho.rows(); ++i) tr += rho(i, i);
    if (std::abs(tr - 1.0) > 1e-10)
        throw domain_error("density matrix trace is not 1");
    const std::vector<double> ev = hermitian_eigenvalues(rho);
    if (!ev.empty() && ev.front() < -1e-10)
        throw domain_error("density matrix has a negative eigenvalue");

    const complex_matrix d = delta(spec);
    cplx p = 0.0;
    for (int i = 0; i < rho.rows(); ++i)
        for (int j = 0; j < rho.cols(); ++j) p += rho(i, j) * d(j, i);
    if (std::abs(p.imag()) > 1e-10)
        throw domain_error("trace against phase matrix is not real");
    return p.real();
}

} // namespace entkit
