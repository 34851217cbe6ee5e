#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "entkit/concurrence.hpp"
#include "entkit/errors.hpp"
#include "entkit/matrix.hpp"
#include "entkit/state.hpp"

namespace entkit {

// The two written forms of the block gate: plain diagonal 2x2 blocks, or
// anti-diagonal blocks followed by a swap. Both land on the same matrix;
// the tag records which construction was requested.
enum class entangler_branch { diagonal_blocks, anti_diagonal_blocks };

struct entangler_matrix {
    int m = 1;
    entangler_branch branch = entangler_branch::diagonal_blocks;
    std::vector<cplx> alphas;
    complex_matrix matrix{1, 1};
    bool unitary = false;
};

/// Assembles the 2^m x 2^m block gate from target coefficients. Block x
/// holds alpha_{2x} and alpha_{2x+1}; the anti-diagonal branch places them
/// off-diagonal and multiplies by the swap, which restores the diagonal.
/// strict insists every |alpha| be 1 within 1e-10 (i.e. a genuine gate).
inline entangler_matrix build_entangler(int m, const std::vector<cplx>& alphas,
                                        entangler_branch branch,
                                        bool strict = true) {
    if (m < 1) throw domain_error("entangler needs at least one qubit");
    const int dim = pow2(m);
    if (static_cast<int>(alphas.size()) != dim)
        throw shape_error("entangler needs exactly 2^m coefficients");
    std::string offenders;
    for (std::size_t x = 0; x < alphas.size(); ++x) {
        if (!finite(alphas[x])) throw domain_error("non-finite entangler coefficient");
        if (strict && std::abs(std::abs(alphas[x]) - 1.0) > 1e-10) {
            if (!offenders.empty()) offenders += ", ";
            offenders += std::to_string(x);
        }
    }
    if (!offenders.empty()) {
        const bool several = offenders.find(',') != std::string::npos;
        throw amplitude_error((several ? "coefficients " : "coefficient ") +
                              offenders +
                              (several ? " do not have unit modulus"
                                       : " does not have unit modulus"));
    }

    complex_matrix z(dim, dim);
    for (int x = 0; x < dim / 2; ++x) {
        const cplx a = alphas[2 * x];
        const cplx b = alphas[2 * x + 1];
        if (branch == entangler_branch::diagonal_blocks) {
            z(2 * x, 2 * x) = a;
            z(2 * x + 1, 2 * x + 1) = b;
        } else {
            // u = [[0, a], [b, 0]], s = [[0, 1], [1, 0]]; block = u * s
            const complex_matrix u(2, 2, {0.0, a, b, 0.0});
            const complex_matrix s(2, 2, {0.0, 1.0, 1.0, 0.0});
            const complex_matrix block = matmul(u, s);
            z(2 * x, 2 * x) = block(0, 0);
            z(2 * x, 2 * x + 1) = block(0, 1);
            z(2 * x + 1, 2 * x) = block(1, 0);
            z(2 * x + 1, 2 * x + 1) = block(1, 1);
        }
    }
    const bool unitary = is_unitary(z, 1e-10);
    return {m, branch, alphas, std::move(z), unitary};
}

/// Hadamard on every qubit of |0...0>: the uniform superposition with all
/// amplitudes 2^{-m/2}.
inline pure_state hadamard_input(int m) {
    if (m < 1) throw domain_error("state needs at least one qubit");
    const double amp = std::sqrt(std::ldexp(1.0, -m));
    complex_vector v(pow2(m));
    for (int x = 0; x < v.dim(); ++x) v[x] = amp;
    return {m, std::move(v), true};
}

/// The gate applied to the uniform superposition: amplitude x comes out as
/// alpha_x * 2^{-m/2}. Unitary gates transport amplitudes untouched; a
/// non-unitary coefficient list yields a renormalized state instead.
inline pure_state apply_entangler(const entangler_matrix& z) {
    const complex_vector out = matvec(z.matrix, hadamard_input(z.m).amplitudes());
    return make_state(z.m, out, !z.unitary);
}

/// Controlled phase gate from its Pauli-z form:
/// (I(x)I + I(x)Z + Z(x)I - Z(x)Z) / 2 = diag(1, 1, 1, -1).
inline complex_matrix cz_gate() {
    const complex_matrix i2 = identity(2);
    const complex_matrix zz = pauli_z();
    const complex_matrix sum =
        kron(i2, i2) + kron(i2, zz) + kron(zz, i2) - kron(zz, zz);
    return 0.5 * sum;
}

struct entangler_verification {
    entangler_matrix entangler;
    concurrence_report report;
    class_tag condition_tag;
    bool condition_holds = false;
};

/// Builds the gate strictly, drives it through the uniform superposition,
/// classifies the output, and reads off whether the requested family's
/// aggregate clears the tolerance.
inline entangler_verification verify_entangler(
    int m, const std::vector<cplx>& alphas, class_tag tag, double tol = 1e-10,
    normalization_mode policy = normalization_mode::canonical_unit,
    entangler_branch branch = entangler_branch::diagonal_blocks,
    ghz_m1_enumeration mode = ghz_m1_enumeration::paper) {
    if (m < 2) throw domain_error("verification needs at least two qubits");
    if (tag.m != m) throw shape_error("class tag qubit count does not match m");
    check_class_tag(tag);
    entangler_matrix z = build_entangler(m, alphas, branch, true);
    const pure_state s = apply_entangler(z);
    concurrence_report rep = classify(s, tol, policy, mode);
    const bool holds = rep.for_tag(tag).nonzero;
    return {std::move(z), std::move(rep), tag, holds};
}

} // namespace entkit
