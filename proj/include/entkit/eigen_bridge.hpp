#pragma once

// Bridges to Eigen for the two dense decompositions the library needs
// (singular values, Hermitian eigenvalues). Everything else stays on the
// hand-rolled types so the numeric layout stays under our control.

#include <vector>

#include <Eigen/Dense>

#include "entkit/matrix.hpp"

namespace entkit {

inline Eigen::MatrixXcd to_eigen(const complex_matrix& a) {
    Eigen::MatrixXcd out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    return out;
}

/// Singular values in descending order.
inline std::vector<double> singular_values(const complex_matrix& a) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(a));
    const auto& sv = svd.singularValues();
    return {sv.data(), sv.data() + sv.size()};
}

/// Eigenvalues of a Hermitian matrix, ascending. The caller is responsible
/// for Hermiticity; the adjoint half is not inspected.
inline std::vector<double> hermitian_eigenvalues(const complex_matrix& a) {
    if (a.rows() != a.cols())
        throw shape_error("hermitian_eigenvalues requires a square matrix");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(a),
                                                       Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

} // namespace entkit
