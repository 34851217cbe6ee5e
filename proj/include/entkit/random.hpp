#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "entkit/state.hpp"

namespace entkit {

// Seeded generator with a fixed bit-to-double mapping so a seed pins the
// same sequence on every platform. The distribution adapters in <random> are
// implementation-defined, which is why they are not used here.
class rng64 {
public:
    explicit rng64(std::uint64_t seed) : eng_(seed) {}

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // standard normal via Box-Muller; two uniforms per draw, no caching
    double gaussian() {
        const double u1 = 1.0 - uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

    cplx unit_phase() {
        const double t = 2.0 * std::numbers::pi * uniform();
        return {std::cos(t), std::sin(t)};
    }

    cplx gaussian_cplx() {
        const double re = gaussian();
        return {re, gaussian()};
    }

private:
    std::mt19937_64 eng_;
};

/// Haar-ish random pure state: iid complex gaussian amplitudes, normalized.
inline pure_state random_state(int m, rng64& rng) {
    complex_vector v(pow2(m));
    for (int x = 0; x < v.dim(); ++x) v[x] = rng.gaussian_cplx();
    return make_state(m, std::move(v), true);
}

/// Tensor product of m independent random single-qubit states.
inline pure_state random_product_state(int m, rng64& rng) {
    std::vector<std::array<cplx, 2>> factors(m);
    for (auto& f : factors) f = {rng.gaussian_cplx(), rng.gaussian_cplx()};
    return product_state(factors);
}

/// 2^m unit-modulus coefficients e^{i theta}, theta uniform.
inline std::vector<cplx> random_unit_alphas(int m, rng64& rng) {
    std::vector<cplx> alphas(pow2(m));
    for (cplx& a : alphas) a = rng.unit_phase();
    return alphas;
}

} // namespace entkit
