#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "entkit/phase_povm.hpp"
#include "entkit/random.hpp"

using namespace entkit;

namespace {
const double pi = std::numbers::pi;
}

TEST_CASE("delta at the quarter-turn phase") {
    const complex_matrix d = delta(single_phase(pi / 2.0));
    const complex_matrix want(2, 2,
                              {1.0, cplx(0.0, 1.0), cplx(0.0, -1.0), 1.0});
    CHECK(max_abs_diff(d, want) < 1e-15);
}

TEST_CASE("delta at zero phase is the all-ones matrix") {
    CHECK(delta(single_phase(0.0)) == complex_matrix(2, 2, {1, 1, 1, 1}));

    phase_spec s3{3, {{{1, 2}, 0.0}, {{1, 3}, 0.0}, {{2, 3}, 0.0}}};
    CHECK(delta(s3) == complex_matrix(3, 3, {1, 1, 1, 1, 1, 1, 1, 1, 1}));
}

TEST_CASE("delta is Hermitian with unit diagonal for any phases") {
    rng64 rng(31);
    for (int n = 2; n <= 5; ++n)
        for (int trial = 0; trial < 5; ++trial) {
            phase_spec spec{n, {}};
            for (int k = 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l)
                    spec.phases[{k, l}] = rng.uniform() * 2.0 * pi;
            const complex_matrix d = delta(spec);
            CHECK(max_abs_diff(d, dagger(d)) == 0.0);
            for (int k = 0; k < n; ++k) CHECK(d(k, k) == cplx(1.0));
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (k != l) CHECK(std::abs(std::abs(d(k, l)) - 1.0) < 1e-15);
        }
}

TEST_CASE("delta_tilde zeroes the diagonal and nothing else") {
    rng64 rng(32);
    for (int trial = 0; trial < 10; ++trial) {
        const phase_spec spec = single_phase(rng.uniform() * 2.0 * pi);
        CHECK(max_abs_diff(delta_tilde(spec), delta(spec) - identity(2)) == 0.0);
    }

    // quarter turn: [[0, i], [-i, 0]], the negative of sigma_y
    const complex_matrix q = delta_tilde(single_phase(pi / 2.0));
    CHECK(max_abs_diff(q, cplx(-1.0) * pauli_y()) < 1e-15);

    // half turn: [[0, -1], [-1, 0]], the negative of sigma_x
    const complex_matrix h = delta_tilde(single_phase(pi));
    CHECK(max_abs_diff(h, cplx(-1.0) * pauli_x()) < 1e-15);

    CHECK(delta_tilde(single_phase(0.0)) == pauli_x());
}

TEST_CASE("two-dimensional delta has eigenvalues 0 and 2") {
    rng64 rng(33);
    for (int trial = 0; trial < 20; ++trial) {
        const auto ev = hermitian_eigenvalues(delta(single_phase(rng.uniform() * 2.0 * pi)));
        REQUIRE(ev.size() == 2);
        CHECK(std::abs(ev[0]) < 1e-12);
        CHECK(std::abs(ev[1] - 2.0) < 1e-12);
    }
}

TEST_CASE("phase spec validation") {
    CHECK_THROWS_AS(delta(phase_spec{1, {}}), domain_error);
    CHECK_THROWS_AS(delta(phase_spec{2, {}}), incomplete_spec_error);
    CHECK_THROWS_AS(delta(phase_spec{3, {{{1, 2}, 0.0}}}), incomplete_spec_error);
    // pair out of order / out of range
    CHECK_THROWS_AS(delta(phase_spec{2, {{{2, 1}, 0.0}}}), incomplete_spec_error);
    CHECK_THROWS_AS(delta(phase_spec{2, {{{1, 3}, 0.0}}}), incomplete_spec_error);
    CHECK_THROWS_AS(delta(phase_spec{2, {{{1, 2}, NAN}}}), domain_error);
}

TEST_CASE("qubit operator realizations") {
    CHECK(qubit_op(qubit_setting::identity) == identity(2));
    CHECK(qubit_op(qubit_setting::pi) == pauli_x());
    CHECK(qubit_op(qubit_setting::half_pi) == pauli_y());

    // up to the dropped global sign these are the phase matrices themselves
    CHECK(max_abs_diff(qubit_op(qubit_setting::half_pi),
                       cplx(-1.0) * delta_tilde(single_phase(pi / 2.0))) < 1e-15);
    CHECK(max_abs_diff(qubit_op(qubit_setting::pi),
                       cplx(-1.0) * delta_tilde(single_phase(pi))) < 1e-15);

    for (qubit_setting s : {qubit_setting::half_pi, qubit_setting::pi,
                             qubit_setting::identity}) {
        const complex_matrix u = qubit_op(s);
        CHECK(is_unitary(u, 1e-12));
        CHECK(max_abs_diff(u, dagger(u)) == 0.0);
        CHECK(max_abs_diff(matmul(u, u), identity(2)) == 0.0);
    }
}

TEST_CASE("tensor operator stacks qubit factors left to right") {
    const phase_operator id2 = tensor_operator(
        {qubit_setting::identity, qubit_setting::identity});
    CHECK(id2.matrix == identity(4));
    CHECK(id2.label == "II");

    const phase_operator yy = tensor_operator(
        {qubit_setting::half_pi, qubit_setting::half_pi});
    CHECK(yy.matrix == kron(pauli_y(), pauli_y()));
    CHECK(yy.label == "YY");

    const phase_operator yyxx = tensor_operator(
        {qubit_setting::half_pi, qubit_setting::half_pi, qubit_setting::pi,
         qubit_setting::pi});
    CHECK(yyxx.matrix ==
          kron(kron(kron(pauli_y(), pauli_y()), pauli_x()), pauli_x()));
    CHECK(yyxx.matrix.rows() == 16);
    CHECK(is_unitary(yyxx.matrix, 1e-12));

    CHECK_THROWS_AS(tensor_operator({}), domain_error);
}

TEST_CASE("random setting sequences realize unitary operators") {
    rng64 rng(34);
    for (int trial = 0; trial < 10; ++trial) {
        const int m = 1 + static_cast<int>(rng.uniform() * 5);
        std::vector<qubit_setting> settings(m);
        for (auto& s : settings) {
            const double u = rng.uniform();
            s = u < 0.34   ? qubit_setting::half_pi
                : u < 0.67 ? qubit_setting::pi
                           : qubit_setting::identity;
        }
        CHECK(is_unitary(tensor_operator(settings).matrix, 1e-12));
    }
}

TEST_CASE("grid phases average to the identity") {
    for (int k : {2, 3, 4, 7, 8, 16, 33})
        CHECK(povm_resolution_check(2, k) <= 1e-14);
    CHECK_THROWS_AS(povm_resolution_check(3, 8), unsupported_error);
    CHECK_THROWS_AS(povm_resolution_check(2, 1), domain_error);
}

TEST_CASE("measurement value against density matrices") {
    const complex_matrix half = cplx(0.5) * identity(2);
    CHECK(std::abs(povm_probability(half, single_phase(1.234)) - 1.0) < 1e-12);

    const complex_matrix ket0(2, 2, {1, 0, 0, 0});
    CHECK(std::abs(povm_probability(ket0, single_phase(pi / 2.0)) - 1.0) < 1e-12);

    const complex_matrix plus(2, 2, {0.5, 0.5, 0.5, 0.5});
    CHECK(std::abs(povm_probability(plus, single_phase(0.0)) - 2.0) < 1e-12);

    const phase_spec s3{3, {{{1, 2}, 0.3}, {{1, 3}, 1.1}, {{2, 3}, 2.9}}};
    const complex_matrix third = cplx(1.0 / 3.0) * identity(3);
    CHECK(std::abs(povm_probability(third, s3) - 1.0) < 1e-12);
}

TEST_CASE("measurement value rejects invalid density matrices") {
    const phase_spec spec = single_phase(0.5);
    CHECK_THROWS_AS(povm_probability(identity(3), spec), shape_error);
    // not Hermitian
    CHECK_THROWS_AS(
        povm_probability(complex_matrix(2, 2, {0.5, 1.0, 0.0, 0.5}), spec),
        domain_error);
    // trace 2
    CHECK_THROWS_AS(povm_probability(identity(2), spec), domain_error);
    // negative eigenvalue, trace still 1
    CHECK_THROWS_AS(
        povm_probability(complex_matrix(2, 2, {2, 0, 0, -1}), spec),
        domain_error);
}
