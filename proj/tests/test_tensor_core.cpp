#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "smps/tensor_core.hpp"
#include "test_helpers.hpp"

using namespace smps;
using test_util::max_abs_diff;
using test_util::random_complex_matrix;

TEST_CASE("qubit convention: |0> is the +1 eigenstate and sigma_minus raises", "[tensor_core]") {
    const CVector zero = (CVector(2) << 1, 0).finished();
    const CVector one = (CVector(2) << 0, 1).finished();
    CHECK(max_abs_diff(pauli_z() * zero, zero) == 0.0);
    CHECK(max_abs_diff(pauli_z() * one, -one) == 0.0);
    CHECK(max_abs_diff(sigma_minus() * zero, one) == 0.0);
    CHECK((sigma_minus() * one).norm() == 0.0);
    CHECK(max_abs_diff(sigma_plus(), sigma_minus().adjoint()) == 0.0);
}

TEST_CASE("matmul basics", "[tensor_core]") {
    const CMatrix id = pauli_id();
    CHECK(max_abs_diff(matmul(id, id), id) == 0.0);
    // nilpotency of the raising operator
    CHECK(matmul(sigma_minus(), sigma_minus()).cwiseAbs().maxCoeff() == 0.0);
    // sigma_z sigma_minus = -sigma_minus in this convention
    CHECK(max_abs_diff(matmul(pauli_z(), sigma_minus()), -sigma_minus()) == 0.0);
    CHECK_THROWS_AS(matmul(CMatrix::Zero(2, 3), CMatrix::Zero(2, 3)), shape_error);
}

TEST_CASE("kron layout and special cases", "[tensor_core]") {
    CHECK(max_abs_diff(kron(pauli_id(), pauli_id()), CMatrix::Identity(4, 4)) == 0.0);

    // the phi_2 block of the N=2 worked example: nonzeros on rows 2 and 4
    CMatrix expected = CMatrix::Zero(4, 4);
    expected(1, 0) = 1.0;
    expected(3, 2) = -1.0;
    CHECK(max_abs_diff(kron(pauli_z(), sigma_minus()), expected) == 0.0);

    const CMatrix e1 = (CMatrix(2, 1) << 1, 0).finished();
    CMatrix e11 = CMatrix::Zero(4, 1);
    e11(0, 0) = 1.0;
    CHECK(max_abs_diff(kron(e1, e1), e11) == 0.0);
}

TEST_CASE("kron associativity on random 2x2 matrices", "[tensor_core]") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 20; ++trial) {
        const CMatrix a = random_complex_matrix(2, 2, rng);
        const CMatrix b = random_complex_matrix(2, 2, rng);
        const CMatrix c = random_complex_matrix(2, 2, rng);
        CHECK(max_abs_diff(kron(a, kron(b, c)), kron(kron(a, b), c)) < 1e-14);
    }
}

TEST_CASE("hermitian_eigvals", "[tensor_core]") {
    const auto half = hermitian_eigvals(0.5 * CMatrix::Identity(2, 2));
    REQUIRE(half.size() == 2);
    CHECK(half[0] == Catch::Approx(0.5).margin(1e-14));
    CHECK(half[1] == Catch::Approx(0.5).margin(1e-14));

    CMatrix diag = CMatrix::Zero(2, 2);
    diag(0, 0) = 0.75;
    diag(1, 1) = 0.25;
    const auto sorted = hermitian_eigvals(diag);
    CHECK(sorted[0] == Catch::Approx(0.25).margin(1e-14)); // ascending
    CHECK(sorted[1] == Catch::Approx(0.75).margin(1e-14));

    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        const CMatrix m = random_complex_matrix(4, 4, rng);
        const CMatrix herm = m + m.adjoint();
        const auto eigs = hermitian_eigvals(herm);
        double sum = 0.0;
        for (double v : eigs) sum += v;
        CHECK(std::abs(sum - herm.trace().real()) < 1e-10);
    }

    CMatrix skew = CMatrix::Zero(2, 2);
    skew(0, 1) = 1.0;
    CHECK_THROWS_AS(hermitian_eigvals(skew), validation_error);
    CHECK_THROWS_AS(hermitian_eigvals(CMatrix::Zero(2, 3)), shape_error);
}

TEST_CASE("partial_trace on product, Bell and GHZ states", "[tensor_core]") {
    DenseState product = DenseState::Zero(4);
    product(0) = 1.0; // |00>
    CMatrix expected = CMatrix::Zero(2, 2);
    expected(0, 0) = 1.0;
    CHECK(max_abs_diff(partial_trace(product, 2, 1), expected) < 1e-15);

    DenseState bell = DenseState::Zero(4);
    bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
    CHECK(max_abs_diff(partial_trace(bell, 2, 1), 0.5 * CMatrix::Identity(2, 2)) < 1e-15);

    DenseState ghz = DenseState::Zero(8);
    ghz(0) = ghz(7) = 1.0 / std::sqrt(2.0);
    CMatrix ghz2 = CMatrix::Zero(4, 4);
    ghz2(0, 0) = ghz2(3, 3) = 0.5;
    CHECK(max_abs_diff(partial_trace(ghz, 3, 2), ghz2) < 1e-15);

    CHECK_THROWS_AS(partial_trace(DenseState::Zero(6), 3, 1), shape_error);
}

TEST_CASE("partial_trace yields a unit-trace Hermitian density matrix", "[tensor_core]") {
    std::mt19937_64 rng(4321);
    for (int trial = 0; trial < 10; ++trial) {
        CVector psi = random_complex_matrix(16, 1, rng);
        psi /= psi.norm();
        const CMatrix rho = partial_trace(psi, 4, 2);
        CHECK(max_abs_diff(rho, rho.adjoint()) < 1e-12);
        CHECK(std::abs(rho.trace().real() - 1.0) < 1e-12);
        CHECK(std::abs(rho.trace().imag()) < 1e-12);
        for (double lambda : hermitian_eigvals(rho)) {
            CHECK(lambda > -1e-10);
            CHECK(lambda < 1.0 + 1e-10);
        }
    }
}
