#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "smps/errors.hpp"

namespace smps {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using CRowVector = Eigen::RowVectorXcd;

// Full 2^L statevector / 2^L x 2^L operator, used by the desk-scale oracles.
using DenseState = CVector;
using DenseOperator = CMatrix;

// Hard cap on dense materialization (2^L amplitudes). The environment
// variable SLATER_MPS_MAX_L may lower it, never raise it.
inline constexpr int kMaxDenseSites = 12;
int max_dense_sites();

// Local qubit convention: |0> = (1,0)^T is the +1 eigenstate of sigma_z,
// and sigma_minus maps |0> -> |1> (it raises the occupation number).
const CMatrix& pauli_id();
const CMatrix& pauli_z();
const CMatrix& sigma_minus();
const CMatrix& sigma_plus();

CMatrix matmul(const CMatrix& a, const CMatrix& b);

// Kronecker product with a's indices outermost: (a x b)[i*rb+k, j*cb+l] = a(i,j) b(k,l).
CMatrix kron(const CMatrix& a, const CMatrix& b);

// Eigenvalues of a Hermitian matrix, ascending. Rejects inputs whose
// max |m - m^dagger| entry exceeds `tol`.
std::vector<double> hermitian_eigvals(const CMatrix& m, double tol = 1e-10);

// Reduced density matrix of the first keep_sites sites of a 2^L statevector
// (site 1 is the most significant bit of the configuration index).
CMatrix partial_trace(const DenseState& state, int num_sites, int keep_sites);

// Occupation bit of 1-based `site` within a configuration index.
inline int site_bit(std::size_t config, int num_sites, int site) {
    return static_cast<int>((config >> (num_sites - site)) & 1u);
}

} // namespace smps
