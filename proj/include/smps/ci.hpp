#pragma once

#include "smps/entanglement.hpp"
#include "smps/mpo.hpp"
#include "smps/orbitals.hpp"

namespace smps {

// Coefficients of Theta = alpha c~1+ c~2+ + beta c~3+ c~4+ over four
// orthonormal orbitals (fermionic).
struct CiCoefficients {
    Complex alpha;
    Complex beta;
    OrbitalSet orbitals; // N == 4
};

// D = 8 block-diagonal composition of the stacked pair MPOs (1,2) and (3,4);
// the right boundary carries the alpha/beta weights.
Mpo build_ci_block_mpo(const CiCoefficients& c, int num_sites);

// D = 6 compact form with the explicit site matrices; boundaries (5| and |0).
Mpo build_ci_compact_mpo(const CiCoefficients& c, int num_sites);

// Oracle: alpha M1 M2 + beta M3 M4 with M_a = jw_dense_creation(row a).
DenseOperator ci_dense_oracle(const CiCoefficients& c, int num_sites);

struct CiEntropyReport {
    EntropyReport entropy;
    double bound_nats = 0.0; // ln 6, the compact bond-dimension bound
    bool within_bound = false;
};

// Half-cut entropy of the normalized Theta|Omega>, checked against ln 6.
CiEntropyReport ci_entropy_bound_check(const CiCoefficients& c, int num_sites);

} // namespace smps
