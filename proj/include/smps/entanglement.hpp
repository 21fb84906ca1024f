#pragma once

#include <numbers>

#include "smps/mps.hpp"

namespace smps {

struct EntropyReport {
    int cut_position = 0; // sites 1..cut vs cut+1..L
    double entropy_nats = 0.0;
    Eigen::Index bond_dimension_at_cut = 0;

    double entropy_log2() const { return entropy_nats / std::numbers::ln2; }
};

// Von Neumann entropy -sum lambda ln lambda in nats. Requires a Hermitian
// input with unit trace (within 1e-8) and eigenvalues >= -1e-10; eigenvalues
// below 1e-14 are dropped before the lambda ln lambda term.
double vn_entropy(const CMatrix& rho);

// Entropy of the sites 1..L/2 reduction, computed through the dense
// statevector so it stays independent of the MPS construction under test.
EntropyReport halfcut_entropy(const Mps& mps);

// True iff the half-cut reduced density matrix has exactly 2^N nonzero
// eigenvalues, all equal to 2^-N within 1e-9, with N read off the bond
// dimension at the cut.
bool reduced_spectrum_check(const Mps& mps);

} // namespace smps
