#pragma once

#include <cstdint>
#include <vector>

#include "smps/mpo.hpp"
#include "smps/mps.hpp"
#include "smps/orbitals.hpp"

namespace smps {

// L x L grid of creation-operator MPO rows over a complete orbital basis.
// Row alpha (top to bottom) carries the D = 2 MPO of phi_alpha with right
// boundary |0) and a selectable left boundary bit q_alpha that switches the
// row between the identity and the creation of orbital alpha.
struct BasisChangeGrid {
    OrbitalSet full_basis; // N == L, unitary
    std::vector<Mpo> rows; // row alpha = creation MPO of phi_alpha (fermionic)

    int num_sites() const { return full_basis.num_sites; }
};

BasisChangeGrid build_grid(const OrbitalSet& full_basis);

// |Psi_q> = c~_1^{dag q_1} ... c~_L^{dag q_L} |Omega>, contracted column by
// column over the joint 2^L bond space (each row contributes a D = 2 bond).
DenseState theta_state(const BasisChangeGrid& grid, const Occupation& q);

// New-basis amplitudes to old-basis: T_old[s] = sum_q <s|Psi_q> T_new[q].
DenseState transform_tensor(const BasisChangeGrid& grid, const DenseState& t_new);

// Adjoint map T_new[q] = sum_s <Psi_q|s> T_old[s]; inverts transform_tensor
// when the basis is unitary.
DenseState inverse_transform_tensor(const BasisChangeGrid& grid, const DenseState& t_old);

// Row-by-row contraction that applies only the activated rows and keeps each
// intermediate state restricted to its particle-number sector, tracking the
// created-particle count per bond. The counters compare how many amplitude
// coefficients the two strategies materialize: the pruned sweep stores only
// the visited sectors, a dense sweep stores one coefficient per configuration.
struct SectorContraction {
    DenseState state;
    std::uint64_t pruned_coefficients = 0;
    std::uint64_t dense_coefficients = 0;
};

SectorContraction sector_contract(const BasisChangeGrid& grid, const Occupation& q);

} // namespace smps
