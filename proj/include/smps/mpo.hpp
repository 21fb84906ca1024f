#pragma once

#include <array>
#include <string>
#include <vector>

#include "smps/tensor_core.hpp"

namespace smps {

enum class StatKind { Fermion, Boson, Anyon };

// Particle-exchange statistics selector. The exchange matrix W is sigma_z for
// fermions, the identity for bosons, and the phase gate exp(i phi sigma_z)
// for abelian anyons. W(anyon, pi) equals -Id, which differs from the
// fermionic sigma_z by a global phase per crossing; fermions are therefore
// always selected through kind, never through anyon(pi).
struct Statistics {
    StatKind kind = StatKind::Fermion;
    double phase = 0.0; // exchange phase in radians, anyons only

    static Statistics fermion() { return {StatKind::Fermion, 0.0}; }
    static Statistics boson() { return {StatKind::Boson, 0.0}; }
    static Statistics anyon(double phase) { return {StatKind::Anyon, phase}; }

    CMatrix exchange_matrix() const; // W, always diagonal
    std::string name() const;
};

// One MPO site: bond-space matrices B[s][r] with s the output (bra) and r the
// input (ket) physical index.
struct MpoSite {
    std::array<std::array<CMatrix, 2>, 2> B;

    Eigen::Index left_dim() const { return B[0][0].rows(); }
    Eigen::Index right_dim() const { return B[0][0].cols(); }
};

// Matrix product operator (beta_0| B^[1] ... B^[L] |beta_L).
struct Mpo {
    int num_sites = 0;
    std::vector<MpoSite> sites;
    CRowVector left_boundary; // (beta_0|
    CVector right_boundary;   // |beta_L)
};

// With |beta_L) = |0) the left boundary acts as a switch that activates or
// deactivates the creation operator; Parity and Null need |beta_L) = |1).
enum class BoundaryMode { Construction, Identity, Parity, Null };

// D = 2 MPO of the delocalized creation operator
//   sum_l phi(l) W x ... x W x sigma^- x Id x ... x Id.
// Site tensors: B00 = diag(1, W00), B01 = 0, B10 = phi(l) sigma^-_f,
// B11 = diag(1, W11); bond state |1) marks the creation as still pending,
// |0) as already applied. For fermions this is B00 = Id, B11 = sigma_z.
Mpo build_creation_mpo(const CRowVector& orbital, int num_sites, const Statistics& stat);

Mpo set_boundary_mode(Mpo mpo, BoundaryMode mode);

// Entrywise conjugate with the physical indices swapped; the dense form is
// the conjugate transpose, so creation MPOs turn into annihilation MPOs.
Mpo adjoint_mpo(const Mpo& mpo);

// Dense 2^L x 2^L matrix of an MPO, contracted over bond products.
DenseOperator mpo_to_dense(const Mpo& mpo);

// Oracle: the same creation operator assembled by direct Kronecker summation.
DenseOperator jw_dense_creation(const CRowVector& orbital, int num_sites, const Statistics& stat);

} // namespace smps
