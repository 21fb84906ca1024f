#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "smps/mpo.hpp"
#include "smps/orbitals.hpp"

namespace smps {

// Occupation bits s_1..s_L; site 1 maps to the most significant bit of the
// dense statevector index, matching the operator ordering
// (c_1^dag)^{s_1} ... (c_L^dag)^{s_L} |Omega>.
struct Occupation {
    std::vector<int> bits;

    static Occupation from_string(const std::string& s);
    static Occupation from_index(std::size_t index, int num_sites);

    std::string to_string() const;
    std::size_t to_index() const;
    int particle_count() const;
    int size() const { return static_cast<int>(bits.size()); }
};

struct MpsSite {
    std::array<CMatrix, 2> A;

    Eigen::Index left_dim() const { return A[0].rows(); }
    Eigen::Index right_dim() const { return A[0].cols(); }
};

// Matrix product state (b_0| A^[1]_{s_1} ... A^[L]_{s_L} |b_L).
struct Mps {
    int num_sites = 0;
    std::vector<MpsSite> sites;
    CRowVector left_boundary; // (b_0|
    CVector right_boundary;   // |b_L)

    // Bond dimension between sites cut and cut+1, cut in [0, L].
    Eigen::Index bond_dim_at(int cut) const;
};

// |Omega> -> |0...0> as a D = 1 product state.
Mps vacuum_mps(int num_sites);

// Direct Slater-determinant construction with bond dimension exactly 2^N:
// A0 = Id and A1(l) = sum_alpha phi_alpha(l) sigma_z^{x(alpha-1)} x sigma^- x
// Id^{x(N-alpha)} for fermions; for general statistics the string and
// identity factors become diag(1, W11) and diag(1, W00), so the bosonic A0
// stays the identity while the anyonic A0 picks up the W00 phases on pending
// bond axes. Certified against the dense oracles.
Mps build_slater_mps(const OrbitalSet& set, const Statistics& stat);

// (b_0| A_{s_1} ... A_{s_L} |b_L), contracted boundary-vector first: O(L D^2).
Complex amplitude(const Mps& mps, const Occupation& occ);

// N x N determinant of phi_alpha(l_q) over the occupied sites l_1 < ... < l_N;
// zero when the particle count differs from N.
Complex determinant_oracle(const OrbitalSet& set, const Occupation& occ);

// All 2^L amplitudes in configuration-index order.
DenseState mps_to_dense(const Mps& mps);

// Norm via transfer contraction; no dense cap.
double mps_norm(const Mps& mps);

// Oracle: multiplies the dense generalized-JW creation matrices in orbital
// order alpha = 1..N onto the vacuum vector. Capped at L <= 10.
DenseState anyonic_oracle(const OrbitalSet& set, const Statistics& stat);

// MPO applied to an MPS; bond dimensions multiply, the MPO bond goes
// outermost.
Mps apply_mpo_to_mps(const Mpo& mpo, const Mps& mps);

} // namespace smps
