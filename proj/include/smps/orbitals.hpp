#pragma once

#include <cstdint>
#include <utility>

#include "smps/tensor_core.hpp"

namespace smps {

// Set of N one-body wavefunctions on L sites; row alpha of phi holds
// phi_alpha(1..L). Orbital and site labels are 1-based in documentation and
// file formats, 0-based in storage. Orthonormality is not enforced by the
// struct itself: split_halves can legitimately produce non-orthonormal sets,
// which validate() reports.
struct OrbitalSet {
    int num_sites = 0;    // L
    int num_orbitals = 0; // N <= L for orthonormal sets
    CMatrix phi;          // N x L
};

inline constexpr double kOrthoTol = 1e-10;

struct OrthonormalityReport {
    double max_deviation = 0.0; // max entrywise |phi phi^dagger - Id|
    bool ok = false;
};

OrthonormalityReport validate(const OrbitalSet& set, double tol = kOrthoTol);

// Orthonormalization of i.i.d. complex Gaussians, deterministic per seed.
// RNG: mt19937_64 + Box-Muller (documented in the README); the QR-style
// sweep leaves every diagonal of the implicit R real positive.
OrbitalSet random_orthonormal(int num_sites, int num_orbitals, std::uint64_t seed);

// L/2-periodic plane waves phi_alpha(l) = L^{-1/2} exp(4 pi i alpha l / L),
// alpha = 1..N. Requires L even and 2N <= L.
OrbitalSet plane_wave_set(int num_sites, int num_orbitals);

// Canonical rows e_alpha.
OrbitalSet localized_set(int num_sites, int num_orbitals);

// Restrictions to the left half (l <= L/2) and right half (l > L/2),
// each rescaled by sqrt(2).
std::pair<OrbitalSet, OrbitalSet> split_halves(const OrbitalSet& set);

// Extends the set to a full L x L unitary by Gram-Schmidt against the
// canonical vectors in index order, skipping candidates whose residual norm
// after projection falls below 1e-8. Deterministic; idempotent on full-rank
// input.
OrbitalSet complete_basis(const OrbitalSet& set);

} // namespace smps
