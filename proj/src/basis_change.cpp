#include "smps/basis_change.hpp"

#include <bit>
#include <map>
#include <string>

namespace smps {
namespace {

constexpr int kGridCap = 10;

void check_grid_call(const BasisChangeGrid& grid, const Occupation& q) {
    const int L = grid.num_sites();
    if (L > kGridCap || L > max_dense_sites())
        throw size_cap_error("basis_change: L = " + std::to_string(L) +
                             " exceeds the grid cap");
    if (q.size() != L)
        throw shape_error("basis_change: boundary bit string length does not match L");
}

// v <- v * A1(l) for the stacked fermionic column tensor, applied through its
// sparsity: the only nonzero entries clear one pending bond bit alpha and
// carry phi_alpha(l) times the sigma_z string over the bond bits above it.
void apply_column_creation(const CMatrix& phi, int num_sites, int l, const CVector& v,
                           CVector& out) {
    const int L = num_sites;
    out.setZero();
    for (Eigen::Index b = 0; b < v.size(); ++b) {
        const Complex amp = v(b);
        if (amp == Complex(0.0, 0.0)) continue;
        auto bits = static_cast<std::uint64_t>(b);
        while (bits != 0) {
            const int pos = std::countr_zero(bits); // bond bit 2^pos = orbital L - pos
            bits &= bits - 1;
            const int alpha = L - pos;
            const auto above = static_cast<std::uint64_t>(b) >> (pos + 1);
            const double sign = (std::popcount(above) % 2 == 0) ? 1.0 : -1.0;
            out(b & ~(std::uint64_t{1} << pos)) += amp * sign * phi(alpha - 1, l - 1);
        }
    }
}

void theta_recurse(const CMatrix& phi, int num_sites, int level, std::size_t prefix,
                   const CVector& v, DenseState& result) {
    if (level == num_sites) {
        result(prefix) = v(0); // right boundary |0)^{xL}
        return;
    }
    theta_recurse(phi, num_sites, level + 1, prefix << 1, v, result);
    CVector next(v.size());
    apply_column_creation(phi, num_sites, level + 1, v, next);
    theta_recurse(phi, num_sites, level + 1, (prefix << 1) | 1, next, result);
}

} // namespace

BasisChangeGrid build_grid(const OrbitalSet& full_basis) {
    if (full_basis.num_orbitals != full_basis.num_sites)
        throw std::invalid_argument("build_grid: basis must be square (N == L)");
    const auto report = validate(full_basis);
    if (!report.ok)
        throw validation_error("build_grid: basis is not unitary (deviation " +
                               std::to_string(report.max_deviation) + ")");
    BasisChangeGrid grid;
    grid.full_basis = full_basis;
    grid.rows.reserve(full_basis.num_sites);
    for (int alpha = 1; alpha <= full_basis.num_sites; ++alpha)
        grid.rows.push_back(build_creation_mpo(full_basis.phi.row(alpha - 1),
                                               full_basis.num_sites, Statistics::fermion()));
    return grid;
}

DenseState theta_state(const BasisChangeGrid& grid, const Occupation& q) {
    check_grid_call(grid, q);
    const int L = grid.num_sites();
    const Eigen::Index bond_dim = Eigen::Index{1} << L;
    CVector v = CVector::Zero(bond_dim);
    v(q.to_index()) = 1.0; // (q_1| x ... x (q_L|
    DenseState result = DenseState::Zero(Eigen::Index{1} << L);
    theta_recurse(grid.full_basis.phi, L, 0, 0, v, result);
    return result;
}

DenseState transform_tensor(const BasisChangeGrid& grid, const DenseState& t_new) {
    const int L = grid.num_sites();
    if (L > kGridCap || L > max_dense_sites())
        throw size_cap_error("transform_tensor: L exceeds the grid cap");
    if (t_new.size() != (Eigen::Index{1} << L))
        throw shape_error("transform_tensor: amplitude tensor dimension is not 2^L");
    DenseState t_old = DenseState::Zero(t_new.size());
    for (Eigen::Index qidx = 0; qidx < t_new.size(); ++qidx) {
        if (t_new(qidx) == Complex(0.0, 0.0)) continue;
        t_old += t_new(qidx) * theta_state(grid, Occupation::from_index(qidx, L));
    }
    return t_old;
}

DenseState inverse_transform_tensor(const BasisChangeGrid& grid, const DenseState& t_old) {
    const int L = grid.num_sites();
    if (L > kGridCap || L > max_dense_sites())
        throw size_cap_error("inverse_transform_tensor: L exceeds the grid cap");
    if (t_old.size() != (Eigen::Index{1} << L))
        throw shape_error("inverse_transform_tensor: amplitude tensor dimension is not 2^L");
    DenseState t_new(t_old.size());
    for (Eigen::Index qidx = 0; qidx < t_old.size(); ++qidx)
        t_new(qidx) = theta_state(grid, Occupation::from_index(qidx, L)).dot(t_old);
    return t_new;
}

SectorContraction sector_contract(const BasisChangeGrid& grid, const Occupation& q) {
    check_grid_call(grid, q);
    const int L = grid.num_sites();
    const CMatrix& phi = grid.full_basis.phi;

    // Sparse amplitude map over one particle-number sector at a time; keys
    // stay materialized even when cancellations drive a value to zero.
    std::map<std::size_t, Complex> current;
    current[0] = Complex(1.0, 0.0);
    std::uint64_t pruned = 1;
    for (int alpha = L; alpha >= 1; --alpha) {
        if (q.bits[alpha - 1] == 0) continue; // identity row, bond frozen at |0)
        std::map<std::size_t, Complex> next;
        for (const auto& [cfg, amp] : current) {
            for (int l = 1; l <= L; ++l) {
                const std::size_t mask = std::size_t{1} << (L - l);
                if (cfg & mask) continue;
                const auto before = static_cast<std::uint64_t>(cfg >> (L - l + 1));
                const double sign = (std::popcount(before) % 2 == 0) ? 1.0 : -1.0;
                next[cfg | mask] += amp * sign * phi(alpha - 1, l - 1);
            }
        }
        pruned += next.size();
        current = std::move(next);
    }

    SectorContraction out;
    out.state = DenseState::Zero(Eigen::Index{1} << L);
    for (const auto& [cfg, amp] : current) out.state(static_cast<Eigen::Index>(cfg)) = amp;
    out.pruned_coefficients = pruned;
    out.dense_coefficients = std::uint64_t{1} << L;
    return out;
}

} // namespace smps
