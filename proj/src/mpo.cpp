#include "smps/mpo.hpp"

#include <cmath>
#include <complex>
#include <string>
#include <utility>

namespace smps {

CMatrix Statistics::exchange_matrix() const {
    switch (kind) {
        case StatKind::Fermion: return pauli_z();
        case StatKind::Boson: return pauli_id();
        case StatKind::Anyon: {
            CMatrix w = CMatrix::Zero(2, 2);
            w(0, 0) = std::polar(1.0, phase);
            w(1, 1) = std::polar(1.0, -phase);
            return w;
        }
    }
    throw std::invalid_argument("Statistics: unknown kind");
}

std::string Statistics::name() const {
    switch (kind) {
        case StatKind::Fermion: return "fermion";
        case StatKind::Boson: return "boson";
        case StatKind::Anyon: return "anyon(" + std::to_string(phase) + ")";
    }
    return "?";
}

Mpo build_creation_mpo(const CRowVector& orbital, int num_sites, const Statistics& stat) {
    if (num_sites < 1)
        throw std::invalid_argument("build_creation_mpo: L must be >= 1");
    if (orbital.size() != num_sites)
        throw shape_error("build_creation_mpo: orbital length " + std::to_string(orbital.size()) +
                          " does not match L = " + std::to_string(num_sites));
    const CMatrix w = stat.exchange_matrix();
    // Diagonal bond blocks: identity on the applied side, exchange string on
    // the pending side. Reduces to B00 = Id, B11 = sigma_z for fermions.
    CMatrix b00 = (CMatrix(2, 2) << 1, 0, 0, w(0, 0)).finished();
    CMatrix b11 = (CMatrix(2, 2) << 1, 0, 0, w(1, 1)).finished();

    Mpo mpo;
    mpo.num_sites = num_sites;
    mpo.sites.resize(num_sites);
    for (int l = 0; l < num_sites; ++l) {
        auto& site = mpo.sites[l];
        site.B[0][0] = b00;
        site.B[0][1] = CMatrix::Zero(2, 2);
        site.B[1][0] = orbital(l) * sigma_minus();
        site.B[1][1] = b11;
    }
    mpo.left_boundary = (CRowVector(2) << 0, 1).finished(); // (1|
    mpo.right_boundary = (CVector(2) << 1, 0).finished();   // |0)
    return mpo;
}

Mpo set_boundary_mode(Mpo mpo, BoundaryMode mode) {
    const CRowVector left0 = (CRowVector(2) << 1, 0).finished();
    const CRowVector left1 = (CRowVector(2) << 0, 1).finished();
    const CVector right0 = (CVector(2) << 1, 0).finished();
    const CVector right1 = (CVector(2) << 0, 1).finished();
    switch (mode) {
        case BoundaryMode::Construction:
            mpo.left_boundary = left1;
            mpo.right_boundary = right0;
            break;
        case BoundaryMode::Identity:
            mpo.left_boundary = left0;
            mpo.right_boundary = right0;
            break;
        case BoundaryMode::Parity:
            mpo.left_boundary = left1;
            mpo.right_boundary = right1;
            break;
        case BoundaryMode::Null:
            mpo.left_boundary = left0;
            mpo.right_boundary = right1;
            break;
    }
    return mpo;
}

Mpo adjoint_mpo(const Mpo& mpo) {
    Mpo out;
    out.num_sites = mpo.num_sites;
    out.sites.resize(mpo.sites.size());
    for (std::size_t l = 0; l < mpo.sites.size(); ++l)
        for (int s = 0; s < 2; ++s)
            for (int r = 0; r < 2; ++r)
                out.sites[l].B[s][r] = mpo.sites[l].B[r][s].conjugate();
    out.left_boundary = mpo.left_boundary.conjugate();
    out.right_boundary = mpo.right_boundary.conjugate();
    return out;
}

DenseOperator mpo_to_dense(const Mpo& mpo) {
    const int L = mpo.num_sites;
    if (L > max_dense_sites())
        throw size_cap_error("mpo_to_dense: L = " + std::to_string(L) +
                             " exceeds the dense cap of " + std::to_string(max_dense_sites()));
    // Rows hold bond vectors for every interleaved (s, r) prefix; the pair
    // for site l occupies bits 2(L-l)+1 and 2(L-l) of the row index.
    CMatrix rows = mpo.left_boundary;
    for (int l = 0; l < L; ++l) {
        const auto& site = mpo.sites[l];
        CMatrix next(rows.rows() * 4, site.right_dim());
        for (int s = 0; s < 2; ++s)
            for (int r = 0; r < 2; ++r) {
                const CMatrix prod = rows * site.B[s][r];
                for (Eigen::Index p = 0; p < rows.rows(); ++p)
                    next.row(4 * p + 2 * s + r) = prod.row(p);
            }
        rows = std::move(next);
    }
    const CVector flat = rows * mpo.right_boundary;
    const Eigen::Index dim = Eigen::Index{1} << L;
    DenseOperator out(dim, dim);
    for (Eigen::Index idx = 0; idx < flat.size(); ++idx) {
        Eigen::Index srow = 0;
        Eigen::Index rcol = 0;
        for (int l = 0; l < L; ++l) {
            srow = (srow << 1) | ((idx >> (2 * (L - 1 - l) + 1)) & 1);
            rcol = (rcol << 1) | ((idx >> (2 * (L - 1 - l))) & 1);
        }
        out(srow, rcol) = flat(idx);
    }
    return out;
}

DenseOperator jw_dense_creation(const CRowVector& orbital, int num_sites, const Statistics& stat) {
    if (num_sites < 1)
        throw std::invalid_argument("jw_dense_creation: L must be >= 1");
    if (orbital.size() != num_sites)
        throw shape_error("jw_dense_creation: orbital length does not match L");
    if (num_sites > max_dense_sites())
        throw size_cap_error("jw_dense_creation: L = " + std::to_string(num_sites) +
                             " exceeds the dense cap of " + std::to_string(max_dense_sites()));
    const CMatrix w = stat.exchange_matrix();
    const Eigen::Index dim = Eigen::Index{1} << num_sites;
    DenseOperator sum = DenseOperator::Zero(dim, dim);
    for (int l = 1; l <= num_sites; ++l) {
        CMatrix term = CMatrix::Identity(1, 1);
        for (int m = 1; m <= num_sites; ++m) {
            if (m < l)
                term = kron(term, w);
            else if (m == l)
                term = kron(term, sigma_minus());
            else
                term = kron(term, pauli_id());
        }
        sum += orbital(l - 1) * term;
    }
    return sum;
}

} // namespace smps
