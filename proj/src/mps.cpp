#include "smps/mps.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace smps {

Occupation Occupation::from_string(const std::string& s) {
    Occupation occ;
    occ.bits.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("Occupation: expected a string over {0,1}, got '" + s + "'");
        occ.bits.push_back(c - '0');
    }
    return occ;
}

Occupation Occupation::from_index(std::size_t index, int num_sites) {
    Occupation occ;
    occ.bits.resize(num_sites);
    for (int site = 1; site <= num_sites; ++site)
        occ.bits[site - 1] = site_bit(index, num_sites, site);
    return occ;
}

std::string Occupation::to_string() const {
    std::string s;
    s.reserve(bits.size());
    for (int b : bits) s.push_back(b ? '1' : '0');
    return s;
}

std::size_t Occupation::to_index() const {
    std::size_t index = 0;
    for (int b : bits) index = (index << 1) | static_cast<unsigned>(b);
    return index;
}

int Occupation::particle_count() const {
    int n = 0;
    for (int b : bits) n += b;
    return n;
}

Eigen::Index Mps::bond_dim_at(int cut) const {
    if (cut < 0 || cut > num_sites)
        throw std::invalid_argument("Mps::bond_dim_at: cut out of range");
    if (cut == 0) return left_boundary.size();
    return sites[cut - 1].right_dim();
}

Mps vacuum_mps(int num_sites) {
    if (num_sites < 1)
        throw std::invalid_argument("vacuum_mps: L must be >= 1");
    Mps mps;
    mps.num_sites = num_sites;
    mps.sites.resize(num_sites);
    for (auto& site : mps.sites) {
        site.A[0] = CMatrix::Identity(1, 1);
        site.A[1] = CMatrix::Zero(1, 1);
    }
    mps.left_boundary = CRowVector::Ones(1);
    mps.right_boundary = CVector::Ones(1);
    return mps;
}

Mps build_slater_mps(const OrbitalSet& set, const Statistics& stat) {
    if (set.num_orbitals < 1)
        throw std::invalid_argument("build_slater_mps: N must be >= 1");
    if (set.num_orbitals > kMaxDenseSites)
        throw size_cap_error("build_slater_mps: bond dimension 2^N is capped at N = " +
                             std::to_string(kMaxDenseSites));
    const auto report = validate(set);
    if (!report.ok)
        throw validation_error("build_slater_mps: orbitals not orthonormal (deviation " +
                               std::to_string(report.max_deviation) + ")");
    const int L = set.num_sites;
    const int N = set.num_orbitals;
    const CMatrix w = stat.exchange_matrix();
    const CMatrix pending = (CMatrix(2, 2) << 1, 0, 0, w(1, 1)).finished();
    const CMatrix applied = (CMatrix(2, 2) << 1, 0, 0, w(0, 0)).finished();

    CMatrix a0 = CMatrix::Identity(1, 1);
    for (int alpha = 1; alpha <= N; ++alpha) a0 = kron(a0, applied);

    // String blocks sigma_z^{x(alpha-1)} x sigma^- x Id^{x(N-alpha)} in the
    // stacked bond space, orbital 1 outermost.
    std::vector<CMatrix> blocks(N);
    for (int alpha = 1; alpha <= N; ++alpha) {
        CMatrix block = CMatrix::Identity(1, 1);
        for (int m = 1; m <= N; ++m) {
            if (m < alpha)
                block = kron(block, pending);
            else if (m == alpha)
                block = kron(block, sigma_minus());
            else
                block = kron(block, applied);
        }
        blocks[alpha - 1] = std::move(block);
    }

    const Eigen::Index dim = Eigen::Index{1} << N;
    Mps mps;
    mps.num_sites = L;
    mps.sites.resize(L);
    for (int l = 0; l < L; ++l) {
        mps.sites[l].A[0] = a0;
        CMatrix a1 = CMatrix::Zero(dim, dim);
        for (int alpha = 1; alpha <= N; ++alpha)
            a1 += set.phi(alpha - 1, l) * blocks[alpha - 1];
        mps.sites[l].A[1] = std::move(a1);
    }
    mps.left_boundary = CRowVector::Zero(dim);
    mps.left_boundary(dim - 1) = 1.0; // (1|^{xN}
    mps.right_boundary = CVector::Zero(dim);
    mps.right_boundary(0) = 1.0; // |0)^{xN}
    return mps;
}

Complex amplitude(const Mps& mps, const Occupation& occ) {
    if (occ.size() != mps.num_sites)
        throw shape_error("amplitude: occupation length " + std::to_string(occ.size()) +
                          " does not match L = " + std::to_string(mps.num_sites));
    CRowVector v = mps.left_boundary;
    for (int l = 0; l < mps.num_sites; ++l) v = v * mps.sites[l].A[occ.bits[l]];
    return (v * mps.right_boundary)(0);
}

Complex determinant_oracle(const OrbitalSet& set, const Occupation& occ) {
    if (occ.size() != set.num_sites)
        throw shape_error("determinant_oracle: occupation length does not match L");
    if (occ.particle_count() != set.num_orbitals) return Complex(0.0, 0.0);
    const int N = set.num_orbitals;
    if (N == 0) return Complex(1.0, 0.0);
    CMatrix m(N, N);
    int q = 0;
    for (int l = 0; l < set.num_sites; ++l) {
        if (!occ.bits[l]) continue;
        for (int alpha = 0; alpha < N; ++alpha) m(alpha, q) = set.phi(alpha, l);
        ++q;
    }
    return m.determinant();
}

DenseState mps_to_dense(const Mps& mps) {
    const int L = mps.num_sites;
    if (L > max_dense_sites())
        throw size_cap_error("mps_to_dense: L = " + std::to_string(L) +
                             " exceeds the dense cap of " + std::to_string(max_dense_sites()));
    // Rows hold (b_0| A_{s_1} ... A_{s_l} for every length-l prefix.
    CMatrix rows = mps.left_boundary;
    for (int l = 0; l < L; ++l) {
        const auto& site = mps.sites[l];
        CMatrix next(rows.rows() * 2, site.right_dim());
        for (int s = 0; s < 2; ++s) {
            const CMatrix prod = rows * site.A[s];
            for (Eigen::Index p = 0; p < rows.rows(); ++p) next.row(2 * p + s) = prod.row(p);
        }
        rows = std::move(next);
    }
    return rows * mps.right_boundary;
}

double mps_norm(const Mps& mps) {
    CMatrix v = mps.left_boundary.transpose() * mps.left_boundary.conjugate();
    for (const auto& site : mps.sites) {
        CMatrix next = CMatrix::Zero(site.right_dim(), site.right_dim());
        for (int s = 0; s < 2; ++s)
            next += site.A[s].transpose() * v * site.A[s].conjugate();
        v = std::move(next);
    }
    const Complex n2 =
        (mps.right_boundary.transpose() * v * mps.right_boundary.conjugate())(0);
    return std::sqrt(std::max(0.0, n2.real()));
}

DenseState anyonic_oracle(const OrbitalSet& set, const Statistics& stat) {
    const int L = set.num_sites;
    if (L > 10 || L > max_dense_sites())
        throw size_cap_error("anyonic_oracle: L = " + std::to_string(L) +
                             " exceeds the oracle cap");
    DenseState psi = DenseState::Zero(Eigen::Index{1} << L);
    psi(0) = 1.0;
    for (int alpha = set.num_orbitals; alpha >= 1; --alpha)
        psi = jw_dense_creation(set.phi.row(alpha - 1), L, stat) * psi;
    return psi;
}

Mps apply_mpo_to_mps(const Mpo& mpo, const Mps& mps) {
    if (mpo.num_sites != mps.num_sites)
        throw shape_error("apply_mpo_to_mps: chain lengths differ");
    Mps out;
    out.num_sites = mps.num_sites;
    out.sites.resize(mps.sites.size());
    for (std::size_t l = 0; l < mps.sites.size(); ++l)
        for (int s = 0; s < 2; ++s)
            out.sites[l].A[s] = kron(mpo.sites[l].B[s][0], mps.sites[l].A[0]) +
                                kron(mpo.sites[l].B[s][1], mps.sites[l].A[1]);
    out.left_boundary = kron(mpo.left_boundary, mps.left_boundary);
    out.right_boundary = kron(mpo.right_boundary, mps.right_boundary);
    return out;
}

} // namespace smps
