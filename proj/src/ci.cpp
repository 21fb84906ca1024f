#include "smps/ci.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace smps {
namespace {

constexpr int kCiCap = 10;

void check_ci_input(const CiCoefficients& c, int num_sites, const char* who) {
    if (c.orbitals.num_orbitals != 4)
        throw std::invalid_argument(std::string(who) + ": requires exactly 4 orbitals");
    if (c.orbitals.num_sites != num_sites)
        throw shape_error(std::string(who) + ": orbital rows do not match L");
    const auto report = validate(c.orbitals);
    if (!report.ok)
        throw validation_error(std::string(who) + ": orbitals not orthonormal (deviation " +
                               std::to_string(report.max_deviation) + ")");
}

} // namespace

Mpo build_ci_block_mpo(const CiCoefficients& c, int num_sites) {
    check_ci_input(c, num_sites, "build_ci_block_mpo");
    const auto stat = Statistics::fermion();
    std::array<Mpo, 4> singles;
    for (int a = 0; a < 4; ++a)
        singles[a] = build_creation_mpo(c.orbitals.phi.row(a), num_sites, stat);

    Mpo mpo;
    mpo.num_sites = num_sites;
    mpo.sites.resize(num_sites);
    for (int l = 0; l < num_sites; ++l) {
        auto& site = mpo.sites[l];
        for (int s = 0; s < 2; ++s)
            for (int r = 0; r < 2; ++r) {
                // Stacked pair tensor sum_k B^{[l,first]}_s^k x B^{[l,second]}_k^r,
                // one 4x4 block per pair on the diagonal.
                CMatrix block = CMatrix::Zero(8, 8);
                for (int pair = 0; pair < 2; ++pair) {
                    const auto& top = singles[2 * pair].sites[l].B;
                    const auto& bottom = singles[2 * pair + 1].sites[l].B;
                    CMatrix stacked = CMatrix::Zero(4, 4);
                    for (int k = 0; k < 2; ++k) stacked += kron(top[s][k], bottom[k][r]);
                    block.block(4 * pair, 4 * pair, 4, 4) = stacked;
                }
                site.B[s][r] = block;
            }
    }
    // (b_0| = (1 1) x (0 0 0 1), |b_L) = (alpha beta)^T x (1 0 0 0)^T.
    mpo.left_boundary = CRowVector::Zero(8);
    mpo.left_boundary(3) = 1.0;
    mpo.left_boundary(7) = 1.0;
    mpo.right_boundary = CVector::Zero(8);
    mpo.right_boundary(0) = c.alpha;
    mpo.right_boundary(4) = c.beta;
    return mpo;
}

Mpo build_ci_compact_mpo(const CiCoefficients& c, int num_sites) {
    check_ci_input(c, num_sites, "build_ci_compact_mpo");
    const CMatrix& phi = c.orbitals.phi;
    CMatrix diag = CMatrix::Identity(6, 6);
    for (int k = 1; k <= 4; ++k) diag(k, k) = -1.0;

    Mpo mpo;
    mpo.num_sites = num_sites;
    mpo.sites.resize(num_sites);
    for (int l = 0; l < num_sites; ++l) {
        auto& site = mpo.sites[l];
        site.B[0][0] = CMatrix::Identity(6, 6);
        site.B[0][1] = CMatrix::Zero(6, 6);
        CMatrix b10 = CMatrix::Zero(6, 6);
        b10(1, 0) = -c.alpha * phi(0, l);
        b10(2, 0) = -c.beta * phi(2, l);
        b10(3, 0) = c.beta * phi(3, l);
        b10(4, 0) = c.alpha * phi(1, l);
        b10(5, 1) = phi(1, l);
        b10(5, 2) = phi(3, l);
        b10(5, 3) = phi(2, l);
        b10(5, 4) = phi(0, l);
        site.B[1][0] = std::move(b10);
        site.B[1][1] = diag;
    }
    mpo.left_boundary = CRowVector::Zero(6);
    mpo.left_boundary(5) = 1.0; // (5|
    mpo.right_boundary = CVector::Zero(6);
    mpo.right_boundary(0) = 1.0; // |0)
    return mpo;
}

DenseOperator ci_dense_oracle(const CiCoefficients& c, int num_sites) {
    check_ci_input(c, num_sites, "ci_dense_oracle");
    if (num_sites > kCiCap || num_sites > max_dense_sites())
        throw size_cap_error("ci_dense_oracle: L = " + std::to_string(num_sites) +
                             " exceeds the oracle cap");
    const auto stat = Statistics::fermion();
    std::array<DenseOperator, 4> m;
    for (int a = 0; a < 4; ++a)
        m[a] = jw_dense_creation(c.orbitals.phi.row(a), num_sites, stat);
    return c.alpha * (m[0] * m[1]) + c.beta * (m[2] * m[3]);
}

CiEntropyReport ci_entropy_bound_check(const CiCoefficients& c, int num_sites) {
    check_ci_input(c, num_sites, "ci_entropy_bound_check");
    if (num_sites % 2 != 0)
        throw std::invalid_argument("ci_entropy_bound_check: L must be even");
    if (num_sites > kCiCap || num_sites > max_dense_sites())
        throw size_cap_error("ci_entropy_bound_check: L exceeds the oracle cap");
    DenseState psi = ci_dense_oracle(c, num_sites).col(0); // Theta |Omega>
    const double norm = psi.norm();
    if (norm < 1e-14)
        throw validation_error("ci_entropy_bound_check: Theta|Omega> has zero norm");
    psi /= norm;

    CiEntropyReport report;
    report.entropy.cut_position = num_sites / 2;
    report.entropy.bond_dimension_at_cut = 6;
    report.entropy.entropy_nats = vn_entropy(partial_trace(psi, num_sites, num_sites / 2));
    report.bound_nats = std::log(6.0);
    report.within_bound = report.entropy.entropy_nats <= report.bound_nats + 1e-9;
    return report;
}

} // namespace smps
