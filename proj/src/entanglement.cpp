#include "smps/entanglement.hpp"

#include <cmath>
#include <string>

namespace smps {

double vn_entropy(const CMatrix& rho) {
    std::vector<double> eigs;
    try {
        eigs = hermitian_eigvals(rho, 1e-8);
    } catch (const shape_error&) {
        throw validation_error("vn_entropy: density matrix is not square");
    }
    const double trace_dev = std::abs(rho.trace().real() - 1.0) + std::abs(rho.trace().imag());
    if (trace_dev > 1e-8)
        throw validation_error("vn_entropy: trace deviates from 1 by " +
                               std::to_string(trace_dev));
    double entropy = 0.0;
    for (double lambda : eigs) {
        if (lambda < -1e-10)
            throw validation_error("vn_entropy: negative eigenvalue " + std::to_string(lambda));
        if (lambda > 1e-14) entropy -= lambda * std::log(lambda);
    }
    return entropy;
}

EntropyReport halfcut_entropy(const Mps& mps) {
    const int L = mps.num_sites;
    if (L % 2 != 0)
        throw std::invalid_argument("halfcut_entropy: L must be even");
    if (L > max_dense_sites())
        throw size_cap_error("halfcut_entropy: L = " + std::to_string(L) +
                             " exceeds the dense cap of " + std::to_string(max_dense_sites()));
    DenseState psi = mps_to_dense(mps);
    const double norm = psi.norm();
    if (norm < 1e-14)
        throw validation_error("halfcut_entropy: state has zero norm");
    psi /= norm;
    EntropyReport report;
    report.cut_position = L / 2;
    report.bond_dimension_at_cut = mps.bond_dim_at(L / 2);
    report.entropy_nats = vn_entropy(partial_trace(psi, L, L / 2));
    return report;
}

bool reduced_spectrum_check(const Mps& mps) {
    const int L = mps.num_sites;
    if (L % 2 != 0)
        throw std::invalid_argument("reduced_spectrum_check: L must be even");
    if (L > max_dense_sites())
        throw size_cap_error("reduced_spectrum_check: L exceeds the dense cap");
    const Eigen::Index bond = mps.bond_dim_at(L / 2);
    int n = 0;
    while ((Eigen::Index{1} << n) < bond) ++n;
    if ((Eigen::Index{1} << n) != bond)
        throw std::invalid_argument("reduced_spectrum_check: bond dimension is not a power of 2");

    DenseState psi = mps_to_dense(mps);
    const double norm = psi.norm();
    if (norm < 1e-14) return false;
    psi /= norm;
    const auto eigs = hermitian_eigvals(partial_trace(psi, L, L / 2), 1e-8);

    const double expected = 1.0 / static_cast<double>(Eigen::Index{1} << n);
    Eigen::Index nonzero = 0;
    for (double lambda : eigs) {
        if (lambda <= 1e-9) continue;
        if (std::abs(lambda - expected) > 1e-9) return false;
        ++nonzero;
    }
    return nonzero == (Eigen::Index{1} << n);
}

} // namespace smps
