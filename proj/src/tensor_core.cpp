#include "smps/tensor_core.hpp"

#include <cstdlib>
#include <string>

namespace smps {

int max_dense_sites() {
    int cap = kMaxDenseSites;
    if (const char* env = std::getenv("SLATER_MPS_MAX_L")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1 && v < cap) cap = static_cast<int>(v);
    }
    return cap;
}

const CMatrix& pauli_id() {
    static const CMatrix m = CMatrix::Identity(2, 2);
    return m;
}

const CMatrix& pauli_z() {
    static const CMatrix m = (CMatrix(2, 2) << 1, 0, 0, -1).finished();
    return m;
}

const CMatrix& sigma_minus() {
    static const CMatrix m = (CMatrix(2, 2) << 0, 0, 1, 0).finished();
    return m;
}

const CMatrix& sigma_plus() {
    static const CMatrix m = (CMatrix(2, 2) << 0, 1, 0, 0).finished();
    return m;
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows())
        throw shape_error("matmul: inner dimensions differ (" + std::to_string(a.cols()) +
                          " vs " + std::to_string(b.rows()) + ")");
    return a * b;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

std::vector<double> hermitian_eigvals(const CMatrix& m, double tol) {
    if (m.rows() != m.cols())
        throw shape_error("hermitian_eigvals: matrix is not square");
    const double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (dev > tol)
        throw validation_error("hermitian_eigvals: input is not Hermitian (deviation " +
                               std::to_string(dev) + ")");
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(m, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

CMatrix partial_trace(const DenseState& state, int num_sites, int keep_sites) {
    if (num_sites < 1 || state.size() != (Eigen::Index{1} << num_sites))
        throw shape_error("partial_trace: state dimension is not 2^L");
    if (keep_sites < 1 || keep_sites > num_sites)
        throw std::invalid_argument("partial_trace: keep_sites out of range");
    const Eigen::Index rows = Eigen::Index{1} << keep_sites;
    const Eigen::Index cols = Eigen::Index{1} << (num_sites - keep_sites);
    using RowMajorMap =
        Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;
    RowMajorMap m(state.data(), rows, cols);
    return m * m.adjoint();
}

} // namespace smps
