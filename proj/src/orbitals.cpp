#include "smps/orbitals.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace smps {
namespace {

// Deterministic standard-normal source: mt19937_64 + Box-Muller. Keeps seeds
// portable; std::normal_distribution is implementation-defined.
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : rng_(seed) {}

    double operator()() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

    std::mt19937_64 rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

void check_counts(int num_sites, int num_orbitals, const char* who) {
    if (num_sites < 1)
        throw std::invalid_argument(std::string(who) + ": L must be >= 1");
    if (num_orbitals < 0 || num_orbitals > num_sites)
        throw std::invalid_argument(std::string(who) + ": requires 0 <= N <= L");
}

} // namespace

OrthonormalityReport validate(const OrbitalSet& set, double tol) {
    OrthonormalityReport report;
    if (set.num_orbitals == 0) {
        report.ok = true;
        return report;
    }
    CMatrix gram = set.phi * set.phi.adjoint();
    gram -= CMatrix::Identity(set.num_orbitals, set.num_orbitals);
    report.max_deviation = gram.cwiseAbs().maxCoeff();
    report.ok = report.max_deviation < tol;
    return report;
}

OrbitalSet random_orthonormal(int num_sites, int num_orbitals, std::uint64_t seed) {
    check_counts(num_sites, num_orbitals, "random_orthonormal");
    GaussianSource gauss(seed);
    CMatrix phi(num_orbitals, num_sites);
    for (int r = 0; r < num_orbitals; ++r)
        for (int c = 0; c < num_sites; ++c) {
            const double re = gauss();
            const double im = gauss();
            phi(r, c) = Complex(re, im);
        }
    // Modified Gram-Schmidt, two projection passes for orthogonality well
    // below the 1e-10 validation tolerance.
    for (int r = 0; r < num_orbitals; ++r) {
        for (int pass = 0; pass < 2; ++pass)
            for (int p = 0; p < r; ++p)
                phi.row(r) -= phi.row(p).dot(phi.row(r)) * phi.row(p);
        const double norm = phi.row(r).norm();
        if (norm < 1e-12)
            throw validation_error("random_orthonormal: degenerate Gaussian draw");
        phi.row(r) /= norm;
    }
    return OrbitalSet{num_sites, num_orbitals, std::move(phi)};
}

OrbitalSet plane_wave_set(int num_sites, int num_orbitals) {
    if (num_sites < 2 || num_sites % 2 != 0)
        throw std::invalid_argument("plane_wave_set: L must be even");
    if (num_orbitals < 0 || 2 * num_orbitals > num_sites)
        throw std::invalid_argument("plane_wave_set: requires 2N <= L");
    CMatrix phi(num_orbitals, num_sites);
    const double amplitude = 1.0 / std::sqrt(static_cast<double>(num_sites));
    for (int alpha = 1; alpha <= num_orbitals; ++alpha)
        for (int site = 1; site <= num_sites; ++site)
            phi(alpha - 1, site - 1) =
                std::polar(amplitude, 4.0 * std::numbers::pi * alpha * site / num_sites);
    return OrbitalSet{num_sites, num_orbitals, std::move(phi)};
}

OrbitalSet localized_set(int num_sites, int num_orbitals) {
    check_counts(num_sites, num_orbitals, "localized_set");
    CMatrix phi = CMatrix::Zero(num_orbitals, num_sites);
    for (int r = 0; r < num_orbitals; ++r) phi(r, r) = 1.0;
    return OrbitalSet{num_sites, num_orbitals, std::move(phi)};
}

std::pair<OrbitalSet, OrbitalSet> split_halves(const OrbitalSet& set) {
    if (set.num_sites % 2 != 0)
        throw std::invalid_argument("split_halves: L must be even");
    const int half = set.num_sites / 2;
    const double scale = std::sqrt(2.0);
    CMatrix left = CMatrix::Zero(set.num_orbitals, set.num_sites);
    CMatrix right = CMatrix::Zero(set.num_orbitals, set.num_sites);
    left.leftCols(half) = scale * set.phi.leftCols(half);
    right.rightCols(half) = scale * set.phi.rightCols(half);
    return {OrbitalSet{set.num_sites, set.num_orbitals, std::move(left)},
            OrbitalSet{set.num_sites, set.num_orbitals, std::move(right)}};
}

OrbitalSet complete_basis(const OrbitalSet& set) {
    const auto report = validate(set);
    if (!report.ok)
        throw validation_error("complete_basis: input set is not orthonormal (deviation " +
                               std::to_string(report.max_deviation) + ")");
    const int L = set.num_sites;
    CMatrix full(L, L);
    full.topRows(set.num_orbitals) = set.phi;
    int have = set.num_orbitals;
    for (int j = 0; j < L && have < L; ++j) {
        CRowVector candidate = CRowVector::Zero(L);
        candidate(j) = 1.0;
        for (int pass = 0; pass < 2; ++pass)
            for (int r = 0; r < have; ++r)
                candidate -= full.row(r).dot(candidate) * full.row(r);
        const double norm = candidate.norm();
        if (norm < 1e-8) continue; // canonical vector nearly dependent on the span
        full.row(have) = candidate / norm;
        ++have;
    }
    if (have < L)
        throw validation_error("complete_basis: could not reach a full basis");
    return OrbitalSet{L, L, std::move(full)};
}

} // namespace smps
