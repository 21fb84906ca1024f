#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "smps/ci.hpp"
#include "smps/mps.hpp"
#include "test_helpers.hpp"

using namespace smps;
using test_util::max_abs_diff;

namespace {

CiCoefficients make_ci(Complex alpha, Complex beta, const OrbitalSet& set) {
    return CiCoefficients{alpha, beta, set};
}

DenseOperator pair_product(const OrbitalSet& set, int first, int second) {
    const auto stat = Statistics::fermion();
    return jw_dense_creation(set.phi.row(first - 1), set.num_sites, stat) *
           jw_dense_creation(set.phi.row(second - 1), set.num_sites, stat);
}

} // namespace

TEST_CASE("block MPO with one pair switched off", "[ci]") {
    const OrbitalSet set = random_orthonormal(5, 4, 2);
    const Mpo only_12 = build_ci_block_mpo(make_ci(1.0, 0.0, set), 5);
    CHECK(only_12.sites[0].left_dim() == 8);
    CHECK(max_abs_diff(mpo_to_dense(only_12), pair_product(set, 1, 2)) < 1e-13);

    const Mpo only_34 = build_ci_block_mpo(make_ci(0.0, 1.0, set), 5);
    CHECK(max_abs_diff(mpo_to_dense(only_34), pair_product(set, 3, 4)) < 1e-13);
}

TEST_CASE("block MPO matches the dense oracle", "[ci]") {
    const Complex alpha = Complex(1.0, 0.5) / std::sqrt(2.5); // |alpha|^2 = 1/2
    const Complex beta = Complex(0.0, -1.0) / std::sqrt(2.0);
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const OrbitalSet set = random_orthonormal(6, 4, seed);
        const CiCoefficients c = make_ci(alpha, beta, set);
        CHECK(max_abs_diff(mpo_to_dense(build_ci_block_mpo(c, 6)), ci_dense_oracle(c, 6)) < 1e-12);
    }
}

TEST_CASE("compact MPO site tensors follow the displayed matrices", "[ci]") {
    const OrbitalSet set = random_orthonormal(4, 4, 9);
    const Complex alpha(0.3, -0.4);
    const Complex beta(0.8, 0.1);
    const Mpo mpo = build_ci_compact_mpo(make_ci(alpha, beta, set), 4);
    CHECK(mpo.sites[0].left_dim() == 6);
    for (int l = 0; l < 4; ++l) {
        const CMatrix& b10 = mpo.sites[l].B[1][0];
        CHECK(std::abs(b10(1, 0) + alpha * set.phi(0, l)) < 1e-15); // -alpha phi_1
        CHECK(std::abs(b10(2, 0) + beta * set.phi(2, l)) < 1e-15);  // -beta phi_3
        CHECK(std::abs(b10(3, 0) - beta * set.phi(3, l)) < 1e-15);  //  beta phi_4
        CHECK(std::abs(b10(4, 0) - alpha * set.phi(1, l)) < 1e-15); //  alpha phi_2
        CHECK(std::abs(b10(5, 1) - set.phi(1, l)) < 1e-15);
        CHECK(std::abs(b10(5, 2) - set.phi(3, l)) < 1e-15);
        CHECK(std::abs(b10(5, 3) - set.phi(2, l)) < 1e-15);
        CHECK(std::abs(b10(5, 4) - set.phi(0, l)) < 1e-15);

        CMatrix diag = CMatrix::Identity(6, 6);
        for (int k = 1; k <= 4; ++k) diag(k, k) = -1.0;
        CHECK(max_abs_diff(mpo.sites[l].B[1][1], diag) == 0.0);
        CHECK(max_abs_diff(mpo.sites[l].B[0][0], CMatrix::Identity(6, 6)) == 0.0);
        CHECK(mpo.sites[l].B[0][1].cwiseAbs().maxCoeff() == 0.0);
    }
    // boundaries (5| and |0)
    CHECK(mpo.left_boundary(5) == Complex(1.0, 0.0));
    CHECK(mpo.left_boundary.head(5).cwiseAbs().maxCoeff() == 0.0);
    CHECK(mpo.right_boundary(0) == Complex(1.0, 0.0));
    CHECK(mpo.right_boundary.tail(5).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("determinant sign convention on localized orbitals", "[ci]") {
    const OrbitalSet set = localized_set(4, 4);
    const Mpo mpo = build_ci_compact_mpo(make_ci(1.0, 0.0, set), 4);
    DenseState vacuum = DenseState::Zero(16);
    vacuum(0) = 1.0;
    const DenseState state = mpo_to_dense(mpo) * vacuum;
    DenseState expected = DenseState::Zero(16);
    expected(Occupation::from_string("1100").to_index()) = 1.0;
    CHECK((state - expected).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("compact and block representations agree", "[ci]") {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const int sites = 4 + trial % 3;
        const OrbitalSet set = random_orthonormal(sites, 4, static_cast<std::uint64_t>(trial));
        const CiCoefficients c =
            make_ci(Complex(dist(rng), dist(rng)), Complex(dist(rng), dist(rng)), set);
        const DenseOperator block = mpo_to_dense(build_ci_block_mpo(c, sites));
        const DenseOperator compact = mpo_to_dense(build_ci_compact_mpo(c, sites));
        CHECK(max_abs_diff(block, compact) < 1e-12);
        CHECK(max_abs_diff(compact, ci_dense_oracle(c, sites)) < 1e-12);
    }
}

TEST_CASE("dense oracle action on the vacuum", "[ci]") {
    const OrbitalSet set = random_orthonormal(6, 4, 15);
    const Complex alpha(0.6, 0.0);
    const Complex beta(0.0, 0.8);
    const CiCoefficients c = make_ci(alpha, beta, set);
    const DenseState state = ci_dense_oracle(c, 6).col(0);

    for (std::size_t idx = 0; idx < 64; ++idx)
        if (Occupation::from_index(idx, 6).particle_count() != 2)
            CHECK(std::abs(state(idx)) < 1e-14); // two-particle support only

    // orthonormal orbitals make the two determinant branches orthogonal
    CHECK(std::abs(state.norm() - std::sqrt(std::norm(alpha) + std::norm(beta))) < 1e-12);

    // explicit coefficient of c_1^+ c_2^+ at (l1, l2) = (1, 2)
    const Complex expected =
        alpha * (set.phi(0, 0) * set.phi(1, 1) - set.phi(1, 0) * set.phi(0, 1)) +
        beta * (set.phi(2, 0) * set.phi(3, 1) - set.phi(3, 0) * set.phi(2, 1));
    CHECK(std::abs(state(Occupation::from_string("110000").to_index()) - expected) < 1e-13);
}

TEST_CASE("dense MPO is linear in alpha and beta", "[ci]") {
    const OrbitalSet set = random_orthonormal(4, 4, 21);
    const Complex alpha(0.2, 0.3);
    const Complex alpha_prime(-0.7, 0.1);
    const Complex beta(0.5, -0.5);
    const DenseOperator combined =
        mpo_to_dense(build_ci_block_mpo(make_ci(alpha + alpha_prime, beta, set), 4));
    const DenseOperator split =
        mpo_to_dense(build_ci_block_mpo(make_ci(alpha, beta, set), 4)) +
        mpo_to_dense(build_ci_block_mpo(make_ci(alpha_prime, 0.0, set), 4));
    CHECK(max_abs_diff(combined, split) < 1e-12);
}

TEST_CASE("entropy of Theta|Omega> stays within the ln 6 bound", "[ci]") {
    // single determinant limit: entropy of a 2-fermion Slater state
    const OrbitalSet pw = plane_wave_set(8, 4);
    const auto single = ci_entropy_bound_check(make_ci(1.0, 0.0, pw), 8);
    CHECK(single.within_bound);
    CHECK(single.entropy.entropy_nats <= 2 * std::numbers::ln2 + 1e-9);
    OrbitalSet first_two{8, 2, pw.phi.topRows(2)};
    const auto slater = halfcut_entropy(build_slater_mps(first_two, Statistics::fermion()));
    CHECK(single.entropy.entropy_nats == Catch::Approx(slater.entropy_nats).margin(1e-10));

    // beta = 0 with fully left-localized orbitals: product across the cut
    OrbitalSet left{8, 4, CMatrix::Zero(4, 8)};
    for (int r = 0; r < 4; ++r) left.phi(r, r) = 1.0;
    const auto localized = ci_entropy_bound_check(make_ci(1.0, 0.0, left), 8);
    CHECK(localized.entropy.entropy_nats == Catch::Approx(0.0).margin(1e-12));

    // sweep over superposition weights
    for (int step = 0; step <= 4; ++step) {
        const double theta = step * std::numbers::pi / 8;
        const auto report =
            ci_entropy_bound_check(make_ci(std::cos(theta), std::sin(theta), pw), 8);
        CHECK(report.within_bound);
        CHECK(report.bound_nats == Catch::Approx(std::log(6.0)));
    }
}

TEST_CASE("ci input validation", "[ci]") {
    const OrbitalSet three = random_orthonormal(5, 3, 1);
    CHECK_THROWS_AS(build_ci_block_mpo(make_ci(1.0, 0.0, three), 5), std::invalid_argument);
    const OrbitalSet four = random_orthonormal(5, 4, 1);
    CHECK_THROWS_AS(build_ci_compact_mpo(make_ci(1.0, 0.0, four), 6), shape_error);
    OrbitalSet skewed = four;
    skewed.phi *= 1.1;
    CHECK_THROWS_AS(ci_dense_oracle(make_ci(1.0, 0.0, skewed), 5), validation_error);
    const OrbitalSet wide = random_orthonormal(11, 4, 1);
    CHECK_THROWS_AS(ci_dense_oracle(make_ci(1.0, 0.0, wide), 11), size_cap_error);
    CHECK_THROWS_AS(ci_entropy_bound_check(make_ci(1.0, 0.0, four), 5), std::invalid_argument);
}
