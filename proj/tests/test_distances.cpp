#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "wdist/distances.hpp"
#include "wdist/errors.hpp"

#include <cmath>
#include <numbers>

using namespace wdist;
using testsup::random_hermitian;
using testsup::random_state;

namespace {

constexpr double kPi = std::numbers::pi;

DensityMatrix one(const StateFactor& f) {
    StateSpec s;
    s.factors.push_back(f);
    return build_state(s);
}

DensityMatrix zeros(int n) { return one(basis_factor(std::string(n, '0'))); }

DensityMatrix plus_state() {
    CMatrix m(2);
    m(0, 0) = m(0, 1) = m(1, 0) = m(1, 1) = 0.5;
    return DensityMatrix{1, m};
}

} // namespace

TEST_CASE("uhlmann_fidelity reference values") {
    std::mt19937_64 rng(31);
    const DensityMatrix rho = random_state(2, rng);
    CHECK(uhlmann_fidelity(rho, rho) == doctest::Approx(1.0).epsilon(1e-10));

    const cplx a(0.6, 0.0), b(0.8, 0.0);
    CHECK(uhlmann_fidelity(zeros(1), one(class_factor(1, a, b))) ==
          doctest::Approx(0.6).epsilon(1e-10));

    // class_N vs ghz_N at N = 3
    const double expect = std::sqrt(std::pow(0.6, 4) + std::pow(0.8, 4));
    CHECK(uhlmann_fidelity(one(class_factor(3, a, b)), one(ghz_factor(3, a, b))) ==
          doctest::Approx(expect).epsilon(1e-10));

    // symmetric in its arguments
    const DensityMatrix sigma = random_state(2, rng);
    CHECK(std::abs(uhlmann_fidelity(rho, sigma) - uhlmann_fidelity(sigma, rho)) < 1e-10);

    CHECK_THROWS_AS(uhlmann_fidelity(zeros(1), zeros(2)), DimensionMismatchError);
}

TEST_CASE("bures_length reference values") {
    for (int k : {1, 2, 3}) {
        StateSpec flip;
        flip.factors.push_back(basis_factor(std::string(k, '1')));
        if (k < 3) flip.factors.push_back(basis_factor(std::string(3 - k, '0')));
        const BuresValue v = bures_length(zeros(3), build_state(flip));
        CHECK(v.length == doctest::Approx(kPi / 2).epsilon(1e-10));
    }

    std::mt19937_64 rng(32);
    const DensityMatrix rho = random_state(2, rng);
    CHECK(bures_length(rho, rho).length < 1e-7);

    // |0>^N vs ghz_l^(x k) (x) |0>^(N-kl) has length arccos(a^k)
    const cplx a(0.6, 0.0), b(0.8, 0.0);
    StateSpec s;
    s.factors.push_back(ghz_factor(2, a, b));
    s.factors.push_back(ghz_factor(2, a, b));
    const BuresValue v = bures_length(zeros(4), build_state(s));
    CHECK(v.length == doctest::Approx(std::acos(0.36)).epsilon(1e-10));
    CHECK(v.length == doctest::Approx(std::acos(v.fidelity)));
}

TEST_CASE("fisher_speed") {
    SUBCASE("zero derivative") {
        std::mt19937_64 rng(33);
        const DensityMatrix rho = random_state(2, rng);
        CHECK(fisher_speed(rho, CMatrix(4)) == 0.0);
    }

    SUBCASE("pure |+> rotated by diag(1,-1) moves at unit speed") {
        const DensityMatrix rho = plus_state();
        CMatrix h(2);
        h(0, 0) = 1.0;
        h(1, 1) = -1.0;
        const CMatrix rate = commutator_rate(h, rho.mat);
        CHECK(fisher_speed(rho, rate) == doctest::Approx(1.0).epsilon(1e-9));

        // finite-difference cross-check via the pure-state overlap
        const double dt = 1e-5;
        const CMatrix u = propagator(h, dt);
        const DensityMatrix rho1 = testsup::conjugate(rho, u);
        const double f = testsup::pure_state_fidelity(rho, rho1);
        const double fd = std::acos(std::min(f, 1.0)) / dt;
        CHECK(fd == doctest::Approx(1.0).epsilon(1e-6));
    }

    SUBCASE("diagonal path matches the closed form and the finite difference") {
        const double p = 0.3, q = 0.3;
        DensityMatrix rho{1, CMatrix(2)};
        rho.mat(0, 0) = p;
        rho.mat(1, 1) = 1.0 - p;
        CMatrix dot(2);
        dot(0, 0) = q;
        dot(1, 1) = -q;
        const double expect = std::sqrt(q * q / 4.0 * (1.0 / p + 1.0 / (1.0 - p)));
        CHECK(fisher_speed(rho, dot) == doctest::Approx(expect).epsilon(1e-12));

        const double dt = 1e-5;
        DensityMatrix rho1{1, CMatrix(2)};
        rho1.mat(0, 0) = p + q * dt;
        rho1.mat(1, 1) = 1.0 - p - q * dt;
        CHECK(testsup::bures_rate(rho, rho1, dt) == doctest::Approx(expect).epsilon(1e-4));
    }

    SUBCASE("population change on a vanishing eigenvalue is singular") {
        DensityMatrix rho{1, CMatrix(2)};
        rho.mat(0, 0) = 1.0;
        CMatrix dot(2);
        dot(0, 0) = -0.1;
        dot(1, 1) = 0.1;
        CHECK_THROWS_AS(fisher_speed(rho, dot), SingularDirectionError);
    }

    SUBCASE("preconditions") {
        std::mt19937_64 rng(34);
        const DensityMatrix rho = random_state(1, rng);
        CMatrix notherm(2);
        notherm(0, 1) = 1.0;
        CHECK_THROWS_AS(fisher_speed(rho, notherm), NotHermitianError);
        CHECK_THROWS_AS(fisher_speed(rho, CMatrix::identity(2)), Error);
    }

    SUBCASE("matches the finite-difference Bures rate on full-rank unitary paths") {
        std::mt19937_64 rng(35);
        for (int trial = 0; trial < 5; ++trial) {
            const DensityMatrix rho = random_state(2, rng, 0.3);
            CMatrix h = random_hermitian(4, rng);
            const double s0 = fisher_speed(rho, commutator_rate(h, rho.mat));
            h = cplx(2.0 / s0, 0.0) * h; // normalize the path speed to 2
            const CMatrix rate = commutator_rate(h, rho.mat);
            const double speed = fisher_speed(rho, rate);
            const double dt = 1e-5;
            const DensityMatrix rho1 = testsup::conjugate(rho, propagator(h, dt));
            const double fd = testsup::bures_rate(rho, rho1, dt);
            CHECK(fd == doctest::Approx(speed).epsilon(1e-4));
        }
    }
}

TEST_CASE("hamiltonian_variance") {
    CMatrix h(2);
    h(0, 0) = 1.0;
    h(1, 1) = -1.0;

    DensityMatrix eig0{1, CMatrix(2)};
    eig0.mat(0, 0) = 1.0;
    CHECK(hamiltonian_variance(h, eig0) == doctest::Approx(0.0));

    CHECK(hamiltonian_variance(h, plus_state()) == doctest::Approx(1.0).epsilon(1e-12));

    std::mt19937_64 rng(36);
    for (int trial = 0; trial < 10; ++trial) {
        const DensityMatrix rho = random_state(2, rng, 0.1);
        const CMatrix hr = random_hermitian(4, rng);
        const double speed = fisher_speed(rho, commutator_rate(hr, rho.mat));
        CHECK(hamiltonian_variance(hr, rho) >= speed * speed - 1e-9);
    }

    CMatrix notherm(2);
    notherm(0, 1) = 1.0;
    std::mt19937_64 rng2(37);
    CHECK_THROWS_AS(hamiltonian_variance(notherm, random_state(1, rng2)), NotHermitianError);
}

TEST_CASE("seminorm") {
    CMatrix h(2);
    h(0, 0) = 1.7;
    h(1, 1) = -1.7;
    CHECK(seminorm(h) == doctest::Approx(1.7).epsilon(1e-12));
    CHECK(seminorm(CMatrix::identity(4)) == doctest::Approx(0.0));

    std::mt19937_64 rng(38);
    for (int trial = 0; trial < 10; ++trial) {
        const CMatrix hr = random_hermitian(4, rng);
        const DensityMatrix rho = random_state(2, rng);
        const double e = seminorm(hr);
        CHECK(e * e >= hamiltonian_variance(hr, rho) - 1e-9);
    }
}

TEST_CASE("metric properties of the Bures length") {
    std::mt19937_64 rng(39);

    SUBCASE("contractivity under local channels") {
        for (int trial = 0; trial < 10; ++trial) {
            const DensityMatrix rho = random_state(2, rng);
            const DensityMatrix sigma = random_state(2, rng);
            const auto kraus = testsup::random_qubit_channel(rng);
            const int target = static_cast<int>(rng() % 2);
            const DensityMatrix lr{2, apply_kraus(rho.mat, kraus, target)};
            const DensityMatrix ls{2, apply_kraus(sigma.mat, kraus, target)};
            CHECK(bures_length(lr, ls).length <= bures_length(rho, sigma).length + 1e-9);
        }
    }

    SUBCASE("unitary invariance") {
        for (int trial = 0; trial < 5; ++trial) {
            const DensityMatrix rho = random_state(2, rng);
            const DensityMatrix sigma = random_state(2, rng);
            const CMatrix u = testsup::random_unitary(4, rng);
            const double before = bures_length(rho, sigma).length;
            const double after =
                bures_length(testsup::conjugate(rho, u), testsup::conjugate(sigma, u)).length;
            CHECK(std::abs(before - after) < 1e-10);
        }
    }

    SUBCASE("triangle inequality") {
        for (int trial = 0; trial < 10; ++trial) {
            const DensityMatrix x = random_state(2, rng);
            const DensityMatrix y = random_state(2, rng);
            const DensityMatrix z = random_state(2, rng);
            CHECK(bures_length(x, z).length <=
                  bures_length(x, y).length + bures_length(y, z).length + 1e-9);
        }
    }
}
