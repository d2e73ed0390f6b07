#include "doctest.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "chiralcav/closed_form.hpp"
#include "chiralcav/propagator.hpp"
#include "oracles.hpp"

using namespace chiralcav;

namespace {

const ModelParams kRef{1.0, 0.09, 0.04};
constexpr double kQuarter = std::numbers::pi / 0.12;

}  // namespace

TEST_CASE("matrix exponential against independent routes") {
    std::mt19937_64 rng(20241016);

    SUBCASE("small norm vs Taylor") {
        for (int n : {1, 2, 5, 8}) {
            const Matrix m = oracle::random_matrix(rng, n, 0.05);
            CHECK(oracle::max_abs(matrix_exponential(m) - oracle::expm_taylor(m)) < 1e-15);
        }
    }
    SUBCASE("moderate norm vs eigendecomposition") {
        for (double scale : {0.3, 1.0, 3.0, 10.0}) {
            const Matrix m = oracle::random_matrix(rng, 6, scale);
            const Matrix ref = oracle::expm_eigen(m);
            CHECK(oracle::max_abs(matrix_exponential(m) - ref) <= 1e-11 * oracle::max_abs(ref));
        }
    }
    SUBCASE("2x2 off-diagonal block") {
        Matrix k(2, 2);
        k << 0.0, 0.04, 0.09, 0.0;
        const Matrix u = matrix_exponential(-kI * kQuarter * k);
        CHECK(oracle::max_abs(u - Matrix(oracle::exp_offdiag_2x2(0.04, 0.09, kQuarter))) < 1e-14);
        CHECK(std::abs(u(0, 1) - Complex(0.0, -2.0 / 3.0)) < 1e-14);
        CHECK(std::abs(u(1, 0) - Complex(0.0, -1.5)) < 1e-14);
        CHECK(std::abs(u(0, 0)) < 1e-14);
    }
    SUBCASE("zero and empty") {
        CHECK(matrix_exponential(Matrix::Zero(3, 3)).isIdentity(0.0));
        CHECK(matrix_exponential(Matrix(0, 0)).size() == 0);
    }
    SUBCASE("invalid input") {
        CHECK_THROWS_AS((void)matrix_exponential(Matrix::Zero(2, 3)), std::invalid_argument);
        Matrix bad = Matrix::Zero(2, 2);
        bad(0, 1) = std::numeric_limits<double>::quiet_NaN();
        CHECK_THROWS_AS((void)matrix_exponential(bad), std::invalid_argument);
    }
}

TEST_CASE("sector propagation") {
    Vector psi(2);
    psi << 0.0, 1.0;  // |1,0> in (|0,1>, |1,0>) order

    const Vector out = propagate_sector(kRef, 1, kQuarter, psi);
    CHECK(out.norm() == doctest::Approx(1.5).epsilon(1e-13));
    CHECK(std::abs(out(1)) < 1e-13);

    const Vector half = propagate_sector(kRef, 1, 2.0 * kQuarter, psi);
    CHECK(half.norm() == doctest::Approx(1.0).epsilon(1e-13));

    for (int n = 0; n <= 6; ++n) {
        for (double t : {0.5, 13.0, 70.0}) {
            CHECK(oracle::max_abs(sector_evolution(kRef, n, t) -
                                  sector_evolution_factorized(kRef, n, t)) < 1e-11);
        }
    }
    CHECK_THROWS_AS((void)propagate_sector(kRef, 1, 1.0, Vector::Zero(3)), std::invalid_argument);
}

TEST_CASE("sector eigenvalues are real and equally spaced") {
    for (int n = 0; n <= 6; ++n) {
        const auto ev = sector_eigenvalues(kRef, n);
        REQUIRE(ev.size() == std::size_t(n + 1));
        for (int k = 0; k <= n; ++k) {
            CHECK(std::abs(ev[k].imag()) < 1e-12);
            CHECK(ev[k].real() == doctest::Approx(1.0 + n - 0.06 * (n - 2 * k)).epsilon(1e-13));
        }
    }
}

TEST_CASE("numeric Heisenberg operators match the closed form") {
    const FockBasis basis(6);
    for (double t : {0.3, 1.7, 13.0}) {
        const auto k = heisenberg_coeffs(kRef, t);
        for (Ladder l : {Ladder::a, Ladder::a_dag, Ladder::b, Ladder::b_dag}) {
            const auto numeric = heisenberg_numeric(kRef, t, basis, l);
            const auto closed = heisenberg_operator(k, l, basis);
            CHECK(max_abs(numeric.entries - closed.entries) < 1e-12);
        }
    }
}

TEST_CASE("propagator and its inverse") {
    const FockBasis basis(5);
    const auto u = make_propagator(kRef, basis, 7.0);
    CHECK(max_abs(u.forward.entries * u.inverse.entries - Matrix::Identity(21, 21)) < 1e-12);
    CHECK(u.non_unitarity > 0.1);

    const auto h = make_propagator({1.0, 0.06, 0.06}, basis, 7.0);
    CHECK(h.non_unitarity < 1e-12);

    const auto na = number_operators(basis).n_a;
    const auto conj = conjugate_by_evolution(u, na);
    const auto closed = photon_number_operator_t(kRef, 7.0, Cavity::a, basis);
    CHECK(max_abs_interior(conj.entries - closed.entries, basis) < 1e-12);
}

TEST_CASE("coefficient ODE") {
    const auto ode = integrate_coefficient_ode(kRef, 2.5, 4000);
    const auto k = heisenberg_coeffs(kRef, 2.5);
    CHECK(std::abs(ode.c_aa - k.c_aa) < 1e-9);
    CHECK(std::abs(ode.c_ab - k.c_ab) < 1e-9);
    CHECK(std::abs(ode.c_ba - k.c_ba) < 1e-9);
    CHECK(std::abs(ode.d_ab - k.d_ab) < 1e-9);
    CHECK(std::abs(ode.d_ba - k.d_ba) < 1e-9);
    CHECK(std::abs(ode.d_bb - k.d_bb) < 1e-9);

    // outside the closed-form domain the ODE still runs: w_ba = 0 gives linear growth
    const auto open = integrate_coefficient_ode({1.0, 0.09, 0.0}, 2.0, 200);
    CHECK(std::abs(open.c_ab) < 1e-15);
    CHECK(std::abs(open.c_ba) == doctest::Approx(0.18).epsilon(1e-6));

    CHECK_THROWS_AS((void)integrate_coefficient_ode(kRef, 1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)integrate_coefficient_ode(kRef, std::numeric_limits<double>::infinity(),
                                                    10),
                    std::invalid_argument);
}

TEST_CASE("evolve_observables") {
    const FockBasis basis(4);
    const std::vector<double> times{0.0, 5.0, kQuarter};
    const auto series = evolve_observables(kRef, {1, 0}, times, basis);
    REQUIRE(series.samples.size() == 3);
    CHECK(series.sector_states.size() == 2);

    CHECK(series.samples[0].mean_na == doctest::Approx(1.0));
    CHECK(series.samples[0].schrodinger_norm == doctest::Approx(1.0));
    CHECK(series.samples[1].mean_na == doctest::Approx(0.9126678074548391).epsilon(1e-12));
    CHECK(series.samples[1].mean_nb == doctest::Approx(0.08733219254516084).epsilon(1e-12));
    CHECK(series.samples[2].schrodinger_norm == doctest::Approx(1.5).epsilon(1e-12));
    for (const auto& s : series.samples) CHECK(s.conservation_residual < 1e-12);

    const std::vector<double> descending{1.0, 0.5};
    CHECK_THROWS_AS((void)evolve_observables(kRef, {1, 0}, descending, basis),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)evolve_observables(kRef, {5, 0}, times, basis), std::out_of_range);
}
