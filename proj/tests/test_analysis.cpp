#include "doctest.h"

#include <cmath>

#include "chiralcav/analysis.hpp"
#include "chiralcav/testing.hpp"

using namespace chiralcav;

namespace {

const ModelParams kRef{1.0, 0.09, 0.04};

}  // namespace

TEST_CASE("one-photon exchange asymmetry") {
    const auto r = exchange_asymmetry(kRef, {1, 0}, 1.0);
    CHECK(r.to_state == FockState{0, 1});
    CHECK(r.amplitude_ratio == doctest::Approx(2.25).epsilon(1e-14));
    CHECK(r.sector_prob_forward / r.sector_prob_backward ==
          doctest::Approx(5.0625).epsilon(1e-13));
    CHECK(r.db_asymmetry == doctest::Approx(7.0436503622272495).epsilon(1e-13));
    CHECK_FALSE(r.infinite);

    const auto s = exchange_asymmetry(kRef.swapped(), {1, 0}, 1.0);
    CHECK(s.db_asymmetry == doctest::Approx(-r.db_asymmetry).epsilon(1e-13));

    // the probability ratio is the same at every reference time off the nodes
    for (double t : {0.1, 7.0, 40.0}) {
        CHECK(exchange_asymmetry(kRef, {1, 0}, t).db_asymmetry ==
              doctest::Approx(r.db_asymmetry).epsilon(1e-12));
    }

    const auto h = exchange_asymmetry({1.0, 0.06, 0.06}, {2, 1}, 3.0);
    CHECK(h.amplitude_ratio == doctest::Approx(1.0));
    CHECK(std::abs(h.db_asymmetry) < 1e-12);

    CHECK(coupling_ratio_for_db(r.db_asymmetry / 2.0) == doctest::Approx(1.5));
}

TEST_CASE("closed backward channel") {
    const auto r = exchange_asymmetry({1.0, 0.09, 0.0}, {1, 0}, 2.0);
    CHECK(r.infinite);
    CHECK(std::isinf(r.amplitude_ratio));
    CHECK(std::isinf(r.db_asymmetry));
    CHECK(r.db_asymmetry > 0.0);
}

TEST_CASE("asymmetry input validation") {
    CHECK_THROWS_AS((void)exchange_asymmetry(kRef, {0, 0}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)exchange_asymmetry(kRef, {0, 3}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)exchange_asymmetry(kRef, {1, 0}, 0.0), std::invalid_argument);
}

TEST_CASE("symmetry classification") {
    const FockBasis basis(4);

    const auto herm = classify_symmetry({1.0, 0.06, 0.06}, basis);
    CHECK(herm.regime == SymmetryRegime::reciprocal_hermitian);
    CHECK(herm.is_pt_symmetric);

    const auto pt = classify_symmetry(kRef, basis);
    CHECK(pt.regime == SymmetryRegime::nonreciprocal_pt);
    CHECK_FALSE(pt.is_hermitian);
    CHECK(pt.hermiticity_residual > 0.1);

    const auto h_complex =
        testing::hamiltonian_with_couplings(1.0, Complex(0.0, 0.09), 0.04, basis);
    const auto neither = classify_hamiltonian(h_complex, basis);
    CHECK(neither.regime == SymmetryRegime::neither);

    const auto h_chermitian = testing::hamiltonian_with_couplings(1.0, Complex(0.05, 0.02),
                                                                 Complex(0.05, -0.02), basis);
    const auto ch = classify_hamiltonian(h_chermitian, basis);
    CHECK(ch.is_hermitian);
    CHECK_FALSE(ch.is_pt_symmetric);
    CHECK(ch.regime == SymmetryRegime::reciprocal_hermitian);

    CHECK(to_string(SymmetryRegime::nonreciprocal_pt) == "nonreciprocal-PT");
}

TEST_CASE("similarity map onto the reciprocal model") {
    const auto m = similarity_map(kRef);
    CHECK(m.theta == doctest::Approx(0.2027325540540822).epsilon(1e-14));
    CHECK(m.g_eff == doctest::Approx(0.06));
    CHECK(similarity_map(kRef.swapped()).theta == doctest::Approx(-m.theta));

    const FockBasis basis(5);
    const auto d = similarity_operator(m, basis);
    const Matrix mapped = d.entries * hamiltonian(kRef, basis).entries * d.entries.inverse();
    CHECK(max_abs(mapped - hermitian_hamiltonian(1.0, 0.06, basis).entries) < 1e-14);

    const auto neg = similarity_map({1.0, -0.09, -0.04});
    CHECK(neg.hermitian_coupling == doctest::Approx(-0.06));

    CHECK_THROWS_AS((void)similarity_map({1.0, 0.09, -0.04}), DomainError);
}

TEST_CASE("RWA breakdown boundary") {
    CHECK(rwa_breakdown_check(kRef) == RwaStatus::ok);
    CHECK(rwa_breakdown_check({1.0, 1.0, 1.0}) == RwaStatus::ok);
    CHECK(rwa_breakdown_check({1.0, 1.2, 1.2}) == RwaStatus::breakdown);
    CHECK(rwa_breakdown_check({1.0, 2.25, 0.64}) == RwaStatus::breakdown);  // g = 1.2
    CHECK_THROWS_AS((void)rwa_breakdown_check({1.0, 0.0, 1.0}), DomainError);
}

TEST_CASE("verification report") {
    const FockBasis basis(4);
    const auto grid = default_time_grid(kRef, 9);
    CHECK(grid.back() == doctest::Approx(104.71975511965977));

    const auto ok = run_verification(kRef, 4, grid);
    for (const auto& c : ok.checks) {
        INFO(c.name << " residual " << c.residual << " tol " << c.tolerance);
        CHECK(c.passed);
    }
    CHECK(ok.find("operators.pt_symmetry") != nullptr);
    CHECK(ok.find("no.such.check") == nullptr);
    CHECK_FALSE(ok.reciprocal_block);

    const auto faulty = run_verification(kRef, 4, grid, {AlphaPlusForm::swapped_root});
    CHECK_FALSE(faulty.all_passed());
    const auto* hit = faulty.find("operators.intercavity_canonical_commutator");
    REQUIRE(hit != nullptr);
    CHECK_FALSE(hit->passed);
    CHECK(faulty.alpha_plus_discrepancy.faulty_residual ==
          doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(faulty_alpha_plus_residual(kRef) == doctest::Approx(1.0 / 6.0));

    const auto rec = run_verification({1.0, 0.06, 0.06}, 4, default_time_grid({1.0, 0.06, 0.06}, 9));
    CHECK(rec.reciprocal_block);
    CHECK(rec.all_passed());
    CHECK(rec.find("reciprocal.heisenberg_coeffs") != nullptr);

    const auto outside = run_verification({1.0, 0.09, -0.04}, 3, grid);
    CHECK_FALSE(outside.all_passed());
}
