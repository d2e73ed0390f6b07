#pragma once

#include <vector>

#include "chiralcav/fock_basis.hpp"
#include "chiralcav/model.hpp"
#include "chiralcav/operators.hpp"

namespace chiralcav {

/// Heisenberg-picture ladder operators expressed through the initial ones:
///   a(t)  = c_aa a0  + c_ab b0       b(t)  = c_ba a0  + c_bb b0
///   a+(t) = d_aa a0+ + d_ab b0+      b+(t) = d_ba a0+ + d_bb b0+
/// For a non-hermitian H the d coefficients are not the conjugates of c.
struct HeisenbergCoeffs {
    double time = 0.0;
    Complex c_aa{1.0}, c_ab{}, c_ba{}, c_bb{1.0};
    Complex d_aa{1.0}, d_ab{}, d_ba{}, d_bb{1.0};
};

struct Eigenfrequencies {
    double alpha = 0.0;  // w0 - g_eff
    double beta = 0.0;   // w0 + g_eff
};

struct SpectrumEntry {
    int n_alpha = 0;
    int n_beta = 0;
    double energy = 0.0;
    bool rwa_breakdown = false;  // energy < 0
};

enum class Cavity { a, b };

/// Amplitudes are reported either modulo exp(-i H0 t) or with it.
enum class PhaseConvention { stripped, full };

struct WeightedState {
    FockState state;
    Complex weight;
};
using Superposition = std::vector<WeightedState>;

struct PhotonMeans {
    double a = 0.0;
    double b = 0.0;
};

// All closed-form routes below throw DomainError unless w_ab * w_ba > 0.

[[nodiscard]] Eigenfrequencies eigenfrequencies(const ModelParams& params);
[[nodiscard]] HeisenbergCoeffs heisenberg_coeffs(const ModelParams& params, double t);

/// c_aa a0 + c_ab b0 (and the three analogues) as a matrix on `basis`.
[[nodiscard]] OperatorMatrix heisenberg_operator(const HeisenbergCoeffs& coeffs, Ladder which,
                                                 const FockBasis& basis);

/// N^A(t) or N^B(t) assembled from the t = 0 ladder matrices.
[[nodiscard]] OperatorMatrix photon_number_operator_t(const ModelParams& params, double t,
                                                      Cavity cavity, const FockBasis& basis);

/// Number-state matrix elements <n_a,n_b| N^X(t) |n_a,n_b>.
[[nodiscard]] PhotonMeans expected_photons(const ModelParams& params, int n_a, int n_b, double t);

/// which(t)|state>, at most two terms; zero-weight branches are omitted.
[[nodiscard]] Superposition apply_ladder_t(const ModelParams& params, double t, Ladder which,
                                           const FockState& state);

/// H_I|state>. Valid for any real couplings, including zero.
[[nodiscard]] Superposition apply_interaction(const ModelParams& params, const FockState& state);

/// First-order element <to| 1 - i H_I t |from>. No validity cutoff on t; see
/// smallness_ratio. With PhaseConvention::full the exp(-i H0 t) phase of the
/// initial sector is included.
[[nodiscard]] Complex small_time_amplitude(const ModelParams& params, const FockState& from,
                                           const FockState& to, double t,
                                           PhaseConvention phase = PhaseConvention::stripped);

/// t * max(|w_ab|, |w_ba|); the first-order expansion is meaningful when this is small.
[[nodiscard]] double smallness_ratio(const ModelParams& params, double t) noexcept;

/// Every (n_alpha, n_beta) with n_alpha + n_beta <= n_total_max, ordered by
/// total then ascending n_alpha.
[[nodiscard]] std::vector<SpectrumEntry> spectrum(const ModelParams& params, int n_total_max);

/// Reciprocal (hermitian) model with a single coupling g, written out directly
/// rather than as a special case of the general routes. Used as a regression oracle.
namespace reciprocal {

[[nodiscard]] Eigenfrequencies eigenfrequencies(double omega0, double g);
[[nodiscard]] HeisenbergCoeffs heisenberg_coeffs(double omega0, double g, double t);
[[nodiscard]] OperatorMatrix photon_number_operator_t(double g, double t, Cavity cavity,
                                                      const FockBasis& basis);
[[nodiscard]] Complex first_order_amplitude(double g, const FockState& from, const FockState& to,
                                            double t);

}  // namespace reciprocal

}  // namespace chiralcav
