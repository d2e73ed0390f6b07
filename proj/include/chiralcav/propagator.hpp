#pragma once

#include <span>
#include <vector>

#include "chiralcav/closed_form.hpp"
#include "chiralcav/fock_basis.hpp"
#include "chiralcav/model.hpp"
#include "chiralcav/operators.hpp"

namespace chiralcav {

/// exp(M) by scaling and squaring around a degree-13 Pade approximant.
/// Throws std::invalid_argument for non-square or non-finite input.
[[nodiscard]] Matrix matrix_exponential(const Matrix& m);

/// exp(-iHt) and exp(+iHt) on a whole basis, assembled sector by sector.
struct Propagator {
    double time = 0.0;
    OperatorMatrix forward;
    OperatorMatrix inverse;
    /// ||forward^dagger forward - I||_max. Zero only for hermitian H; never asserted small.
    double non_unitarity = 0.0;
};

[[nodiscard]] Propagator make_propagator(const ModelParams& params, const FockBasis& basis,
                                         double t);

/// exp(-i H_N t) for sector N, exponentiating the full block directly.
[[nodiscard]] Matrix sector_evolution(const ModelParams& params, int total, double t);

/// exp(-i H0 t) exp(-i H_I t) for sector N; H0 is the scalar w0 (N+1) there.
[[nodiscard]] Matrix sector_evolution_factorized(const ModelParams& params, int total, double t);

/// exp(-iHt) applied to a coefficient vector of sector N (ascending n_a).
/// No renormalization: the norm grows or shrinks when w_ab != w_ba.
[[nodiscard]] Vector propagate_sector(const ModelParams& params, int total, double t,
                                      const Vector& initial);

/// exp(+iHt) X exp(-iHt) for a ladder operator, computed between adjacent sectors.
[[nodiscard]] OperatorMatrix heisenberg_numeric(const ModelParams& params, double t,
                                                const FockBasis& basis, Ladder which);

/// exp(+iHt) X exp(-iHt) for an arbitrary sector-diagonal or ladder-like operator.
[[nodiscard]] OperatorMatrix conjugate_by_evolution(const Propagator& u, const OperatorMatrix& x);

/// Fixed-step RK4 on the 2x2 coefficient systems
///   dC/dt = -i [[w0, -w_ba], [-w_ab, w0]] C,   dD/dt = +i [[w0, -w_ab], [-w_ba, w0]] D.
/// Works for any real couplings. Throws std::invalid_argument for steps < 1 or non-finite input.
[[nodiscard]] HeisenbergCoeffs integrate_coefficient_ode(const ModelParams& params,
                                                         double t_final, int steps);

/// Eigenvalues of the sector block H_N, sorted by real part.
[[nodiscard]] std::vector<Complex> sector_eigenvalues(const ModelParams& params, int total);

struct EvolutionSample {
    double time = 0.0;
    // Heisenberg convention: <psi0| X(t) |psi0>
    double mean_na = 0.0;
    double mean_nb = 0.0;
    // Schroedinger diagnostics with the naive inner product
    double schrodinger_na = 0.0;
    double schrodinger_nb = 0.0;
    double schrodinger_norm = 0.0;
    double conservation_residual = 0.0;
    std::vector<Complex> amplitudes;  // exp(-iHt)|psi0> on the initial sector
};

struct TimeSeries {
    FockState initial;
    std::vector<FockState> sector_states;
    std::vector<EvolutionSample> samples;
};

/// Throws std::out_of_range if `initial` is outside `basis`, std::invalid_argument
/// if the grid is not strictly ascending.
[[nodiscard]] TimeSeries evolve_observables(const ModelParams& params, const FockState& initial,
                                            std::span<const double> times,
                                            const FockBasis& basis);

}  // namespace chiralcav
