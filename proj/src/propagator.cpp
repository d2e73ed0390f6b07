#include "chiralcav/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace chiralcav {
namespace {

template <typename Block>
OperatorMatrix block_diagonal(const FockBasis& basis, Block&& block_for_sector) {
    const auto d = static_cast<Eigen::Index>(basis.dimension());
    OperatorMatrix out{basis.n_total_max(), Matrix::Zero(d, d)};
    for (int n = 0; n <= basis.n_total_max(); ++n) {
        const auto sv = basis.sector(n);
        const auto off = static_cast<Eigen::Index>(sv.offset);
        const auto dim = static_cast<Eigen::Index>(sv.dim);
        out.entries.block(off, off, dim, dim) = block_for_sector(n);
    }
    return out;
}

Eigen::Matrix2cd rk4_step(const Eigen::Matrix2cd& gen, const Eigen::Matrix2cd& y, double h) {
    const Eigen::Matrix2cd k1 = gen * y;
    const Eigen::Matrix2cd k2 = gen * (y + 0.5 * h * k1);
    const Eigen::Matrix2cd k3 = gen * (y + 0.5 * h * k2);
    const Eigen::Matrix2cd k4 = gen * (y + h * k3);
    return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

Propagator make_propagator(const ModelParams& params, const FockBasis& basis, double t) {
    Propagator p;
    p.time = t;
    p.forward = block_diagonal(basis, [&](int n) { return sector_evolution(params, n, t); });
    p.inverse = block_diagonal(basis, [&](int n) { return sector_evolution(params, n, -t); });
    const auto d = p.forward.dim();
    p.non_unitarity =
        max_abs(p.forward.entries.adjoint() * p.forward.entries - Matrix::Identity(d, d));
    return p;
}

Matrix sector_evolution(const ModelParams& params, int total, double t) {
    return matrix_exponential(-kI * t * sector_hamiltonian(params, total));
}

Matrix sector_evolution_factorized(const ModelParams& params, int total, double t) {
    const Complex free_phase = std::exp(-kI * (params.omega0 * (total + 1) * t));
    return free_phase * matrix_exponential(-kI * t * sector_interaction(params, total));
}

Vector propagate_sector(const ModelParams& params, int total, double t, const Vector& initial) {
    if (total < 0) throw std::out_of_range("negative sector");
    if (initial.size() != total + 1) {
        throw std::invalid_argument("initial vector has dimension " +
                                    std::to_string(initial.size()) + ", sector " +
                                    std::to_string(total) + " needs " + std::to_string(total + 1));
    }
    return sector_evolution_factorized(params, total, t) * initial;
}

OperatorMatrix conjugate_by_evolution(const Propagator& u, const OperatorMatrix& x) {
    if (x.basis_id != u.forward.basis_id || x.dim() != u.forward.dim()) {
        throw std::invalid_argument("operator and propagator act on different bases");
    }
    return {x.basis_id, u.inverse.entries * x.entries * u.forward.entries};
}

OperatorMatrix heisenberg_numeric(const ModelParams& params, double t, const FockBasis& basis,
                                  Ladder which) {
    // Ladder operators connect adjacent sectors only, so conjugating with the
    // block-diagonal propagators is exact wherever the target sector exists.
    return conjugate_by_evolution(make_propagator(params, basis, t), ladder(basis, which));
}

HeisenbergCoeffs integrate_coefficient_ode(const ModelParams& params, double t_final,
                                           int steps) {
    if (steps < 1) throw std::invalid_argument("steps must be at least 1");
    if (!std::isfinite(t_final) || !std::isfinite(params.omega0) ||
        !std::isfinite(params.omega_ab) || !std::isfinite(params.omega_ba)) {
        throw std::invalid_argument("integrate_coefficient_ode: non-finite input");
    }
    const double w0 = params.omega0;
    Eigen::Matrix2cd lower_gen;
    lower_gen << w0, -params.omega_ba, -params.omega_ab, w0;
    lower_gen *= -kI;
    Eigen::Matrix2cd raise_gen;
    raise_gen << w0, -params.omega_ab, -params.omega_ba, w0;
    raise_gen *= kI;

    Eigen::Matrix2cd c = Eigen::Matrix2cd::Identity();
    Eigen::Matrix2cd d = Eigen::Matrix2cd::Identity();
    const double h = t_final / steps;
    for (int i = 0; i < steps; ++i) {
        c = rk4_step(lower_gen, c, h);
        d = rk4_step(raise_gen, d, h);
    }
    HeisenbergCoeffs k;
    k.time = t_final;
    k.c_aa = c(0, 0);
    k.c_ab = c(0, 1);
    k.c_ba = c(1, 0);
    k.c_bb = c(1, 1);
    k.d_aa = d(0, 0);
    k.d_ab = d(0, 1);
    k.d_ba = d(1, 0);
    k.d_bb = d(1, 1);
    return k;
}

std::vector<Complex> sector_eigenvalues(const ModelParams& params, int total) {
    Eigen::ComplexEigenSolver<Matrix> solver(sector_hamiltonian(params, total), false);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigenvalue solver did not converge");
    }
    std::vector<Complex> out(solver.eigenvalues().begin(), solver.eigenvalues().end());
    std::sort(out.begin(), out.end(), [](Complex x, Complex y) {
        return x.real() < y.real() || (x.real() == y.real() && x.imag() < y.imag());
    });
    return out;
}

TimeSeries evolve_observables(const ModelParams& params, const FockState& initial,
                              std::span<const double> times, const FockBasis& basis) {
    const auto k = static_cast<Eigen::Index>(basis.index(initial) - basis_position({0, initial.total()}));
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (!(times[i] > times[i - 1])) {
            throw std::invalid_argument("time grid must be strictly ascending");
        }
    }
    const int n = initial.total();
    TimeSeries series;
    series.initial = initial;
    for (int n_a = 0; n_a <= n; ++n_a) series.sector_states.push_back({n_a, n - n_a});

    Vector count_a(n + 1);
    for (int n_a = 0; n_a <= n; ++n_a) count_a(n_a) = n_a;
    const Vector count_b = Vector::Constant(n + 1, double(n)) - count_a;

    for (const double t : times) {
        const Matrix forward = sector_evolution(params, n, t);
        const Matrix inverse = sector_evolution(params, n, -t);
        const Vector psi = forward.col(k);

        EvolutionSample s;
        s.time = t;
        s.mean_na = (inverse.row(k) * count_a.cwiseProduct(psi)).value().real();
        s.mean_nb = (inverse.row(k) * count_b.cwiseProduct(psi)).value().real();
        s.schrodinger_na = (psi.cwiseAbs2().transpose() * count_a.real()).value();
        s.schrodinger_nb = (psi.cwiseAbs2().transpose() * count_b.real()).value();
        s.schrodinger_norm = psi.norm();
        s.conservation_residual = s.mean_na + s.mean_nb - n;
        s.amplitudes.assign(psi.begin(), psi.end());
        series.samples.push_back(std::move(s));
    }
    return series;
}

}  // namespace chiralcav
