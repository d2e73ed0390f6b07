#include "chiralcav/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "chiralcav/propagator.hpp"

namespace chiralcav {

AsymmetryReport exchange_asymmetry(const ModelParams& params, const FockState& from,
                                   double reference_time) {
    if (!from.valid() || from.n_a < 1) {
        throw std::invalid_argument("exchange_asymmetry needs a photon in cavity A to exchange");
    }
    if (!(reference_time > 0.0)) {
        throw std::invalid_argument("reference_time must be positive");
    }
    AsymmetryReport r;
    r.params = params;
    r.from_state = from;
    r.to_state = {from.n_a - 1, from.n_b + 1};
    r.reference_time = reference_time;
    // Off-diagonal first-order elements are linear in t; t = 1 gives the rate.
    r.amp_forward = small_time_amplitude(params, r.from_state, r.to_state, 1.0);
    r.amp_backward = small_time_amplitude(params, r.to_state, r.from_state, 1.0);

    const double inf = std::numeric_limits<double>::infinity();
    if (r.amp_backward == Complex{}) {
        r.infinite = r.amp_forward != Complex{};
        r.amplitude_ratio = r.infinite ? inf : std::numeric_limits<double>::quiet_NaN();
    } else {
        r.amplitude_ratio = std::abs(r.amp_forward) / std::abs(r.amp_backward);
    }

    const int n = from.total();
    const Matrix u = sector_evolution(params, n, reference_time);
    const Eigen::Index i_from = from.n_a;
    const Eigen::Index i_to = r.to_state.n_a;
    r.sector_prob_forward = std::norm(u(i_to, i_from));
    r.sector_prob_backward = std::norm(u(i_from, i_to));
    if (r.sector_prob_backward == 0.0 || r.sector_prob_forward == 0.0) {
        r.infinite = r.infinite || r.sector_prob_backward != r.sector_prob_forward;
        if (r.sector_prob_backward == 0.0 && r.sector_prob_forward > 0.0) {
            r.db_asymmetry = inf;
        } else if (r.sector_prob_forward == 0.0 && r.sector_prob_backward > 0.0) {
            r.db_asymmetry = -inf;
        } else {
            r.db_asymmetry = std::numeric_limits<double>::quiet_NaN();
        }
    } else {
        r.db_asymmetry = 10.0 * std::log10(r.sector_prob_forward / r.sector_prob_backward);
    }
    return r;
}

double coupling_ratio_for_db(double db) noexcept { return std::pow(10.0, db / 20.0); }

std::string_view to_string(SymmetryRegime regime) noexcept {
    switch (regime) {
        case SymmetryRegime::reciprocal_hermitian: return "reciprocal-hermitian";
        case SymmetryRegime::nonreciprocal_pt: return "nonreciprocal-PT";
        case SymmetryRegime::neither: return "neither";
    }
    return "neither";
}

SymmetryClassification classify_hamiltonian(const OperatorMatrix& h, const FockBasis& basis) {
    SymmetryClassification c;
    c.hermiticity_residual = max_abs(h.entries - h.entries.adjoint());
    c.pt_residual = max_abs(pt_conjugate(h, basis).entries - h.entries);
    c.is_hermitian = c.hermiticity_residual <= kSymmetryTolerance;
    c.is_pt_symmetric = c.pt_residual <= kSymmetryTolerance;
    if (c.is_hermitian) {
        c.regime = SymmetryRegime::reciprocal_hermitian;
    } else if (c.is_pt_symmetric) {
        c.regime = SymmetryRegime::nonreciprocal_pt;
    }
    return c;
}

SymmetryClassification classify_symmetry(const ModelParams& params, const FockBasis& basis) {
    return classify_hamiltonian(hamiltonian(params, basis), basis);
}

SimilarityMap similarity_map(const ModelParams& params) {
    const double g = params.g_eff();
    const double ratio = params.omega_ab / params.omega_ba;
    if (!(ratio > 0.0)) throw DomainError("similarity map needs omega_ab/omega_ba > 0");
    return {g, 0.25 * std::log(ratio), std::copysign(g, params.omega_ab)};
}

OperatorMatrix similarity_operator(const SimilarityMap& map, const FockBasis& basis) {
    auto d = identity(basis);
    for (const auto& s : basis.states()) {
        const auto i = static_cast<Eigen::Index>(basis.index(s));
        d.entries(i, i) = std::exp(map.theta * (s.n_a - s.n_b));
    }
    return d;
}

RwaStatus rwa_breakdown_check(const ModelParams& params) {
    return params.g_eff() > params.omega0 ? RwaStatus::breakdown : RwaStatus::ok;
}

double faulty_alpha_plus_residual(const ModelParams& params) {
    const Complex s_ab = std::sqrt(Complex(params.omega_ab));
    const Complex s_ba = std::sqrt(Complex(params.omega_ba));
    return std::abs(0.5 - s_ba / (2.0 * s_ab));
}

bool VerificationReport::all_passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const CheckResult* VerificationReport::find(std::string_view name) const noexcept {
    for (const auto& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

std::vector<double> default_time_grid(const ModelParams& params, int samples) {
    if (samples < 2) throw std::invalid_argument("time grid needs at least 2 samples");
    const double period = 2.0 * std::numbers::pi / params.g_eff();
    std::vector<double> grid(static_cast<std::size_t>(samples));
    for (int k = 0; k < samples; ++k) {
        grid[static_cast<std::size_t>(k)] = period * k / (samples - 1);
    }
    return grid;
}

}  // namespace chiralcav
