#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "chiralcav/analysis.hpp"
#include "chiralcav/propagator.hpp"

namespace chiralcav {
namespace {

constexpr double kExact = 1e-12;
constexpr double kOracle = 1e-9;
constexpr double kExponential = 1e-10;
constexpr double kReciprocal = 1e-14;
// RK4 step used by the acceptance comparison (4000 steps over t = 2.5).
constexpr double kOdeStep = 2.5 / 4000.0;

class Recorder {
public:
    explicit Recorder(std::vector<CheckResult>& out) : out_(out) {}

    void at_most(std::string name, double residual, double tolerance, std::string note = {}) {
        const bool ok = std::isfinite(residual) && residual <= tolerance;
        out_.push_back({std::move(name), residual, tolerance, Bound::at_most, ok, std::move(note)});
    }

    void at_least(std::string name, double value, double threshold, std::string note = {}) {
        const bool ok = std::isfinite(value) && value >= threshold;
        out_.push_back({std::move(name), value, threshold, Bound::at_least, ok, std::move(note)});
    }

    // Runs `body`; any exception becomes a failed entry under `name`.
    void guarded(const std::string& name, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            out_.push_back({name, std::numeric_limits<double>::quiet_NaN(), 0.0, Bound::at_most,
                            false, e.what()});
        }
    }

private:
    std::vector<CheckResult>& out_;
};

double coeff_distance(const HeisenbergCoeffs& x, const HeisenbergCoeffs& y) {
    return std::max({std::abs(x.c_aa - y.c_aa), std::abs(x.c_ab - y.c_ab),
                     std::abs(x.c_ba - y.c_ba), std::abs(x.c_bb - y.c_bb),
                     std::abs(x.d_aa - y.d_aa), std::abs(x.d_ab - y.d_ab),
                     std::abs(x.d_ba - y.d_ba), std::abs(x.d_bb - y.d_bb)});
}

constexpr Ladder kLadders[] = {Ladder::a, Ladder::a_dag, Ladder::b, Ladder::b_dag};

int ode_steps(double t) { return std::max(1, static_cast<int>(std::ceil(std::abs(t) / kOdeStep))); }

double max_hop_factor(const FockBasis& basis) {
    double m = 0.0;
    for (const auto& s : basis.states()) {
        m = std::max(m, std::sqrt(double(s.n_a) * (s.n_b + 1)));
    }
    return m;
}

void basis_checks(Recorder& rec, const FockBasis& basis) {
    double cover_errors = 0.0;
    std::vector<int> seen(basis.dimension(), 0);
    for (int n = 0; n <= basis.n_total_max(); ++n) {
        const auto sv = basis.sector(n);
        if (sv.dim != static_cast<std::size_t>(n + 1)) cover_errors += 1.0;
        for (std::size_t i = sv.offset; i < sv.offset + sv.dim; ++i) {
            ++seen[i];
            if (basis.state(i).total() != n) cover_errors += 1.0;
        }
    }
    for (const int c : seen) cover_errors += std::abs(c - 1);
    rec.at_most("basis.sector_cover", cover_errors, 0.0);

    double roundtrip = 0.0;
    for (std::size_t i = 0; i < basis.dimension(); ++i) {
        if (basis.index(basis.state(i)) != i) roundtrip += 1.0;
    }
    rec.at_most("basis.index_roundtrip", roundtrip, 0.0);
}

void operator_checks(Recorder& rec, const ModelParams& p, const FockBasis& basis,
                     const VerificationOptions& options, AlphaPlusDiscrepancy& discrepancy) {
    const auto a = lowering_a(basis);
    const auto b = lowering_b(basis);
    const auto a_dag = raising(a);
    const auto b_dag = raising(b);
    const auto one = identity(basis);
    const auto num = number_operators(basis);
    const int id = basis.n_total_max();

    rec.at_most("operators.canonical_commutator_a",
                max_abs_interior(commutator(a, a_dag).entries - one.entries, basis), kExact);
    rec.at_most("operators.canonical_commutator_b",
                max_abs_interior(commutator(b, b_dag).entries - one.entries, basis), kExact);

    const OperatorMatrix hop_ab{id, a.entries * b_dag.entries};
    const OperatorMatrix hop_ba{id, a_dag.entries * b.entries};
    const auto bracket = commutator(hop_ab, hop_ba);
    rec.at_most("operators.hopping_commutator",
                max_abs_interior(bracket.entries - (num.n_b.entries - num.n_a.entries), basis),
                kExact);
    rec.at_most(
        "operators.nested_commutator",
        std::max(
            max_abs_interior(commutator(hop_ab, bracket).entries + 2.0 * hop_ab.entries, basis),
            max_abs_interior(commutator(hop_ba, bracket).entries - 2.0 * hop_ba.entries, basis)),
        kExact);

    const auto h = hamiltonian(p, basis);
    const auto h0 = free_hamiltonian(p, basis);
    const auto hi = interaction_hamiltonian(p, basis);
    rec.at_most("operators.number_conservation", max_abs(commutator(h, num.total).entries),
                kExact);
    rec.at_most("operators.free_interaction_commute", max_abs(commutator(h0, hi).entries), kExact);

    const double herm_gap = max_abs(h.entries - h.entries.adjoint());
    const double herm_expected = std::abs(p.omega_ab - p.omega_ba) * max_hop_factor(basis);
    rec.at_most("operators.hermiticity_gap", std::abs(herm_gap - herm_expected), kExact,
                "||H - H^dagger||_max = |w_ab - w_ba| * max hop factor");
    rec.at_most("operators.pt_symmetry", max_abs(pt_conjugate(h, basis).entries - h.entries),
                kExact);
    rec.at_most("operators.pt_ladder_sign", max_abs(pt_conjugate(a, basis).entries + a.entries),
                kExact);

    rec.guarded("operators.intercavity", [&] {
        const auto chosen = intercavity_operators(p, basis, options.alpha_plus);
        const auto canonical = intercavity_operators(p, basis, AlphaPlusForm::canonical);
        const auto faulty = intercavity_operators(p, basis, AlphaPlusForm::swapped_root);
        auto canon_residual = [&](const IntercavityOperators& ops) {
            return std::max(
                max_abs_interior(
                    commutator(ops.alpha_minus, ops.alpha_plus).entries - one.entries, basis),
                max_abs_interior(commutator(ops.beta_minus, ops.beta_plus).entries - one.entries,
                                 basis));
        };
        discrepancy.canonical_residual = canon_residual(canonical);
        discrepancy.faulty_residual = canon_residual(faulty);
        discrepancy.faulty_predicted = faulty_alpha_plus_residual(p);

        rec.at_most("operators.intercavity_canonical_commutator", canon_residual(chosen), kExact,
                    options.alpha_plus == AlphaPlusForm::swapped_root
                        ? "alpha+ uses the swapped-root coefficient (fault injection)"
                        : "");
        rec.at_most(
            "operators.intercavity_cross_commutator",
            std::max(max_abs_interior(commutator(chosen.alpha_minus, chosen.beta_plus).entries,
                                      basis),
                     max_abs_interior(commutator(chosen.beta_minus, chosen.alpha_plus).entries,
                                      basis)),
            kExact);

        // With both couplings negative the alpha combination is the upper mode.
        const auto w = eigenfrequencies(p);
        const double w_alpha = p.omega_ab > 0.0 ? w.alpha : w.beta;
        const double w_beta = p.omega_ab > 0.0 ? w.beta : w.alpha;
        const Matrix delocalized =
            w_alpha * (canonical.alpha_plus.entries * canonical.alpha_minus.entries) +
            w_beta * (canonical.beta_plus.entries * canonical.beta_minus.entries) +
            p.omega0 * one.entries;
        rec.at_most("operators.delocalized_hamiltonian", max_abs(delocalized - h.entries), kExact);

        const Matrix imbalance_form = p.omega0 * (num.total.entries + one.entries) -
                                      p.g_eff() * excitation_imbalance(p, basis).entries;
        rec.at_most("operators.imbalance_form", max_abs(imbalance_form - h.entries), kExact);
    });
}

void closed_form_checks(Recorder& rec, const ModelParams& p, const FockBasis& basis,
                        std::span<const double> grid) {
    rec.guarded("closed_form", [&] {
        const double g = p.g_eff();
        const double period = 2.0 * std::numbers::pi / g;
        double comm = 0.0;
        double periodic = 0.0;
        for (const double t : grid) {
            const auto k = heisenberg_coeffs(p, t);
            comm = std::max({comm, std::abs(k.c_aa * k.d_aa + k.c_ab * k.d_ab - 1.0),
                             std::abs(k.c_ba * k.d_ba + k.c_bb * k.d_bb - 1.0)});
            const auto later = heisenberg_coeffs(p, t + period);
            const Complex down = std::exp(-kI * (p.omega0 * period));
            const Complex up = std::conj(down);
            periodic = std::max({periodic, std::abs(later.c_aa - k.c_aa * down),
                                 std::abs(later.c_ab - k.c_ab * down),
                                 std::abs(later.c_ba - k.c_ba * down),
                                 std::abs(later.c_bb - k.c_bb * down),
                                 std::abs(later.d_aa - k.d_aa * up),
                                 std::abs(later.d_ab - k.d_ab * up),
                                 std::abs(later.d_ba - k.d_ba * up),
                                 std::abs(later.d_bb - k.d_bb * up)});
        }
        rec.at_most("closed_form.coefficient_commutation", comm, kReciprocal);
        rec.at_most("closed_form.periodicity", periodic, kExact);

        const auto witness = heisenberg_coeffs(p, std::numbers::pi / (4.0 * g));
        const double gap = std::abs(witness.d_ab - std::conj(witness.c_ab));
        if (p.omega_ab != p.omega_ba) {
            rec.at_least("closed_form.non_conjugacy_witness", gap, 1e-6,
                         "|d_ab - conj(c_ab)| at g_eff t = pi/4");
        } else {
            rec.at_most("closed_form.non_conjugacy_witness", gap, kReciprocal,
                        "reciprocal: d_ab = conj(c_ab)");
        }

        const auto num = number_operators(basis);
        double means = 0.0;
        double ops = 0.0;
        for (const double t : grid) {
            for (const auto& s : basis.states()) {
                const auto m = expected_photons(p, s.n_a, s.n_b, t);
                means = std::max(means, std::abs(m.a + m.b - s.total()));
            }
            ops = std::max(ops, max_abs(photon_number_operator_t(p, t, Cavity::a, basis).entries +
                                        photon_number_operator_t(p, t, Cavity::b, basis).entries -
                                        num.total.entries));
        }
        rec.at_most("closed_form.mean_conservation", means, kExact);
        rec.at_most("closed_form.number_operator_conservation", ops, kExact);

        // ladder action on number states against the operator-matrix columns
        double action = 0.0;
        for (const double t : {grid.front(), grid[grid.size() / 3], grid.back() * 0.77}) {
            const auto k = heisenberg_coeffs(p, t);
            for (const Ladder which : kLadders) {
                const auto m = heisenberg_operator(k, which, basis);
                for (const auto& s : basis.states()) {
                    if (s.total() >= basis.n_total_max()) continue;
                    Vector v = Vector::Zero(m.dim());
                    for (const auto& term : apply_ladder_t(p, t, which, s)) {
                        v(static_cast<Eigen::Index>(basis.index(term.state))) += term.weight;
                    }
                    const auto col = static_cast<Eigen::Index>(basis.index(s));
                    action = std::max(action, (v - m.entries.col(col)).cwiseAbs().maxCoeff());
                }
            }
        }
        rec.at_most("closed_form.ladder_action_consistency", action, kExact);

        const auto hi = interaction_hamiltonian(p, basis);
        double hi_action = 0.0;
        double first_order = 0.0;
        const double t_small = 1e-3;
        for (const auto& s : basis.states()) {
            Vector v = Vector::Zero(hi.dim());
            for (const auto& term : apply_interaction(p, s)) {
                if (basis.contains(term.state)) {
                    v(static_cast<Eigen::Index>(basis.index(term.state))) += term.weight;
                }
            }
            const auto col = static_cast<Eigen::Index>(basis.index(s));
            hi_action = std::max(hi_action, (v - hi.entries.col(col)).cwiseAbs().maxCoeff());
            for (const auto& to : basis.states()) {
                const auto row = static_cast<Eigen::Index>(basis.index(to));
                const Complex expected = (to == s ? 1.0 : 0.0) - kI * t_small * hi.entries(row, col);
                first_order =
                    std::max(first_order, std::abs(small_time_amplitude(p, s, to, t_small) - expected));
            }
        }
        rec.at_most("closed_form.interaction_action", hi_action, kExact);
        rec.at_most("closed_form.small_time_vs_interaction", first_order, kExact);

        double flag_errors = 0.0;
        for (const auto& e : spectrum(p, basis.n_total_max())) {
            if (e.rwa_breakdown != (e.energy < 0.0)) flag_errors += 1.0;
            if (e.rwa_breakdown && rwa_breakdown_check(p) != RwaStatus::breakdown) flag_errors += 1.0;
        }
        rec.at_most("closed_form.rwa_flags", flag_errors, 0.0);
    });
}

void oracle_checks(Recorder& rec, const ModelParams& p, const FockBasis& basis,
                   std::span<const double> grid) {
    rec.guarded("oracle", [&] {
        const auto num = number_operators(basis);
        const auto one = identity(basis);
        double closed_numeric = 0.0;
        double closed_ode = 0.0;
        double ode_numeric = 0.0;
        double comm_closed = 0.0;
        double comm_numeric = 0.0;
        double number_ops = 0.0;
        double inverse = 0.0;
        double bch = 0.0;
        for (const double t : grid) {
            const auto closed = heisenberg_coeffs(p, t);
            const auto ode = integrate_coefficient_ode(p, t, ode_steps(t));
            closed_ode = std::max(closed_ode, coeff_distance(closed, ode));

            const auto u = make_propagator(p, basis, t);
            inverse = std::max(inverse, max_abs(u.forward.entries * u.inverse.entries -
                                                one.entries));
            for (const Ladder which : kLadders) {
                const Matrix numeric = conjugate_by_evolution(u, ladder(basis, which)).entries;
                closed_numeric = std::max(
                    closed_numeric,
                    max_abs_interior(heisenberg_operator(closed, which, basis).entries - numeric,
                                     basis));
                ode_numeric = std::max(
                    ode_numeric,
                    max_abs_interior(heisenberg_operator(ode, which, basis).entries - numeric,
                                     basis));
            }
            const auto a_t = heisenberg_operator(closed, Ladder::a, basis);
            const auto a_dag_t = heisenberg_operator(closed, Ladder::a_dag, basis);
            comm_closed = std::max(
                comm_closed,
                max_abs_interior(commutator(a_t, a_dag_t).entries - one.entries, basis));
            const auto a_num = conjugate_by_evolution(u, ladder(basis, Ladder::a));
            const auto a_dag_num = conjugate_by_evolution(u, ladder(basis, Ladder::a_dag));
            comm_numeric = std::max(
                comm_numeric,
                max_abs_interior(commutator(a_num, a_dag_num).entries - one.entries, basis));

            for (const Cavity c : {Cavity::a, Cavity::b}) {
                const auto& n0 = c == Cavity::a ? num.n_a : num.n_b;
                number_ops = std::max(
                    number_ops, max_abs(photon_number_operator_t(p, t, c, basis).entries -
                                        conjugate_by_evolution(u, n0).entries));
            }
            for (int n = 0; n <= basis.n_total_max(); ++n) {
                bch = std::max(bch, max_abs(sector_evolution(p, n, t) -
                                            sector_evolution_factorized(p, n, t)));
            }
        }
        rec.at_most("oracle.heisenberg_closed_vs_numeric", closed_numeric, kOracle);
        rec.at_most("oracle.heisenberg_closed_vs_ode", closed_ode, kOracle);
        rec.at_most("oracle.heisenberg_ode_vs_numeric", ode_numeric, kOracle);
        rec.at_most("oracle.commutator_at_time_closed", comm_closed, kExact);
        rec.at_most("oracle.commutator_at_time_numeric", comm_numeric, kOracle);
        rec.at_most("oracle.number_operator_closed_vs_numeric", number_ops, kOracle);
        rec.at_most("oracle.propagator_inverse", inverse, kExponential);
        rec.at_most("oracle.bch_factorization", bch, kExponential);

        double means = 0.0;
        double conservation = 0.0;
        for (const auto& s : basis.states()) {
            const auto series = evolve_observables(p, s, grid, basis);
            for (const auto& sample : series.samples) {
                const auto m = expected_photons(p, s.n_a, s.n_b, sample.time);
                means = std::max({means, std::abs(sample.mean_na - m.a),
                                  std::abs(sample.mean_nb - m.b)});
                conservation = std::max(conservation, std::abs(sample.conservation_residual));
            }
        }
        rec.at_most("oracle.mean_photons_closed_vs_numeric", means, kOracle);
        rec.at_most("oracle.numeric_conservation", conservation, kOracle);

        double spectrum_gap = 0.0;
        double imag = 0.0;
        const auto w = eigenfrequencies(p);
        for (int n = 0; n <= basis.n_total_max(); ++n) {
            const auto eig = sector_eigenvalues(p, n);
            std::vector<double> expected;
            for (int n_alpha = 0; n_alpha <= n; ++n_alpha) {
                expected.push_back(w.alpha * n_alpha + w.beta * (n - n_alpha) + p.omega0);
            }
            std::sort(expected.begin(), expected.end());
            for (std::size_t i = 0; i < eig.size(); ++i) {
                spectrum_gap = std::max(spectrum_gap, std::abs(eig[i].real() - expected[i]));
                imag = std::max(imag, std::abs(eig[i].imag()));
            }
        }
        rec.at_most("oracle.spectrum_match", spectrum_gap, kExponential);
        rec.at_most("oracle.spectrum_reality", imag, kExponential);

        // First-order consistency: phase-stripped U against the small-time amplitudes.
        const double t_small = 1e-4 / std::max(std::abs(p.omega_ab), std::abs(p.omega_ba));
        double rel = 0.0;
        for (int n = 1; n <= basis.n_total_max(); ++n) {
            const Matrix stripped = std::exp(kI * (p.omega0 * (n + 1) * t_small)) *
                                    sector_evolution(p, n, t_small);
            for (int from = 0; from <= n; ++from) {
                for (const int to : {from - 1, from + 1}) {
                    if (to < 0 || to > n) continue;
                    const Complex amp =
                        small_time_amplitude(p, {from, n - from}, {to, n - to}, t_small);
                    if (amp == Complex{}) continue;
                    rel = std::max(rel, std::abs(stripped(to, from) - amp) / std::abs(amp));
                }
            }
        }
        rec.at_most("oracle.first_order_consistency", rel, 1e-3,
                    "relative, t = 1e-4 / max coupling");

        const double quarter = std::numbers::pi / (2.0 * p.g_eff());
        const Matrix u1 = sector_evolution(p, 1, quarter);
        const double measured = max_abs(u1.adjoint() * u1 - Matrix::Identity(2, 2));
        const double r = p.omega_ab / p.omega_ba;
        const double predicted = std::max(std::abs(r - 1.0), std::abs(1.0 / r - 1.0));
        rec.at_most("oracle.unitarity_dichotomy", std::abs(measured - predicted), kExponential,
                    "||U^dagger U - I|| on N=1 at g_eff t = pi/2 vs max(|r-1|,|1/r-1|)");
    });
}

void analysis_checks(Recorder& rec, const ModelParams& p, const FockBasis& basis,
                     std::span<const double> grid) {
    rec.guarded("analysis", [&] {
        const auto map = similarity_map(p);
        const auto d = similarity_operator(map, basis);
        const Matrix d_inv = d.entries.diagonal().cwiseInverse().asDiagonal();
        const Matrix conjugated = d.entries * hamiltonian(p, basis).entries * d_inv;
        rec.at_most(
            "analysis.similarity_conjugation",
            max_abs(conjugated -
                    hermitian_hamiltonian(p.omega0, map.hermitian_coupling, basis).entries),
            kExponential);

        const double g = map.g_eff;
        const double expected_ratio = std::abs(p.omega_ab / p.omega_ba);
        double amp_ratio = 0.0;
        for (const auto& s : basis.states()) {
            if (s.n_a < 1) continue;
            for (const double t_ref : {0.5, 7.0}) {
                const auto r = exchange_asymmetry(p, s, t_ref);
                amp_ratio = std::max(amp_ratio, std::abs(r.amplitude_ratio - expected_ratio) /
                                                    expected_ratio);
            }
        }
        rec.at_most("analysis.asymmetry_amplitude_ratio", amp_ratio, kExact, "relative");

        double prob_ratio = 0.0;
        std::size_t used = 0;
        for (const double t : grid) {
            if (std::abs(std::sin(g * t)) < 1e-6) continue;
            const auto r = exchange_asymmetry(p, {1, 0}, t);
            prob_ratio = std::max(prob_ratio,
                                  std::abs(r.sector_prob_forward / r.sector_prob_backward -
                                           expected_ratio * expected_ratio));
            ++used;
        }
        rec.at_most("analysis.asymmetry_probability_ratio", prob_ratio, kExponential,
                    std::to_string(used) + " grid times with sin(g_eff t) != 0");

        const double t_ref = std::numbers::pi / (4.0 * g);
        const auto fwd = exchange_asymmetry(p, {1, 0}, t_ref);
        const auto swapped = exchange_asymmetry(p.swapped(), {1, 0}, t_ref);
        rec.at_most("analysis.asymmetry_swap_antisymmetry",
                    std::abs(fwd.db_asymmetry + swapped.db_asymmetry), kExponential);

        const auto cls = classify_symmetry(p, basis);
        const auto expected = p.is_reciprocal() ? SymmetryRegime::reciprocal_hermitian
                                                : SymmetryRegime::nonreciprocal_pt;
        rec.at_most("analysis.classification", cls.regime == expected ? 0.0 : 1.0, 0.0,
                    std::string(to_string(cls.regime)));
    });
}

void reciprocal_checks(Recorder& rec, const ModelParams& p, const FockBasis& basis,
                       std::span<const double> grid) {
    const double g = p.omega_ab;
    double coeffs = 0.0;
    double ops = 0.0;
    for (const double t : grid) {
        coeffs = std::max(coeffs, coeff_distance(heisenberg_coeffs(p, t),
                                                 reciprocal::heisenberg_coeffs(p.omega0, g, t)));
        for (const Cavity c : {Cavity::a, Cavity::b}) {
            ops = std::max(ops, max_abs(photon_number_operator_t(p, t, c, basis).entries -
                                        reciprocal::photon_number_operator_t(g, t, c, basis)
                                            .entries));
        }
    }
    double amps = 0.0;
    for (const auto& from : basis.states()) {
        for (const auto& to : basis.states()) {
            for (const double t : {1e-3, 0.25}) {
                amps = std::max(amps, std::abs(small_time_amplitude(p, from, to, t) -
                                               reciprocal::first_order_amplitude(g, from, to, t)));
            }
        }
    }
    const auto w = eigenfrequencies(p);
    const auto w_ref = reciprocal::eigenfrequencies(p.omega0, g);
    rec.at_most("reciprocal.heisenberg_coeffs", coeffs, kReciprocal);
    rec.at_most("reciprocal.photon_number_operators", ops, kReciprocal);
    rec.at_most("reciprocal.first_order_amplitudes", amps, kReciprocal);
    rec.at_most("reciprocal.eigenfrequencies",
                std::max(std::abs(w.alpha - w_ref.alpha), std::abs(w.beta - w_ref.beta)),
                kReciprocal);
}

}  // namespace

VerificationReport run_verification(const ModelParams& params, int n_total_max,
                                    std::span<const double> t_grid,
                                    const VerificationOptions& options) {
    VerificationReport report;
    report.params = params;
    report.n_total_max = n_total_max;
    report.t_grid.assign(t_grid.begin(), t_grid.end());
    report.alpha_plus = options.alpha_plus;
    report.reciprocal_block = params.is_reciprocal() && params.has_closed_form();

    Recorder rec(report.checks);
    rec.guarded("config", [&] {
        params.validate();
        if (t_grid.empty()) throw std::invalid_argument("empty time grid");
        const FockBasis basis(n_total_max);
        basis_checks(rec, basis);
        operator_checks(rec, params, basis, options, report.alpha_plus_discrepancy);
        closed_form_checks(rec, params, basis, t_grid);
        oracle_checks(rec, params, basis, t_grid);
        analysis_checks(rec, params, basis, t_grid);
        if (report.reciprocal_block) reciprocal_checks(rec, params, basis, t_grid);
    });
    return report;
}

}  // namespace chiralcav
