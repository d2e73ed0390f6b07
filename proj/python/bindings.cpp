#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chiralcav/analysis.hpp"
#include "chiralcav/closed_form.hpp"
#include "chiralcav/propagator.hpp"

namespace py = pybind11;
using namespace chiralcav;

namespace {

Ladder parse_ladder(const std::string& s) {
    if (s == "a") return Ladder::a;
    if (s == "a_dag") return Ladder::a_dag;
    if (s == "b") return Ladder::b;
    if (s == "b_dag") return Ladder::b_dag;
    throw py::value_error("ladder must be one of a, a_dag, b, b_dag");
}

py::list superposition_to_list(const Superposition& terms) {
    py::list out;
    for (const auto& t : terms) out.append(py::make_tuple(t.state.n_a, t.state.n_b, t.weight));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Two cavities coupled through a non-reciprocal mirror";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init<double, double, double>(), py::arg("omega0") = 1.0,
             py::arg("omega_ab") = 0.09, py::arg("omega_ba") = 0.04)
        .def_readwrite("omega0", &ModelParams::omega0)
        .def_readwrite("omega_ab", &ModelParams::omega_ab)
        .def_readwrite("omega_ba", &ModelParams::omega_ba)
        .def_property_readonly("g_eff", &ModelParams::g_eff)
        .def("swapped", &ModelParams::swapped)
        .def("__repr__", [](const ModelParams& p) {
            return "ModelParams(omega0=" + std::to_string(p.omega0) +
                   ", omega_ab=" + std::to_string(p.omega_ab) +
                   ", omega_ba=" + std::to_string(p.omega_ba) + ")";
        });

    py::class_<FockBasis>(m, "FockBasis")
        .def(py::init<int>(), py::arg("n_total_max"))
        .def_property_readonly("n_total_max", &FockBasis::n_total_max)
        .def_property_readonly("dimension", &FockBasis::dimension)
        .def("states", [](const FockBasis& b) {
            std::vector<std::pair<int, int>> out;
            for (const auto& s : b.states()) out.emplace_back(s.n_a, s.n_b);
            return out;
        })
        .def("index", [](const FockBasis& b, int n_a, int n_b) { return b.index({n_a, n_b}); })
        .def("sector", [](const FockBasis& b, int n) {
            const auto sv = b.sector(n);
            return py::make_tuple(sv.offset, sv.dim);
        });

    m.def("hamiltonian", [](const ModelParams& p, const FockBasis& b) { return hamiltonian(p, b).entries; });
    m.def("ladder", [](const FockBasis& b, const std::string& which) {
        return ladder(b, parse_ladder(which)).entries;
    });
    m.def("pt_conjugate", [](const Matrix& x, const FockBasis& b) {
        return pt_conjugate({b.n_total_max(), x}, b).entries;
    });

    m.def("eigenfrequencies", [](const ModelParams& p) {
        const auto w = eigenfrequencies(p);
        return py::make_tuple(w.alpha, w.beta);
    });
    m.def("heisenberg_coeffs", [](const ModelParams& p, double t) {
        const auto k = heisenberg_coeffs(p, t);
        return py::dict(py::arg("c_aa") = k.c_aa, py::arg("c_ab") = k.c_ab,
                        py::arg("c_ba") = k.c_ba, py::arg("c_bb") = k.c_bb,
                        py::arg("d_aa") = k.d_aa, py::arg("d_ab") = k.d_ab,
                        py::arg("d_ba") = k.d_ba, py::arg("d_bb") = k.d_bb);
    });
    m.def("expected_photons", [](const ModelParams& p, int n_a, int n_b, double t) {
        const auto m = expected_photons(p, n_a, n_b, t);
        return py::make_tuple(m.a, m.b);
    });
    m.def("apply_ladder_t", [](const ModelParams& p, double t, const std::string& which, int n_a, int n_b) {
        return superposition_to_list(apply_ladder_t(p, t, parse_ladder(which), {n_a, n_b}));
    });
    m.def("apply_interaction", [](const ModelParams& p, int n_a, int n_b) {
        return superposition_to_list(apply_interaction(p, {n_a, n_b}));
    });
    m.def("small_time_amplitude",
          [](const ModelParams& p, std::pair<int, int> from, std::pair<int, int> to, double t,
             bool full_phase) {
              return small_time_amplitude(p, {from.first, from.second}, {to.first, to.second}, t,
                                          full_phase ? PhaseConvention::full : PhaseConvention::stripped);
          },
          py::arg("params"), py::arg("from_state"), py::arg("to_state"), py::arg("t"),
          py::arg("full_phase") = false);
    m.def("spectrum", [](const ModelParams& p, int n_total_max) {
        py::list out;
        for (const auto& e : spectrum(p, n_total_max)) {
            out.append(py::dict(py::arg("n_alpha") = e.n_alpha, py::arg("n_beta") = e.n_beta,
                                py::arg("energy") = e.energy,
                                py::arg("rwa_breakdown") = e.rwa_breakdown));
        }
        return out;
    });

    m.def("matrix_exponential", &matrix_exponential, py::arg("m"));
    m.def("propagate_sector", &propagate_sector, py::arg("params"), py::arg("total"),
          py::arg("t"), py::arg("initial"));
    m.def("sector_eigenvalues", &sector_eigenvalues);
    m.def("heisenberg_numeric", [](const ModelParams& p, double t, const FockBasis& b, const std::string& which) {
        return heisenberg_numeric(p, t, b, parse_ladder(which)).entries;
    });
    m.def("integrate_coefficient_ode", [](const ModelParams& p, double t_final, int steps) {
        const auto k = integrate_coefficient_ode(p, t_final, steps);
        return py::dict(py::arg("c_aa") = k.c_aa, py::arg("c_ab") = k.c_ab,
                        py::arg("c_ba") = k.c_ba, py::arg("c_bb") = k.c_bb,
                        py::arg("d_aa") = k.d_aa, py::arg("d_ab") = k.d_ab,
                        py::arg("d_ba") = k.d_ba, py::arg("d_bb") = k.d_bb);
    });

    m.def("exchange_asymmetry", [](const ModelParams& p, int n_a, int n_b, double t_ref) {
        const auto r = exchange_asymmetry(p, {n_a, n_b}, t_ref);
        return py::dict(py::arg("amp_forward") = r.amp_forward,
                        py::arg("amp_backward") = r.amp_backward,
                        py::arg("amplitude_ratio") = r.amplitude_ratio,
                        py::arg("sector_prob_forward") = r.sector_prob_forward,
                        py::arg("sector_prob_backward") = r.sector_prob_backward,
                        py::arg("db_asymmetry") = r.db_asymmetry,
                        py::arg("infinite") = r.infinite);
    });
    m.def("classify_symmetry", [](const ModelParams& p, const FockBasis& b) {
        const auto c = classify_symmetry(p, b);
        return py::dict(py::arg("is_hermitian") = c.is_hermitian,
                        py::arg("is_pt_symmetric") = c.is_pt_symmetric,
                        py::arg("regime") = std::string(to_string(c.regime)));
    });
    m.def("similarity_map", [](const ModelParams& p) {
        const auto s = similarity_map(p);
        return py::make_tuple(s.g_eff, s.theta);
    });
    m.def("rwa_breakdown", [](const ModelParams& p) {
        return rwa_breakdown_check(p) == RwaStatus::breakdown;
    });
    m.def("run_verification",
          [](const ModelParams& p, int n_total_max, std::vector<double> grid, bool faulty_alpha_plus) {
              if (grid.empty()) grid = default_time_grid(p);
              VerificationOptions opts;
              if (faulty_alpha_plus) opts.alpha_plus = AlphaPlusForm::swapped_root;
              const auto report = run_verification(p, n_total_max, grid, opts);
              py::list checks;
              for (const auto& c : report.checks) {
                  checks.append(py::dict(py::arg("name") = c.name, py::arg("residual") = c.residual,
                                         py::arg("tolerance") = c.tolerance,
                                         py::arg("passed") = c.passed));
              }
              return py::dict(py::arg("all_passed") = report.all_passed(),
                              py::arg("checks") = checks);
          },
          py::arg("params"), py::arg("n_total_max") = 6, py::arg("t_grid") = std::vector<double>{},
          py::arg("faulty_alpha_plus") = false);
}
