#include "chiralcav/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "chiralcav/testing.hpp"

namespace chiralcav {
namespace {

OperatorMatrix zeros(const FockBasis& basis) {
    const auto d = static_cast<Eigen::Index>(basis.dimension());
    return {basis.n_total_max(), Matrix::Zero(d, d)};
}

Eigen::Index pos(const FockState& s) { return static_cast<Eigen::Index>(basis_position(s)); }

// Adds w_ab * (a b+) + w_ba * (a+ b) restricted to one sector, writing into
// `out` at offset `base`. Sector states are indexed by n_a.
template <typename Out>
void add_hopping(Out&& out, Eigen::Index base, int total, Complex w_ab, Complex w_ba) {
    for (int n_a = 0; n_a <= total; ++n_a) {
        const int n_b = total - n_a;
        if (n_a > 0) {  // a b+ : |n_a, n_b> -> |n_a-1, n_b+1>
            out(base + n_a - 1, base + n_a) += w_ab * std::sqrt(double(n_a) * (n_b + 1));
        }
        if (n_b > 0) {  // a+ b : |n_a, n_b> -> |n_a+1, n_b-1>
            out(base + n_a + 1, base + n_a) += w_ba * std::sqrt(double(n_a + 1) * n_b);
        }
    }
}

void require_same_basis(const OperatorMatrix& x, const OperatorMatrix& y) {
    if (x.basis_id != y.basis_id || x.dim() != y.dim()) {
        throw std::invalid_argument("operators act on different bases");
    }
}

}  // namespace

OperatorMatrix identity(const FockBasis& basis) {
    const auto d = static_cast<Eigen::Index>(basis.dimension());
    return {basis.n_total_max(), Matrix::Identity(d, d)};
}

OperatorMatrix lowering_a(const FockBasis& basis) {
    auto op = zeros(basis);
    for (const auto& s : basis.states()) {
        if (s.n_a > 0) {
            op.entries(pos({s.n_a - 1, s.n_b}), pos(s)) = std::sqrt(double(s.n_a));
        }
    }
    return op;
}

OperatorMatrix lowering_b(const FockBasis& basis) {
    auto op = zeros(basis);
    for (const auto& s : basis.states()) {
        if (s.n_b > 0) {
            op.entries(pos({s.n_a, s.n_b - 1}), pos(s)) = std::sqrt(double(s.n_b));
        }
    }
    return op;
}

OperatorMatrix raising(const OperatorMatrix& lowering) {
    return {lowering.basis_id, lowering.entries.adjoint()};
}

OperatorMatrix ladder(const FockBasis& basis, Ladder which) {
    switch (which) {
        case Ladder::a: return lowering_a(basis);
        case Ladder::a_dag: return raising(lowering_a(basis));
        case Ladder::b: return lowering_b(basis);
        case Ladder::b_dag: return raising(lowering_b(basis));
    }
    throw std::invalid_argument("unknown ladder operator");
}

OperatorMatrix free_hamiltonian(const ModelParams& params, const FockBasis& basis) {
    auto op = zeros(basis);
    for (const auto& s : basis.states()) {
        op.entries(pos(s), pos(s)) = params.omega0 * (s.total() + 1);
    }
    return op;
}

OperatorMatrix interaction_hamiltonian(const ModelParams& params, const FockBasis& basis) {
    auto op = zeros(basis);
    for (int n = 0; n <= basis.n_total_max(); ++n) {
        add_hopping(op.entries, static_cast<Eigen::Index>(basis.sector(n).offset), n,
                    -params.omega_ab, -params.omega_ba);
    }
    return op;
}

OperatorMatrix hamiltonian(const ModelParams& params, const FockBasis& basis) {
    return testing::hamiltonian_with_couplings(params.omega0, params.omega_ab, params.omega_ba,
                                               basis);
}

OperatorMatrix hermitian_hamiltonian(double omega0, double g, const FockBasis& basis) {
    return hamiltonian(reciprocal_params(omega0, g), basis);
}

Matrix sector_interaction(const ModelParams& params, int total) {
    if (total < 0) throw std::out_of_range("negative sector");
    Matrix block = Matrix::Zero(total + 1, total + 1);
    add_hopping(block, 0, total, -params.omega_ab, -params.omega_ba);
    return block;
}

Matrix sector_hamiltonian(const ModelParams& params, int total) {
    Matrix block = sector_interaction(params, total);
    block.diagonal().array() += params.omega0 * (total + 1);
    return block;
}

NumberOperators number_operators(const FockBasis& basis) {
    NumberOperators ops{zeros(basis), zeros(basis), zeros(basis)};
    for (const auto& s : basis.states()) {
        const auto i = pos(s);
        ops.n_a.entries(i, i) = s.n_a;
        ops.n_b.entries(i, i) = s.n_b;
        ops.total.entries(i, i) = s.total();
    }
    return ops;
}

OperatorMatrix excitation_imbalance(const ModelParams& params, const FockBasis& basis) {
    const double g = params.g_eff();
    auto op = zeros(basis);
    for (int n = 0; n <= basis.n_total_max(); ++n) {
        add_hopping(op.entries, static_cast<Eigen::Index>(basis.sector(n).offset), n,
                    params.omega_ab / g, params.omega_ba / g);
    }
    return op;
}

IntercavityOperators intercavity_operators(const ModelParams& params, const FockBasis& basis,
                                           AlphaPlusForm form) {
    params.require_closed_form();
    // Principal complex roots keep sqrt(w_ab) sqrt(w_ba) consistent for negative pairs.
    const Complex s_ab = std::sqrt(Complex(params.omega_ab));
    const Complex s_ba = std::sqrt(Complex(params.omega_ba));
    const Complex norm_minus = std::sqrt(2.0) * s_ba;
    const Complex norm_plus = std::sqrt(2.0) * s_ab;

    const Matrix a = lowering_a(basis).entries;
    const Matrix b = lowering_b(basis).entries;
    const Matrix a_dag = a.adjoint();
    const Matrix b_dag = b.adjoint();
    const Complex alpha_plus_b = form == AlphaPlusForm::canonical ? s_ab : s_ba;

    const int id = basis.n_total_max();
    return {
        {id, (s_ab * a + s_ba * b) / norm_minus},
        {id, (s_ba * a_dag + alpha_plus_b * b_dag) / norm_plus},
        {id, (s_ab * a - s_ba * b) / norm_minus},
        {id, (s_ba * a_dag - s_ab * b_dag) / norm_plus},
    };
}

OperatorMatrix commutator(const OperatorMatrix& x, const OperatorMatrix& y) {
    require_same_basis(x, y);
    return {x.basis_id, x.entries * y.entries - y.entries * x.entries};
}

OperatorMatrix parity(const FockBasis& basis) {
    auto op = zeros(basis);
    for (const auto& s : basis.states()) {
        op.entries(pos(s), pos(s)) = (s.total() % 2 == 0) ? 1.0 : -1.0;
    }
    return op;
}

OperatorMatrix pt_conjugate(const OperatorMatrix& x, const FockBasis& basis) {
    const auto p = parity(basis);
    require_same_basis(x, p);
    return {x.basis_id, p.entries * x.entries.conjugate() * p.entries};
}

double max_abs_restricted(const Matrix& m, const FockBasis& basis, int max_total) {
    if (max_total < 0) return 0.0;
    const auto limit = static_cast<Eigen::Index>(
        std::min(basis.dimension(), basis_position({0, max_total + 1})));
    if (limit == 0) return 0.0;
    return m.topLeftCorner(limit, limit).cwiseAbs().maxCoeff();
}

double max_abs_interior(const Matrix& m, const FockBasis& basis) {
    return max_abs_restricted(m, basis, basis.n_total_max() - 2);
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

namespace testing {

OperatorMatrix hamiltonian_with_couplings(double omega0, Complex omega_ab, Complex omega_ba,
                                          const FockBasis& basis) {
    auto op = free_hamiltonian({omega0, 0.0, 0.0}, basis);
    for (int n = 0; n <= basis.n_total_max(); ++n) {
        add_hopping(op.entries, static_cast<Eigen::Index>(basis.sector(n).offset), n, -omega_ab,
                    -omega_ba);
    }
    return op;
}

}  // namespace testing
}  // namespace chiralcav
