#pragma once

#include "chiralcav/fock_basis.hpp"
#include "chiralcav/model.hpp"

namespace chiralcav {

/// Dense operator on a FockBasis; rows and columns follow basis order.
struct OperatorMatrix {
    int basis_id = 0;  // n_total_max of the basis the matrix acts on
    Matrix entries;

    [[nodiscard]] Eigen::Index dim() const noexcept { return entries.rows(); }
};

enum class Ladder { a, a_dag, b, b_dag };

/// How the intercavity raising operator alpha+ is assembled.
///  canonical:  (sqrt(w_ba) a+ + sqrt(w_ab) b+) / sqrt(2 w_ab)
///  swapped_root: (sqrt(w_ba) a+ + sqrt(w_ba) b+) / sqrt(2 w_ab), which breaks
///              [alpha-, alpha+] = 1 whenever w_ab != w_ba. Kept for fault injection.
enum class AlphaPlusForm { canonical, swapped_root };

struct NumberOperators {
    OperatorMatrix n_a;
    OperatorMatrix n_b;
    OperatorMatrix total;
};

struct IntercavityOperators {
    OperatorMatrix alpha_minus;
    OperatorMatrix alpha_plus;
    OperatorMatrix beta_minus;
    OperatorMatrix beta_plus;
};

[[nodiscard]] OperatorMatrix identity(const FockBasis& basis);
[[nodiscard]] OperatorMatrix lowering_a(const FockBasis& basis);
[[nodiscard]] OperatorMatrix lowering_b(const FockBasis& basis);
/// Conjugate transpose of a t = 0 lowering matrix.
[[nodiscard]] OperatorMatrix raising(const OperatorMatrix& lowering);
[[nodiscard]] OperatorMatrix ladder(const FockBasis& basis, Ladder which);

/// H0 = w0 (a+a + b+b + 1)
[[nodiscard]] OperatorMatrix free_hamiltonian(const ModelParams& params, const FockBasis& basis);
/// H_I = -(w_ab a b+ + w_ba a+ b)
[[nodiscard]] OperatorMatrix interaction_hamiltonian(const ModelParams& params,
                                                     const FockBasis& basis);
[[nodiscard]] OperatorMatrix hamiltonian(const ModelParams& params, const FockBasis& basis);
/// Reciprocal model H0 - g (a b+ + a+ b).
[[nodiscard]] OperatorMatrix hermitian_hamiltonian(double omega0, double g, const FockBasis& basis);

/// (N+1)x(N+1) block of H_I (resp. H) on the sector with total photon number N,
/// ordered by ascending n_a.
[[nodiscard]] Matrix sector_interaction(const ModelParams& params, int total);
[[nodiscard]] Matrix sector_hamiltonian(const ModelParams& params, int total);

[[nodiscard]] NumberOperators number_operators(const FockBasis& basis);
/// Delta = (w_ba/g) a+ b + (w_ab/g) a b+, so that H = w0 (N + 1) - g Delta.
/// Throws DomainError unless w_ab * w_ba > 0.
[[nodiscard]] OperatorMatrix excitation_imbalance(const ModelParams& params,
                                                  const FockBasis& basis);

/// Throws DomainError unless w_ab * w_ba > 0.
[[nodiscard]] IntercavityOperators intercavity_operators(
    const ModelParams& params, const FockBasis& basis,
    AlphaPlusForm form = AlphaPlusForm::canonical);

/// XY - YX. Throws std::invalid_argument when the operands live on different bases.
[[nodiscard]] OperatorMatrix commutator(const OperatorMatrix& x, const OperatorMatrix& y);

/// Diagonal (-1)^(n_a + n_b).
[[nodiscard]] OperatorMatrix parity(const FockBasis& basis);
/// P conj(X) P: parity followed by antilinear time reversal (number states are real).
[[nodiscard]] OperatorMatrix pt_conjugate(const OperatorMatrix& x, const FockBasis& basis);

/// Largest |entry| over rows/columns whose states satisfy n_a + n_b <= max_total.
[[nodiscard]] double max_abs_restricted(const Matrix& m, const FockBasis& basis, int max_total);
/// Entries at least two photons away from the truncation edge.
[[nodiscard]] double max_abs_interior(const Matrix& m, const FockBasis& basis);
[[nodiscard]] double max_abs(const Matrix& m);

}  // namespace chiralcav
