#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chiralcav/closed_form.hpp"
#include "chiralcav/fock_basis.hpp"
#include "chiralcav/model.hpp"
#include "chiralcav/operators.hpp"

namespace chiralcav {

/// One-photon exchange between the cavities, A->B from `from_state` and the
/// reverse hop back from the A->B target.
struct AsymmetryReport {
    ModelParams params;
    FockState from_state;
    FockState to_state;
    double reference_time = 0.0;
    Complex amp_forward;   // first-order amplitude per unit time
    Complex amp_backward;
    double amplitude_ratio = 0.0;  // |forward / backward|
    double sector_prob_forward = 0.0;   // |<to|exp(-iHt)|from>|^2, not normalized
    double sector_prob_backward = 0.0;  // |<from|exp(-iHt)|to>|^2
    double db_asymmetry = 0.0;          // 10 log10(forward / backward)
    bool infinite = false;              // backward channel closed
};

/// Throws std::invalid_argument when `from` has no photon in cavity A (this
/// includes the vacuum) or reference_time <= 0.
[[nodiscard]] AsymmetryReport exchange_asymmetry(const ModelParams& params,
                                                 const FockState& from, double reference_time);

/// Coupling ratio w_ab / w_ba whose one-photon amplitude asymmetry equals `db`
/// (10^(db/20)). Interpretation aid only.
[[nodiscard]] double coupling_ratio_for_db(double db) noexcept;

enum class SymmetryRegime { reciprocal_hermitian, nonreciprocal_pt, neither };

[[nodiscard]] std::string_view to_string(SymmetryRegime regime) noexcept;

struct SymmetryClassification {
    bool is_hermitian = false;
    bool is_pt_symmetric = false;
    SymmetryRegime regime = SymmetryRegime::neither;
    double hermiticity_residual = 0.0;  // ||H - H^dagger||_max
    double pt_residual = 0.0;           // ||P conj(H) P - H||_max
};

inline constexpr double kSymmetryTolerance = 1e-12;

[[nodiscard]] SymmetryClassification classify_symmetry(const ModelParams& params,
                                                       const FockBasis& basis);
/// Same test on an already built Hamiltonian (used for complex-coupling counterexamples).
[[nodiscard]] SymmetryClassification classify_hamiltonian(const OperatorMatrix& h,
                                                          const FockBasis& basis);

/// D = exp(theta (N^A - N^B)) maps H onto the reciprocal model:
/// D H D^-1 = H_hermitian(hermitian_coupling).
struct SimilarityMap {
    double g_eff = 0.0;
    double theta = 0.0;
    double hermitian_coupling = 0.0;  // g_eff carrying the sign of the couplings
};

/// Throws DomainError unless w_ab * w_ba > 0.
[[nodiscard]] SimilarityMap similarity_map(const ModelParams& params);
[[nodiscard]] OperatorMatrix similarity_operator(const SimilarityMap& map, const FockBasis& basis);

enum class RwaStatus { ok, breakdown };

/// breakdown iff g_eff > w0. Throws DomainError unless w_ab * w_ba > 0.
[[nodiscard]] RwaStatus rwa_breakdown_check(const ModelParams& params);

// ---------------------------------------------------------------------------
// Verification report

enum class Bound { at_most, at_least };

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    Bound bound = Bound::at_most;
    bool passed = false;
    std::string note;
};

struct VerificationOptions {
    AlphaPlusForm alpha_plus = AlphaPlusForm::canonical;
};

/// Both forms of the alpha+ coefficient, reported side by side.
struct AlphaPlusDiscrepancy {
    double canonical_residual = 0.0;
    double faulty_residual = 0.0;
    double faulty_predicted = 0.0;  // |1 - (1/2 + sqrt(w_ba/w_ab)/2)|
};

struct VerificationReport {
    ModelParams params;
    int n_total_max = 0;
    std::vector<double> t_grid;
    AlphaPlusForm alpha_plus = AlphaPlusForm::canonical;
    bool reciprocal_block = false;
    std::vector<CheckResult> checks;
    AlphaPlusDiscrepancy alpha_plus_discrepancy;

    [[nodiscard]] bool all_passed() const noexcept;
    [[nodiscard]] const CheckResult* find(std::string_view name) const noexcept;
};

/// Evenly spaced grid over one full exchange period 2 pi / g_eff.
[[nodiscard]] std::vector<double> default_time_grid(const ModelParams& params,
                                                    int samples = 33);

/// Runs the invariant catalogue. Never throws for model-level failures; a
/// closed-form domain violation becomes a failed entry.
[[nodiscard]] VerificationReport run_verification(const ModelParams& params, int n_total_max,
                                                  std::span<const double> t_grid,
                                                  const VerificationOptions& options = {});

/// Predicted |[alpha-, alpha+] - 1| for the swapped-root alpha+ coefficient.
[[nodiscard]] double faulty_alpha_plus_residual(const ModelParams& params);

}  // namespace chiralcav
