#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace chiralcav {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr Complex kI{0.0, 1.0};

/// Raised when a closed-form route is asked for parameters outside its domain
/// (typically omega_ab * omega_ba <= 0).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Physical constants of the coupled-cavity system in hbar = 1 units.
struct ModelParams {
    double omega0 = 1.0;
    double omega_ab = 0.09;  // A -> B
    double omega_ba = 0.04;  // B -> A

    [[nodiscard]] double coupling_product() const noexcept { return omega_ab * omega_ba; }
    [[nodiscard]] bool has_closed_form() const noexcept { return coupling_product() > 0.0; }
    [[nodiscard]] bool is_reciprocal() const noexcept { return omega_ab == omega_ba; }

    /// sqrt(omega_ab * omega_ba); throws DomainError unless the product is positive.
    [[nodiscard]] double g_eff() const;
    /// Throws DomainError unless the closed-form route applies.
    void require_closed_form() const { static_cast<void>(g_eff()); }

    /// Throws std::invalid_argument for non-finite values or omega0 <= 0.
    void validate() const;

    /// Same system with the two couplings exchanged.
    [[nodiscard]] ModelParams swapped() const noexcept { return {omega0, omega_ba, omega_ab}; }

    friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

[[nodiscard]] inline ModelParams reciprocal_params(double omega0, double g) {
    return {omega0, g, g};
}

}  // namespace chiralcav
