#include "chiralcav/model.hpp"

#include <cmath>

namespace chiralcav {

double ModelParams::g_eff() const {
    const double product = coupling_product();
    if (!(product > 0.0)) {
        throw DomainError("closed form requires omega_ab*omega_ba > 0, got " +
                          std::to_string(product));
    }
    return std::sqrt(product);
}

void ModelParams::validate() const {
    if (!std::isfinite(omega0) || !std::isfinite(omega_ab) || !std::isfinite(omega_ba)) {
        throw std::invalid_argument("model parameters must be finite");
    }
    if (!(omega0 > 0.0)) {
        throw std::invalid_argument("omega0 must be positive, got " + std::to_string(omega0));
    }
}

}  // namespace chiralcav
