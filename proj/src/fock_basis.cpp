#include "chiralcav/fock_basis.hpp"

#include <stdexcept>
#include <string>

namespace chiralcav {

FockBasis::FockBasis(int n_total_max) : n_total_max_(n_total_max) {
    if (n_total_max < 0) {
        throw std::invalid_argument("n_total_max must be non-negative, got " +
                                    std::to_string(n_total_max));
    }
    const auto n = static_cast<std::size_t>(n_total_max);
    states_.reserve((n + 1) * (n + 2) / 2);
    for (int total = 0; total <= n_total_max; ++total) {
        for (int n_a = 0; n_a <= total; ++n_a) {
            states_.push_back({n_a, total - n_a});
        }
    }
}

const FockState& FockBasis::state(std::size_t i) const {
    if (i >= states_.size()) {
        throw std::out_of_range("basis position " + std::to_string(i) + " out of range");
    }
    return states_[i];
}

bool FockBasis::contains(const FockState& s) const noexcept {
    return s.valid() && s.total() <= n_total_max_;
}

std::size_t FockBasis::index(const FockState& s) const {
    if (!contains(s)) {
        throw std::out_of_range("state |" + std::to_string(s.n_a) + "," + std::to_string(s.n_b) +
                                "> is outside the basis with n_total_max=" +
                                std::to_string(n_total_max_));
    }
    return basis_position(s);
}

SectorView FockBasis::sector(int total) const {
    if (total < 0 || total > n_total_max_) {
        throw std::out_of_range("sector " + std::to_string(total) +
                                " out of range for n_total_max=" + std::to_string(n_total_max_));
    }
    const auto n = static_cast<std::size_t>(total);
    return {total, n * (n + 1) / 2, n + 1};
}

FockBasis build_basis(int n_total_max) { return FockBasis(n_total_max); }

SectorView sector(const FockBasis& basis, int total) { return basis.sector(total); }

}  // namespace chiralcav
