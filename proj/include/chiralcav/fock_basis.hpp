#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace chiralcav {

/// Two-mode number state |n_a, n_b>.
struct FockState {
    int n_a = 0;
    int n_b = 0;

    [[nodiscard]] constexpr int total() const noexcept { return n_a + n_b; }
    [[nodiscard]] constexpr bool valid() const noexcept { return n_a >= 0 && n_b >= 0; }

    friend constexpr auto operator<=>(const FockState&, const FockState&) = default;
};

/// Contiguous block of states sharing the total photon number.
struct SectorView {
    int total = 0;
    std::size_t offset = 0;
    std::size_t dim = 0;
};

/// Truncated two-mode basis holding every state with n_a + n_b <= n_total_max.
///
/// States are ordered by ascending total photon number and, inside a sector,
/// by ascending n_a. The Hamiltonian conserves the total number, so every
/// operator built on this basis is block diagonal over sectors and in-sector
/// computations carry no truncation error.
class FockBasis {
public:
    explicit FockBasis(int n_total_max);

    [[nodiscard]] int n_total_max() const noexcept { return n_total_max_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return states_.size(); }
    [[nodiscard]] std::span<const FockState> states() const noexcept { return states_; }

    [[nodiscard]] const FockState& state(std::size_t i) const;
    [[nodiscard]] bool contains(const FockState& s) const noexcept;
    /// Throws std::out_of_range when the state is not part of the basis.
    [[nodiscard]] std::size_t index(const FockState& s) const;
    /// Throws std::out_of_range for total > n_total_max or total < 0.
    [[nodiscard]] SectorView sector(int total) const;

    friend bool operator==(const FockBasis& a, const FockBasis& b) noexcept {
        return a.n_total_max_ == b.n_total_max_;
    }

private:
    int n_total_max_;
    std::vector<FockState> states_;
};

[[nodiscard]] FockBasis build_basis(int n_total_max);
[[nodiscard]] SectorView sector(const FockBasis& basis, int total);

/// Position of |n_a, n_b> in any basis large enough to hold it.
[[nodiscard]] constexpr std::size_t basis_position(const FockState& s) noexcept {
    const auto n = static_cast<std::size_t>(s.total());
    return n * (n + 1) / 2 + static_cast<std::size_t>(s.n_a);
}

}  // namespace chiralcav
