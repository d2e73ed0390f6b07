#pragma once

// Construction paths that accept complex couplings. The public model only
// admits real couplings; these exist for counterexamples (PT violation,
// complex hermitian pairs) in tests and the verification report.

#include "chiralcav/operators.hpp"

namespace chiralcav::testing {

[[nodiscard]] OperatorMatrix hamiltonian_with_couplings(double omega0, Complex omega_ab,
                                                        Complex omega_ba,
                                                        const FockBasis& basis);

}  // namespace chiralcav::testing
