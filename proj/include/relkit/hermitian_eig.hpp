#pragma once

#include <array>

#include "relkit/matrix.hpp"

namespace relkit {

// Eigenvalues of a Hermitian 4x4 complex matrix, ascending.
// Throws EigensolverFailure on non-finite input or numerical breakdown.
std::array<double, 4> hermitian_eigenvalues(const ComplexMatrix4& a);

}  // namespace relkit
