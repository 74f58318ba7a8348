#include "relkit/hermitian_eig.hpp"

#include <Eigen/Dense>

#include "relkit/errors.hpp"

namespace relkit {

std::array<double, 4> hermitian_eigenvalues(const ComplexMatrix4& a) {
    if (!a.all_finite()) throw EigensolverFailure("hermitian_eigenvalues: non-finite entries");

    Eigen::Matrix4cd m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = a(i, j);

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw EigensolverFailure("hermitian_eigenvalues: solver did not converge");

    const auto& ev = solver.eigenvalues();  // ascending
    return {ev(0), ev(1), ev(2), ev(3)};
}

}  // namespace relkit
