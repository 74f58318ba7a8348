#pragma once

#include <array>

#include "relkit/matrix.hpp"
#include "relkit/phys.hpp"

namespace relkit {

// Standard Pauli matrix, j in {1, 2, 3}:
//   sigma1 = [[0,1],[1,0]], sigma2 = [[0,-i],[i,0]], sigma3 = [[1,0],[0,-1]].
// Throws IndexOutOfRange otherwise.
ComplexMatrix2 pauli(int j);

// The four anticommuting generators in block form:
//   s0 = [[I,0],[0,-I]],  sj = [[0, sigma_j],[sigma_j, 0]].
// All entries lie in {0, +-1, +-i}, so products of these matrices evaluate
// exactly in double arithmetic and the checks below use exact equality.
struct DiracSet {
    ComplexMatrix4 s0, s1, s2, s3;

    const ComplexMatrix4& spatial(int j) const;  // j in {1,2,3}
};

DiracSet dirac_set();

ComplexMatrix4 anticommutator(const ComplexMatrix4& a, const ComplexMatrix4& b);
ComplexMatrix4 commutator(const ComplexMatrix4& a, const ComplexMatrix4& b);

// Max absolute deviations of the algebraic conditions a DiracSet must meet.
// For the canonical set every field is exactly zero.
struct CliffordReport {
    double pair_condition;      // s_i s_j + s_j s_i - 2 delta_ij I, i,j in {1,2,3}
    double s0_condition;        // s_i s0 + s0 s_i, i in {1,2,3}
    double square_identity;     // s_k^2 - I over all four
    double hermiticity;         // s_k - s_k^dagger over all four

    bool passed() const {
        return pair_condition == 0.0 && s0_condition == 0.0 && square_identity == 0.0 &&
               hermiticity == 0.0;
    }
};

CliffordReport check_clifford(const DiracSet& set);

// Plane-wave Hamiltonian matrix: H(k) = -hbar c (k1 s1 + k2 s2 + k3 s3) + mc^2 s0.
ComplexMatrix4 dirac_hamiltonian(const std::array<double, 3>& k, const PhysParams& params);

// Max-entry deviation of H(k)^2 from (hbar^2 c^2 |k|^2 + m^2 c^4) I, relative
// to that scalar. Exactly zero for integer k in natural units.
double hamiltonian_square_check(const std::array<double, 3>& k, const PhysParams& params);

// Block-diagonal spin matrices Sigma_k = [[sigma_k, 0], [0, sigma_k]] and the
// angular momentum candidates J_k = (hbar/2) Sigma_k.
struct SpinOperators {
    std::array<ComplexMatrix4, 3> sigma;
    std::array<ComplexMatrix4, 3> J;
};

SpinOperators spin_operators(const PhysParams& params);

// Checks [J_i, J_j] = i hbar eps_ijk J_k under two conventions:
//  - J = (hbar/2) Sigma (block diagonal): closes exactly.
//  - J = (hbar/2) s    (block off-diagonal generators): does not close; the
//    commutator [J_1, J_2] lands on the block-diagonal Sigma_3 instead, and
//    the report carries both sides so callers can display the discrepancy.
struct SpinAlgebraReport {
    double sigma_convention_defect;            // expected exactly 0
    double s_convention_defect;                // expected > 0
    ComplexMatrix4 s_convention_commutator_12; // [J1, J2] with J = (hbar/2) s
    ComplexMatrix4 s_convention_rhs_12;        // i hbar J3 in that convention

    bool sigma_convention_closes() const { return sigma_convention_defect == 0.0; }
};

SpinAlgebraReport spin_algebra_check(const PhysParams& params);

}  // namespace relkit
