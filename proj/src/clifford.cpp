#include "relkit/clifford.hpp"

#include <algorithm>

#include "relkit/errors.hpp"

namespace relkit {

ComplexMatrix4 from_blocks(const ComplexMatrix2& a, const ComplexMatrix2& b, const ComplexMatrix2& c,
                           const ComplexMatrix2& d) {
    ComplexMatrix4 m;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            m(i, j) = a(i, j);
            m(i, j + 2) = b(i, j);
            m(i + 2, j) = c(i, j);
            m(i + 2, j + 2) = d(i, j);
        }
    return m;
}

ComplexMatrix2 pauli(int j) {
    const cplx i{0.0, 1.0};
    switch (j) {
        case 1: return {0.0, 1.0, 1.0, 0.0};
        case 2: return {0.0, -i, i, 0.0};
        case 3: return {1.0, 0.0, 0.0, -1.0};
        default: throw IndexOutOfRange("pauli: index must be 1, 2 or 3");
    }
}

const ComplexMatrix4& DiracSet::spatial(int j) const {
    switch (j) {
        case 1: return s1;
        case 2: return s2;
        case 3: return s3;
        default: throw IndexOutOfRange("DiracSet::spatial: index must be 1, 2 or 3");
    }
}

DiracSet dirac_set() {
    const ComplexMatrix2 id2 = ComplexMatrix2::identity();
    const ComplexMatrix2 zero2;
    const ComplexMatrix2 neg_id2 = cplx{-1.0} * id2;
    DiracSet set;
    set.s0 = from_blocks(id2, zero2, zero2, neg_id2);
    set.s1 = from_blocks(zero2, pauli(1), pauli(1), zero2);
    set.s2 = from_blocks(zero2, pauli(2), pauli(2), zero2);
    set.s3 = from_blocks(zero2, pauli(3), pauli(3), zero2);
    return set;
}

ComplexMatrix4 anticommutator(const ComplexMatrix4& a, const ComplexMatrix4& b) {
    return a * b + b * a;
}

ComplexMatrix4 commutator(const ComplexMatrix4& a, const ComplexMatrix4& b) {
    return a * b - b * a;
}

CliffordReport check_clifford(const DiracSet& set) {
    const ComplexMatrix4 id = ComplexMatrix4::identity();
    const std::array<const ComplexMatrix4*, 4> all = {&set.s0, &set.s1, &set.s2, &set.s3};

    CliffordReport rep{0.0, 0.0, 0.0, 0.0};
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            const ComplexMatrix4 lhs = anticommutator(set.spatial(i), set.spatial(j));
            const ComplexMatrix4 rhs = (i == j) ? cplx{2.0} * id : ComplexMatrix4{};
            rep.pair_condition = std::max(rep.pair_condition, max_abs_diff(lhs, rhs));
        }
    for (int i = 1; i <= 3; ++i)
        rep.s0_condition = std::max(rep.s0_condition, anticommutator(set.spatial(i), set.s0).max_abs());
    for (const ComplexMatrix4* s : all)
        rep.square_identity = std::max(rep.square_identity, max_abs_diff(*s * *s, id));
    for (const ComplexMatrix4* s : all)
        rep.hermiticity = std::max(rep.hermiticity, hermiticity_defect(*s));
    return rep;
}

ComplexMatrix4 dirac_hamiltonian(const std::array<double, 3>& k, const PhysParams& params) {
    const DiracSet set = dirac_set();
    const double hc = params.hbar() * params.c();
    ComplexMatrix4 h = cplx{params.rest_energy()} * set.s0;
    for (int j = 1; j <= 3; ++j) h = h + cplx{-hc * k[j - 1]} * set.spatial(j);
    return h;
}

double hamiltonian_square_check(const std::array<double, 3>& k, const PhysParams& params) {
    const ComplexMatrix4 h = dirac_hamiltonian(k, params);
    const double hc = params.hbar() * params.c();
    const double k2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
    const double mc2 = params.rest_energy();
    const double scalar = hc * hc * k2 + mc2 * mc2;
    return max_abs_diff(h * h, cplx{scalar} * ComplexMatrix4::identity()) / scalar;
}

SpinOperators spin_operators(const PhysParams& params) {
    const ComplexMatrix2 zero2;
    SpinOperators ops;
    for (int j = 1; j <= 3; ++j) {
        ops.sigma[j - 1] = from_blocks(pauli(j), zero2, zero2, pauli(j));
        ops.J[j - 1] = cplx{params.hbar() / 2.0} * ops.sigma[j - 1];
    }
    return ops;
}

namespace {

// Levi-Civita symbol on {0,1,2}.
int epsilon(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

double su2_defect(const std::array<ComplexMatrix4, 3>& J, double hbar) {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            ComplexMatrix4 rhs;
            for (int k = 0; k < 3; ++k) {
                const int e = epsilon(i, j, k);
                if (e != 0) rhs = rhs + cplx{0.0, e * hbar} * J[k];
            }
            worst = std::max(worst, max_abs_diff(commutator(J[i], J[j]), rhs));
        }
    return worst;
}

}  // namespace

SpinAlgebraReport spin_algebra_check(const PhysParams& params) {
    const double hbar = params.hbar();
    const SpinOperators ops = spin_operators(params);

    const DiracSet set = dirac_set();
    std::array<ComplexMatrix4, 3> j_from_s;
    for (int j = 1; j <= 3; ++j) j_from_s[j - 1] = cplx{hbar / 2.0} * set.spatial(j);

    SpinAlgebraReport rep;
    rep.sigma_convention_defect = su2_defect(ops.J, hbar);
    rep.s_convention_defect = su2_defect(j_from_s, hbar);
    rep.s_convention_commutator_12 = commutator(j_from_s[0], j_from_s[1]);
    rep.s_convention_rhs_12 = cplx{0.0, hbar} * j_from_s[2];
    return rep;
}

}  // namespace relkit
