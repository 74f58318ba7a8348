#pragma once

#include <array>
#include <vector>

#include "relkit/phys.hpp"

namespace relkit {

enum class Branch { positive, negative };

// One plane-wave mode: branch records the sign of E (E > 0 -> positive),
// residual is the dimensionless defect of the defining equation.
struct ModeEnergy {
    double k;
    double E;
    Branch branch;
    double residual;
};

struct DispersionConfig {
    double abs_tol = 1e-12;
    int max_iter = 200;
    double bracket_factor = 10.0;

    void validate() const {
        if (!(abs_tol > 0.0)) throw std::invalid_argument("DispersionConfig: abs_tol must be positive");
        if (max_iter < 1) throw std::invalid_argument("DispersionConfig: max_iter must be >= 1");
        if (!(bracket_factor > 1.0))
            throw std::invalid_argument("DispersionConfig: bracket_factor must exceed 1");
    }
};

// Positive-branch dispersion +sqrt(hbar^2 c^2 k^2 + m^2 c^4).
double kg_energy(double k, const PhysParams& params);

// Real roots of 2 beta E^2 - 2 m c^2 E + hbar^2 c^2 k^2 = 0 at fixed beta,
// sorted descending. beta = 0 degenerates to the single linear-case root
// hbar^2 k^2 / (2m). Throws EvanescentMode when the discriminant is negative.
std::vector<ModeEnergy> fixed_beta_modes(double k, double beta, const PhysParams& params);

// E > 0 with 2 beta_kg(E) E^2 - 2 m c^2 E + hbar^2 c^2 k^2 = 0, found by
// bracketed bisection; coincides with kg_energy(k) to ~abs_tol relative.
// Throws BracketFailure / NoConvergence per the config limits.
ModeEnergy self_consistent_energy(double k, const PhysParams& params, const DispersionConfig& cfg = {});

// Eigenvalues of dirac_hamiltonian(k), ascending: {-E_k, -E_k, +E_k, +E_k}
// with E_k = kg_energy(|k|). Throws EigensolverFailure on invalid input.
std::array<double, 4> dirac_spectrum(const std::array<double, 3>& k, const PhysParams& params);

// Ratio of |kg_energy(k) - mc^2 - hbar^2 k^2/(2m)| to the leading quartic
// correction hbar^4 k^4 / (8 m^3 c^2); tends to 1 as k -> 0 and returns 1
// at k = 0 by convention. Evaluated in a cancellation-free form.
double nonrel_limit_gap(double k, const PhysParams& params);

}  // namespace relkit
