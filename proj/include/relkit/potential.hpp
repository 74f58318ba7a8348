#pragma once

#include "relkit/phys.hpp"

namespace relkit {

// Fold-catastrophe germ x^3 + n x.
struct FoldPotential {
    double n = 0.0;

    double operator()(double x) const { return x * x * x + n * x; }
};

double fold_eval(double x, double n);

// Constants of the two-term radial potential: the dimensionless beta and B,
// the plane-wave energy E > 0 they multiply, and the unit system.
struct RelativisticPotentialSpec {
    double beta;
    double B;
    double E;
    PhysParams params;

    RelativisticPotentialSpec(double beta_, double B_, double E_, PhysParams params_)
        : beta(beta_), B(B_), E(E_), params(params_) {
        if (!(std::isfinite(E) && E > 0.0))
            throw std::invalid_argument("RelativisticPotentialSpec: E must be positive and finite");
        if (!std::isfinite(beta) || !std::isfinite(B))
            throw std::invalid_argument("RelativisticPotentialSpec: beta and B must be finite");
    }
};

// Full exponent-family form of the potential at a given alpha4:
//   (hbar^2/m) [ beta (mc/hbar)^2 (hbar omega / mc^2)^(3 alpha4)
//              + B (mc/hbar)^(2/3) (hbar omega / mc^2)^(alpha4) r^(-4/3) ].
// Throws SingularRadius unless r > 0.
double potential_general(double r, double alpha4, const RelativisticPotentialSpec& spec, double omega);

// Specialized two-term form (alpha4 = 2/3, E = hbar omega):
//   beta E^2/(m c^2) + B (hbar^2 E / c)^(2/3) r^(-4/3) / m.
// Throws SingularRadius unless r > 0.
double potential_specialized(double r, const RelativisticPotentialSpec& spec);

// The singular second term alone: B (hbar^2 E / c)^(2/3) r^(-4/3) / m.
double radial_term(double r, const RelativisticPotentialSpec& spec);

// beta making the bracket residual vanish: (m^2 c^4 + 2 m c^2 E - E^2)/(2 E^2).
double beta_kg(double E, const PhysParams& params);

// (2 beta + 1) E^2 - 2 m c^2 E - m^2 c^4. Zero exactly when beta = beta_kg(E).
double bracket_residual(double beta, double E, const PhysParams& params);

// Potential with beta eliminated in favor of E:
//   (1/2) (1 + 2E/(mc^2) - E^2/(m^2 c^4)) mc^2 + radial_term(r).
// Agrees with potential_specialized at beta = beta_kg(E).
// Throws SingularRadius unless r > 0.
double revised_potential(double r, const RelativisticPotentialSpec& spec);

// mc^2 [1 + c^2 p^2/(m^2 c^4)]; equals E^2/(mc^2) on the mass shell.
double mass_energy_degree(double p, const PhysParams& params);

}  // namespace relkit
