#include "relkit/potential.hpp"

#include <cmath>

#include "relkit/errors.hpp"

namespace relkit {

namespace {

void require_positive_radius(double r) {
    if (!(std::isfinite(r) && r > 0.0))
        throw SingularRadius("potential: radius must be positive and finite");
}

}  // namespace

double fold_eval(double x, double n) { return x * x * x + n * x; }

double potential_general(double r, double alpha4, const RelativisticPotentialSpec& spec, double omega) {
    require_positive_radius(r);
    const PhysParams& p = spec.params;
    const double mc2 = p.rest_energy();
    const double kappa = p.compton_wavenumber();  // mc/hbar
    const double freq_ratio = p.hbar() * omega / mc2;
    const double prefactor = p.hbar() * p.hbar() / p.m();

    const double uniform = spec.beta * kappa * kappa * std::pow(freq_ratio, 3.0 * alpha4);
    const double radial =
        spec.B * std::pow(kappa, 2.0 / 3.0) * std::pow(freq_ratio, alpha4) * std::pow(r, -4.0 / 3.0);
    return prefactor * (uniform + radial);
}

double potential_specialized(double r, const RelativisticPotentialSpec& spec) {
    require_positive_radius(r);
    const double mc2 = spec.params.rest_energy();
    return spec.beta * spec.E * spec.E / mc2 + radial_term(r, spec);
}

double radial_term(double r, const RelativisticPotentialSpec& spec) {
    require_positive_radius(r);
    const PhysParams& p = spec.params;
    const double base = p.hbar() * p.hbar() * spec.E / p.c();
    return spec.B * std::pow(base, 2.0 / 3.0) * std::pow(r, -4.0 / 3.0) / p.m();
}

double beta_kg(double E, const PhysParams& params) {
    if (!(std::isfinite(E) && E > 0.0))
        throw std::invalid_argument("beta_kg: E must be positive and finite");
    const double mc2 = params.rest_energy();
    return (mc2 * mc2 + 2.0 * mc2 * E - E * E) / (2.0 * E * E);
}

double bracket_residual(double beta, double E, const PhysParams& params) {
    // Factored form of (2 beta + 1) E^2 - 2 mc^2 E - m^2 c^4: the whole
    // cancellation sits in the beta difference, so the defining root
    // beta = beta_kg(E) gives exactly zero.
    return 2.0 * E * E * (beta - beta_kg(E, params));
}

double revised_potential(double r, const RelativisticPotentialSpec& spec) {
    require_positive_radius(r);
    const double mc2 = spec.params.rest_energy();
    const double e_ratio = spec.E / mc2;
    const double uniform = 0.5 * (1.0 + 2.0 * e_ratio - e_ratio * e_ratio) * mc2;
    return uniform + radial_term(r, spec);
}

double mass_energy_degree(double p, const PhysParams& params) {
    const double mc2 = params.rest_energy();
    const double cp = params.c() * p;
    return mc2 * (1.0 + cp * cp / (mc2 * mc2));
}

}  // namespace relkit
