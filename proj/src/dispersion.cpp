#include "relkit/dispersion.hpp"

#include <algorithm>
#include <cmath>

#include "relkit/clifford.hpp"
#include "relkit/errors.hpp"
#include "relkit/hermitian_eig.hpp"
#include "relkit/potential.hpp"

namespace relkit {

namespace {

Branch branch_of(double E) { return E > 0.0 ? Branch::positive : Branch::negative; }

// Defect of 2 beta E^2 - 2 mc^2 E + (hbar c k)^2 = 0, normalized by the
// largest participating term.
double mode_residual(double E, double beta, double k, const PhysParams& p) {
    const double mc2 = p.rest_energy();
    const double hck = p.hbar() * p.c() * k;
    const double t1 = 2.0 * beta * E * E;
    const double t2 = -2.0 * mc2 * E;
    const double t3 = hck * hck;
    const double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3)});
    if (scale == 0.0) return 0.0;
    return std::abs(t1 + t2 + t3) / scale;
}

}  // namespace

double kg_energy(double k, const PhysParams& params) {
    const double hck = params.hbar() * params.c() * k;
    const double mc2 = params.rest_energy();
    return std::hypot(hck, mc2);
}

std::vector<ModeEnergy> fixed_beta_modes(double k, double beta, const PhysParams& params) {
    const double mc2 = params.rest_energy();
    const double hck = params.hbar() * params.c() * k;

    if (beta == 0.0) {
        const double E = hck * hck / (2.0 * mc2);  // = hbar^2 k^2 / (2m)
        return {{k, E, branch_of(E), mode_residual(E, beta, k, params)}};
    }

    const double disc = mc2 * mc2 - 2.0 * beta * hck * hck;
    if (disc < 0.0)
        throw EvanescentMode("fixed_beta_modes: negative discriminant, no real propagating mode");
    const double s = std::sqrt(disc);

    // Cancellation-free root pair: (mc2 - s)/(2 beta) rewritten through the
    // product of roots so small |beta| and near-double roots stay accurate.
    std::vector<ModeEnergy> modes;
    for (double E : {(mc2 + s) / (2.0 * beta), hck * hck / (mc2 + s)})
        modes.push_back({k, E, branch_of(E), mode_residual(E, beta, k, params)});
    std::sort(modes.begin(), modes.end(), [](const ModeEnergy& a, const ModeEnergy& b) { return a.E > b.E; });
    return modes;
}

ModeEnergy self_consistent_energy(double k, const PhysParams& params, const DispersionConfig& cfg) {
    cfg.validate();
    const double mc2 = params.rest_energy();
    const double hck = params.hbar() * params.c() * std::abs(k);

    const auto f = [&](double E) {
        return 2.0 * beta_kg(E, params) * E * E - 2.0 * mc2 * E + hck * hck;
    };

    double lo = 0.5 * mc2;
    double hi = cfg.bracket_factor * (mc2 + hck);
    double f_lo = f(lo);
    double f_hi = f(hi);
    if (f_lo == 0.0) return {k, lo, branch_of(lo), 0.0};
    if (f_hi == 0.0) return {k, hi, branch_of(hi), 0.0};
    if ((f_lo > 0.0) == (f_hi > 0.0))
        throw BracketFailure("self_consistent_energy: no sign change on the initial bracket");

    double mid = 0.5 * (lo + hi);
    for (int iter = 0; iter < cfg.max_iter; ++iter) {
        mid = 0.5 * (lo + hi);
        const double f_mid = f(mid);
        if (f_mid == 0.0 || (hi - lo) <= cfg.abs_tol * mid) {
            const double scale = mc2 * mc2 + hck * hck;
            return {k, mid, branch_of(mid), std::abs(f_mid) / scale};
        }
        if ((f_mid > 0.0) == (f_lo > 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    throw NoConvergence("self_consistent_energy: bisection did not reach tolerance within max_iter");
}

std::array<double, 4> dirac_spectrum(const std::array<double, 3>& k, const PhysParams& params) {
    return hermitian_eigenvalues(dirac_hamiltonian(k, params));
}

double nonrel_limit_gap(double k, const PhysParams& params) {
    if (k == 0.0) return 1.0;
    // With x = hbar k / (m c):
    //   kg_energy - mc^2 - hbar^2 k^2/(2m) = -mc^2 x^4 / (2 (1 + sqrt(1+x^2))^2)
    // identically, so the ratio to mc^2 x^4 / 8 is 4 / (1 + sqrt(1+x^2))^2.
    // This form has no cancellation at small x.
    const double x = params.hbar() * k / (params.m() * params.c());
    const double root = std::sqrt(1.0 + x * x);
    return 4.0 / ((1.0 + root) * (1.0 + root));
}

}  // namespace relkit
