#include "relkit/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "relkit/errors.hpp"

namespace relkit {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

Grid1D::Grid1D(std::size_t n_points_, double dx_, double x0_)
    : n_points(n_points_), dx(dx_), x0(x0_) {
    if (!is_power_of_two(n_points) || n_points < 16)
        throw std::invalid_argument("Grid1D: n_points must be a power of two >= 16");
    if (!(std::isfinite(dx) && dx > 0.0)) throw std::invalid_argument("Grid1D: dx must be positive");
    if (!std::isfinite(x0)) throw std::invalid_argument("Grid1D: x0 must be finite");
}

std::vector<double> Grid1D::wavenumbers() const {
    const double dk = 2.0 * kPi / length();
    std::vector<double> k(n_points);
    for (std::size_t j = 0; j < n_points; ++j) {
        const auto idx = (j < n_points / 2) ? double(j) : double(j) - double(n_points);
        k[j] = dk * idx;
    }
    return k;
}

std::vector<double> tabulate_revised_potential(const Grid1D& grid, const RelativisticPotentialSpec& spec,
                                               double cap_rel) {
    const double cap = cap_rel * spec.params.rest_energy();
    std::vector<double> v(grid.n_points);
    for (std::size_t i = 0; i < grid.n_points; ++i) {
        const double r = std::abs(grid.node(i));
        if (r == 0.0)
            throw SingularRadius("tabulate_revised_potential: grid node at r = 0; offset x0");
        v[i] = revised_potential(r, spec);
        if (!std::isfinite(v[i]) || std::abs(v[i]) > cap)
            throw SingularPotentialNode("tabulate_revised_potential: |V| above cap at node " +
                                        std::to_string(i));
    }
    return v;
}

WaveState gaussian_packet(const Grid1D& grid, double x_center, double k0, double sigma) {
    if (!(sigma >= 4.0 * grid.dx))
        throw UnresolvableWidth("gaussian_packet: sigma must be at least 4 dx");
    if (!(std::abs(k0) < kPi / grid.dx))
        throw AliasFrequency("gaussian_packet: |k0| must stay below pi/dx");

    const double length = grid.length();
    WaveState state{grid, std::vector<std::complex<double>>(grid.n_points), 0.0};
    for (std::size_t i = 0; i < grid.n_points; ++i) {
        const double x = grid.node(i);
        double d = x - x_center;
        d -= length * std::round(d / length);  // minimal image: envelope is periodic
        const double envelope = std::exp(-d * d / (4.0 * sigma * sigma));
        state.amplitudes[i] = std::polar(envelope, k0 * x);
    }

    double norm2 = 0.0;
    for (const auto& a : state.amplitudes) norm2 += std::norm(a);
    norm2 *= grid.dx;
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& a : state.amplitudes) a *= inv;
    return state;
}

Observables observables(const WaveState& state) {
    const Grid1D& g = state.grid;
    const double L = g.length();

    double norm = 0.0;
    for (const auto& a : state.amplitudes) norm += std::norm(a);
    norm *= g.dx;
    if (norm < 1e-300) throw ZeroNorm("observables: state norm vanishes");

    // Circular mean keeps <x> meaningful for packets straddling the boundary.
    std::complex<double> ring{};
    for (std::size_t i = 0; i < g.n_points; ++i) {
        const double theta = 2.0 * kPi * (g.node(i) - g.x0) / L;
        ring += std::norm(state.amplitudes[i]) * std::polar(1.0, theta);
    }
    double angle = std::arg(ring);
    if (angle < 0.0) angle += 2.0 * kPi;
    const double mean_x = g.x0 + L * angle / (2.0 * kPi);

    double var = 0.0;
    for (std::size_t i = 0; i < g.n_points; ++i) {
        double d = g.node(i) - mean_x;
        d -= L * std::round(d / L);  // minimal image
        var += std::norm(state.amplitudes[i]) * d * d;
    }
    var = var * g.dx / norm;

    std::vector<std::complex<double>> spectrum = state.amplitudes;
    Fft(g.n_points).forward(spectrum);
    const std::vector<double> k = g.wavenumbers();
    double wsum = 0.0;
    double ksum = 0.0;
    for (std::size_t j = 0; j < g.n_points; ++j) {
        const double w = std::norm(spectrum[j]);
        wsum += w;
        ksum += w * k[j];
    }

    return {norm, mean_x, ksum / wsum, var};
}

Propagator::Propagator(const Grid1D& grid, const PropagatorSpec& spec)
    : grid_(grid), kind_(spec.kind), dt_(spec.dt), fft_(grid.n_points) {
    if (!(std::isfinite(dt_) && dt_ > 0.0))
        throw std::invalid_argument("Propagator: dt must be positive");
    const PhysParams& p = spec.params;

    if (std::holds_alternative<std::vector<double>>(spec.potential)) {
        potential_ = std::get<std::vector<double>>(spec.potential);
        if (potential_.size() != grid_.n_points)
            throw std::invalid_argument("Propagator: potential table size does not match grid");
        for (std::size_t i = 0; i < potential_.size(); ++i)
            if (!std::isfinite(potential_[i]))
                throw SingularPotentialNode("Propagator: non-finite potential at node " +
                                            std::to_string(i));
    } else if (std::holds_alternative<RelativisticPotentialSpec>(spec.potential)) {
        potential_ = tabulate_revised_potential(grid_, std::get<RelativisticPotentialSpec>(spec.potential),
                                                spec.singular_cap);
    }

    const std::vector<double> k = grid_.wavenumbers();
    mode_phase_.resize(grid_.n_points);
    double max_mode_angle = 0.0;

    if (kind_ == PropagatorKind::schrodinger) {
        for (std::size_t j = 0; j < k.size(); ++j) {
            const double angle = p.hbar() * k[j] * k[j] * dt_ / (2.0 * p.m());
            mode_phase_[j] = std::polar(1.0, -angle);
            max_mode_angle = std::max(max_mode_angle, std::abs(angle));
        }
        if (!potential_.empty()) {
            half_potential_phase_.resize(grid_.n_points);
            double max_v = 0.0;
            for (std::size_t i = 0; i < potential_.size(); ++i) {
                half_potential_phase_[i] = std::polar(1.0, -potential_[i] * dt_ / (2.0 * p.hbar()));
                max_v = std::max(max_v, std::abs(potential_[i]));
            }
            max_mode_angle += max_v * dt_ / p.hbar();
        }
    } else {
        if (!std::holds_alternative<std::monostate>(spec.potential))
            throw std::invalid_argument("Propagator: relativistic_free admits no potential term");
        for (std::size_t j = 0; j < k.size(); ++j) {
            const double energy = self_consistent_energy(std::abs(k[j]), p, spec.dispersion).E;
            const double angle = energy * dt_ / p.hbar();
            mode_phase_[j] = std::polar(1.0, -angle);
            max_mode_angle = std::max(max_mode_angle, std::abs(angle));
        }
    }
    phase_wrap_warning_ = max_mode_angle > kPi / 4.0;
}

WaveState Propagator::step(WaveState state) const {
    if (!(state.grid == grid_)) throw std::invalid_argument("Propagator::step: grid mismatch");
    auto& psi = state.amplitudes;

    if (!half_potential_phase_.empty())
        for (std::size_t i = 0; i < psi.size(); ++i) psi[i] *= half_potential_phase_[i];

    fft_.forward(psi);
    for (std::size_t j = 0; j < psi.size(); ++j) psi[j] *= mode_phase_[j];
    fft_.inverse(psi);

    if (!half_potential_phase_.empty())
        for (std::size_t i = 0; i < psi.size(); ++i) psi[i] *= half_potential_phase_[i];

    state.time += dt_;
    return state;
}

WaveState split_step(const WaveState& state, const PropagatorSpec& spec) {
    if (spec.kind != PropagatorKind::schrodinger)
        throw std::invalid_argument("split_step: spec.kind must be schrodinger");
    return Propagator(state.grid, spec).step(state);
}

WaveState relativistic_propagate(const WaveState& state, const PropagatorSpec& spec) {
    if (spec.kind != PropagatorKind::relativistic_free)
        throw std::invalid_argument("relativistic_propagate: spec.kind must be relativistic_free");
    return Propagator(state.grid, spec).step(state);
}

double group_velocity_estimate(std::span<const TrajectoryPoint> trajectory, double domain_length) {
    if (trajectory.size() < 10)
        throw InsufficientSamples("group_velocity_estimate: need at least 10 samples");
    if (!(domain_length > 0.0))
        throw std::invalid_argument("group_velocity_estimate: domain_length must be positive");
    const double span = trajectory.back().time - trajectory.front().time;
    if (!(span > 0.0))
        throw InsufficientSamples("group_velocity_estimate: samples must span a positive time interval");

    // Unwrap into a continuous trajectory via minimal-image displacements.
    std::vector<double> x(trajectory.size());
    x[0] = trajectory[0].mean_x;
    for (std::size_t i = 1; i < trajectory.size(); ++i) {
        double d = trajectory[i].mean_x - trajectory[i - 1].mean_x;
        d -= domain_length * std::round(d / domain_length);
        if (std::abs(std::abs(d) - 0.5 * domain_length) < 1e-9 * domain_length)
            throw WrapAmbiguity("group_velocity_estimate: half-domain displacement between samples");
        x[i] = x[i - 1] + d;
    }

    double t_mean = 0.0;
    double x_mean = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        t_mean += trajectory[i].time;
        x_mean += x[i];
    }
    t_mean /= double(x.size());
    x_mean /= double(x.size());

    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dt = trajectory[i].time - t_mean;
        num += dt * (x[i] - x_mean);
        den += dt * dt;
    }
    if (den == 0.0)
        throw InsufficientSamples("group_velocity_estimate: degenerate time samples");
    return num / den;
}

double schrodinger_group_velocity(double k0, const PhysParams& params) {
    return params.hbar() * k0 / params.m();
}

double relativistic_group_velocity(double k0, const PhysParams& params) {
    const double c = params.c();
    return c * c * params.hbar() * k0 / kg_energy(k0, params);
}

}  // namespace relkit
