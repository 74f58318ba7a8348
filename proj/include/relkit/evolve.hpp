#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "relkit/dispersion.hpp"
#include "relkit/fft.hpp"
#include "relkit/phys.hpp"
#include "relkit/potential.hpp"

namespace relkit {

// Periodic 1-D grid, power-of-two node count (>= 16).
struct Grid1D {
    std::size_t n_points;
    double dx;
    double x0;  // left edge

    Grid1D(std::size_t n_points_, double dx_, double x0_);

    double length() const { return double(n_points) * dx; }
    double node(std::size_t i) const { return x0 + double(i) * dx; }

    // FFT-ordered signed wavenumbers, spacing 2 pi / (n dx).
    std::vector<double> wavenumbers() const;

    bool operator==(const Grid1D&) const = default;
};

struct WaveState {
    Grid1D grid;
    std::vector<std::complex<double>> amplitudes;  // one per node
    double time = 0.0;
};

enum class PropagatorKind { schrodinger, relativistic_free };

// A potential is either absent, tabulated per node, or a radial spec that
// gets tabulated as revised_potential(|x|) when the propagator is built.
using PotentialInput =
    std::variant<std::monostate, std::vector<double>, RelativisticPotentialSpec>;

struct PropagatorSpec {
    PropagatorKind kind;
    PotentialInput potential;
    double dt;
    PhysParams params;
    DispersionConfig dispersion{};
    double singular_cap = 1e6;  // |V| limit in units of mc^2 when tabulating radial specs
};

// revised_potential(|x_i|) per node. Throws SingularRadius if a node sits at
// x = 0 and SingularPotentialNode when |V| exceeds cap_rel * mc^2 anywhere.
std::vector<double> tabulate_revised_potential(const Grid1D& grid, const RelativisticPotentialSpec& spec,
                                               double cap_rel = 1e6);

// Normalized Gaussian envelope times plane-wave carrier exp(i k0 x).
// Throws UnresolvableWidth (sigma < 4 dx) or AliasFrequency (|k0| >= pi/dx).
WaveState gaussian_packet(const Grid1D& grid, double x_center, double k0, double sigma);

struct Observables {
    double norm;        // sum |psi|^2 dx
    double mean_x;      // circular mean mapped back to [x0, x0 + L)
    double mean_k;      // spectral first moment
    double variance_x;  // second moment about mean_x with minimal-image distances
};

// Throws ZeroNorm when the state norm is below 1e-300.
Observables observables(const WaveState& state);

// Time stepper with per-mode tables built once at construction:
//  - schrodinger: Strang split, half potential phase / spectral kinetic
//    phase exp(-i hbar k^2 dt / (2m)) / half potential phase.
//  - relativistic_free: exact per-mode phase exp(-i E(k) dt / hbar) with
//    E(k) from self_consistent_energy; no potential term admitted.
class Propagator {
public:
    Propagator(const Grid1D& grid, const PropagatorSpec& spec);

    WaveState step(WaveState state) const;

    // True when the largest per-step phase magnitude exceeds pi/4; evolution
    // stays unitary but phase wrapping degrades interpretability.
    bool phase_wrap_warning() const { return phase_wrap_warning_; }

    // Tabulated potential actually in use; empty when propagating free.
    const std::vector<double>& potential_table() const { return potential_; }

    const Grid1D& grid() const { return grid_; }
    double dt() const { return dt_; }

private:
    Grid1D grid_;
    PropagatorKind kind_;
    double dt_;
    Fft fft_;
    std::vector<double> potential_;
    std::vector<std::complex<double>> half_potential_phase_;
    std::vector<std::complex<double>> mode_phase_;
    bool phase_wrap_warning_ = false;
};

// One-step conveniences matching the two propagator kinds.
WaveState split_step(const WaveState& state, const PropagatorSpec& spec);
WaveState relativistic_propagate(const WaveState& state, const PropagatorSpec& spec);

struct TrajectoryPoint {
    double time;
    double mean_x;
};

// Least-squares slope of the unwrapped mean position versus time on a
// periodic domain of the given length. Requires >= 10 samples with a
// strictly increasing span; throws WrapAmbiguity when a sample-to-sample
// displacement hits the half-domain knife edge.
double group_velocity_estimate(std::span<const TrajectoryPoint> trajectory, double domain_length);

// Analytic group-velocity targets for a carrier k0.
double schrodinger_group_velocity(double k0, const PhysParams& params);   // hbar k0 / m
double relativistic_group_velocity(double k0, const PhysParams& params);  // c^2 hbar k0 / E(k0)

}  // namespace relkit
