#pragma once

#include <cmath>
#include <stdexcept>

namespace relkit {

// Rest mass, speed of light, and reduced action in caller-supplied units.
// All three are strictly positive and finite.
class PhysParams {
public:
    PhysParams(double m, double c, double hbar) : m_(m), c_(c), hbar_(hbar) {
        auto ok = [](double v) { return std::isfinite(v) && v > 0.0; };
        if (!ok(m) || !ok(c) || !ok(hbar))
            throw std::invalid_argument("PhysParams: m, c, hbar must be positive and finite");
    }

    double m() const { return m_; }
    double c() const { return c_; }
    double hbar() const { return hbar_; }

    double rest_energy() const { return m_ * c_ * c_; }      // m c^2
    double compton_wavenumber() const { return m_ * c_ / hbar_; }

    // m = c = hbar = 1
    static PhysParams natural() { return {1.0, 1.0, 1.0}; }

    // SI constants with a caller-supplied mass in kilograms.
    static PhysParams si(double mass_kg) { return {mass_kg, 299792458.0, 1.054571817e-34}; }
    static PhysParams si_electron() { return si(9.1093837015e-31); }

private:
    double m_;
    double c_;
    double hbar_;
};

}  // namespace relkit
