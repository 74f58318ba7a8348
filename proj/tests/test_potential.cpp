#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "relkit/dispersion.hpp"
#include "relkit/errors.hpp"
#include "relkit/potential.hpp"
#include "relkit/rng.hpp"

using namespace relkit;

namespace {

double rel_gap(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

}  // namespace

TEST_CASE("fold germ") {
    CHECK(fold_eval(0.0, 3.0) == 0.0);
    CHECK(fold_eval(0.0, -7.5) == 0.0);
    CHECK(fold_eval(1.0, 0.0) == 1.0);
    CHECK(fold_eval(2.0, 3.0) == 14.0);  // 8 + 6
    CHECK(FoldPotential{3.0}(2.0) == 14.0);
}

TEST_CASE("spec validation") {
    const PhysParams nat = PhysParams::natural();
    CHECK_THROWS_AS(RelativisticPotentialSpec(0.0, 0.0, 0.0, nat), std::invalid_argument);
    CHECK_THROWS_AS(RelativisticPotentialSpec(0.0, 0.0, -1.0, nat), std::invalid_argument);
    CHECK_THROWS_AS(PhysParams(0.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(PhysParams(1.0, -1.0, 1.0), std::invalid_argument);
}

TEST_CASE("general form at hand-checked points") {
    const PhysParams nat = PhysParams::natural();
    SUBCASE("both constants zero kills the potential") {
        const RelativisticPotentialSpec spec(0.0, 0.0, 1.0, nat);
        CHECK(potential_general(0.5, 2.0 / 3.0, spec, 1.0) == 0.0);
        CHECK(potential_general(7.0, -1.0, spec, 2.0) == 0.0);
    }
    SUBCASE("natural units, uniform term only") {
        const RelativisticPotentialSpec spec(1.0, 0.0, 1.0, nat);
        CHECK(potential_general(1.0, 2.0 / 3.0, spec, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("r <= 0 is a hard error") {
        const RelativisticPotentialSpec spec(1.0, 1.0, 1.0, nat);
        CHECK_THROWS_AS(potential_general(0.0, 2.0 / 3.0, spec, 1.0), SingularRadius);
        CHECK_THROWS_AS(potential_general(-1.0, 2.0 / 3.0, spec, 1.0), SingularRadius);
    }
}

TEST_CASE("specialized form") {
    const PhysParams nat = PhysParams::natural();
    SUBCASE("B = 0 leaves the r-independent uniform term") {
        const RelativisticPotentialSpec spec(0.7, 0.0, 2.0, nat);
        const double expected = 0.7 * 4.0;  // beta E^2 / (m c^2)
        CHECK(potential_specialized(1.0, spec) == doctest::Approx(expected).epsilon(1e-15));
        CHECK(potential_specialized(123.0, spec) == potential_specialized(0.001, spec));
    }
    SUBCASE("natural units unit point") {
        const RelativisticPotentialSpec spec(0.0, 1.0, 1.0, nat);
        CHECK(potential_specialized(1.0, spec) == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("power-law scaling of the singular term: r -> 8r divides it by 16") {
        const RelativisticPotentialSpec spec(0.0, 1.3, 2.5, nat);
        for (double r : {0.25, 1.0, 3.0}) {
            CHECK(rel_gap(potential_specialized(8.0 * r, spec) * 16.0, potential_specialized(r, spec)) <=
                  1e-13);
        }
    }
    SUBCASE("r <= 0 is a hard error") {
        const RelativisticPotentialSpec spec(0.0, 1.0, 1.0, nat);
        CHECK_THROWS_AS(potential_specialized(0.0, spec), SingularRadius);
    }
}

TEST_CASE("specialization identity: general at alpha4 = 2/3, E = hbar omega") {
    SplitMix64 rng(0xa11ce);
    const PhysParams systems[] = {PhysParams::natural(), PhysParams::si_electron()};
    SUBCASE("same-sign terms, relative to the value") {
        for (const PhysParams& p : systems) {
            const double mc2 = p.rest_energy();
            for (int it = 0; it < 500; ++it) {
                const double E = mc2 * rng.log_uniform(1e-3, 1e3);
                const double r = (p.hbar() / (p.m() * p.c())) * rng.log_uniform(1e-3, 1e3);
                const double beta = rng.uniform(0.0, 2.0);
                const double B = rng.uniform(0.0, 5.0);
                const RelativisticPotentialSpec spec(beta, B, E, p);
                const double general = potential_general(r, 2.0 / 3.0, spec, E / p.hbar());
                const double specialized = potential_specialized(r, spec);
                CHECK(rel_gap(general, specialized) <= 1e-13);
            }
        }
    }
    SUBCASE("negative beta: terms may cancel, so compare against the term scale") {
        for (const PhysParams& p : systems) {
            const double mc2 = p.rest_energy();
            for (int it = 0; it < 500; ++it) {
                const double E = mc2 * rng.log_uniform(1e-3, 1e3);
                const double r = (p.hbar() / (p.m() * p.c())) * rng.log_uniform(1e-3, 1e3);
                const double beta = rng.uniform(-2.0, 0.0);
                const double B = rng.uniform(0.0, 5.0);
                const RelativisticPotentialSpec spec(beta, B, E, p);
                const double general = potential_general(r, 2.0 / 3.0, spec, E / p.hbar());
                const double specialized = potential_specialized(r, spec);
                const double scale =
                    std::abs(beta) * E * E / mc2 + radial_term(r, spec);
                CHECK(std::abs(general - specialized) <= 1e-13 * scale);
            }
        }
    }
}

TEST_CASE("beta closing the bracket") {
    const PhysParams nat = PhysParams::natural();
    CHECK(beta_kg(1.0, nat) == doctest::Approx(1.0).epsilon(1e-15));  // E = mc^2
    CHECK(beta_kg(3.0, nat) == doctest::Approx(-1.0 / 9.0).epsilon(1e-14));
    CHECK(std::abs(beta_kg(1e8, nat) + 0.5) <= 3e-8);  // tends to -1/2
    CHECK_THROWS_AS(beta_kg(0.0, nat), std::invalid_argument);

    SUBCASE("bracket residual vanishes at beta_kg over six decades") {
        SplitMix64 rng(0xbeef);
        const PhysParams systems[] = {PhysParams::natural(), PhysParams::si_electron()};
        for (const PhysParams& p : systems) {
            const double mc2 = p.rest_energy();
            for (int it = 0; it < 300; ++it) {
                const double E = mc2 * rng.log_uniform(1e-3, 1e3);
                CHECK(std::abs(bracket_residual(beta_kg(E, p), E, p)) / (E * E) <= 1e-12);
            }
        }
    }
}

TEST_CASE("bracket residual at fixed beta") {
    const PhysParams nat = PhysParams::natural();
    const double mc2 = nat.rest_energy();
    CHECK(bracket_residual(0.0, mc2, nat) == doctest::Approx(-2.0 * mc2 * mc2).epsilon(1e-15));
    for (double E : {0.3, 1.0, 4.2}) {
        CHECK(bracket_residual(-0.5, E, nat) ==
              doctest::Approx(-2.0 * mc2 * E - mc2 * mc2).epsilon(1e-14));
    }
}

TEST_CASE("revised potential") {
    const PhysParams nat = PhysParams::natural();
    SUBCASE("hand-checked points") {
        const RelativisticPotentialSpec rest(0.0, 0.0, nat.rest_energy(), nat);
        CHECK(revised_potential(1.0, rest) == doctest::Approx(nat.rest_energy()).epsilon(1e-15));
        const RelativisticPotentialSpec soft(0.0, 0.0, 1e-8, nat);
        CHECK(revised_potential(1.0, soft) == doctest::Approx(0.5 * nat.rest_energy()).epsilon(1e-7));
        CHECK_THROWS_AS(revised_potential(0.0, rest), SingularRadius);
    }
    SUBCASE("equals the beta_kg composition for random inputs") {
        SplitMix64 rng(0xc0de);
        const PhysParams systems[] = {PhysParams::natural(), PhysParams::si_electron()};
        for (const PhysParams& p : systems) {
            const double mc2 = p.rest_energy();
            for (int it = 0; it < 500; ++it) {
                const double E = mc2 * rng.log_uniform(1e-3, 1e3);
                const double r = (p.hbar() / (p.m() * p.c())) * rng.log_uniform(1e-3, 1e3);
                const double B = rng.uniform(0.0, 3.0);
                const RelativisticPotentialSpec spec(beta_kg(E, p), B, E, p);
                const double composed = beta_kg(E, p) * E * E / mc2 + radial_term(r, spec);
                // Uniform and singular terms can cancel for E above the
                // beta_kg sign change; normalize by the term magnitudes.
                const double scale = E * E / mc2 + mc2 + radial_term(r, spec);
                CHECK(std::abs(revised_potential(r, spec) - composed) <= 1e-13 * scale);
            }
        }
    }
}

TEST_CASE("relativistic-change degree") {
    const PhysParams nat = PhysParams::natural();
    CHECK(mass_energy_degree(0.0, nat) == nat.rest_energy());
    CHECK(mass_energy_degree(1.0, nat) == doctest::Approx(2.0).epsilon(1e-15));
    SUBCASE("equals E^2/(mc^2) on the mass shell") {
        SplitMix64 rng(0x90ff);
        const PhysParams systems[] = {PhysParams::natural(), PhysParams::si_electron()};
        for (const PhysParams& pp : systems) {
            const double mc2 = pp.rest_energy();
            for (int it = 0; it < 200; ++it) {
                const double p = (pp.m() * pp.c()) * rng.log_uniform(1e-3, 1e3);
                const double E = kg_energy(p / pp.hbar(), pp);
                CHECK(rel_gap(mass_energy_degree(p, pp), E * E / mc2) <= 1e-13);
            }
        }
    }
}
