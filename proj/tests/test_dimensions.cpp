#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "relkit/dimensions.hpp"
#include "relkit/rng.hpp"

using namespace relkit;

namespace {

const Dim kLengthPow = {Rational(-2, 3), Rational(0), Rational(0)};

Dim dim_of(const std::vector<Quantity>& basis, const std::string& name) {
    for (const auto& q : basis)
        if (q.name == name) return q.dim;
    FAIL("no such quantity: ", name);
    return {};
}

}  // namespace

TEST_CASE("default basis carries the canonical dimensions") {
    const auto basis = default_basis();
    REQUIRE(basis.size() == 4);
    CHECK(basis[0].name == "m");
    CHECK(basis[1].name == "hbar");
    CHECK(basis[2].name == "c");
    CHECK(basis[3].name == "omega");
    CHECK(dim_of(basis, "m") == Dim{Rational(0), Rational(0), Rational(1)});
    CHECK(dim_of(basis, "hbar") == Dim{Rational(2), Rational(-1), Rational(1)});
    CHECK(dim_of(basis, "c") == Dim{Rational(1), Rational(-1), Rational(0)});
    CHECK(dim_of(basis, "omega") == Dim{Rational(0), Rational(-1), Rational(0)});
}

TEST_CASE("dim_mul and dim_pow are componentwise and exact") {
    const auto basis = default_basis();
    const Dim mass = dim_of(basis, "m");
    const Dim hbar = dim_of(basis, "hbar");
    const Dim c = dim_of(basis, "c");
    const Dim omega = dim_of(basis, "omega");

    CHECK(dim_mul(mass, mass) == Dim{Rational(0), Rational(0), Rational(2)});
    // hbar * omega is an energy: M L^2 T^-2
    CHECK(dim_mul(hbar, omega) == Dim{Rational(2), Rational(-2), Rational(1)});
    CHECK(dim_mul(c, dim_pow(c, Rational(-1))).is_dimensionless());

    CHECK(dim_pow(c, Rational(-2, 3)) == Dim{Rational(-2, 3), Rational(2, 3), Rational(0)});
    CHECK(dim_pow(hbar, Rational(0)).is_dimensionless());
    CHECK(dim_pow(mass, Rational(1)) == mass);
}

TEST_CASE("exponent system over the default basis: the one-parameter family") {
    const auto basis = default_basis();
    const ExponentSolution sol = solve_exponent_system(basis, kLengthPow);

    REQUIRE(sol.particular.size() == 4);
    CHECK(sol.particular[0] == Rational(2, 3));
    CHECK(sol.particular[1] == Rational(-2, 3));
    CHECK(sol.particular[2] == Rational(2, 3));
    CHECK(sol.particular[3] == Rational(0));

    REQUIRE(sol.free_directions.size() == 1);
    CHECK(sol.free_directions[0].name == "omega");
    const auto& d = sol.free_directions[0].coeffs;
    CHECK(d[0] == Rational(-1));
    CHECK(d[1] == Rational(1));
    CHECK(d[2] == Rational(-2));
    CHECK(d[3] == Rational(1));
}

TEST_CASE("every family member reproduces the target exactly (dim_mul/dim_pow oracle)") {
    const auto basis = default_basis();
    const ExponentSolution sol = solve_exponent_system(basis, kLengthPow);
    relkit::SplitMix64 rng(0xd1);
    for (int it = 0; it < 100; ++it) {
        const Rational lambda(rng.uniform_int(-24, 24), rng.uniform_int(1, 12));
        const auto e = sol.at(std::vector<Rational>{lambda});
        Dim product = Dim::dimensionless();
        for (std::size_t j = 0; j < basis.size(); ++j)
            product = dim_mul(product, dim_pow(basis[j].dim, e[j]));
        CHECK(product == kLengthPow);
    }
}

TEST_CASE("closed form matches the solver at every free-parameter value") {
    const auto basis = default_basis();
    const ExponentSolution sol = solve_exponent_system(basis, kLengthPow);
    relkit::SplitMix64 rng(0xf0);
    for (int it = 0; it < 100; ++it) {
        const Rational a4(rng.uniform_int(-24, 24), rng.uniform_int(1, 12));
        const FoldExponents fe = fold_variable_exponents(a4);
        const auto e = sol.at(std::vector<Rational>{a4});
        CHECK(e[0] == fe.alpha1);
        CHECK(e[1] == fe.alpha2);
        CHECK(e[2] == fe.alpha3);
        CHECK(e[3] == a4);
    }
}

TEST_CASE("closed form at the two hand-checked points") {
    CHECK(fold_variable_exponents(Rational(2, 3)) ==
          FoldExponents{Rational(0), Rational(0), Rational(-2, 3)});
    CHECK(fold_variable_exponents(Rational(0)) ==
          FoldExponents{Rational(2, 3), Rational(-2, 3), Rational(2, 3)});
}

TEST_CASE("unique solutions") {
    const auto basis = default_basis();
    SUBCASE("mass alone, dimensionless target") {
        const std::vector<Quantity> sub = {basis[0]};
        const ExponentSolution sol = solve_exponent_system(sub, Dim::dimensionless());
        CHECK(sol.is_unique());
        CHECK(sol.particular == std::vector<Rational>{Rational(0)});
    }
    SUBCASE("c and omega make a length") {
        const std::vector<Quantity> sub = {basis[2], basis[3]};
        const Dim length = {Rational(1), Rational(0), Rational(0)};
        const ExponentSolution sol = solve_exponent_system(sub, length);
        CHECK(sol.is_unique());
        CHECK(sol.particular == std::vector<Rational>{Rational(1), Rational(-1)});
        Dim product = dim_mul(dim_pow(sub[0].dim, sol.particular[0]),
                              dim_pow(sub[1].dim, sol.particular[1]));
        CHECK(product == length);
    }
}

TEST_CASE("inconsistent systems are reported, not fudged") {
    const std::vector<Quantity> sub = {default_basis()[0]};  // mass alone
    const Dim length = {Rational(1), Rational(0), Rational(0)};
    CHECK_THROWS_AS(solve_exponent_system(sub, length), InconsistentSystem);
    CHECK_THROWS_AS(solve_exponent_system({}, length), Error);
}

TEST_CASE("basis names must be unique") {
    const auto basis = default_basis();
    const std::vector<Quantity> dup = {basis[0], basis[0]};
    CHECK_THROWS_AS(solve_exponent_system(dup, Dim::dimensionless()), Error);
}

TEST_CASE("solver output is deterministic") {
    const auto basis = default_basis();
    const ExponentSolution a = solve_exponent_system(basis, kLengthPow);
    const ExponentSolution b = solve_exponent_system(basis, kLengthPow);
    CHECK(a == b);
}

TEST_CASE("control parameter exponent") {
    CHECK(control_parameter_exponent(kLengthPow) == Rational(-4, 3));
    CHECK(control_parameter_exponent(Dim{Rational(-2), Rational(0), Rational(0)}) == Rational(0));
    CHECK(control_parameter_exponent(Dim::dimensionless()) == Rational(-2));
    CHECK_THROWS_AS(control_parameter_exponent(Dim{Rational(1), Rational(-1), Rational(0)}),
                    NonLengthVariable);
    CHECK_THROWS_AS(control_parameter_exponent(Dim{Rational(0), Rational(0), Rational(1)}),
                    NonLengthVariable);
}
