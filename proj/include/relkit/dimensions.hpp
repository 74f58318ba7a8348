#pragma once

#include <span>
#include <string>
#include <vector>

#include "relkit/rational.hpp"

namespace relkit {

// Exact exponent vector over the base dimensions length, time, mass.
struct Dim {
    Rational L;
    Rational T;
    Rational M;

    bool operator==(const Dim&) const = default;

    static Dim dimensionless() { return {}; }
    bool is_dimensionless() const { return *this == Dim{}; }

    // "L^2 T^-1 M^0" style, integer exponents printed bare.
    std::string str() const;
};

// Dimension of a product: componentwise exponent sum.
Dim dim_mul(const Dim& a, const Dim& b);

// Dimension of a power: componentwise exact scalar multiple.
Dim dim_pow(const Dim& a, const Rational& p);

inline Dim operator*(const Dim& a, const Dim& b) { return dim_mul(a, b); }

// A named physical quantity.
struct Quantity {
    std::string name;
    Dim dim;

    bool operator==(const Quantity&) const = default;
};

// The toolkit's canonical basis: m [M], hbar [M L^2 T^-1], c [L T^-1],
// omega [T^-1], in that order.
std::vector<Quantity> default_basis();

// Solution family of a dimensional-exponent system: every assignment of the
// free parameters gives exponents e = particular + sum_i lambda_i * direction_i
// with prod_j dim(basis_j)^(e_j) equal to the target exactly.
struct ExponentSolution {
    struct FreeDirection {
        std::string name;  // named after the basis quantity left un-pivoted
        std::vector<Rational> coeffs;

        bool operator==(const FreeDirection&) const = default;
    };

    std::vector<std::string> basis_names;
    std::vector<Rational> particular;
    std::vector<FreeDirection> free_directions;

    bool operator==(const ExponentSolution&) const = default;

    bool is_unique() const { return free_directions.empty(); }

    // Family member at the given free-parameter values (one per direction).
    std::vector<Rational> at(std::span<const Rational> lambdas) const;
};

// Solves prod_j dim(basis_j)^(alpha_j) = target exactly over the rationals.
// Gauss-Jordan elimination, pivoting on the first nonzero entry in basis
// order; deterministic for identical inputs. Throws InconsistentSystem when
// the target is not in the span of the basis dimensions.
ExponentSolution solve_exponent_system(std::span<const Quantity> basis, const Dim& target);

// Dimension of prod_j dim(basis_j)^(e_j); sizes must match.
Dim combined_dimension(std::span<const Quantity> basis, std::span<const Rational> exponents);

// Closed-form one-parameter family for the fold variable over the default
// basis: alpha1 = 2/3 - alpha4, alpha2 = alpha4 - 2/3, alpha3 = 2/3 - 2*alpha4.
struct FoldExponents {
    Rational alpha1, alpha2, alpha3;

    bool operator==(const FoldExponents&) const = default;
};
FoldExponents fold_variable_exponents(const Rational& alpha4);

// Exponent alpha0 such that r^alpha0 * x has dimension L^-2, for a pure
// length-power variable x: alpha0 = -2 - x_dim.L. Throws NonLengthVariable
// when x_dim carries T or M exponents.
Rational control_parameter_exponent(const Dim& x_dim);

}  // namespace relkit
