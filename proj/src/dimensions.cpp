#include "relkit/dimensions.hpp"

#include <cstddef>
#include <optional>

#include "relkit/errors.hpp"

namespace relkit {

std::string Dim::str() const {
    return "L^" + L.str() + " T^" + T.str() + " M^" + M.str();
}

Dim dim_mul(const Dim& a, const Dim& b) {
    return {a.L + b.L, a.T + b.T, a.M + b.M};
}

Dim dim_pow(const Dim& a, const Rational& p) {
    return {a.L * p, a.T * p, a.M * p};
}

std::vector<Quantity> default_basis() {
    return {
        {"m", {Rational(0), Rational(0), Rational(1)}},
        {"hbar", {Rational(2), Rational(-1), Rational(1)}},
        {"c", {Rational(1), Rational(-1), Rational(0)}},
        {"omega", {Rational(0), Rational(-1), Rational(0)}},
    };
}

std::vector<Rational> ExponentSolution::at(std::span<const Rational> lambdas) const {
    if (lambdas.size() != free_directions.size())
        throw Error("ExponentSolution::at: expected one value per free direction");
    std::vector<Rational> e = particular;
    for (std::size_t d = 0; d < free_directions.size(); ++d)
        for (std::size_t j = 0; j < e.size(); ++j)
            e[j] += lambdas[d] * free_directions[d].coeffs[j];
    return e;
}

namespace {

constexpr std::size_t kRows = 3;  // L, T, M

Rational dim_component(const Dim& d, std::size_t row) {
    switch (row) {
        case 0: return d.L;
        case 1: return d.T;
        default: return d.M;
    }
}

const char* row_name(std::size_t row) {
    switch (row) {
        case 0: return "L";
        case 1: return "T";
        default: return "M";
    }
}

}  // namespace

ExponentSolution solve_exponent_system(std::span<const Quantity> basis, const Dim& target) {
    if (basis.empty()) throw Error("solve_exponent_system: empty basis");
    const std::size_t n = basis.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (basis[i].name == basis[j].name)
                throw Error("solve_exponent_system: duplicate basis name '" + basis[i].name + "'");

    // Augmented system [A | t], rows L/T/M, one column per basis quantity.
    std::vector<std::vector<Rational>> a(kRows, std::vector<Rational>(n));
    std::vector<Rational> rhs(kRows);
    for (std::size_t r = 0; r < kRows; ++r) {
        for (std::size_t j = 0; j < n; ++j) a[r][j] = dim_component(basis[j].dim, r);
        rhs[r] = dim_component(target, r);
    }

    // Gauss-Jordan, visiting columns in basis order and taking the first
    // non-pivoted row with a nonzero entry. Exact arithmetic needs no
    // partial pivoting.
    std::vector<std::optional<std::size_t>> pivot_row_of_col(n);
    std::vector<bool> row_used(kRows, false);
    for (std::size_t col = 0; col < n; ++col) {
        std::optional<std::size_t> prow;
        for (std::size_t r = 0; r < kRows; ++r) {
            if (!row_used[r] && !a[r][col].is_zero()) {
                prow = r;
                break;
            }
        }
        if (!prow) continue;  // free column
        row_used[*prow] = true;
        pivot_row_of_col[col] = prow;

        const Rational inv_p = Rational(1) / a[*prow][col];
        for (std::size_t j = 0; j < n; ++j) a[*prow][j] *= inv_p;
        rhs[*prow] *= inv_p;

        for (std::size_t r = 0; r < kRows; ++r) {
            if (r == *prow || a[r][col].is_zero()) continue;
            const Rational f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) a[r][j] -= f * a[*prow][j];
            rhs[r] -= f * rhs[*prow];
        }
    }

    // A row with no pivot and a nonzero right-hand side has no solution.
    for (std::size_t r = 0; r < kRows; ++r) {
        if (!row_used[r] && !rhs[r].is_zero())
            throw InconsistentSystem(std::string("solve_exponent_system: the basis cannot produce the ") +
                                     row_name(r) + "^" + rhs[r].str() + " part of the target dimension");
    }

    ExponentSolution sol;
    sol.basis_names.reserve(n);
    for (const Quantity& q : basis) sol.basis_names.push_back(q.name);

    sol.particular.assign(n, Rational(0));
    for (std::size_t col = 0; col < n; ++col)
        if (pivot_row_of_col[col]) sol.particular[col] = rhs[*pivot_row_of_col[col]];

    for (std::size_t f = 0; f < n; ++f) {
        if (pivot_row_of_col[f]) continue;
        ExponentSolution::FreeDirection dir;
        dir.name = basis[f].name;
        dir.coeffs.assign(n, Rational(0));
        dir.coeffs[f] = Rational(1);
        for (std::size_t col = 0; col < n; ++col)
            if (pivot_row_of_col[col]) dir.coeffs[col] = -a[*pivot_row_of_col[col]][f];
        sol.free_directions.push_back(std::move(dir));
    }
    return sol;
}

Dim combined_dimension(std::span<const Quantity> basis, std::span<const Rational> exponents) {
    if (basis.size() != exponents.size())
        throw Error("combined_dimension: basis and exponent sizes differ");
    Dim d = Dim::dimensionless();
    for (std::size_t j = 0; j < basis.size(); ++j)
        d = dim_mul(d, dim_pow(basis[j].dim, exponents[j]));
    return d;
}

FoldExponents fold_variable_exponents(const Rational& alpha4) {
    const Rational two_thirds(2, 3);
    return {two_thirds - alpha4, alpha4 - two_thirds, two_thirds - Rational(2) * alpha4};
}

Rational control_parameter_exponent(const Dim& x_dim) {
    if (!x_dim.T.is_zero() || !x_dim.M.is_zero())
        throw NonLengthVariable("control_parameter_exponent: variable must be a pure power of length, got " +
                                x_dim.str());
    return Rational(-2) - x_dim.L;
}

}  // namespace relkit
