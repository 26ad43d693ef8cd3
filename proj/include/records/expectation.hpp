#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace records {

// Absolute accuracy targeted by the quadrature-based expectations.
inline constexpr double expectation_tolerance = 1e-9;

// Expected number of interior generators after n observations in dimension d:
//   n^(d falling) ∫_0^1 t^(d-1) (1-t)^(n-d) (-ln t)^(d-1)/(d-1)! dt,
// the density of a product of d uniforms folded in. Zero for n < d.
double interior_expected(std::size_t dim, std::uint64_t n);

// The same quantity as a d-dimensional integral over the unit cube, by
// tensor-product Gauss-Legendre with ⌈n/2⌉ nodes per axis. The integrand is a
// polynomial of degree n-1 in each coordinate, so the rule is exact up to
// rounding. Throws ResourceError when the node count exceeds max_nodes.
double interior_expected_cubature(std::size_t dim, std::uint64_t n, std::uint64_t max_nodes = 50'000'000);

// Σ_k C(d,k) I_{k,n}, where the single 0-dimensional generator only exists
// at n = 0.
double generators_expected(std::size_t dim, std::uint64_t n);

// n^d ∫ [Π(1-x_j)]^(d-1) exp(-n Π(1-x_j)) dx over the unit cube.
double poissonized_interior(std::size_t dim, double n);

// n^d ∫ [Π(1-x_j)]^(d-1) [1 - Π(1-x_j)]^n dx; lies below the Poissonized value.
double depoissonized_interior(std::size_t dim, std::uint64_t n);

// n^(d+1) ∫ [Π(1-x_j)]^(d+1) exp(-n Π(1-x_j)) dx, an upper bound on the gap
// poissonized_interior - depoissonized_interior.
double depoissonization_gap_bound(std::size_t dim, double n);

// (L n)^(d-1) Σ_j (-1)^j Γ^(j)(d) / (j! (d-1-j)!) (L n)^(-j), L = ln.
double poissonized_expansion(std::size_t dim, double n);

struct AsymptoticCoefficients {
    std::size_t dim = 0;
    std::vector<double> a; // a[j] multiplies (ln n)^(d-1-j)
};

// a_{d,j} = Σ_{k=0}^{j} C(d, d-j+k) (-1)^k Γ^(k)(d-j+k) / (k! (d-1-j)!).
// Supports d ≤ 9 (Γ derivatives up to order 8).
AsymptoticCoefficients asymptotic_coefficients(std::size_t dim);

// Σ_{j<terms} a_{d,j} (ln n)^(d-1-j); all d terms by default. Requires n ≥ 2.
double asymptotic_expected(std::size_t dim, double n, std::optional<std::size_t> terms = std::nullopt);

struct ExpectationRow {
    std::uint64_t n = 0;
    double interior_exact = 0.0;
    double generators_exact = 0.0;
    std::optional<double> interior_poissonized;
    std::optional<double> generators_asymptotic;
};

struct ExpectationTable {
    std::size_t dim = 0;
    std::vector<ExpectationRow> rows;
};

// Poissonized values are filled for n ≥ 1, asymptotic values for n ≥ 2.
ExpectationTable expectation_table(std::size_t dim, std::span<const std::uint64_t> ns, bool poissonized,
                                   bool asymptotic);

} // namespace records
