#pragma once

#include <cstddef>
#include <cstdint>

namespace records::special {

inline constexpr double euler_gamma = 0.577215664901532860606512090082402431;

// Highest derivative order supported by gamma_derivative().
inline constexpr std::size_t max_gamma_derivative = 8;
// Largest argument for which Γ(x) is finite in double precision.
inline constexpr std::size_t max_gamma_argument = 170;

// ψ^(k)(x), the k-th derivative of the digamma function, at a positive
// integer x. Supports k < max_gamma_derivative.
double polygamma(std::size_t k, std::size_t x);

// Γ^(j)(x) at a positive integer x, for j ≤ max_gamma_derivative.
double gamma_derivative(std::size_t j, std::size_t x);

// ln(n (n-1) ... (n-k+1)); -inf when n < k.
double log_falling_factorial(double n, std::size_t k);

} // namespace records::special
