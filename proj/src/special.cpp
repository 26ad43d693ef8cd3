#include "records/special.hpp"

#include "records/errors.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace records::special {

namespace {

// ζ(2) .. ζ(9).
constexpr std::array<long double, 8> zeta_values = {
    1.644934066848226436472415166646025189L, 1.202056903159594285399738161511449991L,
    1.082323233711138191516003696541167903L, 1.036927755143369926331365486457034168L,
    1.017343061984449139714517929790920528L, 1.008349277381922826839797549849796759L,
    1.004077356197944339378685238508652465L, 1.002008392826082214417852769232412061L,
};

constexpr long double euler_gamma_ld = 0.577215664901532860606512090082402431L;

long double factorial_ld(std::size_t k)
{
    long double f = 1.0L;
    for (std::size_t i = 2; i <= k; ++i) f *= static_cast<long double>(i);
    return f;
}

void require_argument(std::size_t x)
{
    if (x == 0 || x > max_gamma_argument) {
        throw UsageError("gamma functions are evaluated at integers 1.." +
                         std::to_string(max_gamma_argument) + ", got " + std::to_string(x));
    }
}

// Hurwitz zeta ζ(s, x) = Σ_{i ≥ x} i^(-s) for s ≥ 2, by Euler-Maclaurin
// after ten explicit terms.
long double hurwitz_tail(std::size_t s_int, std::size_t x)
{
    constexpr std::array<long double, 5> bernoulli = {1.0L / 6, -1.0L / 30, 1.0L / 42, -1.0L / 30, 5.0L / 66};
    const long double s = static_cast<long double>(s_int);
    long double sum = 0.0L;
    std::size_t i = x;
    for (; i < x + 10; ++i) sum += std::pow(static_cast<long double>(i), -s);
    const long double a = static_cast<long double>(i);
    sum += std::pow(a, 1.0L - s) / (s - 1.0L) + std::pow(a, -s) / 2.0L;
    // Rising factorial s (s+1) ... (s+2m-2) over (2m)!, times a^(-s-2m+1).
    long double coef = s;
    long double fact = 2.0L;
    for (std::size_t m = 1; m <= bernoulli.size(); ++m) {
        sum += bernoulli[m - 1] * coef / fact * std::pow(a, -s - static_cast<long double>(2 * m) + 1.0L);
        coef *= (s + static_cast<long double>(2 * m - 1)) * (s + static_cast<long double>(2 * m));
        fact *= static_cast<long double>((2 * m + 1) * (2 * m + 2));
    }
    return sum;
}

// ψ^(k)(1) = -γ for k = 0, (-1)^(k+1) k! ζ(k+1) otherwise; then
// ψ^(k)(x+1) = ψ^(k)(x) + (-1)^k k! / x^(k+1). For k ≥ 1 the recurrence
// cancels as x grows, so past x = 4 the tail ζ(k+1, x) is summed directly.
long double polygamma_ld(std::size_t k, std::size_t x)
{
    const long double kf = factorial_ld(k);
    const long double sign = (k % 2 == 0) ? 1.0L : -1.0L;
    if (k >= 1 && x > 4) return -sign * kf * hurwitz_tail(k + 1, x);
    long double value = (k == 0) ? -euler_gamma_ld : -sign * kf * zeta_values[k - 1];
    for (std::size_t i = 1; i < x; ++i) {
        value += sign * kf / std::pow(static_cast<long double>(i), static_cast<long double>(k + 1));
    }
    return value;
}

} // namespace

double polygamma(std::size_t k, std::size_t x)
{
    require_argument(x);
    if (k >= max_gamma_derivative) {
        throw UsageError("polygamma order " + std::to_string(k) + " not supported");
    }
    return static_cast<double>(polygamma_ld(k, x));
}

double gamma_derivative(std::size_t j, std::size_t x)
{
    require_argument(x);
    if (j > max_gamma_derivative) {
        throw UsageError("gamma derivative order " + std::to_string(j) + " exceeds " +
                         std::to_string(max_gamma_derivative));
    }
    const long double gamma_x = factorial_ld(x - 1);
    if (j == 0) return static_cast<double>(gamma_x);

    // Γ^(j) = Γ · B_j(ψ, ψ', ..., ψ^(j-1)) with the complete Bell polynomial
    // recurrence B_{m+1} = Σ_k C(m,k) ψ^(k) B_{m-k}.
    std::vector<long double> psi(j);
    for (std::size_t k = 0; k < j; ++k) psi[k] = polygamma_ld(k, x);
    std::vector<long double> bell(j + 1, 0.0L);
    bell[0] = 1.0L;
    for (std::size_t m = 0; m < j; ++m) {
        long double binom = 1.0L;
        long double sum = 0.0L;
        for (std::size_t k = 0; k <= m; ++k) {
            sum += binom * psi[k] * bell[m - k];
            binom = binom * static_cast<long double>(m - k) / static_cast<long double>(k + 1);
        }
        bell[m + 1] = sum;
    }
    return static_cast<double>(gamma_x * bell[j]);
}

double log_falling_factorial(double n, std::size_t k)
{
    if (n < static_cast<double>(k)) return -std::numeric_limits<double>::infinity();
    double s = 0.0;
    for (std::size_t i = 0; i < k; ++i) s += std::log(n - static_cast<double>(i));
    return s;
}

} // namespace records::special
