#include "records/expectation.hpp"

#include "records/errors.hpp"
#include "records/special.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace records {

namespace {

using boost::math::quadrature::gauss_kronrod;

void require_dim(std::size_t dim)
{
    if (dim == 0) throw UsageError("dimension must be at least 1");
}

// ∫_0^∞ exp(log_f(s)) ds for integrands of the form
//   s^(d-1) e^(-a s) K(e^(-s)),
// which concentrate around s ≈ ln(n/d) and decay like e^(-d s) to the right
// and doubly exponentially to the left. The half-line is cut into pieces
// around the peak; each piece is integrated by adaptive Gauss-Kronrod.
template <typename LogF>
double integrate_half_line(LogF&& log_f, double peak, const char* what)
{
    const double c = std::max(peak, 0.0);
    std::vector<double> cuts = {0.0, c - 12.0, c - 4.0, c - 1.0, c + 1.0, c + 4.0, c + 12.0, c + 25.0, c + 50.0};
    std::erase_if(cuts, [](double x) { return x < 0.0; });
    cuts.front() = 0.0;
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    auto f = [&](double s) {
        const double v = log_f(s);
        return std::isfinite(v) ? std::exp(v) : 0.0;
    };
    double total = 0.0;
    double error_total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        double error = 0.0;
        double l1 = 0.0;
        total += gauss_kronrod<double, 61>::integrate(f, cuts[i], cuts[i + 1], 20, 1e-13, &error, &l1);
        error_total += error;
    }
    if (!(std::isfinite(total)) || error_total > std::max(1e-11, 1e-13 * std::abs(total))) {
        throw NumericError(std::string(what) + ": quadrature did not converge (value " +
                           std::to_string(total) + ", error estimate " + std::to_string(error_total) + ")");
    }
    return total;
}

// (d-1) ln s, with the d = 1 convention s^0 = 1 at s = 0.
double log_power(double s, std::size_t dim)
{
    if (dim == 1) return 0.0;
    return static_cast<double>(dim - 1) * std::log(s);
}

double log_peak(std::size_t dim, double n)
{
    return std::log(n / static_cast<double>(dim));
}

} // namespace

double interior_expected(std::size_t dim, std::uint64_t n)
{
    require_dim(dim);
    if (n < dim) return 0.0;
    if (dim == 1) return 1.0; // n ∫ (1-t)^(n-1) dt
    const double nd = static_cast<double>(n);
    const double log_prefactor = special::log_falling_factorial(nd, dim) - std::lgamma(static_cast<double>(dim));
    const double excess = static_cast<double>(n - dim);
    const double a = static_cast<double>(dim);
    auto log_f = [&](double s) {
        const double kernel = excess == 0.0 ? 0.0 : excess * std::log1p(-std::exp(-s));
        return log_prefactor + log_power(s, dim) - a * s + kernel;
    };
    return integrate_half_line(log_f, log_peak(dim, nd), "interior_expected");
}

namespace {

// Gauss-Legendre nodes and weights on [0, 1].
void gauss_legendre(std::size_t m, std::vector<double>& x, std::vector<double>& w)
{
    x.assign(m, 0.0);
    w.assign(m, 0.0);
    const double pi = std::acos(-1.0);
    for (std::size_t i = 0; i < (m + 1) / 2; ++i) {
        double z = std::cos(pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(m) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (std::size_t k = 1; k <= m; ++k) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * static_cast<double>(k) - 1.0) * z * p1 - (static_cast<double>(k) - 1.0) * p2) /
                     static_cast<double>(k);
            }
            dp = static_cast<double>(m) * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        const double weight = 2.0 / ((1.0 - z * z) * dp * dp);
        x[i] = 0.5 * (1.0 - z);
        x[m - 1 - i] = 0.5 * (1.0 + z);
        w[i] = w[m - 1 - i] = 0.5 * weight;
    }
}

} // namespace

double interior_expected_cubature(std::size_t dim, std::uint64_t n, std::uint64_t max_nodes)
{
    require_dim(dim);
    if (n < dim) return 0.0;
    const std::size_t m = static_cast<std::size_t>((n + 1) / 2);
    double nodes = 1.0;
    for (std::size_t j = 0; j < dim; ++j) nodes *= static_cast<double>(m);
    if (nodes > static_cast<double>(max_nodes)) {
        throw ResourceError("cubature would need " + std::to_string(nodes) + " nodes");
    }

    std::vector<double> x, w;
    gauss_legendre(m, x, w);
    const double excess = static_cast<double>(n - dim);
    const double power = static_cast<double>(dim - 1);

    // Odometer over the tensor grid; y_j = 1 - x_j shares the node set.
    std::vector<std::size_t> idx(dim, 0);
    double sum = 0.0;
    while (true) {
        double prod = 1.0, weight = 1.0;
        for (std::size_t j = 0; j < dim; ++j) {
            prod *= x[idx[j]];
            weight *= w[idx[j]];
        }
        sum += weight * std::pow(prod, power) * std::pow(1.0 - prod, excess);
        std::size_t j = 0;
        while (j < dim && ++idx[j] == m) idx[j++] = 0;
        if (j == dim) break;
    }
    return std::exp(special::log_falling_factorial(static_cast<double>(n), dim)) * sum;
}

double generators_expected(std::size_t dim, std::uint64_t n)
{
    require_dim(dim);
    if (n == 0) return 1.0;
    double total = 0.0;
    double binom = 1.0; // C(d, k)
    for (std::size_t k = 1; k <= dim; ++k) {
        binom = binom * static_cast<double>(dim - k + 1) / static_cast<double>(k);
        total += binom * interior_expected(k, n);
    }
    return total;
}

double poissonized_interior(std::size_t dim, double n)
{
    require_dim(dim);
    if (!(n > 0.0)) throw UsageError("poissonized_interior requires n > 0");
    if (dim == 1) return -std::expm1(-n);
    const double a = static_cast<double>(dim);
    const double log_prefactor = a * std::log(n) - std::lgamma(a);
    auto log_f = [&](double s) { return log_prefactor + log_power(s, dim) - a * s - n * std::exp(-s); };
    return integrate_half_line(log_f, log_peak(dim, n), "poissonized_interior");
}

double depoissonized_interior(std::size_t dim, std::uint64_t n)
{
    require_dim(dim);
    if (n == 0) throw UsageError("depoissonized_interior requires n ≥ 1");
    const double nd = static_cast<double>(n);
    const double a = static_cast<double>(dim);
    const double log_prefactor = a * std::log(nd) - std::lgamma(a);
    auto log_f = [&](double s) {
        return log_prefactor + log_power(s, dim) - a * s + nd * std::log1p(-std::exp(-s));
    };
    return integrate_half_line(log_f, log_peak(dim, nd), "depoissonized_interior");
}

double depoissonization_gap_bound(std::size_t dim, double n)
{
    require_dim(dim);
    if (!(n > 0.0)) throw UsageError("depoissonization_gap_bound requires n > 0");
    const double a = static_cast<double>(dim);
    const double log_prefactor = (a + 1.0) * std::log(n) - std::lgamma(a);
    auto log_f = [&](double s) {
        return log_prefactor + log_power(s, dim) - (a + 2.0) * s - n * std::exp(-s);
    };
    return integrate_half_line(log_f, std::log(n / (a + 2.0)), "depoissonization_gap_bound");
}

double poissonized_expansion(std::size_t dim, double n)
{
    require_dim(dim);
    if (dim - 1 > special::max_gamma_derivative) throw UsageError("expansion supports d ≤ 9");
    const double L = std::log(n);
    double sum = 0.0;
    double j_factorial = 1.0;
    for (std::size_t j = 0; j < dim; ++j) {
        if (j > 0) j_factorial *= static_cast<double>(j);
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        const double term = sign * special::gamma_derivative(j, dim) /
                            (j_factorial * std::tgamma(static_cast<double>(dim - j)));
        sum += term * std::pow(L, static_cast<double>(dim - 1 - j));
    }
    return sum;
}

AsymptoticCoefficients asymptotic_coefficients(std::size_t dim)
{
    require_dim(dim);
    if (dim - 1 > special::max_gamma_derivative) throw UsageError("coefficients support d ≤ 9");
    auto factorial = [](std::size_t k) {
        long double f = 1.0L;
        for (std::size_t i = 2; i <= k; ++i) f *= static_cast<long double>(i);
        return f;
    };
    auto binomial = [&](std::size_t n, std::size_t k) { return factorial(n) / (factorial(k) * factorial(n - k)); };

    AsymptoticCoefficients out;
    out.dim = dim;
    out.a.resize(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        long double sum = 0.0L;
        for (std::size_t k = 0; k <= j; ++k) {
            const std::size_t arg = dim - j + k;
            const long double sign = (k % 2 == 0) ? 1.0L : -1.0L;
            sum += binomial(dim, arg) * sign * static_cast<long double>(special::gamma_derivative(k, arg)) /
                   (factorial(k) * factorial(dim - 1 - j));
        }
        out.a[j] = static_cast<double>(sum);
    }
    return out;
}

double asymptotic_expected(std::size_t dim, double n, std::optional<std::size_t> terms)
{
    if (!(n >= 2.0)) throw UsageError("asymptotic expansion requires n ≥ 2");
    const auto coeffs = asymptotic_coefficients(dim);
    const std::size_t count = std::min(terms.value_or(dim), dim);
    const double L = std::log(n);
    double sum = 0.0;
    for (std::size_t j = 0; j < count; ++j) {
        sum += coeffs.a[j] * std::pow(L, static_cast<double>(dim - 1 - j));
    }
    return sum;
}

ExpectationTable expectation_table(std::size_t dim, std::span<const std::uint64_t> ns, bool poissonized,
                                   bool asymptotic)
{
    require_dim(dim);
    ExpectationTable table;
    table.dim = dim;
    for (const auto n : ns) {
        ExpectationRow row;
        row.n = n;
        row.interior_exact = interior_expected(dim, n);
        row.generators_exact = generators_expected(dim, n);
        if (poissonized && n >= 1) row.interior_poissonized = poissonized_interior(dim, static_cast<double>(n));
        if (asymptotic && n >= 2) row.generators_asymptotic = asymptotic_expected(dim, static_cast<double>(n));
        table.rows.push_back(row);
    }
    return table;
}

} // namespace records
