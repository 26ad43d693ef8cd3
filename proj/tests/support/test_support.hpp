#pragma once

#include "records/geometry.hpp"
#include "records/random.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace support {

using records::Point;

inline std::vector<Point> example_records()
{
    return {Point{0.2, 0.8, 0.3, 0.7}, Point{0.5, 0.1, 0.4, 0.6}};
}

// The eight generators of the two-record four-dimensional instance above.
inline std::vector<Point> example_generators()
{
    std::vector<Point> g = {
        Point{0.5, 0, 0, 0},   Point{0, 0.8, 0, 0},   Point{0, 0, 0.4, 0},   Point{0, 0, 0, 0.7},
        Point{0.2, 0.1, 0, 0}, Point{0.2, 0, 0, 0.6}, Point{0, 0.1, 0.3, 0}, Point{0, 0, 0.3, 0.6},
    };
    std::sort(g.begin(), g.end());
    return g;
}

inline double harmonic(std::size_t n)
{
    double h = 0.0;
    for (std::size_t i = n; i >= 1; --i) h += 1.0 / static_cast<double>(i);
    return h;
}

inline std::vector<Point> sorted(std::span<const Point> pts)
{
    std::vector<Point> v(pts.begin(), pts.end());
    std::sort(v.begin(), v.end());
    return v;
}

inline Point uniform_point(std::size_t dim, records::RandomSource& rng)
{
    std::vector<double> c(dim);
    for (auto& x : c) x = rng.uniform();
    return Point(std::move(c));
}

// Kolmogorov distribution tail P(K > x).
inline double kolmogorov_q(double x)
{
    if (x < 0.2) return 1.0;
    double sum = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * k * k * x * x);
        sum += (k % 2 ? 1.0 : -1.0) * term;
        if (term < 1e-18) break;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

// One-sample KS test of values against Uniform[0,1); returns the p-value.
inline double ks_uniform_pvalue(std::vector<double> values)
{
    std::sort(values.begin(), values.end());
    const double n = static_cast<double>(values.size());
    double dmax = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double x = values[i];
        dmax = std::max({dmax, (static_cast<double>(i) + 1.0) / n - x, x - static_cast<double>(i) / n});
    }
    const double sn = std::sqrt(n);
    return kolmogorov_q((sn + 0.12 + 0.11 / sn) * dmax);
}

// Two-sample KS test; returns the asymptotic p-value.
inline double ks_two_sample_pvalue(std::vector<double> a, std::vector<double> b)
{
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double dmax = 0.0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        dmax = std::max(dmax, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    const double ne = std::sqrt(na * nb / (na + nb));
    return kolmogorov_q((ne + 0.12 + 0.11 / ne) * dmax);
}

// Pearson χ² p-value of observed counts against expected probabilities.
inline double chi_squared_pvalue(std::span<const std::size_t> observed, std::span<const double> probabilities)
{
    double total = 0.0;
    for (auto o : observed) total += static_cast<double>(o);
    double stat = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        const double e = total * probabilities[i];
        const double diff = static_cast<double>(observed[i]) - e;
        stat += diff * diff / e;
    }
    boost::math::chi_squared dist(static_cast<double>(observed.size() - 1));
    return boost::math::cdf(boost::math::complement(dist, stat));
}

// Running mean and standard error.
struct MeanAccumulator {
    double n = 0, mean = 0, m2 = 0;

    void add(double x)
    {
        n += 1;
        const double delta = x - mean;
        mean += delta / n;
        m2 += delta * (x - mean);
    }
    double standard_error() const { return n > 1 ? std::sqrt(m2 / (n - 1) / n) : 0.0; }
};

} // namespace support
