#include "records/bounds.hpp"

#include "records/errors.hpp"
#include "records/generators.hpp"

#include <stdexcept>
#include <string>

namespace records {

namespace {
__extension__ using u128 = unsigned __int128;
} // namespace

std::optional<std::uint64_t> checked_binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) return 0;
    k = std::min(k, n - k);
    u128 result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // result * (n - k + i) / i is exact at every step.
        result = result * (n - k + i) / i;
        if (result > UINT64_MAX) return std::nullopt;
    }
    return static_cast<std::uint64_t>(result);
}

GammaBounds bounds(std::uint64_t rho, std::size_t dim)
{
    if (dim == 0) throw UsageError("dimension must be at least 1");
    const u128 lower = static_cast<u128>(dim - 1) * rho + 1;
    const auto upper = checked_binomial(rho + dim - 1, dim - 1);
    if (lower > UINT64_MAX || !upper) {
        throw std::overflow_error("generator bounds overflow 64 bits for rho=" + std::to_string(rho) +
                                  ", d=" + std::to_string(dim));
    }
    return {static_cast<std::uint64_t>(lower), *upper};
}

std::set<std::uint64_t> attainable_gammas_two_records(std::size_t dim)
{
    if (dim < 2) throw UsageError("two incomparable records need d ≥ 2");
    std::set<std::uint64_t> out;
    for (std::size_t a = 1; a <= dim / 2; ++a) out.insert(dim + a * (dim - a));
    return out;
}

std::set<std::uint64_t> census_two_records(std::size_t dim)
{
    if (dim < 2) throw UsageError("two incomparable records need d ≥ 2");
    if (dim > 20) throw ResourceError("census enumerates 2^d splits; d ≤ 20 supported");
    std::set<std::uint64_t> out;
    const std::uint32_t full = (std::uint32_t{1} << dim) - 1;
    // Bit j of `mask` set: the first record is smaller in coordinate j.
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        std::vector<double> first(dim), second(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            const double low = 0.1 + 0.01 * static_cast<double>(j);
            const double high = 0.6 + 0.01 * static_cast<double>(j);
            const bool first_low = mask & (std::uint32_t{1} << j);
            first[j] = first_low ? low : high;
            second[j] = first_low ? high : low;
        }
        auto g = update_naive(GeneratorSet(dim), Point(first)).generators;
        g = update_naive(g, Point(second)).generators;
        out.insert(g.size());
    }
    return out;
}

std::vector<Point> lower_bound_witness(std::size_t dim, std::size_t rho)
{
    if (dim == 0) throw UsageError("dimension must be at least 1");
    if (dim == 1 && rho > 1) throw UsageError("in one dimension at most one record is current");
    std::vector<Point> out;
    out.reserve(rho);
    const double step = 1.0 / static_cast<double>(rho + 1);
    for (std::size_t i = 1; i <= rho; ++i) {
        std::vector<double> c(dim, static_cast<double>(i) * step);
        c[0] = static_cast<double>(rho + 1 - i) * step;
        out.emplace_back(std::move(c));
    }
    return out;
}

} // namespace records
