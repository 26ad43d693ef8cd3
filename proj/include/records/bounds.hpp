#pragma once

#include "records/geometry.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace records {

struct GammaBounds {
    std::uint64_t lower = 0; // (d-1)ρ + 1
    std::uint64_t upper = 0; // C(ρ+d-1, d-1)

    friend bool operator==(const GammaBounds&, const GammaBounds&) = default;
};

// Binomial coefficient, or nullopt if it does not fit in 64 bits.
std::optional<std::uint64_t> checked_binomial(std::uint64_t n, std::uint64_t k);

// Deterministic range of the generator count γ given ρ current records in
// dimension d. Throws std::overflow_error when the upper bound exceeds 64 bits.
GammaBounds bounds(std::uint64_t rho, std::size_t dim);

// {d + a(d - a) : 1 ≤ a ≤ ⌊d/2⌋}, the possible γ with two current records.
std::set<std::uint64_t> attainable_gammas_two_records(std::size_t dim);

// Runs every split of d coordinates between two incomparable records
// through the naive maintainer and collects the resulting γ values.
std::set<std::uint64_t> census_two_records(std::size_t dim);

// ρ incomparable, tie-free records with strictly decreasing first coordinate
// and strictly increasing other coordinates. Inserted in order they keep
// γ = (d-1)ρ + 1 after every insertion.
std::vector<Point> lower_bound_witness(std::size_t dim, std::size_t rho);

} // namespace records
