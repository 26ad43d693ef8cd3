#pragma once

#include "records/generators.hpp"
#include "records/geometry.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace records {

class RandomSource;

namespace oracle {

// Largest record count accepted by generators_via_partitions (cost d^ρ).
inline constexpr std::size_t max_partition_records = 12;

// Minima of {(R_1^(Π_1), ..., R_d^(Π_d))} over every assignment of records to
// coordinates, where R_j^(P) is the largest j-th coordinate among records in
// P (0 for an empty cell). Throws ResourceError for ρ > 12.
GeneratorSet generators_via_partitions(std::size_t dim, std::span<const Point> records);

// Points g in the region for which d distinct records i_1..i_d satisfy
// g_j = r^(i_j)_j = min_l r^(i_l)_j for every j.
std::vector<Point> interior_generators(std::size_t dim, std::span<const Point> records);

// Union over nonempty coordinate subsets T of the interior generators of
// the projected records, injected back into d dimensions.
GeneratorSet generators_via_projection(std::size_t dim, std::span<const Point> records);

// Generators grouped by support bitmask (bit j set iff coordinate j nonzero).
std::map<std::uint32_t, std::size_t> support_census(const GeneratorSet& g);

// Canonical (lexicographically sorted) copy, for set comparisons.
std::vector<Point> sorted_items(const GeneratorSet& g);
bool same_set(const GeneratorSet& a, const GeneratorSet& b);

// Random test instance: feeds i.i.d. uniform observations through the
// record definition and stops the first time exactly `rho` records are
// current. Returns every record in arrival order (including ones broken
// later). Throws ResourceError when `rho` is not reached in `max_obs`.
std::vector<Point> random_record_sequence(std::size_t dim, std::size_t rho, RandomSource& rng,
                                          std::size_t max_obs = 10'000'000);

// Records that are still current after the whole sequence has arrived.
std::vector<Point> current_records(std::span<const Point> sequence);

} // namespace oracle
} // namespace records
