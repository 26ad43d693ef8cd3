#pragma once

#include "records/geometry.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace records {

class GeneratorSet;

namespace detail {
// Assembles a set from items whose orthant volumes are already known.
GeneratorSet assemble(std::size_t dim, std::vector<Point> items, std::vector<double> volumes);
} // namespace detail

// The minimal elements of the record-setting region, in insertion order,
// together with their orthant volumes and the running prefix sums of those
// volumes (used for inverse-CDF generator selection).
class GeneratorSet {
public:
    // {origin}; total volume 1.
    explicit GeneratorSet(std::size_t dim);

    // Builds a set from explicit items. Volumes are computed here. Items must
    // share the given dimension; minimality is not checked (see is_minimal()).
    static GeneratorSet from_items(std::size_t dim, std::vector<Point> items);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return items_.size(); }
    bool empty() const noexcept { return items_.empty(); }
    const Point& operator[](std::size_t i) const noexcept { return items_[i]; }

    std::span<const Point> items() const noexcept { return items_; }
    std::span<const double> volumes() const noexcept { return volumes_; }
    std::span<const double> cumulative_volumes() const noexcept { return cumulative_; }
    double total_volume() const noexcept { return cumulative_.empty() ? 0.0 : cumulative_.back(); }

    // O(γ²d). No generator weakly dominates a different one, and no duplicates.
    bool is_minimal() const;
    // Sum of freshly recomputed orthant volumes (drift check for the cache).
    double recomputed_total_volume() const;

private:
    friend GeneratorSet detail::assemble(std::size_t, std::vector<Point>, std::vector<double>);
    GeneratorSet(std::size_t dim, std::vector<Point> items, std::vector<double> volumes);

    std::size_t dim_ = 0;
    std::vector<Point> items_;
    std::vector<double> volumes_;
    std::vector<double> cumulative_;
};

GeneratorSet new_generator_set(std::size_t dim);

struct UpdateReport {
    std::size_t killed_generators = 0; // ν = |N|
    std::size_t survivor_count = 0;    // |Σ|
    std::size_t new_minima_count = 0;  // |N'|
    // Number of current records strictly below the new record. The generator
    // maintainers never see the record list, so RecordState fills this in.
    std::size_t records_broken = 0;
    // Pairwise point comparisons performed by the update.
    std::size_t comparisons = 0;

    friend bool operator==(const UpdateReport&, const UpdateReport&) = default;
};

struct UpdateResult {
    GeneratorSet generators;
    UpdateReport report;
};

// Minima of {g ∨ r_k e^(k) : g ∈ G, k ∈ [d]}, compared all-pairs.
//
// The candidate list is built generator by generator, lifting coordinates
// from the last to the first. Minima keep their first-occurrence order, so
// a surviving generator stays where it was and the replacements of a killed
// generator take its slot. At d = 2 this keeps G sorted by first coordinate.
UpdateResult update_naive(const GeneratorSet& g, const Point& record);

// Survivor split: generators not strictly below the record are kept as-is,
// only the lifts of killed generators are compared pairwise. Produces the
// same sequence of generators as update_naive.
UpdateResult update_efficient(const GeneratorSet& g, const Point& record);

// d = 2 staircase. Generators sorted by strictly increasing first coordinate
// (hence strictly decreasing second coordinate); first has x = 0, last y = 0.
class BivariateFrontier {
public:
    BivariateFrontier();

    std::size_t size() const noexcept { return set_.size(); }
    std::span<const Point> generators() const noexcept { return set_.items(); }
    const GeneratorSet& generator_set() const noexcept { return set_; }

    // Measure of the record-setting region as the sum of the disjoint
    // rectangles [g1^(i), g1^(i+1)) × [g2^(i), 1).
    double region_volume() const;
    // Number of generators g ≤ x, by binary search.
    std::size_t covering_count(std::span<const Coord> x) const;
    bool satisfies_invariants() const;

private:
    friend BivariateFrontier update_bivariate(const BivariateFrontier&, const Point&);
    explicit BivariateFrontier(GeneratorSet set) : set_(std::move(set)) {}

    GeneratorSet set_;
};

BivariateFrontier update_bivariate(const BivariateFrontier& f, const Point& record);

// Current records strictly below r.
std::size_t count_broken_records(std::span<const Point> records, const Point& r);

} // namespace records
