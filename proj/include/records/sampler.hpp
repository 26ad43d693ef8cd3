#pragma once

#include "records/generators.hpp"
#include "records/geometry.hpp"
#include "records/ledger.hpp"
#include "records/random.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace records {

enum class Variant { naive, efficient, bivariate };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view name);

// R_j = g_j + (1 - g_j) U_j. Consumes d uniforms.
Point sample_in_orthant(const Point& g, RandomSource& rng);

// Index drawn with probability proportional to orthant volume, by inverse
// CDF over the cached prefix sums. Consumes one uniform.
std::size_t choose_generator(const GeneratorSet& g, RandomSource& rng);

struct Draw {
    Point point;
    std::size_t rejections = 0;
};

// Uniform point of the union of the generators' orthants, by choosing an
// orthant, sampling inside it and accepting with probability 1/c where c is
// the number of orthants containing the sample. The accept step consumes a
// uniform only when c > 1.
Draw sample_from_union(const GeneratorSet& g, RandomSource& rng);

struct HistoryEntry {
    Point record;
    UpdateReport update;
    std::size_t rho_after = 0;
    std::size_t gamma_after = 0;
    std::size_t rejections = 0;

    friend bool operator==(const HistoryEntry&, const HistoryEntry&) = default;
};

// Current records, generators and per-record statistics of one run.
class RecordState {
public:
    explicit RecordState(std::size_t dim, Variant variant = Variant::efficient);

    std::size_t dim() const noexcept { return dim_; }
    Variant variant() const noexcept { return variant_; }
    std::span<const Point> records() const noexcept { return records_; }
    const GeneratorSet& generators() const noexcept;
    std::span<const HistoryEntry> history() const noexcept { return history_; }
    std::size_t rho() const noexcept { return records_.size(); }
    std::size_t gamma() const noexcept { return generators().size(); }

    // Number of generators whose orthant contains x.
    std::size_t covering_count(std::span<const Coord> x) const;

    // Adds a new record (which must lie in the current region), updates the
    // generators with this state's variant and appends a history row. Also
    // checks that γ stays inside the deterministic bounds for ρ.
    const HistoryEntry& insert(const Point& record, std::size_t rejections = 0);

private:
    std::size_t dim_;
    Variant variant_;
    std::vector<Point> records_;
    GeneratorSet generators_;
    std::optional<BivariateFrontier> frontier_;
    std::vector<HistoryEntry> history_;
};

// Steps 1-3 against the state's current generators.
Draw next_record(const RecordState& state, RandomSource& rng);

// next_record followed by insert.
const HistoryEntry& advance(RecordState& state, RandomSource& rng);

struct RecordStream {
    RunLedger ledger;
    std::vector<HistoryEntry> entries;
    GeneratorSet final_generators{1};
    std::vector<Point> final_records;
};

RecordStream run_simulation(std::size_t dim, std::size_t m, std::uint64_t seed, Variant variant);

struct ObservedRecord {
    std::size_t time = 0; // 1-based observation index
    Point record;
    std::size_t records_broken = 0;
};

struct NaiveStream {
    std::size_t observations = 0;
    std::vector<ObservedRecord> records;
    std::vector<Point> current;
    GeneratorSet generators{1};
};

// n_obs i.i.d. uniform observations; every observation not strictly below a
// current record is a record. `generators` belongs to the final current
// records.
NaiveStream naive_record_stream(std::size_t dim, std::size_t n_obs, std::uint64_t seed);
NaiveStream naive_record_stream(std::size_t dim, std::size_t n_obs, RandomSource& rng);

// Observations until `m` records have been set (or `max_obs` reached).
NaiveStream naive_first_records(std::size_t dim, std::size_t m, RandomSource& rng,
                                std::size_t max_obs);

// Post-processing map from uniform coordinates to another marginal law.
// The engine itself always works in uniform coordinates.
using Quantile = std::function<double(double)>;
std::vector<double> apply_quantile(const Point& p, const Quantile& q);
// Standard exponential quantile -ln(1 - u).
double exponential_quantile(double u);

} // namespace records
