#include "records/sampler.hpp"

#include "records/bounds.hpp"
#include "records/errors.hpp"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <string>

namespace records {

std::string_view to_string(Variant v)
{
    switch (v) {
    case Variant::naive: return "naive";
    case Variant::efficient: return "efficient";
    case Variant::bivariate: return "bivariate";
    }
    return "unknown";
}

Variant parse_variant(std::string_view name)
{
    if (name == "naive") return Variant::naive;
    if (name == "efficient") return Variant::efficient;
    if (name == "bivariate") return Variant::bivariate;
    throw UsageError("unknown variant '" + std::string(name) + "' (expected naive|efficient|bivariate)");
}

std::string utc_timestamp()
{
    const std::time_t now = std::time(nullptr);
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buf;
}

Point sample_in_orthant(const Point& g, RandomSource& rng)
{
    std::vector<Coord> c(g.dim());
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = lift_uniform(g[j], rng.uniform());
    return Point(std::move(c));
}

std::size_t choose_generator(const GeneratorSet& g, RandomSource& rng)
{
    const double total = g.total_volume();
    if (g.empty() || !(total > 0.0)) {
        throw InternalError("generator selection needs a positive total volume");
    }
    const auto cum = g.cumulative_volumes();
    const double target = rng.uniform() * total;
    const auto it = std::upper_bound(cum.begin(), cum.end(), target);
    return std::min(static_cast<std::size_t>(it - cum.begin()), g.size() - 1);
}

namespace {

template <typename CoverCount>
Draw sample_union_impl(const GeneratorSet& g, RandomSource& rng, CoverCount&& count)
{
    Draw draw;
    while (true) {
        const std::size_t i = choose_generator(g, rng);
        Point candidate = sample_in_orthant(g[i], rng);
        const std::size_t c = count(candidate.coords());
        if (c == 0) throw InternalError("sampled point not covered by its own orthant");
        if (c == 1 || rng.uniform() * static_cast<double>(c) < 1.0) {
            draw.point = std::move(candidate);
            return draw;
        }
        ++draw.rejections;
    }
}

} // namespace

Draw sample_from_union(const GeneratorSet& g, RandomSource& rng)
{
    return sample_union_impl(g, rng, [&](std::span<const Coord> x) { return covering_count(x, g.items()); });
}

RecordState::RecordState(std::size_t dim, Variant variant) : dim_(dim), variant_(variant), generators_(dim)
{
    if (variant_ == Variant::bivariate) {
        if (dim_ != 2) throw UsageError("the bivariate variant requires d = 2");
        frontier_.emplace();
    }
}

const GeneratorSet& RecordState::generators() const noexcept
{
    return frontier_ ? frontier_->generator_set() : generators_;
}

std::size_t RecordState::covering_count(std::span<const Coord> x) const
{
    if (frontier_) return frontier_->covering_count(x);
    return records::covering_count(x, generators_.items());
}

const HistoryEntry& RecordState::insert(const Point& record, std::size_t rejections)
{
    if (record.dim() != dim_) throw UsageError("record dimension mismatch");

    HistoryEntry entry;
    entry.record = record;
    entry.rejections = rejections;

    switch (variant_) {
    case Variant::naive: {
        auto res = update_naive(generators_, record);
        generators_ = std::move(res.generators);
        entry.update = res.report;
        break;
    }
    case Variant::efficient: {
        auto res = update_efficient(generators_, record);
        generators_ = std::move(res.generators);
        entry.update = res.report;
        break;
    }
    case Variant::bivariate: {
        const std::size_t before = frontier_->size();
        *frontier_ = update_bivariate(*frontier_, record);
        // Each update replaces the killed block by exactly two generators.
        entry.update.new_minima_count = 2;
        entry.update.killed_generators = before + 2 - frontier_->size();
        entry.update.survivor_count = before - entry.update.killed_generators;
        break;
    }
    }

    const auto broken = std::erase_if(records_, [&](const Point& r) {
        return kernel::strictly_below(r.coords(), record.coords());
    });
    records_.push_back(record);
    entry.update.records_broken = broken;
    entry.rho_after = records_.size();
    entry.gamma_after = generators().size();

    const auto lower = static_cast<std::uint64_t>(dim_ - 1) * entry.rho_after + 1;
    const auto upper = checked_binomial(entry.rho_after + dim_ - 1, dim_ - 1);
    if (entry.gamma_after < lower || (upper && entry.gamma_after > *upper)) {
        throw InternalError("generator count " + std::to_string(entry.gamma_after) +
                            " outside deterministic bounds for rho=" + std::to_string(entry.rho_after));
    }

    history_.push_back(std::move(entry));
    return history_.back();
}

Draw next_record(const RecordState& state, RandomSource& rng)
{
    return sample_union_impl(state.generators(), rng,
                             [&](std::span<const Coord> x) { return state.covering_count(x); });
}

const HistoryEntry& advance(RecordState& state, RandomSource& rng)
{
    auto draw = next_record(state, rng);
    return state.insert(draw.point, draw.rejections);
}

RecordStream run_simulation(std::size_t dim, std::size_t m, std::uint64_t seed, Variant variant)
{
    RecordState state(dim, variant);
    RandomSource rng(seed);
    for (std::size_t i = 0; i < m; ++i) advance(state, rng);

    RecordStream out;
    out.ledger.command = "simulate";
    out.ledger.dim = dim;
    out.ledger.target_records = m;
    out.ledger.seed = seed;
    out.ledger.variant = std::string(to_string(variant));
    out.entries.assign(state.history().begin(), state.history().end());
    out.final_generators = state.generators();
    out.final_records.assign(state.records().begin(), state.records().end());
    return out;
}

namespace {

NaiveStream observe(std::size_t dim, RandomSource& rng, std::size_t max_obs, std::size_t record_target)
{
    if (dim == 0) throw UsageError("dimension must be at least 1");
    NaiveStream out;
    out.generators = GeneratorSet(dim);
    std::vector<Coord> x(dim);
    while (out.observations < max_obs && out.records.size() < record_target) {
        for (auto& c : x) c = Coord(rng.uniform());
        ++out.observations;
        if (!in_record_setting_region(std::span<const Coord>(x), out.current)) continue;

        Point r(x);
        const auto broken = std::erase_if(out.current, [&](const Point& c) {
            return kernel::strictly_below(c.coords(), r.coords());
        });
        out.current.push_back(r);
        out.records.push_back({out.observations, std::move(r), broken});
    }
    // The generator set depends only on the current records, not on the
    // order they arrived in, so it is built once at the end.
    for (const auto& r : out.current) out.generators = update_efficient(out.generators, r).generators;
    return out;
}

} // namespace

NaiveStream naive_record_stream(std::size_t dim, std::size_t n_obs, RandomSource& rng)
{
    return observe(dim, rng, n_obs, SIZE_MAX);
}

NaiveStream naive_record_stream(std::size_t dim, std::size_t n_obs, std::uint64_t seed)
{
    RandomSource rng(seed);
    return naive_record_stream(dim, n_obs, rng);
}

NaiveStream naive_first_records(std::size_t dim, std::size_t m, RandomSource& rng, std::size_t max_obs)
{
    return observe(dim, rng, max_obs, m);
}

std::vector<double> apply_quantile(const Point& p, const Quantile& q)
{
    std::vector<double> out(p.dim());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = q(p[j].value());
    return out;
}

double exponential_quantile(double u)
{
    return -std::log1p(-u);
}

} // namespace records
