#include "records/generators.hpp"

#include "records/errors.hpp"

#include <algorithm>
#include <string>

namespace records {

GeneratorSet detail::assemble(std::size_t dim, std::vector<Point> items, std::vector<double> volumes)
{
    return GeneratorSet(dim, std::move(items), std::move(volumes));
}

GeneratorSet::GeneratorSet(std::size_t dim) : GeneratorSet(dim, {Point::origin(dim)}, {1.0}) {}

GeneratorSet::GeneratorSet(std::size_t dim, std::vector<Point> items, std::vector<double> volumes)
    : dim_(dim), items_(std::move(items)), volumes_(std::move(volumes))
{
    if (dim_ == 0) throw UsageError("dimension must be at least 1");
    cumulative_.reserve(volumes_.size());
    double running = 0.0;
    for (double v : volumes_) {
        running += v;
        cumulative_.push_back(running);
    }
}

GeneratorSet GeneratorSet::from_items(std::size_t dim, std::vector<Point> items)
{
    std::vector<double> volumes;
    volumes.reserve(items.size());
    for (const auto& g : items) {
        if (g.dim() != dim) throw UsageError("generator dimension mismatch");
        volumes.push_back(orthant_probability(g));
    }
    return GeneratorSet(dim, std::move(items), std::move(volumes));
}

bool GeneratorSet::is_minimal() const
{
    for (std::size_t a = 0; a < items_.size(); ++a) {
        for (std::size_t b = 0; b < items_.size(); ++b) {
            if (a != b && kernel::weakly_below(items_[a].coords(), items_[b].coords())) return false;
        }
    }
    return true;
}

double GeneratorSet::recomputed_total_volume() const
{
    double total = 0.0;
    for (const auto& g : items_) total += orthant_probability(g);
    return total;
}

GeneratorSet new_generator_set(std::size_t dim)
{
    return GeneratorSet(dim);
}

namespace {

void require_record_dim(const GeneratorSet& g, const Point& r)
{
    if (r.dim() != g.dim()) {
        throw UsageError("record has dimension " + std::to_string(r.dim()) + ", generators " +
                         std::to_string(g.dim()));
    }
}

Point lift(const Point& g, const Point& r, std::size_t k)
{
    std::vector<Coord> c(g.coords().begin(), g.coords().end());
    c[k] = std::max(c[k], r[k]);
    return Point(std::move(c));
}

// Marks which candidates are minima; a later duplicate of an earlier point
// is dropped. Every unordered pair is compared exactly once.
std::vector<char> pairwise_minima(const std::vector<Point>& cands, std::size_t& comparisons)
{
    std::vector<char> keep(cands.size(), 1);
    for (std::size_t a = 0; a < cands.size(); ++a) {
        for (std::size_t b = a + 1; b < cands.size(); ++b) {
            ++comparisons;
            const auto ca = cands[a].coords();
            const auto cb = cands[b].coords();
            if (kernel::weakly_below(ca, cb)) {
                keep[b] = 0; // covers equality too
            } else if (kernel::weakly_below(cb, ca)) {
                keep[a] = 0;
            }
        }
    }
    return keep;
}

[[noreturn]] void reject_record(const Point& r, bool covered)
{
    if (!covered) {
        throw UsageError("record " + to_string(r) + " lies outside the record-setting region");
    }
    throw UsageError("record " + to_string(r) + " ties a generator coordinate (no strictly "
                     "dominated generator)");
}

} // namespace

UpdateResult update_naive(const GeneratorSet& g, const Point& r)
{
    require_record_dim(g, r);
    if (!covered_by_generators(r, g.items())) reject_record(r, false);

    const std::size_t d = g.dim();
    std::vector<Point> cands;
    std::vector<std::size_t> origin;
    cands.reserve(g.size() * d);
    origin.reserve(g.size() * d);
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t k = d; k-- > 0;) {
            cands.push_back(lift(g[i], r, k));
            origin.push_back(i);
        }
    }

    UpdateReport report;
    const auto keep = pairwise_minima(cands, report.comparisons);

    std::vector<Point> items;
    std::vector<double> volumes;
    for (std::size_t c = 0; c < cands.size(); ++c) {
        if (!keep[c]) continue;
        volumes.push_back(orthant_probability(cands[c]));
        items.push_back(std::move(cands[c]));
    }

    for (std::size_t i = 0; i < g.size(); ++i) {
        if (kernel::strictly_below(g[i].coords(), r.coords())) ++report.killed_generators;
    }
    if (report.killed_generators == 0) reject_record(r, true);
    report.survivor_count = g.size() - report.killed_generators;
    report.new_minima_count = items.size() - report.survivor_count;
    return {detail::assemble(d, std::move(items), std::move(volumes)), report};
}

UpdateResult update_efficient(const GeneratorSet& g, const Point& r)
{
    require_record_dim(g, r);
    const std::size_t d = g.dim();

    UpdateReport report;
    std::vector<char> killed(g.size(), 0);
    bool covered = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
        ++report.comparisons;
        const auto gi = g[i].coords();
        if (kernel::strictly_below(gi, r.coords())) {
            killed[i] = 1;
            ++report.killed_generators;
            covered = true;
        } else if (!covered && kernel::weakly_below(gi, r.coords())) {
            covered = true;
        }
    }
    if (report.killed_generators == 0) reject_record(r, covered);

    // Lifts of killed generators (N̂), built in the same order update_naive uses.
    std::vector<Point> cands;
    std::vector<std::size_t> origin;
    cands.reserve(report.killed_generators * d);
    origin.reserve(report.killed_generators * d);
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!killed[i]) continue;
        for (std::size_t k = d; k-- > 0;) {
            cands.push_back(lift(g[i], r, k));
            origin.push_back(i);
        }
    }
    const auto keep = pairwise_minima(cands, report.comparisons);

    std::vector<Point> items;
    std::vector<double> volumes;
    items.reserve(g.size() + cands.size());
    volumes.reserve(g.size() + cands.size());
    std::size_t c = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!killed[i]) {
            items.push_back(g[i]);
            volumes.push_back(g.volumes()[i]);
            continue;
        }
        for (; c < cands.size() && origin[c] == i; ++c) {
            if (!keep[c]) continue;
            volumes.push_back(orthant_probability(cands[c]));
            items.push_back(std::move(cands[c]));
            ++report.new_minima_count;
        }
    }
    report.survivor_count = g.size() - report.killed_generators;
    return {detail::assemble(d, std::move(items), std::move(volumes)), report};
}

BivariateFrontier::BivariateFrontier() : set_(2) {}

double BivariateFrontier::region_volume() const
{
    const auto gs = set_.items();
    double volume = 0.0;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        const double width = i + 1 < gs.size() ? coord_gap(gs[i][0], gs[i + 1][0]) : gs[i][0].complement();
        volume += width * gs[i][1].complement();
    }
    return volume;
}

std::size_t BivariateFrontier::covering_count(std::span<const Coord> x) const
{
    const auto gs = set_.items();
    // g ≤ x  ⇔  g1 ≤ x1 (a prefix) and g2 ≤ x2 (a suffix).
    const auto prefix_end = std::upper_bound(gs.begin(), gs.end(), x[0],
                                             [](Coord v, const Point& g) { return v < g[0]; });
    const auto suffix_begin = std::partition_point(gs.begin(), gs.end(),
                                                   [&](const Point& g) { return g[1] > x[1]; });
    return prefix_end > suffix_begin ? static_cast<std::size_t>(prefix_end - suffix_begin) : 0;
}

bool BivariateFrontier::satisfies_invariants() const
{
    const auto gs = set_.items();
    if (gs.empty() || !gs.front()[0].is_zero() || !gs.back()[1].is_zero()) return false;
    for (std::size_t i = 1; i < gs.size(); ++i) {
        if (!(gs[i - 1][0] < gs[i][0]) || !(gs[i - 1][1] > gs[i][1])) return false;
    }
    return true;
}

BivariateFrontier update_bivariate(const BivariateFrontier& f, const Point& r)
{
    if (r.dim() != 2) throw UsageError("bivariate frontier requires d = 2");
    const auto& set = f.set_;
    const auto gs = set.items();

    // Killed block: g1 < r1 (prefix [0, hi)) and g2 < r2 (suffix [lo, γ)).
    const auto hi = static_cast<std::size_t>(
        std::lower_bound(gs.begin(), gs.end(), r[0],
                         [](const Point& g, Coord v) { return g[0] < v; }) -
        gs.begin());
    const auto lo = static_cast<std::size_t>(
        std::partition_point(gs.begin(), gs.end(), [&](const Point& g) { return g[1] >= r[1]; }) -
        gs.begin());
    if (lo >= hi) reject_record(r, f.covering_count(r.coords()) > 0);

    std::vector<Point> items;
    std::vector<double> volumes;
    items.reserve(gs.size() + 2);
    volumes.reserve(gs.size() + 2);
    for (std::size_t i = 0; i < lo; ++i) {
        items.push_back(gs[i]);
        volumes.push_back(set.volumes()[i]);
    }
    Point left(std::vector<Coord>{gs[lo][0], r[1]});
    Point right(std::vector<Coord>{r[0], gs[hi - 1][1]});
    volumes.push_back(orthant_probability(left));
    items.push_back(std::move(left));
    volumes.push_back(orthant_probability(right));
    items.push_back(std::move(right));
    for (std::size_t i = hi; i < gs.size(); ++i) {
        items.push_back(gs[i]);
        volumes.push_back(set.volumes()[i]);
    }
    return BivariateFrontier(detail::assemble(2, std::move(items), std::move(volumes)));
}

std::size_t count_broken_records(std::span<const Point> records, const Point& r)
{
    std::size_t k = 0;
    for (const auto& rec : records) {
        if (strictly_dominates(rec, r)) ++k;
    }
    return k;
}

} // namespace records
