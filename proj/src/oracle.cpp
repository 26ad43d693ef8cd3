#include "records/oracle.hpp"

#include "records/errors.hpp"
#include "records/random.hpp"

#include <algorithm>
#include <string>

namespace records::oracle {

namespace {

void require_records(std::size_t dim, std::span<const Point> records)
{
    if (dim == 0) throw UsageError("dimension must be at least 1");
    for (const auto& r : records) {
        if (r.dim() != dim) throw UsageError("record dimension mismatch");
    }
}

// Incremental minima of a stream of candidates; keeps first occurrences.
class MinimaAccumulator {
public:
    void offer(std::span<const Coord> c)
    {
        for (const auto& m : minima_) {
            if (kernel::weakly_below(m, c)) return;
        }
        std::erase_if(minima_, [&](const std::vector<Coord>& m) { return kernel::weakly_below(c, m); });
        minima_.emplace_back(c.begin(), c.end());
    }

    std::vector<Point> take()
    {
        std::vector<Point> out;
        out.reserve(minima_.size());
        for (auto& m : minima_) out.emplace_back(std::move(m));
        return out;
    }

private:
    std::vector<std::vector<Coord>> minima_;
};

} // namespace

GeneratorSet generators_via_partitions(std::size_t dim, std::span<const Point> records)
{
    require_records(dim, records);
    const std::size_t rho = records.size();
    if (rho > max_partition_records) {
        throw ResourceError("partition enumeration supports at most " +
                            std::to_string(max_partition_records) + " records, got " +
                            std::to_string(rho));
    }

    // Mixed-radix enumeration of k ∈ [d]^[ρ] with digit i = cell of record i.
    // partial[i] holds the cell maxima after assigning records 0..i-1, so a
    // change in digit i only recomputes levels i+1..ρ.
    std::vector<std::vector<Coord>> partial(rho + 1, std::vector<Coord>(dim));
    std::vector<std::size_t> digit(rho, 0);
    MinimaAccumulator acc;

    auto rebuild_from = [&](std::size_t level) {
        for (std::size_t i = level; i < rho; ++i) {
            partial[i + 1] = partial[i];
            auto& cell = partial[i + 1][digit[i]];
            cell = std::max(cell, records[i][digit[i]]);
        }
    };

    rebuild_from(0);
    while (true) {
        acc.offer(partial[rho]);
        // Increment the least significant (last) digit with carry.
        std::size_t i = rho;
        while (i > 0) {
            --i;
            if (++digit[i] < dim) break;
            digit[i] = 0;
            if (i == 0) {
                i = rho; // overflow sentinel
                break;
            }
        }
        if (i == rho) break;
        rebuild_from(i);
    }
    return GeneratorSet::from_items(dim, acc.take());
}

std::vector<Point> interior_generators(std::size_t dim, std::span<const Point> records)
{
    require_records(dim, records);
    const std::size_t rho = records.size();
    std::vector<Point> out;
    if (rho < dim) return out;

    // Ordered tuples of distinct indices, by depth-first search.
    std::vector<std::size_t> tuple(dim);
    std::vector<char> used(rho, 0);
    std::vector<Coord> g(dim);

    auto check = [&] {
        for (std::size_t j = 0; j < dim; ++j) {
            g[j] = records[tuple[j]][j];
            for (std::size_t l = 0; l < dim; ++l) {
                if (records[tuple[l]][j] < g[j]) return;
            }
        }
        if (!in_record_setting_region(std::span<const Coord>(g), records)) return;
        Point p(g);
        if (std::find(out.begin(), out.end(), p) != out.end()) {
            throw InternalError("interior generator " + to_string(p) + " generated by two tuples");
        }
        out.push_back(std::move(p));
    };

    auto dfs = [&](auto&& self, std::size_t depth) -> void {
        if (depth == dim) {
            check();
            return;
        }
        for (std::size_t i = 0; i < rho; ++i) {
            if (used[i]) continue;
            used[i] = 1;
            tuple[depth] = i;
            self(self, depth + 1);
            used[i] = 0;
        }
    };
    dfs(dfs, 0);
    return out;
}

GeneratorSet generators_via_projection(std::size_t dim, std::span<const Point> records)
{
    require_records(dim, records);
    if (records.empty()) return GeneratorSet(dim);
    if (dim > 20) throw ResourceError("projection enumeration supports d ≤ 20");

    std::vector<Point> items;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << dim); ++mask) {
        std::vector<std::size_t> coords;
        for (std::size_t j = 0; j < dim; ++j) {
            if (mask & (std::uint32_t{1} << j)) coords.push_back(j);
        }
        if (coords.size() > records.size()) continue;

        std::vector<Point> projected;
        projected.reserve(records.size());
        for (const auto& r : records) {
            std::vector<Coord> c;
            c.reserve(coords.size());
            for (auto j : coords) c.push_back(r[j]);
            projected.emplace_back(std::move(c));
        }
        if (has_coordinate_ties(projected)) {
            throw InternalError("projection introduced a coordinate tie");
        }

        for (const auto& inner : interior_generators(coords.size(), projected)) {
            std::vector<Coord> c(dim);
            for (std::size_t t = 0; t < coords.size(); ++t) c[coords[t]] = inner[t];
            items.emplace_back(std::move(c));
        }
    }
    return GeneratorSet::from_items(dim, std::move(items));
}

std::map<std::uint32_t, std::size_t> support_census(const GeneratorSet& g)
{
    std::map<std::uint32_t, std::size_t> census;
    for (const auto& p : g.items()) ++census[support_mask(p)];
    return census;
}

std::vector<Point> sorted_items(const GeneratorSet& g)
{
    std::vector<Point> out(g.items().begin(), g.items().end());
    std::sort(out.begin(), out.end());
    return out;
}

bool same_set(const GeneratorSet& a, const GeneratorSet& b)
{
    return a.dim() == b.dim() && sorted_items(a) == sorted_items(b);
}

std::vector<Point> random_record_sequence(std::size_t dim, std::size_t rho, RandomSource& rng,
                                          std::size_t max_obs)
{
    if (dim == 0) throw UsageError("dimension must be at least 1");
    if (dim == 1 && rho > 1) throw UsageError("in one dimension at most one record is current");

    std::vector<Point> sequence;
    std::vector<Point> current;
    std::vector<Coord> x(dim);
    for (std::size_t n = 0; current.size() != rho; ++n) {
        if (n == max_obs) {
            throw ResourceError("no state with " + std::to_string(rho) + " current records within " +
                                std::to_string(max_obs) + " observations");
        }
        for (auto& c : x) c = Coord(rng.uniform());
        if (!in_record_setting_region(std::span<const Coord>(x), current)) continue;
        Point r(x);
        std::erase_if(current, [&](const Point& c) { return kernel::strictly_below(c.coords(), r.coords()); });
        current.push_back(r);
        sequence.push_back(std::move(r));
    }
    return sequence;
}

std::vector<Point> current_records(std::span<const Point> sequence)
{
    std::vector<Point> current;
    for (const auto& r : sequence) {
        std::erase_if(current, [&](const Point& c) { return strictly_dominates(c, r); });
        current.push_back(r);
    }
    return current;
}

} // namespace records::oracle
