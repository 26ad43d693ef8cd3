#include "records/geometry.hpp"

#include "records/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace records {

namespace {

std::vector<Coord> checked_coords(std::span<const double> coords)
{
    std::vector<Coord> out;
    out.reserve(coords.size());
    for (double c : coords) {
        if (!(c >= 0.0 && c < 1.0)) {
            throw UsageError("point coordinate " + std::to_string(c) + " outside [0,1)");
        }
        out.emplace_back(c);
    }
    return out;
}

} // namespace

Coord lift_uniform(Coord g, double u)
{
    const double y = g.complement() * (1.0 - u);
    if (y <= 0.5) {
        if (!(y > 0.0)) throw NumericError("coordinate underflow while sampling an orthant");
        return Coord::from_complement(y);
    }
    const double x = g.value();
    return Coord(x + (1.0 - x) * u);
}

double coord_gap(Coord a, Coord b) noexcept
{
    if (b.value() < 0.5) return b.value() - a.value();
    return a.complement() - b.complement();
}

Point::Point(const std::vector<double>& coords) : coords_(checked_coords(coords)) {}

Point::Point(std::vector<Coord> coords) : coords_(std::move(coords)) {}

Point::Point(std::initializer_list<double> coords)
    : coords_(checked_coords(std::span<const double>(coords.begin(), coords.size())))
{
}

Point Point::origin(std::size_t dim)
{
    if (dim == 0) throw UsageError("dimension must be at least 1");
    return Point(std::vector<Coord>(dim));
}

std::vector<double> Point::values() const
{
    std::vector<double> out;
    out.reserve(coords_.size());
    for (Coord c : coords_) out.push_back(c.value());
    return out;
}

std::string to_string(const Point& p)
{
    std::string out = "(";
    char buf[32];
    for (std::size_t j = 0; j < p.dim(); ++j) {
        if (j) out += ", ";
        auto res = std::to_chars(buf, buf + sizeof buf, p[j].value());
        out.append(buf, res.ptr);
    }
    out += ")";
    return out;
}

void require_same_dim(const Point& x, const Point& y)
{
    if (x.dim() != y.dim()) {
        throw UsageError("dimension mismatch: " + std::to_string(x.dim()) + " vs " +
                         std::to_string(y.dim()));
    }
}

bool strictly_dominates(const Point& x, const Point& y)
{
    require_same_dim(x, y);
    return kernel::strictly_below(x.coords(), y.coords());
}

bool weakly_dominates(const Point& x, const Point& y)
{
    require_same_dim(x, y);
    return kernel::weakly_below(x.coords(), y.coords());
}

Point join(const Point& x, const Point& y)
{
    require_same_dim(x, y);
    std::vector<Coord> out(x.dim());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = std::max(x[j], y[j]);
    return Point(std::move(out));
}

double orthant_probability(const Point& g)
{
    return kernel::orthant_volume(g.coords());
}

bool in_record_setting_region(std::span<const Coord> x, std::span<const Point> records)
{
    for (const auto& r : records) {
        if (r.dim() != x.size()) throw UsageError("dimension mismatch against record");
        if (kernel::strictly_below(x, r.coords())) return false;
    }
    return true;
}

bool in_record_setting_region(const Point& x, std::span<const Point> records)
{
    return in_record_setting_region(x.coords(), records);
}

bool covered_by_generators(const Point& x, std::span<const Point> generators)
{
    for (const auto& g : generators) {
        require_same_dim(x, g);
        if (kernel::weakly_below(g.coords(), x.coords())) return true;
    }
    return false;
}

std::size_t covering_count(std::span<const Coord> x, std::span<const Point> generators)
{
    std::size_t count = 0;
    for (const auto& g : generators) {
        if (kernel::weakly_below(g.coords(), x)) ++count;
    }
    return count;
}

std::uint32_t support_mask(const Point& x)
{
    if (x.dim() > 32) throw UsageError("support_mask supports at most 32 coordinates");
    std::uint32_t mask = 0;
    for (std::size_t j = 0; j < x.dim(); ++j) {
        if (!x[j].is_zero()) mask |= std::uint32_t{1} << j;
    }
    return mask;
}

bool is_interior(const Point& x)
{
    return std::all_of(x.coords().begin(), x.coords().end(), [](Coord c) { return !c.is_zero(); });
}

bool has_coordinate_ties(std::span<const Point> points)
{
    if (points.empty()) return false;
    const std::size_t d = points.front().dim();
    std::vector<Coord> column(points.size());
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < points.size(); ++i) column[i] = points[i][j];
        std::sort(column.begin(), column.end());
        if (std::adjacent_find(column.begin(), column.end()) != column.end()) return true;
    }
    return false;
}

void require_tie_free(std::span<const Point> points)
{
    for (const auto& p : points) {
        if (p.dim() != points.front().dim()) throw UsageError("records of mixed dimension");
    }
    if (has_coordinate_ties(points)) {
        throw UsageError("precondition violated: records tie in some coordinate");
    }
}

} // namespace records
