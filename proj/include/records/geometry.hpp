#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace records {

// One coordinate in [0,1). Values below 1/2 are held directly, values from
// 1/2 up as their distance to 1, so both ends keep full relative precision.
// Long simulations push record coordinates far closer to 1 than the spacing
// of doubles there (about 1e-16), which would otherwise force ties.
class Coord {
public:
    constexpr Coord() = default;
    // Exact for every double x in [0,1).
    explicit Coord(double x) noexcept : v_(x < 0.5 ? x + 0.0 : -(1.0 - x)) {}
    // The coordinate 1 - y, for y in (0,1]. Exact.
    static Coord from_complement(double y) noexcept
    {
        Coord c;
        c.v_ = y > 0.5 ? 1.0 - y : -y;
        return c;
    }

    // Nearest double to the coordinate; rounds to 1 within 1e-16 of it.
    double value() const noexcept { return v_ >= 0.0 ? v_ : 1.0 + v_; }
    // 1 - value, with full relative precision near 1.
    double complement() const noexcept { return v_ >= 0.0 ? 1.0 - v_ : -v_; }
    bool is_zero() const noexcept { return v_ == 0.0; }

    friend bool operator==(Coord, Coord) = default;
    friend std::strong_ordering operator<=>(Coord a, Coord b) noexcept
    {
        const bool ua = a.v_ < 0.0, ub = b.v_ < 0.0;
        if (ua != ub) return ua <=> ub;
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (b.v_ < a.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    // x when x < 1/2, otherwise -(1 - x). Never -0.
    double v_ = 0.0;
};

// g + (1 - g)u for u in [0,1), evaluated on the side of 1/2 the result
// lands on. Near 1 this is the exact-ish product (1 - g)(1 - u).
Coord lift_uniform(Coord g, double u);

// b - a for a ≤ b, accurate at both ends of the interval.
double coord_gap(Coord a, Coord b) noexcept;

// A point of the half-open unit cube [0,1)^d. Observations, records and
// generators all share this representation.
class Point {
public:
    Point() = default;
    explicit Point(const std::vector<double>& coords);
    explicit Point(std::vector<Coord> coords);
    Point(std::initializer_list<double> coords);

    static Point origin(std::size_t dim);

    std::size_t dim() const noexcept { return coords_.size(); }
    Coord operator[](std::size_t j) const noexcept { return coords_[j]; }
    std::span<const Coord> coords() const noexcept { return coords_; }
    // Coordinates rounded to doubles (see Coord::value).
    std::vector<double> values() const;

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;

private:
    std::vector<Coord> coords_;
};

std::string to_string(const Point& p);

// Unchecked kernels over raw coordinate spans of equal length. The checked
// Point overloads below validate dimensions and forward here.
namespace kernel {

// x ≺ y: every coordinate strictly smaller.
inline bool strictly_below(std::span<const Coord> x, std::span<const Coord> y) noexcept
{
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (!(x[j] < y[j])) return false;
    }
    return true;
}

// x ≤ y componentwise.
inline bool weakly_below(std::span<const Coord> x, std::span<const Coord> y) noexcept
{
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] > y[j]) return false;
    }
    return true;
}

inline double orthant_volume(std::span<const Coord> g) noexcept
{
    double v = 1.0;
    for (Coord c : g) v *= c.complement();
    return v;
}

} // namespace kernel

// x ≺ y
bool strictly_dominates(const Point& x, const Point& y);
// x ≤ y
bool weakly_dominates(const Point& x, const Point& y);
// Coordinatewise maximum; O+(x) ∩ O+(y) = O+(x ∨ y).
Point join(const Point& x, const Point& y);
// Probability that a uniform point of [0,1)^d lands in the closed orthant
// above g, i.e. the product of (1 - g_j).
double orthant_probability(const Point& g);

// True iff x is not strictly below any of the given records. Records are
// expected to be pairwise incomparable; this is not checked.
bool in_record_setting_region(const Point& x, std::span<const Point> records);
bool in_record_setting_region(std::span<const Coord> x, std::span<const Point> records);

// True iff some generator g satisfies g ≤ x.
bool covered_by_generators(const Point& x, std::span<const Point> generators);

// Number of generators g with g ≤ x.
std::size_t covering_count(std::span<const Coord> x, std::span<const Point> generators);

// Bitmask of nonzero coordinates (bit j set iff x_j != 0). Requires d ≤ 32.
std::uint32_t support_mask(const Point& x);
bool is_interior(const Point& x);

// True if two points in the list share a value in some coordinate.
bool has_coordinate_ties(std::span<const Point> points);
// Throws UsageError when has_coordinate_ties() holds or dimensions differ.
void require_tie_free(std::span<const Point> points);

void require_same_dim(const Point& x, const Point& y);

} // namespace records
