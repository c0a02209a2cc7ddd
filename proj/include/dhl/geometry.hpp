#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "dhl/rational.hpp"

namespace dhl {

/// A point with exact rational coordinates.  Dimension is fixed at
/// construction and must be at least 1.
class RationalPoint {
public:
    RationalPoint() = default;
    explicit RationalPoint(std::vector<Rational> coords);

    std::size_t dim() const { return coords_.size(); }
    const Rational& operator[](std::size_t axis) const { return coords_[axis]; }
    const std::vector<Rational>& coords() const { return coords_; }

    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;

private:
    std::vector<Rational> coords_;
};

/// Total lexicographic order: at the first differing coordinate the smaller
/// value decides.  Throws std::invalid_argument on dimension mismatch.
std::strong_ordering lex_compare(const RationalPoint& a, const RationalPoint& b);

inline bool lex_less(const RationalPoint& a, const RationalPoint& b) {
    return lex_compare(a, b) == std::strong_ordering::less;
}

struct Interval {
    Rational lo;
    Rational hi;
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// A closed axis-parallel box: one closed rational interval per axis, or the
/// canonical Empty value.  Any constructed box with lo > hi on some axis
/// normalizes to Empty, so lo <= hi holds on every axis of a non-empty box.
/// Degenerate axes (lo == hi) are allowed.
class AxisBox {
public:
    static AxisBox empty(std::size_t dim);
    explicit AxisBox(std::vector<Interval> axes);

    std::size_t dim() const { return dim_; }
    bool is_empty() const { return empty_; }

    /// Valid only on non-empty boxes.
    const Interval& axis(std::size_t i) const;
    std::span<const Interval> axes() const;

    bool contains(const RationalPoint& p) const;

    friend bool operator==(const AxisBox&, const AxisBox&) = default;

private:
    explicit AxisBox(std::size_t dim_only);

    std::size_t dim_ = 0;
    bool empty_ = false;
    std::vector<Interval> axes_;
};

/// A finite point set, kept sorted lexicographically ascending.  In multiset
/// mode repeated points are retained (and counted); otherwise duplicates are
/// collapsed on construction.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<RationalPoint> points, bool multiset = false);

    bool is_multiset() const { return multiset_; }
    bool empty() const { return points_.empty(); }
    /// Count with multiplicity.
    std::size_t size() const { return points_.size(); }
    std::size_t dim() const { return points_.empty() ? 0 : points_.front().dim(); }

    /// Lexicographically ascending, with repeats when in multiset mode.
    const std::vector<RationalPoint>& points() const { return points_; }
    /// Lexicographically ascending, no repeats.
    const std::vector<RationalPoint>& distinct() const { return multiset_ ? distinct_ : points_; }

    bool contains(const RationalPoint& p) const;

    /// The same points with duplicates collapsed (set mode).
    PointSet as_set() const { return PointSet(distinct(), false); }

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    bool multiset_ = false;
    std::vector<RationalPoint> points_;
    std::vector<RationalPoint> distinct_;  // populated only in multiset mode
};

bool box_contains(const AxisBox& box, const RationalPoint& p);

/// Componentwise intersection: per axis (max lo, min hi), Empty when some
/// axis inverts or any input is Empty.  An empty family is an error: all of
/// space is not representable as a box.
AxisBox box_intersection(std::span<const AxisBox> boxes);

/// Smallest closed box containing the points (per-axis min/max).
AxisBox bbox(std::span<const RationalPoint> points);
AxisBox bbox(const PointSet& points);

/// Indices of at most 2d boxes whose intersection equals the intersection of
/// the whole family exactly: per axis, the lowest-index box attaining the
/// binding left endpoint and the lowest-index box attaining the binding right
/// endpoint.  A family containing an Empty box certifies with that box alone.
std::vector<std::size_t> achiever_subfamily(std::span<const AxisBox> boxes);

}  // namespace dhl
