#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "dhl/geometry.hpp"
#include "dhl/helly.hpp"

namespace dhl {

/// Free-standing validity test: a direction family positively spans R^d iff
/// no nonzero y has <h_i, y> <= 0 for every i.  Returns such a y when one
/// exists (the family is invalid), nullopt when the family is valid.  Exact:
/// a nonzero solution, when present, lies in the lineality space or on an
/// extreme ray cut out by d-1 of the constraints, and both are found by
/// rational elimination.
std::optional<std::vector<Rational>> validate_direction_set(
    const std::vector<std::vector<Rational>>& directions);

/// A validated set of pairwise non-positively-parallel nonzero rational
/// directions whose positive hull is all of R^d.  Directions are not
/// normalized to unit length; scaling is irrelevant to the combinatorics and
/// exact rationals cannot represent most unit vectors anyway.
class DirectionSet {
public:
    explicit DirectionSet(std::vector<std::vector<Rational>> directions);

    /// {+e_1, -e_1, ..., +e_d, -e_d}: boxes as the special case.
    static std::shared_ptr<const DirectionSet> box_directions(std::size_t dim);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return directions_.size(); }
    const std::vector<Rational>& direction(std::size_t i) const { return directions_[i]; }

    friend bool operator==(const DirectionSet&, const DirectionSet&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<std::vector<Rational>> directions_;
};

/// Intersection of halfspaces {x : <x, h_i> <= c_i} over a shared direction
/// set; a missing bound means the constraint is absent (+infinity).  At least
/// one bound must be finite.
class HConvexSet {
public:
    HConvexSet(std::shared_ptr<const DirectionSet> directions,
               std::vector<std::optional<Rational>> bounds);

    const std::shared_ptr<const DirectionSet>& directions() const { return directions_; }
    const std::vector<std::optional<Rational>>& bounds() const { return bounds_; }
    std::size_t dim() const { return directions_->dim(); }

    bool contains(const RationalPoint& p) const;

    friend bool operator==(const HConvexSet& a, const HConvexSet& b) {
        return *a.directions_ == *b.directions_ && a.bounds_ == b.bounds_;
    }

private:
    std::shared_ptr<const DirectionSet> directions_;
    std::vector<std::optional<Rational>> bounds_;
};

Rational dot(const std::vector<Rational>& direction, const RationalPoint& p);

/// Smallest H-convex superset of x: per direction, the support maximum
/// c_i = max <x, h_i>.
HConvexSet hconvex_hull(const PointSet& x, std::shared_ptr<const DirectionSet> directions);

/// Componentwise minimum of bounds.  Geometric emptiness is not decided;
/// membership of discrete points is the semantics used throughout.
HConvexSet hconvex_intersection(std::span<const HConvexSet> sets);

bool hconvex_contains(const HConvexSet& k, const RationalPoint& p);

/// The box [lo,hi] as bounds over box_directions: (hi_1, -lo_1, ...).
HConvexSet box_as_hconvex(const AxisBox& box,
                          std::shared_ptr<const DirectionSet> box_directions);

/// Monochromatic quantitative witness with Helly number k = |H|: the n
/// lexicographically smallest points of s in the family intersection, or an
/// achiever subfamily (lowest index per binding direction) whose bounds equal
/// the family intersection's bounds exactly.
HellyOutcome hconvex_halman(std::span<const HConvexSet> family, const PointSet& s,
                            std::size_t n);

/// Colorful variant over exactly k = |H| classes via rank maximization over
/// colorful (k-1)-tuples, with the conclusion verified directly.
HellyOutcome hconvex_halman_colorful(const std::vector<std::vector<HConvexSet>>& classes,
                                     std::span<const Target> targets);

/// Colorful hypothesis for H-convex classes at a given tuple size.
std::optional<TupleCounterexample> check_hconvex_colorful_hypothesis(
    const std::vector<std::vector<HConvexSet>>& classes, std::span<const Target> targets,
    std::size_t tuple_size);

/// Monochromatic hypothesis at all subfamily sizes 1..min(helly_number, |F|).
std::optional<TupleCounterexample> check_hconvex_hypothesis(std::span<const HConvexSet> family,
                                                            std::span<const Target> targets,
                                                            std::size_t helly_number);

/// Proof-faithful scan (cross-check path): over all (k-1)-tuples, the one
/// whose lexicographic maximum of s-in-intersection is minimal yields a point
/// contained in every member of the family.  Returns that point, or a
/// subfamily of at most k sets whose intersection misses s when the
/// hypothesis fails.
std::variant<RationalPoint, std::vector<std::size_t>> hconvex_witness_scan(
    std::span<const HConvexSet> family, const PointSet& s);

}  // namespace dhl
