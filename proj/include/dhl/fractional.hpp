#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "dhl/geometry.hpp"
#include "dhl/guards.hpp"
#include "dhl/helly.hpp"

namespace dhl {

/// Exact alpha/beta measurement of one instance at tuple size k.  When
/// k == 2d the bound (1-beta)^(2d-1) <= 1-alpha is evaluated exactly in the
/// rationals (equivalent to beta >= 1-(1-alpha)^(1/(2d-1)) without taking
/// roots) and `pass` records it; otherwise the bound is not claimed.
struct FractionReport {
    std::size_t dim = 0;
    std::size_t k = 0;
    Rational alpha;
    Rational beta;
    std::optional<RationalPoint> beta_point;
    std::vector<std::size_t> beta_subfamily;
    bool bound_checked = false;
    bool pass = true;
};

/// Exact fraction of k-subsets of boxes whose intersection contains a point
/// of s.
Rational tuple_hit_fraction(std::span<const AxisBox> boxes, const PointSet& s, std::size_t k,
                            const Guards& guards = {});

struct CommonSubfamily {
    std::optional<RationalPoint> point;
    std::vector<std::size_t> subfamily;
    Rational fraction;
};

/// Lexicographically first point s maximizing |{boxes containing s}|, with
/// that subfamily and its fraction of the family.
CommonSubfamily max_common_subfamily(std::span<const AxisBox> boxes, const PointSet& s);

/// alpha at k = 2d plus the exact bound check.
FractionReport verify_fractional_strong(std::span<const AxisBox> boxes, const PointSet& s,
                                        const Guards& guards = {});

/// alpha at k = min(d+1, |boxes|); measurement only, no bound claim.
FractionReport measure_fractional_small(std::span<const AxisBox> boxes, const PointSet& s,
                                        const Guards& guards = {});

struct SlabInstance {
    std::vector<AxisBox> boxes;
    PointSet points;
};

/// d*m degenerate slabs {x_i = t/(m+1)} inside the unit cube plus their m^d
/// crossing points: exactly m^d intersecting d-tuples and no intersecting
/// (d+1)-tuple.  Requires d >= 2.
SlabInstance slab_instance(std::size_t dim, std::size_t m);

/// Closed axis-orthogonal halfspace {x_axis <= threshold} (or >= when upper).
struct Halfspace {
    std::size_t axis = 0;
    bool upper = false;
    Rational threshold;
    bool admits(const RationalPoint& p) const {
        return upper ? p[axis] >= threshold : p[axis] <= threshold;
    }
};

/// First (axes ascending, "<=" before ">=", thresholds ascending) halfspace
/// capturing at least eps * |Z| of the multiset union while missing some part
/// entirely; nullopt means the parts are eps-box-intermixed.  Thresholds at
/// the data coordinates suffice: both counts are constant between them.
std::optional<Halfspace> intermix_violation(std::span<const PointSet> parts, const Rational& eps);

inline bool is_box_intermixed(std::span<const PointSet> parts, const Rational& eps) {
    return !intermix_violation(parts, eps).has_value();
}

/// For (1/2d)-box-intermixed parts: the lexicographically smallest point of
/// the union lying in every part's bbox.  Throws std::invalid_argument when
/// the parts are not intermixed, TheoremViolation if no point qualifies.
RationalPoint intermix_witness(std::span<const PointSet> parts);

/// Equal-cardinality point lists sharing an index set: parts[j][i] is the
/// point of part j with index i.
struct IndexedParts {
    std::vector<std::vector<RationalPoint>> parts;
    PointSet ambient;
};

struct DichotomyCase1 {
    RationalPoint point;  // a union point inside every part bbox
};

struct DichotomyCase2 {
    std::vector<std::size_t> kept_indices;  // I', at least ceil(|I|/2d) of them
    std::size_t separated_part = 0;         // part missed by the halfspace
    std::size_t dense_part = 0;             // part with the most captured points
    Halfspace halfspace;
};

using DichotomyResult = std::variant<DichotomyCase1, DichotomyCase2>;

/// Either the parts are (1/2d)-intermixed and share a witness point, or a
/// violating halfspace yields index set I' with disjoint sub-bboxes
/// bbox(separated|I') and bbox(dense|I'); the disjointness is verified
/// exactly and a failure throws TheoremViolation.
DichotomyResult intermix_dichotomy(const IndexedParts& ip);

struct PiercingResult {
    std::vector<RationalPoint> points;
    bool exact = true;  // false when the greedy fallback produced the set
};

/// Minimum subset of s meeting every box: exhaustive set cover by increasing
/// size with lexicographic tie-breaking while |distinct s| stays within the
/// guard, greedy beyond it.  Throws UnpierceableBox when some box misses s.
PiercingResult piercing_set(std::span<const AxisBox> boxes, const PointSet& s,
                            const Guards& guards = {});

struct PqViolation {
    std::vector<std::size_t> subset;  // p boxes with no intersecting q-subset
};

/// Checks that out of every p boxes some q have a common point of s.
std::optional<PqViolation> check_pq_condition(std::span<const AxisBox> boxes, const PointSet& s,
                                              std::size_t p, std::size_t q,
                                              const Guards& guards = {});

struct FewColorsFound {
    std::size_t class_index = 0;
    std::vector<std::size_t> boxes;  // r indices within the class
    RationalPoint point;
};

/// Inconclusive: the hypothesis holds but no r boxes of one class share a
/// point of s — the class size may simply be below the (nonconstructive)
/// threshold, so this is data, not a refutation.
struct FewColorsInconclusive {};

using FewColorsResult = std::variant<FewColorsFound, TupleCounterexample, FewColorsInconclusive>;

/// d+1 equal-size classes: verifies the colorful hypothesis at tuple size
/// d+1, then searches the classes for r boxes with a common point of s.
FewColorsResult few_colors_check(const std::vector<std::vector<AxisBox>>& classes,
                                 const PointSet& s, std::size_t r, const Guards& guards = {});

}  // namespace dhl
