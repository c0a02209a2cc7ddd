#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "dhl/geometry.hpp"

namespace dhl {

/// A box identified by (class, position-within-class).  Monochromatic
/// operations use class 0.
struct BoxRef {
    std::size_t class_index = 0;
    std::size_t box_index = 0;
    friend bool operator==(const BoxRef&, const BoxRef&) = default;
};

/// One discrete target: find `required` distinct points of `points` in an
/// intersection.
struct Target {
    PointSet points;
    std::size_t required = 1;
};

struct HellyWitness {
    std::size_t class_index = 0;
    /// One list per target, each with exactly `required` distinct points of
    /// that target set, all inside the intersection of the witnessed class.
    std::vector<std::vector<RationalPoint>> points;
};

struct HellyViolation {
    /// Subfamily of at most helly-number boxes whose intersection misses the
    /// target count; for monochromatic calls its intersection equals the
    /// intersection of the whole family exactly.
    std::vector<BoxRef> subfamily;
    std::size_t target_index = 0;
};

using HellyOutcome = std::variant<HellyWitness, HellyViolation>;

struct ColoredInstance {
    std::size_t dim = 0;
    std::vector<std::vector<AxisBox>> classes;
    std::vector<Target> targets;
};

/// Monochromatic quantitative witness: returns the n lexicographically
/// smallest points of s in the family intersection, or an achiever subfamily
/// of at most 2d boxes whose intersection equals the family's (and therefore
/// also misses n points of s).
HellyOutcome halman_witness(std::span<const AxisBox> boxes, const PointSet& s, std::size_t n);

/// Colorful quantitative witness over exactly 2d classes.  Enumerates all
/// colorful (2d-1)-tuples (omit one class, pick one box from each remaining
/// class, last class fastest); any tuple deficient for some target is
/// returned as a Violation.  Otherwise a tuple maximizing the sum over
/// targets of the rank of the n_j-th smallest contained point (ties: first in
/// enumeration order) yields a Witness for its omitted class; the conclusion
/// is verified directly and a failure throws TheoremViolation.
HellyOutcome colorful_halman(const ColoredInstance& inst);

struct TupleCounterexample {
    std::vector<BoxRef> tuple;
    std::size_t target_index = 0;
};

/// First colorful tuple_size-tuple (classes ascending, then boxes ascending)
/// whose intersection misses some target count; nullopt when the hypothesis
/// holds.
std::optional<TupleCounterexample> check_colorful_hypothesis(const ColoredInstance& inst,
                                                             std::size_t tuple_size);

/// Monochromatic hypothesis at all subfamily sizes 1..min(helly_number, |B|).
std::optional<TupleCounterexample> check_monochromatic_hypothesis(std::span<const AxisBox> boxes,
                                                                  std::span<const Target> targets,
                                                                  std::size_t helly_number);

/// A point x of X with x inside bbox(X \ {x}).  For |X| >= 2d+1 this always
/// exists (per-axis extremum achievers leave a point over); for smaller X an
/// exhaustive search may come up empty.
std::optional<RationalPoint> radon_box_point(const PointSet& x);

/// The 2d cross-polytope vertices {±e_1, ..., ±e_d}: the sharp example for
/// radon_box_point.
PointSet cross_polytope_points(std::size_t dim);

struct SharpInstance {
    std::vector<AxisBox> boxes;
    PointSet points;
};

/// Boxes bbox(X \ {x}) over the cross-polytope vertex set X, with S = X:
/// every (2d-1)-subfamily meets S while the full family's intersection (the
/// origin) does not.
SharpInstance halman_sharp_instance(std::size_t dim);

}  // namespace dhl
