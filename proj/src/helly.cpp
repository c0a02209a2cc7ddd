#include "dhl/helly.hpp"

#include <algorithm>
#include <stdexcept>

#include "dhl/detail/bits.hpp"
#include "dhl/detail/combinatorics.hpp"
#include "dhl/errors.hpp"

namespace dhl {

namespace {

using detail::PointBits;

struct TargetMasks {
    // masks[c][b]: bits over the target's distinct points for class c, box b
    std::vector<std::vector<PointBits>> masks;
    std::size_t required = 1;
    std::size_t distinct = 0;
};

std::vector<TargetMasks> build_masks(const std::vector<std::vector<AxisBox>>& classes,
                                     std::span<const Target> targets) {
    std::vector<TargetMasks> out;
    out.reserve(targets.size());
    for (const Target& t : targets) {
        if (t.required == 0) throw std::invalid_argument("target count must be at least 1");
        TargetMasks tm;
        tm.required = t.required;
        tm.distinct = t.points.distinct().size();
        for (const auto& cls : classes) {
            tm.masks.push_back(detail::containment_masks<AxisBox>(
                cls, std::span<const RationalPoint>(t.points.distinct())));
        }
        out.push_back(std::move(tm));
    }
    return out;
}

void validate_instance(const ColoredInstance& inst) {
    if (inst.dim == 0) throw std::invalid_argument("instance dimension must be at least 1");
    if (inst.targets.empty()) throw std::invalid_argument("instance needs at least one target");
    for (const auto& cls : inst.classes) {
        for (const AxisBox& b : cls) {
            if (b.dim() != inst.dim) throw std::invalid_argument("box dimension mismatch");
        }
    }
}

}  // namespace

HellyOutcome halman_witness(std::span<const AxisBox> boxes, const PointSet& s, std::size_t n) {
    if (boxes.empty()) throw std::invalid_argument("halman_witness needs at least one box");
    if (n == 0) throw std::invalid_argument("target count must be at least 1");
    const AxisBox inter = box_intersection(boxes);
    std::vector<RationalPoint> inside;
    for (const RationalPoint& p : s.distinct()) {
        if (inter.contains(p)) {
            inside.push_back(p);
            if (inside.size() == n) break;
        }
    }
    if (inside.size() >= n) {
        return HellyWitness{0, {std::move(inside)}};
    }
    std::vector<BoxRef> cert;
    for (std::size_t k : achiever_subfamily(boxes)) cert.push_back(BoxRef{0, k});
    return HellyViolation{std::move(cert), 0};
}

HellyOutcome colorful_halman(const ColoredInstance& inst) {
    validate_instance(inst);
    const std::size_t num_classes = 2 * inst.dim;
    if (inst.classes.size() != num_classes) {
        throw std::invalid_argument("colorful_halman needs exactly 2d classes");
    }
    for (const auto& cls : inst.classes) {
        if (cls.empty()) throw std::invalid_argument("colorful_halman: empty class");
    }

    const auto masks = build_masks(inst.classes, inst.targets);

    bool have_best = false;
    unsigned long long best_score = 0;
    std::size_t best_omitted = 0;
    std::vector<std::size_t> best_choice;

    std::optional<HellyViolation> violation;

    for (std::size_t omitted = 0; omitted < num_classes && !violation; ++omitted) {
        std::vector<std::size_t> member_classes;
        std::vector<std::size_t> radix;
        for (std::size_t c = 0; c < num_classes; ++c) {
            if (c == omitted) continue;
            member_classes.push_back(c);
            radix.push_back(inst.classes[c].size());
        }
        detail::for_each_assignment(radix, [&](const std::vector<std::size_t>& choice) {
            unsigned long long score = 0;
            for (std::size_t t = 0; t < masks.size(); ++t) {
                PointBits common(masks[t].distinct);
                common.set();
                for (std::size_t j = 0; j < member_classes.size(); ++j) {
                    common &= masks[t].masks[member_classes[j]][choice[j]];
                }
                if (common.count() < masks[t].required) {
                    std::vector<BoxRef> tuple;
                    for (std::size_t j = 0; j < member_classes.size(); ++j) {
                        tuple.push_back(BoxRef{member_classes[j], choice[j]});
                    }
                    violation = HellyViolation{std::move(tuple), t};
                    return false;
                }
                score += detail::nth_set_bit(common, masks[t].required) + 1;
            }
            if (!have_best || score > best_score) {
                have_best = true;
                best_score = score;
                best_omitted = omitted;
                best_choice = choice;
            }
            return true;
        });
    }
    if (violation) return *violation;

    // Witness points come from the maximizing tuple: the first n_j points of
    // S_j inside its intersection lie in every box of the omitted class.
    std::vector<std::size_t> member_classes;
    for (std::size_t c = 0; c < num_classes; ++c) {
        if (c != best_omitted) member_classes.push_back(c);
    }
    HellyWitness witness;
    witness.class_index = best_omitted;
    const AxisBox class_inter = box_intersection(inst.classes[best_omitted]);
    for (std::size_t t = 0; t < masks.size(); ++t) {
        PointBits common(masks[t].distinct);
        common.set();
        for (std::size_t j = 0; j < member_classes.size(); ++j) {
            common &= masks[t].masks[member_classes[j]][best_choice[j]];
        }
        std::vector<RationalPoint> pts;
        std::size_t pos = common.find_first();
        for (std::size_t k = 0; k < masks[t].required; ++k) {
            pts.push_back(inst.targets[t].points.distinct()[pos]);
            pos = common.find_next(pos);
        }
        for (const RationalPoint& p : pts) {
            if (!class_inter.contains(p)) {
                throw TheoremViolation(
                    "colorful witness point is outside the omitted class intersection");
            }
        }
        std::size_t in_class = 0;
        for (const RationalPoint& p : inst.targets[t].points.distinct()) {
            if (class_inter.contains(p)) ++in_class;
        }
        if (in_class < masks[t].required) {
            throw TheoremViolation("omitted class intersection misses the target count");
        }
        witness.points.push_back(std::move(pts));
    }
    return witness;
}

std::optional<TupleCounterexample> check_colorful_hypothesis(const ColoredInstance& inst,
                                                             std::size_t tuple_size) {
    validate_instance(inst);
    if (tuple_size > inst.classes.size()) {
        throw std::invalid_argument("tuple size exceeds class count");
    }
    if (tuple_size == 0) throw std::invalid_argument("tuple size must be at least 1");

    const auto masks = build_masks(inst.classes, inst.targets);

    std::optional<TupleCounterexample> found;
    detail::for_each_combination(
        inst.classes.size(), tuple_size, [&](const std::vector<std::size_t>& cls) {
            std::vector<std::size_t> radix;
            for (std::size_t c : cls) radix.push_back(inst.classes[c].size());
            return detail::for_each_assignment(radix, [&](const std::vector<std::size_t>& choice) {
                for (std::size_t t = 0; t < masks.size(); ++t) {
                    PointBits common(masks[t].distinct);
                    common.set();
                    for (std::size_t j = 0; j < cls.size(); ++j) {
                        common &= masks[t].masks[cls[j]][choice[j]];
                    }
                    if (common.count() < masks[t].required) {
                        TupleCounterexample ce;
                        for (std::size_t j = 0; j < cls.size(); ++j) {
                            ce.tuple.push_back(BoxRef{cls[j], choice[j]});
                        }
                        ce.target_index = t;
                        found = std::move(ce);
                        return false;
                    }
                }
                return true;
            });
        });
    return found;
}

std::optional<TupleCounterexample> check_monochromatic_hypothesis(std::span<const AxisBox> boxes,
                                                                  std::span<const Target> targets,
                                                                  std::size_t helly_number) {
    if (boxes.empty()) throw std::invalid_argument("hypothesis check needs at least one box");
    std::vector<std::vector<PointBits>> masks;  // [target][box]
    std::vector<std::size_t> required;
    for (const Target& t : targets) {
        masks.push_back(detail::containment_masks<AxisBox>(
            boxes, std::span<const RationalPoint>(t.points.distinct())));
        required.push_back(t.required);
    }

    std::optional<TupleCounterexample> found;
    const std::size_t max_size = std::min(helly_number, boxes.size());
    for (std::size_t size = 1; size <= max_size && !found; ++size) {
        detail::for_each_combination(boxes.size(), size, [&](const std::vector<std::size_t>& idx) {
            for (std::size_t t = 0; t < masks.size(); ++t) {
                PointBits common(targets[t].points.distinct().size());
                common.set();
                for (std::size_t k : idx) common &= masks[t][k];
                if (common.count() < required[t]) {
                    TupleCounterexample ce;
                    for (std::size_t k : idx) ce.tuple.push_back(BoxRef{0, k});
                    ce.target_index = t;
                    found = std::move(ce);
                    return false;
                }
            }
            return true;
        });
    }
    return found;
}

std::optional<RationalPoint> radon_box_point(const PointSet& x) {
    const auto& pts = x.distinct();
    if (pts.empty()) throw std::invalid_argument("radon_box_point needs a nonempty set");
    const std::size_t d = pts.front().dim();

    auto in_bbox_of_others = [&](std::size_t skip) {
        std::vector<RationalPoint> others;
        others.reserve(pts.size() - 1);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i != skip) others.push_back(pts[i]);
        }
        return !others.empty() && bbox(others).contains(pts[skip]);
    };

    if (pts.size() >= 2 * d + 1) {
        // Per-axis extremum achievers (lowest index on ties) use up at most 2d
        // points; any point outside that set sits inside bbox of the rest.
        std::vector<bool> achiever(pts.size(), false);
        for (std::size_t axis = 0; axis < d; ++axis) {
            std::size_t lo = 0, hi = 0;
            for (std::size_t i = 1; i < pts.size(); ++i) {
                if (pts[i][axis] < pts[lo][axis]) lo = i;
                if (pts[i][axis] > pts[hi][axis]) hi = i;
            }
            achiever[lo] = achiever[hi] = true;
        }
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (achiever[i]) continue;
            if (!in_bbox_of_others(i)) {
                throw TheoremViolation("non-achiever point escaped bbox of the rest");
            }
            return pts[i];
        }
        throw TheoremViolation("achievers covered 2d+1 points");
    }

    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (in_bbox_of_others(i)) return pts[i];
    }
    return std::nullopt;
}

PointSet cross_polytope_points(std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("dimension must be at least 1");
    std::vector<RationalPoint> pts;
    for (std::size_t axis = 0; axis < dim; ++axis) {
        for (int sign : {1, -1}) {
            std::vector<Rational> c(dim, Rational(0));
            c[axis] = sign;
            pts.emplace_back(std::move(c));
        }
    }
    return PointSet(std::move(pts));
}

SharpInstance halman_sharp_instance(std::size_t dim) {
    const PointSet x = cross_polytope_points(dim);
    const auto& pts = x.points();
    SharpInstance inst;
    for (std::size_t skip = 0; skip < pts.size(); ++skip) {
        std::vector<RationalPoint> others;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i != skip) others.push_back(pts[i]);
        }
        inst.boxes.push_back(bbox(others));
    }
    inst.points = x;
    return inst;
}

}  // namespace dhl
