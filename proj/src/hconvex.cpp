#include "dhl/hconvex.hpp"

#include <algorithm>
#include <stdexcept>

#include "dhl/detail/bits.hpp"
#include "dhl/detail/combinatorics.hpp"
#include "dhl/detail/linalg.hpp"
#include "dhl/errors.hpp"

namespace dhl {

namespace {

bool all_nonpositive(const std::vector<std::vector<Rational>>& directions,
                     const std::vector<Rational>& y) {
    for (const auto& h : directions) {
        Rational dot = 0;
        for (std::size_t i = 0; i < h.size(); ++i) dot += h[i] * y[i];
        if (dot > 0) return false;
    }
    return true;
}

bool is_zero(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

/// Positive-scaling canonical form: divide by |first nonzero coordinate|.
std::vector<Rational> ray_canonical(const std::vector<Rational>& v) {
    for (const Rational& x : v) {
        if (x != 0) {
            std::vector<Rational> out(v.size());
            const Rational scale = abs(x);
            for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / scale;
            return out;
        }
    }
    return v;
}

}  // namespace

std::optional<std::vector<Rational>> validate_direction_set(
    const std::vector<std::vector<Rational>>& directions) {
    if (directions.empty()) throw std::invalid_argument("direction set must be nonempty");
    const std::size_t d = directions.front().size();
    if (d == 0) throw std::invalid_argument("direction dimension must be at least 1");
    for (const auto& h : directions) {
        if (h.size() != d) throw std::invalid_argument("direction dimension mismatch");
        if (is_zero(h)) throw std::invalid_argument("zero vector is not a direction");
    }

    // Lineality: any nonzero y orthogonal to every direction qualifies.
    {
        auto basis = detail::nullspace_basis(
            std::vector<std::vector<Rational>>(directions.begin(), directions.end()), d);
        if (!basis.empty()) return basis.front();
    }

    // Otherwise a nonzero solution, if any, can be taken on an extreme ray of
    // {y : Hy <= 0}, determined up to sign by some d-1 tight constraints.
    std::optional<std::vector<Rational>> witness;
    detail::for_each_combination(directions.size(), d - 1,
                                 [&](const std::vector<std::size_t>& pick) {
                                     std::vector<std::vector<Rational>> rows;
                                     for (std::size_t i : pick) rows.push_back(directions[i]);
                                     auto basis = detail::nullspace_basis(std::move(rows), d);
                                     if (basis.size() != 1) return true;
                                     for (int sign : {1, -1}) {
                                         std::vector<Rational> y = basis.front();
                                         if (sign < 0) {
                                             for (Rational& x : y) x = -x;
                                         }
                                         if (all_nonpositive(directions, y)) {
                                             witness = std::move(y);
                                             return false;
                                         }
                                     }
                                     return true;
                                 });
    return witness;
}

DirectionSet::DirectionSet(std::vector<std::vector<Rational>> directions)
    : directions_(std::move(directions)) {
    if (directions_.empty()) throw std::invalid_argument("direction set must be nonempty");
    dim_ = directions_.front().size();
    std::vector<std::vector<Rational>> canon;
    for (const auto& h : directions_) canon.push_back(ray_canonical(h));
    for (std::size_t i = 0; i < canon.size(); ++i) {
        for (std::size_t j = i + 1; j < canon.size(); ++j) {
            if (canon[i] == canon[j]) {
                throw std::invalid_argument(
                    "directions must be distinct up to positive scaling");
            }
        }
    }
    if (auto gap = validate_direction_set(directions_)) {
        std::string msg = "directions do not positively span space; gap direction (";
        for (std::size_t i = 0; i < gap->size(); ++i) {
            msg += (i ? "," : "") + to_string((*gap)[i]);
        }
        throw std::invalid_argument(msg + ")");
    }
}

std::shared_ptr<const DirectionSet> DirectionSet::box_directions(std::size_t dim) {
    std::vector<std::vector<Rational>> dirs;
    for (std::size_t axis = 0; axis < dim; ++axis) {
        for (int sign : {1, -1}) {
            std::vector<Rational> h(dim, Rational(0));
            h[axis] = sign;
            dirs.push_back(std::move(h));
        }
    }
    return std::make_shared<const DirectionSet>(std::move(dirs));
}

HConvexSet::HConvexSet(std::shared_ptr<const DirectionSet> directions,
                       std::vector<std::optional<Rational>> bounds)
    : directions_(std::move(directions)), bounds_(std::move(bounds)) {
    if (!directions_) throw std::invalid_argument("missing direction set");
    if (bounds_.size() != directions_->size()) {
        throw std::invalid_argument("one bound per direction required");
    }
    if (std::none_of(bounds_.begin(), bounds_.end(),
                     [](const auto& b) { return b.has_value(); })) {
        throw std::invalid_argument("at least one bound must be finite");
    }
}

Rational dot(const std::vector<Rational>& direction, const RationalPoint& p) {
    if (direction.size() != p.dim()) throw std::invalid_argument("dot: dimension mismatch");
    Rational out = 0;
    for (std::size_t i = 0; i < direction.size(); ++i) out += direction[i] * p[i];
    return out;
}

bool HConvexSet::contains(const RationalPoint& p) const {
    for (std::size_t i = 0; i < bounds_.size(); ++i) {
        if (bounds_[i] && dot(directions_->direction(i), p) > *bounds_[i]) return false;
    }
    return true;
}

HConvexSet hconvex_hull(const PointSet& x, std::shared_ptr<const DirectionSet> directions) {
    if (x.empty()) throw std::invalid_argument("hull of an empty point set is undefined");
    std::vector<std::optional<Rational>> bounds(directions->size());
    for (std::size_t i = 0; i < directions->size(); ++i) {
        Rational best;
        bool first = true;
        for (const RationalPoint& p : x.distinct()) {
            const Rational v = dot(directions->direction(i), p);
            if (first || v > best) {
                best = v;
                first = false;
            }
        }
        bounds[i] = best;
    }
    return HConvexSet(std::move(directions), std::move(bounds));
}

HConvexSet hconvex_intersection(std::span<const HConvexSet> sets) {
    if (sets.empty()) throw std::invalid_argument("intersection of an empty family is undefined");
    const auto& dirs = sets.front().directions();
    std::vector<std::optional<Rational>> bounds = sets.front().bounds();
    for (std::size_t k = 1; k < sets.size(); ++k) {
        if (!(*sets[k].directions() == *dirs)) {
            throw std::invalid_argument("sets must share one direction set");
        }
        for (std::size_t i = 0; i < bounds.size(); ++i) {
            const auto& b = sets[k].bounds()[i];
            if (!b) continue;
            if (!bounds[i] || *b < *bounds[i]) bounds[i] = b;
        }
    }
    return HConvexSet(dirs, std::move(bounds));
}

bool hconvex_contains(const HConvexSet& k, const RationalPoint& p) {
    return k.contains(p);
}

HConvexSet box_as_hconvex(const AxisBox& box,
                          std::shared_ptr<const DirectionSet> box_directions) {
    const std::size_t d = box.dim();
    if (box_directions->size() != 2 * d) {
        throw std::invalid_argument("box conversion needs the 2d box directions");
    }
    std::vector<std::optional<Rational>> bounds(2 * d);
    if (box.is_empty()) {
        // Unsatisfiable bounds: 0 <= x_1 and x_1 <= -1.
        for (std::size_t i = 0; i < 2 * d; ++i) bounds[i] = Rational(i < 2 ? -1 : 0);
        return HConvexSet(std::move(box_directions), std::move(bounds));
    }
    for (std::size_t axis = 0; axis < d; ++axis) {
        bounds[2 * axis] = box.axis(axis).hi;
        bounds[2 * axis + 1] = -box.axis(axis).lo;
    }
    return HConvexSet(std::move(box_directions), std::move(bounds));
}

namespace {

std::vector<BoxRef> achiever_refs(std::span<const HConvexSet> family) {
    const std::size_t k = family.front().directions()->size();
    std::vector<BoxRef> out;
    for (std::size_t dir = 0; dir < k; ++dir) {
        std::size_t best = family.size();
        for (std::size_t j = 0; j < family.size(); ++j) {
            const auto& b = family[j].bounds()[dir];
            if (!b) continue;
            if (best == family.size() || *b < *family[best].bounds()[dir]) best = j;
        }
        if (best == family.size()) continue;  // direction unbounded in every member
        const BoxRef ref{0, best};
        if (std::find(out.begin(), out.end(), ref) == out.end()) out.push_back(ref);
    }
    return out;
}

}  // namespace

HellyOutcome hconvex_halman(std::span<const HConvexSet> family, const PointSet& s,
                            std::size_t n) {
    if (family.empty()) throw std::invalid_argument("hconvex_halman needs at least one set");
    if (n == 0) throw std::invalid_argument("target count must be at least 1");
    const HConvexSet inter = hconvex_intersection(family);
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
    return HellyViolation{achiever_refs(family), 0};
}

std::optional<TupleCounterexample> check_hconvex_colorful_hypothesis(
    const std::vector<std::vector<HConvexSet>>& classes, std::span<const Target> targets,
    std::size_t tuple_size) {
    if (classes.empty()) throw std::invalid_argument("needs at least one class");
    if (tuple_size == 0 || tuple_size > classes.size()) {
        throw std::invalid_argument("tuple size must be in [1, class count]");
    }
    std::vector<std::vector<std::vector<detail::PointBits>>> masks;  // [t][c][set]
    for (const Target& t : targets) {
        std::vector<std::vector<detail::PointBits>> per_class;
        for (const auto& cls : classes) {
            per_class.push_back(detail::containment_masks<HConvexSet>(
                cls, std::span<const RationalPoint>(t.points.distinct())));
        }
        masks.push_back(std::move(per_class));
    }
    std::optional<TupleCounterexample> found;
    detail::for_each_combination(
        classes.size(), tuple_size, [&](const std::vector<std::size_t>& cls) {
            std::vector<std::size_t> radix;
            for (std::size_t c : cls) radix.push_back(classes[c].size());
            return detail::for_each_assignment(radix, [&](const std::vector<std::size_t>& pick) {
                for (std::size_t t = 0; t < targets.size(); ++t) {
                    detail::PointBits common(targets[t].points.distinct().size());
                    common.set();
                    for (std::size_t j = 0; j < cls.size(); ++j) {
                        common &= masks[t][cls[j]][pick[j]];
                    }
                    if (common.count() < targets[t].required) {
                        TupleCounterexample ce;
                        for (std::size_t j = 0; j < cls.size(); ++j) {
                            ce.tuple.push_back(BoxRef{cls[j], pick[j]});
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

std::optional<TupleCounterexample> check_hconvex_hypothesis(std::span<const HConvexSet> family,
                                                            std::span<const Target> targets,
                                                            std::size_t helly_number) {
    if (family.empty()) throw std::invalid_argument("hypothesis check needs at least one set");
    std::vector<std::vector<detail::PointBits>> masks;  // [target][set]
    for (const Target& t : targets) {
        masks.push_back(detail::containment_masks<HConvexSet>(
            family, std::span<const RationalPoint>(t.points.distinct())));
    }
    std::optional<TupleCounterexample> found;
    const std::size_t max_size = std::min(helly_number, family.size());
    for (std::size_t size = 1; size <= max_size && !found; ++size) {
        detail::for_each_combination(family.size(), size,
                                     [&](const std::vector<std::size_t>& idx) {
                                         for (std::size_t t = 0; t < targets.size(); ++t) {
                                             detail::PointBits common(
                                                 targets[t].points.distinct().size());
                                             common.set();
                                             for (std::size_t k : idx) common &= masks[t][k];
                                             if (common.count() < targets[t].required) {
                                                 TupleCounterexample ce;
                                                 for (std::size_t k : idx) {
                                                     ce.tuple.push_back(BoxRef{0, k});
                                                 }
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

HellyOutcome hconvex_halman_colorful(const std::vector<std::vector<HConvexSet>>& classes,
                                     std::span<const Target> targets) {
    if (classes.empty() || classes.front().empty()) {
        throw std::invalid_argument("colorful mode needs nonempty classes");
    }
    const std::size_t k = classes.front().front().directions()->size();
    if (classes.size() != k) {
        throw std::invalid_argument("colorful mode needs exactly |H| classes");
    }
    if (targets.empty()) throw std::invalid_argument("needs at least one target");
    for (const auto& cls : classes) {
        if (cls.empty()) throw std::invalid_argument("empty class");
    }

    std::vector<std::vector<std::vector<detail::PointBits>>> masks;  // [t][c][set]
    for (const Target& t : targets) {
        if (t.required == 0) throw std::invalid_argument("target count must be at least 1");
        std::vector<std::vector<detail::PointBits>> per_class;
        for (const auto& cls : classes) {
            per_class.push_back(detail::containment_masks<HConvexSet>(
                cls, std::span<const RationalPoint>(t.points.distinct())));
        }
        masks.push_back(std::move(per_class));
    }

    bool have_best = false;
    unsigned long long best_score = 0;
    std::size_t best_omitted = 0;
    std::vector<std::size_t> best_choice;
    std::optional<HellyViolation> violation;

    for (std::size_t omitted = 0; omitted < k && !violation; ++omitted) {
        std::vector<std::size_t> member_classes;
        std::vector<std::size_t> radix;
        for (std::size_t c = 0; c < k; ++c) {
            if (c == omitted) continue;
            member_classes.push_back(c);
            radix.push_back(classes[c].size());
        }
        detail::for_each_assignment(radix, [&](const std::vector<std::size_t>& choice) {
            unsigned long long score = 0;
            for (std::size_t t = 0; t < targets.size(); ++t) {
                detail::PointBits common(targets[t].points.distinct().size());
                common.set();
                for (std::size_t j = 0; j < member_classes.size(); ++j) {
                    common &= masks[t][member_classes[j]][choice[j]];
                }
                if (common.count() < targets[t].required) {
                    std::vector<BoxRef> tuple;
                    for (std::size_t j = 0; j < member_classes.size(); ++j) {
                        tuple.push_back(BoxRef{member_classes[j], choice[j]});
                    }
                    violation = HellyViolation{std::move(tuple), t};
                    return false;
                }
                score += detail::nth_set_bit(common, targets[t].required) + 1;
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

    std::vector<std::size_t> member_classes;
    for (std::size_t c = 0; c < k; ++c) {
        if (c != best_omitted) member_classes.push_back(c);
    }
    const HConvexSet class_inter = hconvex_intersection(classes[best_omitted]);
    HellyWitness witness;
    witness.class_index = best_omitted;
    for (std::size_t t = 0; t < targets.size(); ++t) {
        detail::PointBits common(targets[t].points.distinct().size());
        common.set();
        for (std::size_t j = 0; j < member_classes.size(); ++j) {
            common &= masks[t][member_classes[j]][best_choice[j]];
        }
        std::vector<RationalPoint> pts;
        std::size_t pos = common.find_first();
        for (std::size_t i = 0; i < targets[t].required; ++i) {
            pts.push_back(targets[t].points.distinct()[pos]);
            pos = common.find_next(pos);
        }
        for (const RationalPoint& p : pts) {
            if (!class_inter.contains(p)) {
                throw TheoremViolation(
                    "colorful witness point is outside the omitted class intersection");
            }
        }
        std::size_t in_class = 0;
        for (const RationalPoint& p : targets[t].points.distinct()) {
            if (class_inter.contains(p)) ++in_class;
        }
        if (in_class < targets[t].required) {
            throw TheoremViolation("omitted class intersection misses the target count");
        }
        witness.points.push_back(std::move(pts));
    }
    return witness;
}

std::variant<RationalPoint, std::vector<std::size_t>> hconvex_witness_scan(
    std::span<const HConvexSet> family, const PointSet& s) {
    if (family.empty()) throw std::invalid_argument("scan needs at least one set");
    const std::size_t k = family.front().directions()->size();
    if (family.size() < k) {
        throw std::invalid_argument("scan needs at least |H| sets");
    }

    const auto masks =
        detail::containment_masks<HConvexSet>(family, std::span<const RationalPoint>(s.distinct()));

    std::optional<std::vector<std::size_t>> bad_tuple;
    bool have_best = false;
    std::size_t best_max = 0;  // index into s.distinct() of the minimal lex-max
    detail::for_each_combination(family.size(), k - 1, [&](const std::vector<std::size_t>& idx) {
        detail::PointBits common(s.distinct().size());
        common.set();
        for (std::size_t i : idx) common &= masks[i];
        if (common.none()) {
            bad_tuple = idx;
            return false;
        }
        std::size_t last = common.find_first();
        for (std::size_t nxt = common.find_next(last); nxt != detail::PointBits::npos;
             nxt = common.find_next(nxt)) {
            last = nxt;
        }
        if (!have_best || last < best_max) {
            have_best = true;
            best_max = last;
        }
        return true;
    });
    if (bad_tuple) return *bad_tuple;

    const RationalPoint& s0 = s.distinct()[best_max];
    for (std::size_t j = 0; j < family.size(); ++j) {
        if (!family[j].contains(s0)) {
            // The conclusion needs the full k-tuple hypothesis; find the
            // violating subfamily and return it as the certificate.
            std::optional<std::vector<std::size_t>> cert;
            for (std::size_t size = 1; size <= std::min(k, family.size()) && !cert; ++size) {
                detail::for_each_combination(
                    family.size(), size, [&](const std::vector<std::size_t>& idx) {
                        detail::PointBits common(s.distinct().size());
                        common.set();
                        for (std::size_t i : idx) common &= masks[i];
                        if (common.none()) {
                            cert = idx;
                            return false;
                        }
                        return true;
                    });
            }
            if (cert) return *cert;
            throw TheoremViolation("scan point escapes a set although every k-tuple meets S");
        }
    }
    return s0;
}

}  // namespace dhl
