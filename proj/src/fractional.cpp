#include "dhl/fractional.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "dhl/detail/bits.hpp"
#include "dhl/detail/combinatorics.hpp"
#include "dhl/errors.hpp"

namespace dhl {

namespace {

using detail::PointBits;

std::size_t family_dim(std::span<const AxisBox> boxes) {
    if (boxes.empty()) throw std::invalid_argument("operation needs at least one box");
    return boxes.front().dim();
}

Rational pow_rational(Rational base, std::size_t exp) {
    Rational out = 1;
    for (std::size_t i = 0; i < exp; ++i) out *= base;
    return out;
}

}  // namespace

Rational tuple_hit_fraction(std::span<const AxisBox> boxes, const PointSet& s, std::size_t k,
                            const Guards& guards) {
    const std::size_t n = boxes.size();
    family_dim(boxes);
    if (k == 0 || k > n) throw std::invalid_argument("tuple size must be in [1, |boxes|]");
    const BigInt total = detail::binomial(n, k);
    detail::require_enumerable(total, guards.tuple_enum_max, "tuple_hit_fraction");

    const auto masks =
        detail::containment_masks<AxisBox>(boxes, std::span<const RationalPoint>(s.distinct()));
    BigInt hits = 0;
    detail::for_each_combination(n, k, [&](const std::vector<std::size_t>& idx) {
        PointBits common(s.distinct().size());
        common.set();
        for (std::size_t i : idx) common &= masks[i];
        if (common.any()) ++hits;
        return true;
    });
    return Rational(hits, total);
}

CommonSubfamily max_common_subfamily(std::span<const AxisBox> boxes, const PointSet& s) {
    const std::size_t n = boxes.size();
    family_dim(boxes);
    CommonSubfamily best;
    best.fraction = 0;
    for (const RationalPoint& p : s.distinct()) {
        std::vector<std::size_t> in;
        for (std::size_t k = 0; k < n; ++k) {
            if (boxes[k].contains(p)) in.push_back(k);
        }
        if (in.size() > best.subfamily.size()) {
            best.point = p;
            best.subfamily = std::move(in);
        }
    }
    best.fraction = Rational(best.subfamily.size(), n);
    return best;
}

FractionReport verify_fractional_strong(std::span<const AxisBox> boxes, const PointSet& s,
                                        const Guards& guards) {
    const std::size_t d = family_dim(boxes);
    FractionReport report;
    report.dim = d;
    report.k = 2 * d;
    report.alpha = tuple_hit_fraction(boxes, s, report.k, guards);
    CommonSubfamily common = max_common_subfamily(boxes, s);
    report.beta = common.fraction;
    report.beta_point = std::move(common.point);
    report.beta_subfamily = std::move(common.subfamily);
    report.bound_checked = true;
    report.pass = pow_rational(1 - report.beta, 2 * d - 1) <= 1 - report.alpha;
    return report;
}

FractionReport measure_fractional_small(std::span<const AxisBox> boxes, const PointSet& s,
                                        const Guards& guards) {
    const std::size_t d = family_dim(boxes);
    FractionReport report;
    report.dim = d;
    report.k = std::min(d + 1, boxes.size());
    report.alpha = tuple_hit_fraction(boxes, s, report.k, guards);
    CommonSubfamily common = max_common_subfamily(boxes, s);
    report.beta = common.fraction;
    report.beta_point = std::move(common.point);
    report.beta_subfamily = std::move(common.subfamily);
    report.bound_checked = false;
    report.pass = true;
    return report;
}

SlabInstance slab_instance(std::size_t dim, std::size_t m) {
    if (dim < 2) throw std::invalid_argument("slab_instance needs dimension at least 2");
    if (m == 0) throw std::invalid_argument("slab_instance needs m >= 1");
    SlabInstance inst;
    for (std::size_t axis = 0; axis < dim; ++axis) {
        for (std::size_t t = 1; t <= m; ++t) {
            std::vector<Interval> axes(dim, Interval{Rational(0), Rational(1)});
            const Rational level(t, m + 1);
            axes[axis] = Interval{level, level};
            inst.boxes.emplace_back(std::move(axes));
        }
    }
    std::vector<RationalPoint> crossings;
    std::vector<std::size_t> radix(dim, m);
    detail::for_each_assignment(radix, [&](const std::vector<std::size_t>& choice) {
        std::vector<Rational> coords(dim);
        for (std::size_t axis = 0; axis < dim; ++axis) {
            coords[axis] = Rational(choice[axis] + 1, m + 1);
        }
        crossings.emplace_back(std::move(coords));
        return true;
    });
    inst.points = PointSet(std::move(crossings));
    return inst;
}

std::optional<Halfspace> intermix_violation(std::span<const PointSet> parts, const Rational& eps) {
    if (parts.empty()) throw std::invalid_argument("intermixing needs at least one part");
    if (eps <= 0 || eps >= 1) throw std::invalid_argument("eps must lie in (0,1)");
    std::size_t d = 0;
    std::size_t total = 0;
    for (const PointSet& part : parts) {
        if (part.empty()) throw std::invalid_argument("intermixing parts must be nonempty");
        if (d == 0) d = part.dim();
        if (part.dim() != d) throw std::invalid_argument("part dimension mismatch");
        total += part.size();
    }

    for (std::size_t axis = 0; axis < d; ++axis) {
        std::vector<Rational> thresholds;
        for (const PointSet& part : parts) {
            for (const RationalPoint& p : part.points()) thresholds.push_back(p[axis]);
        }
        std::sort(thresholds.begin(), thresholds.end());
        thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
        for (bool upper : {false, true}) {
            for (const Rational& t : thresholds) {
                const Halfspace h{axis, upper, t};
                std::size_t captured = 0;
                for (const PointSet& part : parts) {
                    for (const RationalPoint& p : part.points()) {
                        if (h.admits(p)) ++captured;
                    }
                }
                if (Rational(captured, 1) < eps * total) continue;
                for (const PointSet& part : parts) {
                    bool touched = false;
                    for (const RationalPoint& p : part.points()) {
                        if (h.admits(p)) {
                            touched = true;
                            break;
                        }
                    }
                    if (!touched) return h;
                }
            }
        }
    }
    return std::nullopt;
}

RationalPoint intermix_witness(std::span<const PointSet> parts) {
    if (parts.empty() || parts.front().empty()) {
        throw std::invalid_argument("intermix_witness needs nonempty parts");
    }
    const std::size_t d = parts.front().dim();
    const Rational eps(1, 2 * d);
    if (intermix_violation(parts, eps)) {
        throw std::invalid_argument("parts are not (1/2d)-box-intermixed");
    }
    std::vector<AxisBox> hulls;
    std::vector<RationalPoint> all;
    for (const PointSet& part : parts) {
        hulls.push_back(bbox(part));
        for (const RationalPoint& p : part.distinct()) all.push_back(p);
    }
    std::sort(all.begin(), all.end(), lex_less);
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (const RationalPoint& p : all) {
        bool in_all = true;
        for (const AxisBox& h : hulls) {
            if (!h.contains(p)) {
                in_all = false;
                break;
            }
        }
        if (in_all) return p;
    }
    throw TheoremViolation("intermixed parts share no union point in all bboxes");
}

DichotomyResult intermix_dichotomy(const IndexedParts& ip) {
    if (ip.parts.empty()) throw std::invalid_argument("dichotomy needs at least one part");
    const std::size_t index_count = ip.parts.front().size();
    if (index_count == 0) throw std::invalid_argument("parts must be nonempty");
    for (const auto& part : ip.parts) {
        if (part.size() != index_count) {
            throw std::invalid_argument("parts must share one index set");
        }
    }
    const std::size_t d = ip.parts.front().front().dim();
    const Rational eps(1, 2 * d);

    std::vector<PointSet> as_sets;
    for (const auto& part : ip.parts) as_sets.emplace_back(part, /*multiset=*/true);

    const auto violation = intermix_violation(as_sets, eps);
    if (!violation) {
        return DichotomyCase1{intermix_witness(as_sets)};
    }
    const Halfspace& x = *violation;

    std::size_t separated = ip.parts.size();
    for (std::size_t j = 0; j < ip.parts.size() && separated == ip.parts.size(); ++j) {
        bool touched = false;
        for (const RationalPoint& p : ip.parts[j]) {
            if (x.admits(p)) {
                touched = true;
                break;
            }
        }
        if (!touched) separated = j;
    }
    if (separated == ip.parts.size()) {
        throw TheoremViolation("violating halfspace misses no part on recount");
    }

    std::size_t dense = 0;
    std::size_t dense_count = 0;
    for (std::size_t j = 0; j < ip.parts.size(); ++j) {
        std::size_t captured = 0;
        for (const RationalPoint& p : ip.parts[j]) {
            if (x.admits(p)) ++captured;
        }
        if (captured > dense_count) {
            dense = j;
            dense_count = captured;
        }
    }

    DichotomyCase2 out;
    out.separated_part = separated;
    out.dense_part = dense;
    out.halfspace = x;
    for (std::size_t i = 0; i < index_count; ++i) {
        if (x.admits(ip.parts[dense][i])) out.kept_indices.push_back(i);
    }

    const std::size_t need = (index_count + 2 * d - 1) / (2 * d);
    if (out.kept_indices.size() < need) {
        throw TheoremViolation("dense part captured fewer than |I|/2d indices");
    }
    std::vector<RationalPoint> sub_sep, sub_dense;
    for (std::size_t i : out.kept_indices) {
        sub_sep.push_back(ip.parts[separated][i]);
        sub_dense.push_back(ip.parts[dense][i]);
    }
    const std::vector<AxisBox> pair{bbox(sub_sep), bbox(sub_dense)};
    if (!box_intersection(pair).is_empty()) {
        throw TheoremViolation("restricted bboxes are not disjoint");
    }
    return out;
}

PiercingResult piercing_set(std::span<const AxisBox> boxes, const PointSet& s,
                            const Guards& guards) {
    const std::size_t n = boxes.size();
    family_dim(boxes);
    const auto& pts = s.distinct();

    // coverage[i]: boxes containing point i
    std::vector<PointBits> coverage(pts.size(), PointBits(n));
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (boxes[k].contains(pts[i])) coverage[i].set(k);
        }
    }
    PointBits all(n);
    all.set();
    PointBits covered(n);
    for (const auto& c : coverage) covered |= c;
    if (covered != all) {
        throw UnpierceableBox((covered ^ all).find_first());
    }

    PiercingResult out;
    if (pts.size() <= guards.pierce_exact_max) {
        for (std::size_t size = 1; size <= pts.size(); ++size) {
            bool found = false;
            detail::for_each_combination(pts.size(), size,
                                         [&](const std::vector<std::size_t>& idx) {
                                             PointBits u(n);
                                             for (std::size_t i : idx) u |= coverage[i];
                                             if (u == all) {
                                                 for (std::size_t i : idx) {
                                                     out.points.push_back(pts[i]);
                                                 }
                                                 found = true;
                                                 return false;
                                             }
                                             return true;
                                         });
            if (found) break;
        }
        out.exact = true;
        return out;
    }

    // Greedy max-coverage fallback, flagged inexact.
    PointBits remaining = all;
    while (remaining.any()) {
        std::size_t best = pts.size();
        std::size_t best_gain = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const std::size_t gain = (coverage[i] & remaining).count();
            if (gain > best_gain) {
                best = i;
                best_gain = gain;
            }
        }
        out.points.push_back(pts[best]);
        remaining &= ~coverage[best];
    }
    out.exact = false;
    return out;
}

std::optional<PqViolation> check_pq_condition(std::span<const AxisBox> boxes, const PointSet& s,
                                              std::size_t p, std::size_t q,
                                              const Guards& guards) {
    const std::size_t d = family_dim(boxes);
    if (p < q || q < d + 1) throw std::invalid_argument("need p >= q >= d+1");
    if (p > boxes.size()) return std::nullopt;  // no p-subsets: vacuous
    const BigInt work = detail::binomial(boxes.size(), p) * detail::binomial(p, q);
    detail::require_enumerable(work, guards.tuple_enum_max, "check_pq_condition");

    const auto masks =
        detail::containment_masks<AxisBox>(boxes, std::span<const RationalPoint>(s.distinct()));
    std::optional<PqViolation> found;
    detail::for_each_combination(boxes.size(), p, [&](const std::vector<std::size_t>& pset) {
        const bool good =
            !detail::for_each_combination(p, q, [&](const std::vector<std::size_t>& inner) {
                PointBits common(s.distinct().size());
                common.set();
                for (std::size_t j : inner) common &= masks[pset[j]];
                return !common.any();  // stop (false) on a hit
            });
        if (!good) {
            found = PqViolation{pset};
            return false;
        }
        return true;
    });
    return found;
}

FewColorsResult few_colors_check(const std::vector<std::vector<AxisBox>>& classes,
                                 const PointSet& s, std::size_t r, const Guards& guards) {
    if (classes.empty() || classes.front().empty()) {
        throw std::invalid_argument("few_colors_check needs nonempty classes");
    }
    const std::size_t d = classes.front().front().dim();
    if (classes.size() != d + 1) {
        throw std::invalid_argument("few_colors_check needs exactly d+1 classes");
    }
    const std::size_t t = classes.front().size();
    for (const auto& cls : classes) {
        if (cls.size() != t) throw std::invalid_argument("classes must have equal size");
    }
    if (r == 0) throw std::invalid_argument("r must be at least 1");

    BigInt tuples = 1;
    for (const auto& cls : classes) tuples *= cls.size();
    detail::require_enumerable(tuples, guards.tuple_enum_max, "few_colors_check hypothesis");

    ColoredInstance inst{d, classes, {Target{s.as_set(), 1}}};
    if (auto bad = check_colorful_hypothesis(inst, d + 1)) {
        return *bad;
    }

    detail::require_enumerable(detail::binomial(t, r) * classes.size(), guards.tuple_enum_max,
                               "few_colors_check search");
    for (std::size_t c = 0; c < classes.size(); ++c) {
        const auto masks = detail::containment_masks<AxisBox>(
            classes[c], std::span<const RationalPoint>(s.distinct()));
        std::optional<FewColorsFound> found;
        detail::for_each_combination(t, r, [&](const std::vector<std::size_t>& idx) {
            PointBits common(s.distinct().size());
            common.set();
            for (std::size_t i : idx) common &= masks[i];
            if (common.any()) {
                found = FewColorsFound{c, idx, s.distinct()[common.find_first()]};
                return false;
            }
            return true;
        });
        if (found) return *found;
    }
    return FewColorsInconclusive{};
}

}  // namespace dhl
