#include "dhl/generate.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "dhl/detail/bits.hpp"
#include "dhl/detail/combinatorics.hpp"
#include "dhl/errors.hpp"

namespace dhl {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("below(0)");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % n;
}

long long Rng::range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

Rational random_rational(Rng& rng, long long coord_range, unsigned denom_max) {
    const unsigned denom = denom_max <= 1 ? 1 : static_cast<unsigned>(rng.below(denom_max)) + 1;
    const long long numer = rng.range(-coord_range * denom, coord_range * denom);
    return Rational(numer, denom);
}

RationalPoint random_point(Rng& rng, std::size_t dim, long long coord_range,
                           unsigned denom_max) {
    std::vector<Rational> coords(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        coords[i] = random_rational(rng, coord_range, denom_max);
    }
    return RationalPoint(std::move(coords));
}

namespace {

void push_param(RunManifest& m, const std::string& key, const std::string& value) {
    m.params.emplace_back(key, value);
}

RunManifest make_manifest(const std::string& op, const GenParams& p, std::uint64_t seed) {
    RunManifest m;
    m.operation = op;
    m.seed = seed;
    push_param(m, "dim", std::to_string(p.dim));
    push_param(m, "boxes", std::to_string(p.num_boxes));
    push_param(m, "points", std::to_string(p.num_points));
    push_param(m, "coord_range", std::to_string(p.coord_range));
    push_param(m, "denom_max", std::to_string(p.denom_max));
    if (p.num_classes > 0) push_param(m, "classes", std::to_string(p.num_classes));
    if (p.target > 1) push_param(m, "target", std::to_string(p.target));
    if (p.num_targets > 1) push_param(m, "targets", std::to_string(p.num_targets));
    return m;
}

// JSON objects serialize with sorted keys, so keep manifests in that order.
void finalize_manifest(RunManifest& m) {
    std::sort(m.params.begin(), m.params.end());
}

std::vector<RationalPoint> random_points(Rng& rng, const GenParams& p, std::size_t count) {
    std::vector<RationalPoint> pts;
    pts.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        pts.push_back(random_point(rng, p.dim, p.coord_range, p.denom_max));
    }
    return pts;
}

AxisBox random_box(Rng& rng, const GenParams& p) {
    std::vector<Interval> axes(p.dim);
    for (std::size_t i = 0; i < p.dim; ++i) {
        Rational a = random_rational(rng, p.coord_range, p.denom_max);
        Rational b = random_rational(rng, p.coord_range, p.denom_max);
        if (b < a) std::swap(a, b);
        axes[i] = Interval{std::move(a), std::move(b)};
    }
    return AxisBox(std::move(axes));
}

/// bbox of a random subset of pts with at least min_size elements.
AxisBox bbox_of_subset(Rng& rng, const std::vector<RationalPoint>& pts, std::size_t min_size) {
    const std::size_t n = pts.size();
    min_size = std::min(std::max<std::size_t>(min_size, 1), n);
    const std::size_t size = min_size + rng.below(n - min_size + 1);
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    for (std::size_t i = 0; i < size; ++i) {  // partial Fisher-Yates
        std::swap(idx[i], idx[i + rng.below(n - i)]);
    }
    std::vector<RationalPoint> chosen;
    for (std::size_t i = 0; i < size; ++i) chosen.push_back(pts[idx[i]]);
    return bbox(chosen);
}

void split_into_classes(InstanceFile& inst, std::size_t num_classes) {
    inst.classes.assign(num_classes, {});
    for (std::size_t i = 0; i < inst.boxes.size(); ++i) {
        inst.classes[i % num_classes].push_back(i);
    }
}

}  // namespace

InstanceFile gen_random(const GenParams& params, std::uint64_t seed) {
    Rng rng(seed);
    InstanceFile inst;
    inst.dimension = params.dim;
    for (std::size_t i = 0; i < params.num_boxes; ++i) {
        inst.boxes.push_back(random_box(rng, params));
    }
    std::vector<RationalPoint> pts = random_points(rng, params, params.num_points);
    if (params.pierceable) {
        for (const AxisBox& b : inst.boxes) {
            std::vector<Rational> coords(params.dim);
            for (std::size_t i = 0; i < params.dim; ++i) {
                // A rational point inside the interval: lo + fraction*(hi-lo).
                const Rational& lo = b.axis(i).lo;
                const Rational& hi = b.axis(i).hi;
                const unsigned q = 4;
                coords[i] = lo + (hi - lo) * Rational(rng.below(q + 1), q);
            }
            pts.emplace_back(std::move(coords));
        }
    }
    inst.point_sets.push_back(PointSetEntry{PointSet(std::move(pts)), params.target});
    if (params.num_classes > 0) split_into_classes(inst, params.num_classes);
    RunManifest manifest = make_manifest("gen-random", params, seed);
    finalize_manifest(manifest);
    inst.manifest = std::move(manifest);
    return inst;
}

InstanceFile gen_hypothesis_satisfying(const GenParams& params, std::uint64_t seed,
                                       std::size_t level) {
    Rng rng(seed);
    const std::size_t hypothesis_level = level == 0 ? 2 * params.dim : level;

    for (std::size_t attempt = 0; attempt < params.max_attempts; ++attempt) {
        InstanceFile inst;
        inst.dimension = params.dim;

        std::vector<PointSet> target_sets;
        std::vector<std::vector<RationalPoint>> pools;
        for (std::size_t t = 0; t < std::max<std::size_t>(params.num_targets, 1); ++t) {
            std::vector<RationalPoint> pts = random_points(rng, params, params.num_points);
            PointSet set(pts);
            pools.push_back(set.points());
            target_sets.push_back(std::move(set));
        }
        std::vector<RationalPoint> joint;
        for (const auto& pool : pools) joint.insert(joint.end(), pool.begin(), pool.end());

        // Large subsets keep k-wise intersections rich; the hypothesis check
        // below rejects the rest.
        const std::size_t min_size = std::max<std::size_t>(1, (joint.size() * 7) / 10);
        for (std::size_t i = 0; i < params.num_boxes; ++i) {
            inst.boxes.push_back(bbox_of_subset(rng, joint, min_size));
        }
        for (const PointSet& set : target_sets) {
            inst.point_sets.push_back(PointSetEntry{set, params.target});
        }
        if (params.num_classes > 0) split_into_classes(inst, params.num_classes);

        bool ok;
        if (params.num_classes > 0) {
            ColoredInstance colored{params.dim, inst.box_classes(), inst.targets()};
            ok = !check_colorful_hypothesis(colored, std::min(hypothesis_level,
                                                              params.num_classes))
                      .has_value();
        } else {
            const auto targets = inst.targets();
            ok = !check_monochromatic_hypothesis(inst.boxes, targets, hypothesis_level)
                      .has_value();
        }
        if (!ok) continue;

        RunManifest m = make_manifest("gen-hypothesis", params, seed);
        push_param(m, "achieved_level", std::to_string(hypothesis_level));
        push_param(m, "attempts", std::to_string(attempt + 1));
        finalize_manifest(m);
        inst.manifest = std::move(m);
        return inst;
    }
    throw std::invalid_argument(
        "hypothesis-satisfying generation failed within the attempt budget; "
        "relax the parameters or raise max_attempts");
}

InstanceFile gen_extremal(ExtremalKind kind, std::size_t dim, std::size_t m) {
    InstanceFile inst;
    inst.dimension = dim;
    RunManifest manifest;
    manifest.operation = "gen-extremal";
    push_param(manifest, "dim", std::to_string(dim));
    switch (kind) {
        case ExtremalKind::halman_sharp: {
            SharpInstance sharp = halman_sharp_instance(dim);
            inst.boxes = std::move(sharp.boxes);
            inst.point_sets.push_back(PointSetEntry{std::move(sharp.points), 1});
            push_param(manifest, "kind", "halman-sharp");
            break;
        }
        case ExtremalKind::radon_sharp: {
            inst.point_sets.push_back(PointSetEntry{cross_polytope_points(dim), 1});
            push_param(manifest, "kind", "radon-sharp");
            break;
        }
        case ExtremalKind::slab: {
            SlabInstance slab = slab_instance(dim, m);
            inst.boxes = std::move(slab.boxes);
            inst.point_sets.push_back(PointSetEntry{std::move(slab.points), 1});
            push_param(manifest, "kind", "slab");
            push_param(manifest, "m", std::to_string(m));
            break;
        }
    }
    finalize_manifest(manifest);
    inst.manifest = std::move(manifest);
    return inst;
}

std::vector<std::vector<RationalPoint>> gen_intermixed_parts(std::size_t dim, std::size_t r,
                                                             std::size_t part_size,
                                                             std::uint64_t seed,
                                                             const GenParams& params) {
    Rng rng(seed);
    GenParams p = params;
    p.dim = dim;
    const Rational eps(1, 2 * dim);

    std::vector<RationalPoint> pool = random_points(rng, p, part_size);
    std::vector<std::vector<RationalPoint>> equal(r, pool);

    for (std::size_t attempt = 0; attempt < params.max_attempts; ++attempt) {
        std::vector<std::vector<RationalPoint>> parts = equal;
        for (auto& part : parts) {
            for (auto& pt : part) {
                if (rng.chance(3, 10)) pt = random_point(rng, dim, p.coord_range, p.denom_max);
            }
        }
        std::vector<PointSet> sets;
        for (const auto& part : parts) sets.emplace_back(part, /*multiset=*/true);
        if (is_box_intermixed(sets, eps)) return parts;
    }
    return equal;  // identical parts are intermixed for every eps
}

std::vector<std::vector<RationalPoint>> gen_separated_parts(std::size_t dim, std::size_t r,
                                                            std::size_t part_size,
                                                            std::uint64_t seed,
                                                            const GenParams& params) {
    Rng rng(seed);
    GenParams p = params;
    p.dim = dim;
    std::vector<std::vector<RationalPoint>> parts;
    for (std::size_t j = 0; j < r; ++j) parts.push_back(random_points(rng, p, part_size));
    // Shift the last part beyond everything along axis 0.
    const Rational shift = Rational(4 * p.coord_range + 4);
    for (RationalPoint& pt : parts.back()) {
        std::vector<Rational> coords = pt.coords();
        coords[0] += shift;
        pt = RationalPoint(std::move(coords));
    }
    return parts;
}

HConvexInstance gen_hconvex_hypothesis(std::shared_ptr<const DirectionSet> directions,
                                       const GenParams& params, std::uint64_t seed) {
    Rng rng(seed);
    const std::size_t k = directions->size();
    for (std::size_t attempt = 0; attempt < params.max_attempts; ++attempt) {
        std::vector<RationalPoint> pts =
            random_points(rng, params, std::max<std::size_t>(params.num_points, 1));
        PointSet s(pts);
        const auto& pool = s.points();
        const std::size_t min_size = std::max<std::size_t>(1, (pool.size() * 7) / 10);
        std::vector<HConvexSet> sets;
        for (std::size_t i = 0; i < params.num_boxes; ++i) {
            const AxisBox sub = bbox_of_subset(rng, pool, min_size);
            std::vector<RationalPoint> chosen;
            for (const RationalPoint& p : pool) {
                if (sub.contains(p)) chosen.push_back(p);
            }
            sets.push_back(hconvex_hull(PointSet(chosen), directions));
        }

        // Hypothesis at all subfamily sizes up to k.
        bool ok = true;
        const auto masks = detail::containment_masks<HConvexSet>(
            std::span<const HConvexSet>(sets), std::span<const RationalPoint>(s.distinct()));
        for (std::size_t size = 1; size <= std::min(k, sets.size()) && ok; ++size) {
            ok = detail::for_each_combination(sets.size(), size,
                                              [&](const std::vector<std::size_t>& idx) {
                                                  detail::PointBits common(s.distinct().size());
                                                  common.set();
                                                  for (std::size_t i : idx) common &= masks[i];
                                                  return common.any();
                                              });
        }
        if (ok) return HConvexInstance{directions, std::move(sets), std::move(s)};
    }
    throw std::invalid_argument(
        "hconvex hypothesis generation failed within the attempt budget; "
        "relax the parameters or raise max_attempts");
}

}  // namespace dhl
