#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dhl/fractional.hpp"
#include "dhl/instance.hpp"

namespace dhl {

/// Deterministic RNG: a standard mt19937_64 stream with hand-rolled bounded
/// sampling, so sequences do not depend on library-specific distribution
/// implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, n), n >= 1, by rejection.
    std::uint64_t below(std::uint64_t n);

    /// Uniform integer in [lo, hi].
    long long range(long long lo, long long hi);

    bool chance(std::uint32_t numer, std::uint32_t denom) { return below(denom) < numer; }

private:
    std::mt19937_64 engine_;
};

struct GenParams {
    std::size_t dim = 2;
    std::size_t num_boxes = 6;
    std::size_t num_points = 12;
    long long coord_range = 10;  // coordinates drawn from [-range, range]
    unsigned denom_max = 2;      // denominators drawn from [1, denom_max]
    std::size_t num_classes = 0;     // 0 = monochromatic
    std::size_t target = 1;          // required points per target
    std::size_t num_targets = 1;     // >1 = very-colorful style instances
    bool pierceable = false;         // seed one S point inside every box
    std::size_t max_attempts = 200;  // rejection budget for hypothesis kinds
};

Rational random_rational(Rng& rng, long long coord_range, unsigned denom_max);
RationalPoint random_point(Rng& rng, std::size_t dim, long long coord_range, unsigned denom_max);

/// Unconstrained boxes and points.
InstanceFile gen_random(const GenParams& params, std::uint64_t seed);

/// S first, then every box as the bbox of a random S-subset, then rejection
/// against the hypothesis at tuple size `level` (0 = the Helly number 2d).
/// Throws std::runtime_error when the rejection budget runs out.
InstanceFile gen_hypothesis_satisfying(const GenParams& params, std::uint64_t seed,
                                       std::size_t level = 0);

enum class ExtremalKind { halman_sharp, radon_sharp, slab };

/// Deterministic extremal instances; `m` is the slabs-per-axis count for the
/// slab construction.
InstanceFile gen_extremal(ExtremalKind kind, std::size_t dim, std::size_t m = 1);

/// r parts of equal size that are (1/2d)-box-intermixed: parts start as one
/// shared pool and receive random mutations, keeping only exactly-checked
/// intermixed outcomes (the unmutated pool always qualifies).
std::vector<std::vector<RationalPoint>> gen_intermixed_parts(std::size_t dim, std::size_t r,
                                                             std::size_t part_size,
                                                             std::uint64_t seed,
                                                             const GenParams& params = {});

/// Parts with one part translated away along axis 0, so a halfspace captures
/// it entirely and misses the rest: always fails the intermix check when
/// r <= 2d.
std::vector<std::vector<RationalPoint>> gen_separated_parts(std::size_t dim, std::size_t r,
                                                            std::size_t part_size,
                                                            std::uint64_t seed,
                                                            const GenParams& params = {});

/// H-convex family over the given directions: each set is the hull of a
/// random S-subset; hypothesis-satisfying variant rejects until every
/// k-subfamily (k = |H|) meets S.
struct HConvexInstance {
    std::shared_ptr<const DirectionSet> directions;
    std::vector<HConvexSet> sets;
    PointSet points;
};
HConvexInstance gen_hconvex_hypothesis(std::shared_ptr<const DirectionSet> directions,
                                       const GenParams& params, std::uint64_t seed);

}  // namespace dhl
