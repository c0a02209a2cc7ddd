#include "dhl/matroid.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

#include "dhl/detail/bits.hpp"
#include "dhl/errors.hpp"

namespace dhl {

MatroidOracle MatroidOracle::uniform(std::size_t ground_size, std::size_t rank) {
    if (ground_size > 64) throw std::invalid_argument("ground set capped at 64 elements");
    MatroidOracle m;
    m.kind_ = Kind::uniform;
    m.ground_size_ = ground_size;
    m.uniform_rank_ = std::min(rank, ground_size);
    return m;
}

MatroidOracle MatroidOracle::partition(std::size_t ground_size,
                                       std::vector<std::vector<std::size_t>> parts,
                                       std::vector<std::size_t> capacities) {
    if (ground_size > 64) throw std::invalid_argument("ground set capped at 64 elements");
    if (capacities.empty()) capacities.assign(parts.size(), 1);
    if (capacities.size() != parts.size()) {
        throw std::invalid_argument("capacities must match part count");
    }
    MatroidOracle m;
    m.kind_ = Kind::partition;
    m.ground_size_ = ground_size;
    m.part_of_.assign(ground_size, parts.size());
    for (std::size_t p = 0; p < parts.size(); ++p) {
        for (std::size_t v : parts[p]) {
            if (v >= ground_size || m.part_of_[v] != parts.size()) {
                throw std::invalid_argument("parts must partition the ground set");
            }
            m.part_of_[v] = p;
        }
    }
    for (std::size_t v = 0; v < ground_size; ++v) {
        if (m.part_of_[v] == parts.size()) {
            throw std::invalid_argument("parts must partition the ground set");
        }
    }
    m.capacities_ = std::move(capacities);
    return m;
}

MatroidOracle MatroidOracle::from_independent_sets(std::size_t ground_size,
                                                   std::vector<FaceMask> independent) {
    if (ground_size > 64) throw std::invalid_argument("ground set capped at 64 elements");
    MatroidOracle m;
    m.kind_ = Kind::explicit_sets;
    m.ground_size_ = ground_size;
    std::vector<FaceMask> closure{0};
    for (FaceMask base : independent) {
        if (ground_size < 64 && (base >> ground_size) != 0) {
            throw std::invalid_argument("independent set out of range");
        }
        for (FaceMask sub = base;; sub = (sub - 1) & base) {
            closure.push_back(sub);
            if (sub == 0) break;
        }
    }
    std::sort(closure.begin(), closure.end());
    closure.erase(std::unique(closure.begin(), closure.end()), closure.end());
    m.independent_closure_ = std::move(closure);
    return m;
}

std::size_t MatroidOracle::rank(FaceMask subset) const {
    switch (kind_) {
        case Kind::uniform:
            return std::min<std::size_t>(std::popcount(subset), uniform_rank_);
        case Kind::partition: {
            std::vector<std::size_t> used(capacities_.size(), 0);
            std::size_t r = 0;
            for (std::size_t v = 0; v < ground_size_; ++v) {
                if ((subset >> v) & 1) {
                    const std::size_t p = part_of_[v];
                    if (used[p] < capacities_[p]) {
                        ++used[p];
                        ++r;
                    }
                }
            }
            return r;
        }
        case Kind::explicit_sets: {
            std::size_t best = 0;
            for (FaceMask f : independent_closure_) {
                if ((f & ~subset) == 0) {
                    best = std::max<std::size_t>(best, std::popcount(f));
                }
            }
            return best;
        }
    }
    return 0;
}

bool MatroidOracle::independent(FaceMask subset) const {
    if (kind_ == Kind::explicit_sets) {
        return std::binary_search(independent_closure_.begin(), independent_closure_.end(),
                                  subset);
    }
    return rank(subset) == static_cast<std::size_t>(std::popcount(subset));
}

std::optional<std::string> MatroidOracle::spot_check(std::uint64_t seed,
                                                     std::size_t trials) const {
    if (rank(0) != 0) return "rank of the empty set is not 0";
    const FaceMask all =
        ground_size_ == 64 ? ~FaceMask{0} : ((FaceMask{1} << ground_size_) - 1);
    for (std::size_t v = 0; v < ground_size_; ++v) {
        if (rank(FaceMask{1} << v) > 1) return "a singleton has rank above 1";
    }
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        const FaceMask a = rng() & all;
        const FaceMask b = rng() & all;
        if (rank(a) > rank(a | b)) return "rank is not monotone";
        if (rank(a | b) + rank(a & b) > rank(a) + rank(b)) return "rank is not submodular";
    }
    return std::nullopt;
}

MatroidHalmanResult matroid_halman_check(const MatroidOracle& matroid,
                                         std::span<const AxisBox> boxes, const PointSet& s,
                                         const Guards& guards) {
    if (matroid.ground_size() != boxes.size()) {
        throw std::invalid_argument("ground set must index the boxes");
    }
    if (boxes.empty()) throw std::invalid_argument("matroid check needs at least one box");
    if (matroid.ground_size() > guards.matroid_ground_max) {
        throw GuardExceeded("matroid_halman_check: ground set exceeds guard");
    }
    const std::size_t d = boxes.front().dim();

    // The empty independent set asks for a point of S in all of space.
    if (s.distinct().empty()) return MatroidHypothesisCounterexample{0};

    const auto masks = detail::containment_masks<AxisBox>(
        boxes, std::span<const RationalPoint>(s.distinct()));

    // DFS over nonempty independent sets (independence is downward closed, so
    // children of dependent sets are pruned wholesale).
    std::optional<FaceMask> bad;
    std::vector<std::pair<FaceMask, std::size_t>> stack;  // (set, next element to try)
    stack.emplace_back(0, 0);
    std::vector<detail::PointBits> common_stack;
    detail::PointBits everything(s.distinct().size());
    everything.set();
    common_stack.push_back(everything);
    while (!stack.empty() && !bad) {
        auto& [cur, next] = stack.back();
        if (next >= boxes.size()) {
            stack.pop_back();
            common_stack.pop_back();
            continue;
        }
        const std::size_t v = next++;
        const FaceMask cand = cur | (FaceMask{1} << v);
        if (!matroid.independent(cand)) continue;
        detail::PointBits common = common_stack.back() & masks[v];
        if (common.none()) {
            bad = cand;
            break;
        }
        stack.emplace_back(cand, v + 1);
        common_stack.push_back(std::move(common));
    }
    if (bad) return MatroidHypothesisCounterexample{*bad};

    const FaceMask all =
        boxes.size() == 64 ? ~FaceMask{0} : ((FaceMask{1} << boxes.size()) - 1);
    for (const RationalPoint& p : s.distinct()) {
        FaceMask t = 0;
        for (std::size_t k = 0; k < boxes.size(); ++k) {
            if (boxes[k].contains(p)) t |= FaceMask{1} << k;
        }
        if (matroid.rank(all & ~t) <= 2 * d - 1) {
            return MatroidHalmanFound{t, p};
        }
    }
    throw TheoremViolation("matroid hypothesis holds but no qualifying T_s exists");
}

}  // namespace dhl
