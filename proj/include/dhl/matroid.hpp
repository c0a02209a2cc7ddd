#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "dhl/complex.hpp"
#include "dhl/geometry.hpp"
#include "dhl/guards.hpp"

namespace dhl {

/// A matroid presented through its rank function.  Built-in uniform and
/// partition constructions, plus an explicit independent-set fallback whose
/// downward closure is taken at construction.
class MatroidOracle {
public:
    enum class Kind { uniform, partition, explicit_sets };

    static MatroidOracle uniform(std::size_t ground_size, std::size_t rank);
    /// parts must partition the ground set; capacities default to all 1.
    static MatroidOracle partition(std::size_t ground_size,
                                   std::vector<std::vector<std::size_t>> parts,
                                   std::vector<std::size_t> capacities = {});
    static MatroidOracle from_independent_sets(std::size_t ground_size,
                                               std::vector<FaceMask> independent);

    Kind kind() const { return kind_; }
    std::size_t ground_size() const { return ground_size_; }
    std::size_t rank(FaceMask subset) const;
    bool independent(FaceMask subset) const;

    /// Cheap sanity probe of the rank axioms (monotone, submodular, unit
    /// increments) on deterministic pseudo-random triples; returns a
    /// description of the first failure, or nullopt.
    std::optional<std::string> spot_check(std::uint64_t seed, std::size_t trials = 128) const;

private:
    Kind kind_ = Kind::uniform;
    std::size_t ground_size_ = 0;
    std::size_t uniform_rank_ = 0;
    std::vector<std::size_t> part_of_;           // partition: element -> part id
    std::vector<std::size_t> capacities_;        // partition: per part
    std::vector<FaceMask> independent_closure_;  // explicit: sorted, downward closed
};

struct MatroidHalmanFound {
    FaceMask t = 0;
    RationalPoint witness;
};

struct MatroidHypothesisCounterexample {
    /// An independent set whose boxes have no common point of S (mask 0 when
    /// S itself is empty, witnessing the empty independent set).
    FaceMask independent_set = 0;
};

using MatroidHalmanResult = std::variant<MatroidHalmanFound, MatroidHypothesisCounterexample>;

/// Checks the matroid hypothesis (every independent set of boxes shares a
/// point of S) by enumerating independent sets, then scans s in lex order for
/// the first T_s = {v : s in B_v} with rank(V \ T_s) <= 2d-1.  The hypothesis
/// guarantees such a T_s exists; failure throws TheoremViolation.
MatroidHalmanResult matroid_halman_check(const MatroidOracle& matroid,
                                         std::span<const AxisBox> boxes, const PointSet& s,
                                         const Guards& guards = {});

}  // namespace dhl
