#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "dhl/geometry.hpp"

namespace dhl::detail {

using PointBits = boost::dynamic_bitset<>;

/// masks[k] has bit i set iff points[i] lies in sets[k].  Works for any set
/// type with a contains(RationalPoint) member.
template <typename SetT>
std::vector<PointBits> containment_masks(std::span<const SetT> sets,
                                         std::span<const RationalPoint> points) {
    std::vector<PointBits> masks(sets.size(), PointBits(points.size()));
    for (std::size_t k = 0; k < sets.size(); ++k) {
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (sets[k].contains(points[i])) masks[k].set(i);
        }
    }
    return masks;
}

/// Bit index of the n-th (1-based) set bit; points.size() when absent.
inline std::size_t nth_set_bit(const PointBits& bits, std::size_t n) {
    std::size_t pos = bits.find_first();
    for (std::size_t seen = 1; pos != PointBits::npos && seen < n; ++seen) {
        pos = bits.find_next(pos);
    }
    return pos == PointBits::npos ? bits.size() : pos;
}

}  // namespace dhl::detail
