#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "dhl/errors.hpp"
#include "dhl/rational.hpp"

namespace dhl::detail {

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    BigInt r = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

inline void require_enumerable(const BigInt& count, std::uint64_t guard, const char* what) {
    if (count > guard) {
        throw GuardExceeded(std::string(what) + ": " + count.str() + " cases exceed guard " +
                            std::to_string(guard));
    }
}

/// Calls fn with each k-subset of {0..n-1} in lexicographic order until fn
/// returns false.  Returns false iff some call did.
inline bool for_each_combination(std::size_t n, std::size_t k,
                                 const std::function<bool(const std::vector<std::size_t>&)>& fn) {
    if (k > n) return true;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (!fn(idx)) return false;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Mixed-radix odometer: choice[j] runs over [0, radix[j]), last slot fastest.
inline bool for_each_assignment(const std::vector<std::size_t>& radix,
                                const std::function<bool(const std::vector<std::size_t>&)>& fn) {
    for (std::size_t r : radix) {
        if (r == 0) return true;
    }
    std::vector<std::size_t> choice(radix.size(), 0);
    while (true) {
        if (!fn(choice)) return false;
        std::size_t j = radix.size();
        while (j > 0) {
            if (++choice[j - 1] < radix[j - 1]) break;
            choice[j - 1] = 0;
            --j;
        }
        if (j == 0) return true;
    }
}

}  // namespace dhl::detail
