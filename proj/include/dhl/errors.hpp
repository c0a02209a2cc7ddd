#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dhl {

/// Input that cannot be interpreted: bad rational syntax, malformed JSON,
/// out-of-range indices, and similar file-level problems.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An enumeration or size guard was exceeded.  Raise the guard to proceed.
struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A certified conclusion failed to verify.  All conclusions checked this way
/// are theorems, so on a well-formed instance this is a finding, not a bug in
/// the caller's data.
struct TheoremViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/// A box with no point of S cannot be pierced by points of S.
struct UnpierceableBox : std::invalid_argument {
    explicit UnpierceableBox(std::size_t index)
        : std::invalid_argument("box " + std::to_string(index) + " contains no point of S"),
          box_index(index) {}
    std::size_t box_index;
};

}  // namespace dhl
