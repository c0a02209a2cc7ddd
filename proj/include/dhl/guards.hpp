#pragma once

#include <cstddef>
#include <cstdint>

namespace dhl {

/// Enumeration and size caps.  Defaults are desk-scale; each can be raised
/// (or lowered) per call, via CLI flags, or via DHL_GUARD_* environment
/// variables.  Exceeding a guard throws GuardExceeded.
struct Guards {
    std::uint64_t tuple_enum_max = 10'000'000;  // subset/tuple enumerations
    std::uint64_t face_enum_max = 1u << 20;     // total faces for homology
    std::size_t leray_vertex_max = 12;          // induced-subcomplex sweeps
    std::size_t pierce_exact_max = 24;          // |S| for exact set cover
    std::size_t matroid_ground_max = 20;        // independent-set enumeration
    std::size_t nerve_vertex_max = 64;          // boxes per nerve complex

    /// Defaults overridden by DHL_GUARD_TUPLES, DHL_GUARD_FACES,
    /// DHL_GUARD_LERAY_VERTICES, DHL_GUARD_PIERCE_EXACT,
    /// DHL_GUARD_MATROID_GROUND, DHL_GUARD_NERVE_VERTICES.
    static Guards from_env();
};

}  // namespace dhl
