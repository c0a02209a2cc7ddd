#pragma once

#include <cstddef>
#include <vector>

#include "dhl/complex.hpp"
#include "dhl/guards.hpp"

namespace dhl {

/// Reduced Betti numbers over Q, index = dimension, for dimensions
/// 0..dim(K).  Empty complex -> empty vector.  Exact: boundary-matrix ranks
/// by fraction-free elimination.
std::vector<std::size_t> homology_ranks(const SimplicialComplex& k, const Guards& guards = {});

/// True iff every induced subcomplex of k has vanishing reduced rational
/// homology in all dimensions >= m.  Exhaustive over vertex subsets; guarded
/// by guards.leray_vertex_max.
bool is_m_leray(const SimplicialComplex& k, std::size_t m, const Guards& guards = {});

}  // namespace dhl
