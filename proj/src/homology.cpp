#include "dhl/homology.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

#include "dhl/detail/linalg.hpp"
#include "dhl/errors.hpp"

namespace dhl {

namespace {

/// All faces, grouped by cardinality (index = cardinality, entry sorted).
std::vector<std::vector<FaceMask>> enumerate_faces(const SimplicialComplex& k,
                                                   const Guards& guards) {
    std::unordered_set<FaceMask> seen;
    for (FaceMask top : k.maximal_faces()) {
        for (FaceMask sub = top;; sub = (sub - 1) & top) {
            if (sub != 0) seen.insert(sub);
            if (seen.size() > guards.face_enum_max) {
                throw GuardExceeded("homology: face count exceeds guard");
            }
            if (sub == 0) break;
        }
    }
    std::vector<std::vector<FaceMask>> by_card(k.max_face_size() + 1);
    for (FaceMask f : seen) by_card[std::popcount(f)].push_back(f);
    for (auto& v : by_card) std::sort(v.begin(), v.end());
    return by_card;
}

/// Rank of the boundary map from cardinality-c faces to cardinality-(c-1)
/// faces (c >= 2); entries are the usual alternating signs.
std::size_t boundary_rank(const std::vector<FaceMask>& rows_faces,
                          const std::vector<FaceMask>& cols_faces) {
    if (rows_faces.empty() || cols_faces.empty()) return 0;
    std::unordered_map<FaceMask, std::size_t> row_of;
    for (std::size_t i = 0; i < rows_faces.size(); ++i) row_of[rows_faces[i]] = i;

    std::vector<std::vector<BigInt>> m(rows_faces.size(),
                                       std::vector<BigInt>(cols_faces.size(), 0));
    for (std::size_t col = 0; col < cols_faces.size(); ++col) {
        FaceMask f = cols_faces[col];
        int sign = 1;
        for (FaceMask bits = f; bits != 0;) {
            const FaceMask low = bits & (~bits + 1);
            m[row_of.at(f & ~low)][col] = sign;
            sign = -sign;
            bits &= bits - 1;
        }
    }
    return detail::integer_rank(std::move(m));
}

/// Reduced Betti numbers for dimensions >= from_dim only (others left 0).
std::vector<std::size_t> reduced_betti(const std::vector<std::vector<FaceMask>>& by_card,
                                       std::size_t from_dim) {
    const std::size_t max_card = by_card.size() - 1;
    std::vector<std::size_t> betti(max_card, 0);
    if (max_card == 0) return betti;

    // rank_bd[c] = rank of the boundary map out of cardinality-c chains; the
    // cardinality-1 boundary is the augmentation onto the empty simplex.
    std::vector<std::size_t> rank_bd(max_card + 2, 0);
    const std::size_t from_card = from_dim + 1;
    for (std::size_t c = std::max<std::size_t>(from_card, 1); c <= max_card; ++c) {
        if (c == 1) {
            rank_bd[1] = by_card[1].empty() ? 0 : 1;
        } else {
            rank_bd[c] = boundary_rank(by_card[c - 1], by_card[c]);
        }
    }
    for (std::size_t c = from_card; c <= max_card; ++c) {
        const std::size_t f = by_card[c].size();
        betti[c - 1] = f - rank_bd[c] - rank_bd[c + 1];
    }
    return betti;
}

}  // namespace

std::vector<std::size_t> homology_ranks(const SimplicialComplex& k, const Guards& guards) {
    if (k.is_empty()) return {};
    return reduced_betti(enumerate_faces(k, guards), 0);
}

bool is_m_leray(const SimplicialComplex& k, std::size_t m, const Guards& guards) {
    if (k.is_empty()) return true;
    const FaceMask support = k.vertex_support();
    if (k.num_vertices() > guards.leray_vertex_max) {
        throw GuardExceeded("is_m_leray: vertex count exceeds guard");
    }
    for (FaceMask w = support;; w = (w - 1) & support) {
        if (w != 0) {
            const SimplicialComplex sub = k.induced(w);
            if (!sub.is_empty() && sub.max_face_size() >= m + 1) {
                // A vertex shared by all maximal faces makes the subcomplex a
                // cone, hence acyclic; skip the rank computation.
                FaceMask apex = ~FaceMask{0};
                for (FaceMask f : sub.maximal_faces()) apex &= f;
                if (apex == 0) {
                    const auto betti = reduced_betti(enumerate_faces(sub, guards), m);
                    for (std::size_t dim = m; dim < betti.size(); ++dim) {
                        if (betti[dim] != 0) return false;
                    }
                }
            }
        }
        if (w == 0) break;
    }
    return true;
}

}  // namespace dhl
