#include "dhl/complex.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "dhl/detail/bits.hpp"
#include "dhl/detail/combinatorics.hpp"
#include "dhl/errors.hpp"

namespace dhl {

namespace {

bool subset_of(FaceMask a, FaceMask b) {
    return (a & ~b) == 0;
}

std::vector<std::size_t> mask_bits(FaceMask m) {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; m != 0; ++v, m >>= 1) {
        if (m & 1) out.push_back(v);
    }
    return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_maximal_faces(std::vector<FaceMask> faces) {
    std::erase(faces, FaceMask{0});
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<FaceMask> maximal;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < faces.size() && !dominated; ++j) {
            if (i != j && subset_of(faces[i], faces[j])) dominated = true;
        }
        if (!dominated) maximal.push_back(faces[i]);
    }
    SimplicialComplex k;
    k.maximal_ = std::move(maximal);
    return k;
}

FaceMask SimplicialComplex::vertex_support() const {
    FaceMask s = 0;
    for (FaceMask m : maximal_) s |= m;
    return s;
}

std::size_t SimplicialComplex::num_vertices() const {
    return static_cast<std::size_t>(std::popcount(vertex_support()));
}

bool SimplicialComplex::has_face(FaceMask f) const {
    if (f == 0) return false;
    for (FaceMask m : maximal_) {
        if (subset_of(f, m)) return true;
    }
    return false;
}

std::vector<FaceMask> SimplicialComplex::maximal_cofaces(FaceMask f) const {
    std::vector<FaceMask> out;
    for (FaceMask m : maximal_) {
        if (subset_of(f, m)) out.push_back(m);
    }
    return out;
}

std::size_t SimplicialComplex::max_face_size() const {
    std::size_t best = 0;
    for (FaceMask m : maximal_) {
        best = std::max<std::size_t>(best, std::popcount(m));
    }
    return best;
}

SimplicialComplex SimplicialComplex::induced(FaceMask vertices) const {
    std::vector<FaceMask> faces;
    for (FaceMask m : maximal_) faces.push_back(m & vertices);
    return from_maximal_faces(std::move(faces));
}

SimplicialComplex remove_cofaces(const SimplicialComplex& k, FaceMask sigma) {
    std::vector<FaceMask> faces;
    for (FaceMask m : k.maximal_faces()) {
        if (!subset_of(sigma, m)) {
            faces.push_back(m);
            continue;
        }
        for (std::size_t v : mask_bits(sigma)) {
            faces.push_back(m & ~(FaceMask{1} << v));
        }
    }
    return SimplicialComplex::from_maximal_faces(std::move(faces));
}

DiscreteNerve discrete_nerve(std::span<const AxisBox> boxes, const PointSet& s,
                             const Guards& guards) {
    if (boxes.size() > guards.nerve_vertex_max || boxes.size() > 64) {
        throw GuardExceeded("discrete_nerve: too many boxes for the vertex guard");
    }
    // T_s over box indices, for each distinct point of S.
    std::vector<FaceMask> supports;
    for (const RationalPoint& p : s.distinct()) {
        FaceMask t = 0;
        for (std::size_t k = 0; k < boxes.size(); ++k) {
            if (boxes[k].contains(p)) t |= FaceMask{1} << k;
        }
        if (t != 0) supports.push_back(t);
    }
    SimplicialComplex over_boxes = SimplicialComplex::from_maximal_faces(std::move(supports));

    DiscreteNerve nerve;
    nerve.vertex_boxes = mask_bits(over_boxes.vertex_support());
    std::vector<std::size_t> box_to_vertex(boxes.size(), 0);
    for (std::size_t v = 0; v < nerve.vertex_boxes.size(); ++v) {
        box_to_vertex[nerve.vertex_boxes[v]] = v;
    }
    std::vector<FaceMask> faces;
    for (FaceMask m : over_boxes.maximal_faces()) {
        FaceMask f = 0;
        for (std::size_t b : mask_bits(m)) f |= FaceMask{1} << box_to_vertex[b];
        faces.push_back(f);
    }
    nerve.complex = SimplicialComplex::from_maximal_faces(std::move(faces));
    return nerve;
}

namespace {

struct CollapseState {
    std::span<const AxisBox> boxes;
    std::vector<std::size_t> vertex_boxes;
    std::size_t dim = 0;
    std::size_t m = 0;

    // Remaining points of S, lexicographic ascending, and per-vertex masks of
    // the remaining points contained in that vertex's box.
    std::vector<RationalPoint> remaining;
    std::vector<detail::PointBits> vertex_point_bits;

    void rebuild_point_bits() {
        vertex_point_bits.assign(vertex_boxes.size(), detail::PointBits(remaining.size()));
        for (std::size_t v = 0; v < vertex_boxes.size(); ++v) {
            for (std::size_t i = 0; i < remaining.size(); ++i) {
                if (boxes[vertex_boxes[v]].contains(remaining[i])) vertex_point_bits[v].set(i);
            }
        }
    }

    detail::PointBits face_points(FaceMask face) const {
        detail::PointBits bits(remaining.size());
        bits.set();
        for (std::size_t v : mask_bits(face)) bits &= vertex_point_bits[v];
        return bits;
    }

    FaceMask boxes_containing(const RationalPoint& p) const {
        FaceMask f = 0;
        for (std::size_t v = 0; v < vertex_boxes.size(); ++v) {
            if (boxes[vertex_boxes[v]].contains(p)) f |= FaceMask{1} << v;
        }
        return f;
    }

    /// Achiever face of the intersection of eta's boxes: binding left
    /// endpoints on every axis, binding right endpoints on all axes but the
    /// first; lowest vertex id on ties.  At most 2d-1 vertices.
    FaceMask achiever_face(FaceMask eta) const {
        const std::vector<std::size_t> verts = mask_bits(eta);
        std::vector<const AxisBox*> members;
        for (std::size_t v : verts) members.push_back(&boxes[vertex_boxes[v]]);
        FaceMask sigma = 0;
        for (std::size_t axis = 0; axis < dim; ++axis) {
            std::size_t left = 0;
            for (std::size_t j = 1; j < members.size(); ++j) {
                if (members[j]->axis(axis).lo > members[left]->axis(axis).lo) left = j;
            }
            sigma |= FaceMask{1} << verts[left];
            if (axis == 0) continue;
            std::size_t right = 0;
            for (std::size_t j = 1; j < members.size(); ++j) {
                if (members[j]->axis(axis).hi < members[right]->axis(axis).hi) right = j;
            }
            sigma |= FaceMask{1} << verts[right];
        }
        return sigma;
    }
};

}  // namespace

std::vector<CollapseStep> collapse_sequence(std::span<const AxisBox> boxes, const PointSet& s,
                                            const Guards& guards) {
    DiscreteNerve nerve = discrete_nerve(boxes, s, guards);
    SimplicialComplex complex = nerve.complex;

    CollapseState st;
    st.boxes = boxes;
    st.vertex_boxes = nerve.vertex_boxes;
    st.dim = boxes.empty() ? std::max<std::size_t>(s.dim(), 1) : boxes.front().dim();
    st.m = 2 * st.dim - 1;
    st.remaining = s.distinct();

    std::vector<CollapseStep> steps;

    auto residual_matches_nerve = [&]() {
        DiscreteNerve expect = discrete_nerve(boxes, PointSet(st.remaining), guards);
        std::vector<FaceMask> got;
        for (FaceMask f : complex.maximal_faces()) {
            FaceMask bm = 0;
            for (std::size_t v : mask_bits(f)) bm |= FaceMask{1} << st.vertex_boxes[v];
            got.push_back(bm);
        }
        std::vector<FaceMask> want;
        for (FaceMask f : expect.complex.maximal_faces()) {
            FaceMask bm = 0;
            for (std::size_t v : mask_bits(f)) bm |= FaceMask{1} << expect.vertex_boxes[v];
            want.push_back(bm);
        }
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        return got == want;
    };

    while (!complex.is_empty()) {
        st.rebuild_point_bits();

        // A point is redundant when it is never the unique remaining point in
        // the intersection of the boxes around it; dropping it leaves the
        // complex unchanged.  Deletions can unlock further deletions.
        bool deleted = true;
        while (deleted) {
            deleted = false;
            for (std::size_t i = 0; i < st.remaining.size(); ++i) {
                const FaceMask t = st.boxes_containing(st.remaining[i]);
                bool unique = false;
                if (t != 0) {
                    detail::PointBits bits = st.face_points(t);
                    unique = bits.count() == 1 && bits.test(i);
                }
                if (!unique) {
                    st.remaining.erase(st.remaining.begin() + static_cast<std::ptrdiff_t>(i));
                    st.rebuild_point_bits();
                    deleted = true;
                    break;
                }
            }
        }
        if (st.remaining.empty()) {
            if (!complex.is_empty()) {
                throw TheoremViolation("complex nonempty with no points left");
            }
            break;
        }

        const std::size_t s0 = st.remaining.size() - 1;  // lexicographic maximum

        // Collapse away every remaining face whose point set is exactly {s0}.
        while (true) {
            std::vector<FaceMask> candidates;  // maximal faces carrying only s0
            for (FaceMask f : complex.maximal_faces()) {
                detail::PointBits bits = st.face_points(f);
                if (bits.count() == 1 && bits.test(s0)) candidates.push_back(f);
            }
            if (candidates.empty()) break;

            bool emitted = false;
            for (FaceMask eta : candidates) {
                auto admissible = [&](FaceMask sigma) {
                    if (sigma == 0 || static_cast<std::size_t>(std::popcount(sigma)) > st.m) {
                        return false;
                    }
                    detail::PointBits bits = st.face_points(sigma);
                    if (bits.count() != 1 || !bits.test(s0)) return false;
                    const auto cofaces = complex.maximal_cofaces(sigma);
                    return cofaces.size() == 1 && cofaces.front() == eta;
                };

                FaceMask sigma = st.achiever_face(eta);
                if (!admissible(sigma)) {
                    sigma = 0;
                    const std::vector<std::size_t> verts = mask_bits(eta);
                    const std::size_t cap = std::min(st.m, verts.size());
                    for (std::size_t size = 1; size <= cap && sigma == 0; ++size) {
                        detail::for_each_combination(
                            verts.size(), size, [&](const std::vector<std::size_t>& pick) {
                                FaceMask f = 0;
                                for (std::size_t j : pick) f |= FaceMask{1} << verts[j];
                                if (admissible(f)) {
                                    sigma = f;
                                    return false;
                                }
                                return true;
                            });
                    }
                }
                if (sigma != 0) {
                    steps.push_back(CollapseStep{sigma, eta, st.m});
                    complex = remove_cofaces(complex, sigma);
                    emitted = true;
                    break;
                }
            }
            if (!emitted) {
                throw TheoremViolation("no admissible collapse face of size <= 2d-1");
            }
        }

        st.remaining.pop_back();
        if (!residual_matches_nerve()) {
            throw TheoremViolation("residual complex differs from the recomputed nerve");
        }
    }
    return steps;
}

std::optional<std::size_t> verify_collapse_sequence(const SimplicialComplex& k,
                                                    std::span<const CollapseStep> steps,
                                                    std::size_t m) {
    SimplicialComplex complex = k;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const CollapseStep& step = steps[i];
        if (step.sigma == 0 || !subset_of(step.sigma, step.eta)) return i;
        if (static_cast<std::size_t>(std::popcount(step.sigma)) > m) return i;
        const auto cofaces = complex.maximal_cofaces(step.sigma);
        if (cofaces.size() != 1 || cofaces.front() != step.eta) return i;
        complex = remove_cofaces(complex, step.sigma);
    }
    if (!complex.is_empty()) return steps.size();
    return std::nullopt;
}

}  // namespace dhl
