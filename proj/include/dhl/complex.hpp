#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dhl/geometry.hpp"
#include "dhl/guards.hpp"

namespace dhl {

/// A face as a bitmask over vertex ids (hard cap of 64 vertices).  Faces are
/// nonempty vertex sets; the empty complex has no faces at all.
using FaceMask = std::uint64_t;

/// A finite simplicial complex stored by its inclusion-maximal faces; every
/// other face is an implicit subset of one of them.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    /// Drops empty masks, duplicates, and dominated faces.
    static SimplicialComplex from_maximal_faces(std::vector<FaceMask> faces);

    bool is_empty() const { return maximal_.empty(); }
    /// Sorted ascending as integers.
    const std::vector<FaceMask>& maximal_faces() const { return maximal_; }
    /// Union of all maximal faces.
    FaceMask vertex_support() const;
    std::size_t num_vertices() const;

    bool has_face(FaceMask f) const;
    std::vector<FaceMask> maximal_cofaces(FaceMask f) const;

    /// Largest face cardinality (0 for the empty complex); dimension is this
    /// minus one.
    std::size_t max_face_size() const;

    /// Subcomplex induced on a vertex subset.
    SimplicialComplex induced(FaceMask vertices) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::vector<FaceMask> maximal_;
};

/// Removes sigma and every face containing it.
SimplicialComplex remove_cofaces(const SimplicialComplex& k, FaceMask sigma);

/// One recorded collapse: sigma has at most m vertices and, when the step is
/// applied, eta is the unique inclusion-maximal face containing sigma.
struct CollapseStep {
    FaceMask sigma = 0;
    FaceMask eta = 0;
    std::size_t m = 0;
    friend bool operator==(const CollapseStep&, const CollapseStep&) = default;
};

/// K(B,S) together with the vertex -> box-index labelling (vertices exist
/// only for boxes that contain a point of S).
struct DiscreteNerve {
    SimplicialComplex complex;
    std::vector<std::size_t> vertex_boxes;
};

/// Vertices: boxes meeting S.  Maximal faces: the inclusion-maximal sets
/// T_s = {boxes containing s}, s in S.
DiscreteNerve discrete_nerve(std::span<const AxisBox> boxes, const PointSet& s,
                             const Guards& guards = {});

/// A (2d-1)-collapse sequence taking K(B,S) to the empty complex, produced by
/// processing points of S from the lexicographic maximum down.  Steps are in
/// nerve vertex ids.  Throws TheoremViolation if no admissible collapse face
/// exists or a residual complex fails to match the recomputed nerve.
std::vector<CollapseStep> collapse_sequence(std::span<const AxisBox> boxes, const PointSet& s,
                                            const Guards& guards = {});

/// Replays the steps against k.  Returns nullopt when every step is a valid
/// m-collapse and the final complex is empty; otherwise the index of the
/// first invalid step (steps.size() means the sequence stopped short of the
/// empty complex).
std::optional<std::size_t> verify_collapse_sequence(const SimplicialComplex& k,
                                                    std::span<const CollapseStep> steps,
                                                    std::size_t m);

}  // namespace dhl
