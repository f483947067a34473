#pragma once

#include <optional>
#include <set>
#include <vector>

#include "reflex/arith.hpp"
#include "reflex/poset.hpp"

namespace reflex {

// Facet inequality <normal, x> + offset >= 0, with (normal, offset) jointly
// primitive integral.
struct Facet {
    LatticeVec normal;
    Int offset;
};

// Full-dimensional lattice polytope, stored by its extreme points together
// with an irredundant facet description derived on construction.
class Polytope {
  public:
    // Throws on degenerate (lower-dimensional) input.
    explicit Polytope(std::vector<LatticeVec> points);

    size_t dim() const { return dim_; }
    const std::vector<LatticeVec>& vertices() const { return verts_; }
    const std::vector<Facet>& facets() const { return facets_; }

    bool contains(const LatticeVec& x) const;
    bool on_facet(size_t f, const LatticeVec& x) const;
    bool strictly_contains_origin() const;

    Polytope dilate(const Int& k) const;

    friend bool operator==(const Polytope& a, const Polytope& b) {
        return a.verts_ == b.verts_;
    }

  private:
    Polytope() = default;
    size_t dim_ = 0;
    std::vector<LatticeVec> verts_;   // lex-sorted
    std::vector<Facet> facets_;       // lex-sorted by (normal, offset)
};

// Face lattice of a polytope, with the empty set at rank 0 and the polytope
// itself at rank n+1 (rank = face dimension + 1).
class FacePoset {
  public:
    struct Face {
        std::vector<size_t> vertex_idx;  // indices into polytope vertices, sorted
        int dim = -1;                    // -1 for the empty face
        std::vector<size_t> active_facets;
    };

    explicit FacePoset(Polytope p);

    const Polytope& polytope() const { return poly_; }
    const std::vector<Face>& faces() const { return faces_; }
    size_t size() const { return faces_.size(); }
    int rank(size_t a) const { return faces_[a].dim + 1; }
    bool leq(size_t a, size_t b) const { return leq_[a][b]; }
    size_t bottom() const { return bottom_; }
    size_t top() const { return top_; }

    // Structural view as an abstract poset (same element indices).
    const EulerianPoset& poset() const { return poset_; }

    // Lattice points of the polytope lying on face a, as indices into pts.
    std::vector<size_t> face_point_indices(size_t a, const std::vector<LatticeVec>& pts) const;

    // The face as a full-dimensional polytope in coordinates for its own
    // affine lattice (the saturated lattice of its affine hull). Requires
    // dim >= 1.
    Polytope face_polytope(size_t a) const;

    // Vertex coordinates of face a.
    std::vector<LatticeVec> face_vertices(size_t a) const;

    bool point_on_face(size_t a, const LatticeVec& x) const;

  private:
    Polytope poly_;
    std::vector<Face> faces_;
    std::vector<std::vector<bool>> leq_;
    size_t bottom_ = 0, top_ = 0;
    EulerianPoset poset_;
};

// The reflexive simplex with vertices (n,-1,...,-1), ..., (-1,...,-1,n),
// (-1,...,-1); its normal fan is the fan of projective n-space.
Polytope pn_polytope(unsigned n);

// All lattice points, sorted lexicographically.
std::vector<LatticeVec> lattice_points(const Polytope& p);

// Number of lattice points; no materialization. The OpenMP version shards the
// outermost coordinate; the serial version is the reference.
Int count_lattice_points(const Polytope& p);
Int count_lattice_points_serial(const Polytope& p);

// Canonical point order used for all relation/divisor indexing: origin first,
// then the remaining lattice points in lex order. Requires 0 in p.
std::vector<LatticeVec> indexed_points(const Polytope& p);

bool is_reflexive(const Polytope& p);

// Vertices of the dual are the primitive facet normals; requires reflexive.
Polytope dual_polytope(const Polytope& p);

FacePoset face_poset(const Polytope& p);

// n! times Euclidean volume, exact.
Int normalized_volume(const Polytope& p);

// Normalized volume of a full-dimensional lattice simplex given by dim+1
// points; 0 on degenerate input.
Int normalized_volume_simplex(const std::vector<LatticeVec>& pts);

// Normalized volume of a lattice simplex measured in the saturated lattice of
// its own affine hull (e.g. a segment of lattice length m has volume m).
Int normalized_volume_in_own_lattice(const std::vector<LatticeVec>& pts);

// Basis of the saturated lattice spanned by the given integer vectors.
std::vector<LatticeVec> saturated_lattice_basis(const std::vector<LatticeVec>& span);

// Coordinates of x in the given lattice basis; throws if x is outside the
// spanned lattice.
LatticeVec lattice_coordinates(const std::vector<LatticeVec>& basis, const LatticeVec& x);

}  // namespace reflex
