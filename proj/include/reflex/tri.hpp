#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "reflex/arith.hpp"
#include "reflex/geom.hpp"

namespace reflex {

// Simplex as sorted indices into a shared point list.
using Simplex = std::vector<size_t>;

// Lattice-point-vertex triangulation of a full-dimensional polytope. For the
// reflexive pipelines point index 0 is the origin and every maximal simplex
// contains it.
struct Triangulation {
    std::vector<LatticeVec> points;
    std::vector<Simplex> maximal;

    size_t dim() const { return points.empty() ? 0 : points[0].size(); }
    bool origin_first() const {
        return !points.empty() && is_zero(points[0]);
    }
    bool origin_in_every_maximal() const;
};

// Structural soundness: maximal simplices are full-dimensional, their
// normalized volumes sum to the volume of the hull, and every interior wall
// is shared by exactly two of them. Throws with a description on failure.
void validate_triangulation(const Triangulation& t);

// True iff every maximal simplex has normalized volume 1.
bool is_unimodular(const Triangulation& t);

struct CoherenceResult {
    bool coherent = false;
    std::vector<Rat> heights;  // witness when coherent
};

// Decides whether some height vector realizes t as a lower-envelope
// triangulation: exact LP on the strict convexity (folding) inequality of
// every interior wall, plus strict-above constraints for unused points.
CoherenceResult coherence_certificate(const Triangulation& t);
bool is_coherent(const Triangulation& t);

// Checks a given height vector against the same fold/above inequalities
// (strictness required); cheap certificate verification.
bool heights_certify_coherence(const Triangulation& t, const std::vector<Rat>& heights);

// Vertex labeling convention used when a face is identified with a standard
// simplex during the iterated subdivision; Reversed yields a genuinely
// different triangulation with the same invariants.
enum class FaceLabeling { Lex, Reversed };

// Records the join pieces produced by the per-face subdivision stages, for
// the volume-product property checks.
struct SubdivisionLog {
    struct Join {
        std::vector<LatticeVec> a, b;
    };
    std::vector<Join> joins;
};

// Triangulation of the reflexive simplex of projective n-space using all its
// lattice points, built by iterated star subdivisions face by face
// (codimension 1 first), coned over the origin. Unimodular and coherent.
Triangulation appendix_triangulation(unsigned n, FaceLabeling labeling = FaceLabeling::Lex,
                                     SubdivisionLog* log = nullptr);

// The classical 6-point plane configuration whose pinwheel triangulation is
// not regular; returned with the pinwheel cells.
Triangulation pinwheel_triangulation();

}  // namespace reflex
