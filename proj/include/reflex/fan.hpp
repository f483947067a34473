#pragma once

#include <vector>

#include "reflex/arith.hpp"
#include "reflex/geom.hpp"
#include "reflex/tri.hpp"

namespace reflex {

// Cone of a simplicial fan: sorted ray indices.
using Cone = std::vector<size_t>;

// Simplicial fan given by its maximal cones.
struct Fan {
    std::vector<LatticeVec> rays;  // primitive
    std::vector<Cone> max_cones;   // sorted index lists, lex-sorted overall
    bool complete = false;

    size_t dim() const { return rays.empty() ? 0 : rays[0].size(); }
    // Is the index set a face of some maximal cone?
    bool has_face(const Cone& c) const;
    size_t ray_index(const LatticeVec& v) const;  // SIZE_MAX if absent
};

// Exact membership x in cone(sigma) for a simplicial cone.
bool cone_contains(const Fan& f, const Cone& sigma, const LatticeVec& x);

// All k-dimensional cones, k = 0..n, collected from the maximal cones.
std::vector<std::vector<Cone>> cones_by_dimension(const Fan& f);

bool is_smooth(const Fan& f);
// Every wall shared by exactly two maximal cones (no boundary walls).
bool is_complete_check(const Fan& f);

// Star subdivision at a primitive lattice vector in the support: cones not
// containing v survive, cones containing it are split against the minimal
// face holding v. If v is already a ray the fan is returned unchanged.
Fan star_subdivide(const Fan& f, const LatticeVec& v);

// Fan of cones over the proper faces of a reflexive polytope. Rejects
// non-reflexive input and non-simplicial face fans.
Fan coarse_fan(const Polytope& p);

// Cones over the boundary simplices of a triangulation whose maximal cells
// all contain the origin (index 0). Ray i corresponds to point i+1.
Fan fan_from_triangulation(const Triangulation& t);

// Basis of the lattice of affine linear relations among the points; each
// basis vector is normalized to have nonpositive entry at index 0 (or first
// nonzero entry positive when the 0-entry vanishes).
std::vector<Relation> relation_lattice_basis(const std::vector<LatticeVec>& points);

// Minimal non-faces of the ray set, as sorted ray-index sets.
std::vector<std::vector<size_t>> primitive_collections(const Fan& f);

// Lemma-style primitive relation of a collection (given as point indices
// >= 1) against a unimodular triangulation with origin-coned cells.
Relation primitive_relation(const Triangulation& t, const std::vector<size_t>& collection_pts);

// All primitive relations of the fan of t, deduplicated and lex-sorted.
std::vector<Relation> mori_generators(const Fan& f, const Triangulation& t);

// Stanley-Reisner generators: the primitive collections as point-index sets.
std::vector<std::vector<size_t>> sr_generators(const Fan& f);

// Irredundant facet normals of the dual cone (equivalently, of the cone
// spanned by the generators), via double description.
std::vector<std::vector<Int>> cone_dualize(const std::vector<std::vector<Rat>>& generators);

// Mori cone data in coordinates of a basis of the relation lattice L.
struct MoriCone {
    std::vector<LatticeVec> points;           // indexed points, origin first
    std::vector<Relation> generators;         // primitive relations
    std::vector<std::vector<Int>> lbasis;     // rows: basis of L
    std::vector<std::vector<Int>> gen_coords; // generators in lbasis coordinates
    std::vector<std::vector<Int>> facets;     // facet normals in lbasis coordinates
    std::vector<std::vector<Rat>> projection; // coords = projection * ell for ell in L

    bool contains(const Relation& ell) const;
    bool in_relation_lattice(const Relation& ell) const;
    std::optional<std::vector<Int>> coords_of(const Relation& ell) const;
    Relation from_coords(const std::vector<Int>& c) const;
};

MoriCone build_mori_cone(const std::vector<LatticeVec>& points, const Fan& f,
                         const Triangulation& t);

// Integral points of the Mori cone with degree <= bound under the functional
// omega (a rational covector on Z^{p+1} that is integer-valued on L and
// strictly positive on every generator; rejected otherwise). Sorted by degree
// then lexicographically.
std::vector<Relation> mori_points(const MoriCone& mc, const std::vector<Rat>& omega,
                                  const Int& bound);

Int omega_degree(const std::vector<Rat>& omega, const Relation& ell);

}  // namespace reflex
