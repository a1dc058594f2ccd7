#pragma once

#include "polymod/fvector.hpp"

#include <functional>
#include <map>
#include <vector>

// Brute-force ground truth: explicit face enumeration for towers, stacked
// complexes and cyclic polytopes (via Gale's evenness condition). Nothing
// here consults the closed formulas it is meant to check.
namespace polymod::oracle {

// Explicit face collection of a polytope. Faces are canonicalized as
// sorted vertex-label sets; a face's dimension is carried explicitly
// because tower polytopes are not simplicial. Vertex labels are
// 0..vertex_count-1.
class FaceFamily {
public:
    FaceFamily(int dim, int vertex_count);

    int dim() const { return dim_; }
    int vertex_count() const { return vertex_count_; }
    size_t size() const { return faces_.size(); }
    const std::map<std::vector<int>, int>& faces() const { return faces_; }

    /// Insert a face (labels are sorted in place). Re-inserting the same
    /// vertex set with the same dimension is a no-op; with a different
    /// dimension it throws InconsistentFamily. Throws ResourceCap past the
    /// enumeration size limit.
    void insert(std::vector<int> vertices, int face_dim);

private:
    int dim_;
    int vertex_count_;
    std::map<std::vector<int>, int> faces_;
};

FaceFamily point_family();
/// All subsets of d+1 labels.
FaceFamily simplex_family(int d);

FaceFamily pyramid_of(const FaceFamily& base);
FaceFamily prism_of(const FaceFamily& base);
FaceFamily bipyramid_of(const FaceFamily& base);

/// Tally faces by dimension tag. Throws InconsistentFamily when the tally
/// is not a valid f-vector.
FVector count_faces(const FaceFamily& family);

// Simplicial facet list: v vertices labelled 1..v, facets are d-element
// vertex sets.
struct FacetList {
    int v = 0;
    int d = 0;
    std::vector<std::vector<int>> facets;
};

// Deterministic stacking rule: picks the index of the facet to stack over.
// The facet list is kept sorted lexicographically, so index-based rules
// are reproducible.
using FacetSelector =
    std::function<size_t(const std::vector<std::vector<int>>&)>;

FacetSelector first_facet_selector();
FacetSelector last_facet_selector();

/// Facets of a stacked d-polytope built from a d-simplex by n stacking
/// steps; each step replaces the selected facet F by the d facets
/// (F \ {w}) | {u} for a fresh vertex u.
FacetList stacked_complex(int d, int n, const FacetSelector& selector);

/// Facets of the cyclic polytope C(v,d) by Gale's evenness condition:
/// a d-subset S of {1..v} is a facet iff every pair i < j outside S has an
/// even number of elements of S strictly between them.
FacetList gale_facets(int v, int d);

/// f-vector from a simplicial facet list: f_j counts the distinct
/// (j+1)-subsets contained in at least one facet, improper counts 1.
FVector faces_from_facets(const FacetList& fl);

} // namespace polymod::oracle
