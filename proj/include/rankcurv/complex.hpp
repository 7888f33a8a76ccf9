#pragma once

#include "rankcurv/poset.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rankcurv {

/// A simplicial complex of dimension at most 2, closed under taking faces.
class SimplicialComplex2 {
public:
    /// Each input simplex is a set of 1 to 3 vertex labels; all faces are added.
    /// Throws InvalidComplex on empty, oversized or vertex-repeating simplices.
    static SimplicialComplex2 from_simplices(const std::vector<std::vector<std::string>>& simplices);

    /// Sorted vertex labels per simplex, ordered by dimension then lexicographically.
    const std::vector<std::vector<std::string>>& simplices() const { return simplices_; }

private:
    std::vector<std::vector<std::string>> simplices_;
};

/// Elements are named by their sorted vertex labels joined with ','.
RankedPoset face_poset_of_simplicial(const SimplicialComplex2& k);

/// A polyhedral map on a closed surface, given by faces as cyclic vertex lists.
///
/// Validation (InvalidMap, with the failed condition in the message):
///   - every face has at least 3 vertices and none repeated
///   - every edge lies in exactly two faces
///   - every vertex has degree at least 3 and its link is a single cycle
///   - two faces meet in nothing, a single vertex, or a single edge
///   - the map is connected
class PolyMap {
public:
    using Edge = std::pair<std::size_t, std::size_t>;  // vertex indices, first < second

    PolyMap() = default;
    explicit PolyMap(const std::vector<std::vector<std::string>>& faces);

    /// Vertex names in first-appearance order.
    const std::vector<std::string>& vertices() const { return vertex_names_; }
    /// Faces as cyclic sequences of vertex indices.
    const std::vector<std::vector<std::size_t>>& faces() const { return faces_; }
    /// Edges in first-appearance order.
    const std::vector<Edge>& edges() const { return edges_; }

    std::vector<std::vector<std::string>> face_names() const;

    /// The two faces on an edge.
    const std::pair<std::size_t, std::size_t>& edge_faces(std::size_t edge) const { return edge_faces_[edge]; }
    std::size_t edge_index(std::size_t u, std::size_t v) const;
    std::size_t degree(std::size_t vertex) const { return degree_[vertex]; }

    std::int64_t euler_characteristic() const
    {
        return static_cast<std::int64_t>(vertex_names_.size()) - static_cast<std::int64_t>(edges_.size()) +
               static_cast<std::int64_t>(faces_.size());
    }
    std::vector<std::size_t> f_vector() const { return {vertex_names_.size(), edges_.size(), faces_.size()}; }

private:
    std::vector<std::string> vertex_names_;
    std::vector<std::vector<std::size_t>> faces_;
    std::vector<Edge> edges_;
    std::vector<std::pair<std::size_t, std::size_t>> edge_faces_;
    std::vector<std::size_t> degree_;
    std::map<Edge, std::size_t> edge_lookup_;
};

/// Element names in map face posets.
std::string map_vertex_id(const PolyMap& m, std::size_t v);
std::string map_edge_id(const PolyMap& m, std::size_t e);
std::string map_face_id(std::size_t f);

/// Ranks 0/1/2 are vertices/edges/faces, named "v:<name>", "e:<u>|<w>", "f:<index>".
RankedPoset face_poset_of_map(const PolyMap& m);

/// Dual vertex i is named "f<i>" after face i of m; dual face j is the star of vertex j.
PolyMap dual_map(const PolyMap& m);

/// The same map with faces reversed as needed so that every edge is traversed in
/// opposite directions by its two faces; nullopt when the surface is non-orientable.
std::optional<PolyMap> coherently_oriented(const PolyMap& m);

/// Combinatorial isomorphism of connected maps, by matching flag orbits.
bool isomorphic(const PolyMap& a, const PolyMap& b);

// Standard surfaces.
PolyMap tetrahedron();
PolyMap cube();
PolyMap octahedron();
PolyMap icosahedron();
/// m x n quadrilateral torus; throws ParameterOutOfRange unless m, n >= 3.
PolyMap torus_grid(int m, int n);
/// m x n torus with each square split along a diagonal; m, n >= 3.
PolyMap torus_triangulated(int m, int n);
/// The 6-vertex triangulation of the projective plane (non-orientable).
PolyMap projective_plane6();
/// Klein's {3,7} triangulation of the genus-3 surface, built from PSL(2,7).
PolyMap klein_triangulation();

/// A finite piece of an infinite periodic poset. Curvature is meaningful only on
/// `interior`, the elements at Hasse distance >= 2 from any truncated element.
struct Window {
    RankedPoset poset;
    std::vector<ElementIndex> interior;
    ElementIndex vertex = 0;  // designated elements
    ElementIndex edge = 0;
    ElementIndex face = 0;

    bool is_interior(ElementIndex i) const;
};

RankedPoset fixture_fig_counterexample();
/// k >= 3 repetitions of the periodic unit; throws ParameterOutOfRange.
Window fixture_fig_infinite_window(int k);
PolyMap fixture_klein_dual();
RankedPoset fixture_noncw_almost_polyhedral();
RankedPoset fixture_cw_not_almost_polyhedral();

struct RandomPosetParams {
    int n0 = 4;
    int n1 = 6;
    int n2 = 3;
    double lower_density = 0.4;  // P(rank-1 element covers a given rank-0 element)
    double upper_density = 0.4;  // P(rank-2 element covers a given rank-1 element)
};

/// A ranked poset of rank exactly 2, deterministic per seed.
RankedPoset random_ranked_poset(std::uint64_t seed, const RandomPosetParams& params);

enum class SeedSurface { Sphere, Torus };

struct RandomMapParams {
    SeedSurface surface = SeedSurface::Sphere;
    int insertions = 6;
    int flips = 20;
    int merges = 3;
};

/// Random polyhedral map from flips, vertex insertions and face merges applied to
/// an oriented seed triangulation. Deterministic per seed.
PolyMap random_map(std::uint64_t seed, const RandomMapParams& params);

} // namespace rankcurv
