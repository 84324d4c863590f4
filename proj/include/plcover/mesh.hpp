#ifndef PLCOVER_MESH_HPP
#define PLCOVER_MESH_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "plcover/rational.hpp"

namespace plcover::mesh {

using VId = int;
using FId = int;

struct EdgeKey {
    VId a, b; // a < b
    EdgeKey(VId u, VId v) : a(u < v ? u : v), b(u < v ? v : u) {}
    bool operator<(const EdgeKey& o) const { return a < o.a || (a == o.a && b < o.b); }
    bool operator==(const EdgeKey& o) const { return a == o.a && b == o.b; }
};

struct ValidationReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Oriented simplicial 2-sphere with marked vertices. Faces are ccw vertex
/// triples; edges are derived. Vertex ids are stable across subdivision
/// (tombstoned on contraction).
class Triangulation {
public:
    struct Vertex {
        bool alive = false;
        bool marked = false;
        bool has_coord = false;
        Rat x, y; // optional chart coordinates, interchange only
    };
    struct Face {
        std::array<VId, 3> v{-1, -1, -1};
        bool alive = false;
    };

    Triangulation() = default;
    static Triangulation from_faces(int nvertices, const std::vector<std::array<VId, 3>>& faces,
                                    const std::vector<VId>& marked);

    int vertex_capacity() const { return static_cast<int>(verts_.size()); }
    int face_capacity() const { return static_cast<int>(faces_.size()); }
    bool vertex_alive(VId v) const { return v >= 0 && v < vertex_capacity() && verts_[v].alive; }
    bool face_alive(FId f) const { return f >= 0 && f < face_capacity() && faces_[f].alive; }
    bool marked(VId v) const { return verts_[v].marked; }
    void set_marked(VId v, bool m) { verts_[v].marked = m; }
    const Vertex& vertex(VId v) const { return verts_[v]; }
    Vertex& vertex(VId v) { return verts_[v]; }
    const std::array<VId, 3>& face(FId f) const { return faces_[f].v; }

    VId add_vertex(bool marked = false);
    FId add_face(VId a, VId b, VId c);
    void kill_face(FId f);
    void kill_vertex(VId v);

    long num_vertices() const;
    long num_edges() const;
    long num_faces() const;
    std::vector<VId> marked_vertices() const; // sorted
    std::vector<VId> alive_vertices() const;
    std::vector<FId> alive_faces() const;
    std::vector<EdgeKey> edges() const;

    /// V - E + F.
    long euler_characteristic() const;

    bool has_edge(VId u, VId v) const;

    /// Face to the left of directed edge u->v (the face whose ccw boundary
    /// contains u immediately followed by v); -1 if absent.
    FId left_face(VId u, VId v) const;

    /// In the face left of u->v, the vertex after v (so (u,v,w) is that face).
    VId third_vertex(VId u, VId v) const;

    /// Next neighbor counterclockwise around v after u: with F = left_face(v,u),
    /// returns the third vertex of F. Iterating walks the link of v ccw.
    VId next_around(VId v, VId u) const;

    /// Full ccw link cycle of v starting from an arbitrary neighbor.
    std::vector<VId> link_cycle(VId v) const;

    int vertex_degree(VId v) const;

    ValidationReport validate() const;

    void rebuild_topology() const; // builds caches; called lazily
    void touch() { topo_valid_ = false; }

private:
    std::vector<Vertex> verts_;
    std::vector<Face> faces_;

    mutable bool topo_valid_ = false;
    mutable std::map<std::pair<VId, VId>, FId> dir_face_; // directed edge -> face on its left
    mutable std::map<std::pair<VId, VId>, VId> next_ccw_; // (v, u) -> next neighbor ccw around v
    void ensure_topology() const;
};

/// Conservative refinement of a triangulation: points inserted on edges and
/// face interiors, each old face retiled. Old vertex ids persist.
struct Subdivision {
    // key: edge with a < b; values are new vertex ids ordered from a to b
    std::map<EdgeKey, std::vector<VId>> edge_points;
    struct FacePatch {
        std::vector<VId> interior;
        std::vector<std::array<VId, 3>> tiles; // cover of the old face, ccw
    };
    // key: face id in the base triangulation
    std::map<FId, FacePatch> patches;
    int base_vertex_capacity = 0;
    int result_vertex_capacity = 0;

    /// Walk a path of the base complex into the refined complex.
    std::vector<VId> carry_path(const std::vector<VId>& path, bool closed) const;
};

/// Result triangulation plus the subdivision describing it.
struct Refined {
    Triangulation tri;
    Subdivision sub;
};

Refined barycentric(const Triangulation& t);
Refined split_edge(const Triangulation& t, VId u, VId v);
/// Split a set of edges, k points each (uniform), in one conforming step.
Refined split_edges(const Triangulation& t, const std::vector<std::pair<EdgeKey, int>>& how);

/// Complementary region of a curve family (or any edge subset forming
/// disjointly embedded cycles / a graph) in the 1-skeleton.
struct Region {
    std::vector<FId> faces;
    std::set<int> boundary_curves; // indices into the input curve list
    long euler_char = 0;           // V_int - E_int + F of the open region
    int puncture_count = 0;        // marked vertices interior to the region
    std::vector<VId> interior_marks;
};

/// Curves must be pairwise disjoint embedded cycles avoiding marked vertices.
/// Throws std::invalid_argument otherwise.
std::vector<Region> complementary_regions(const Triangulation& t,
                                          const std::vector<std::vector<VId>>& curves);

/// Low-level variant: decompose the complement of an arbitrary edge set;
/// no embeddedness requirements (used by the bigon machinery).
std::vector<Region> regions_of_edge_set(const Triangulation& t, const std::set<EdgeKey>& cut,
                                        const std::vector<std::vector<VId>>& curve_index);

/// Shortest path from any vertex of `from` to any vertex of `to` through the
/// 1-skeleton, avoiding `forbidden` vertices (endpoints must not be forbidden).
std::optional<std::vector<VId>> bfs_path(const Triangulation& t, const std::vector<VId>& from,
                                         const std::vector<VId>& to, const std::set<VId>& forbidden);

/// Protected in-place simplification: contracts edges while preserving the
/// listed vertex paths/cycles (updated in place), marked vertices, and the
/// sphere topology. Used to keep iterated refinements from blowing up.
struct Protected {
    std::vector<std::vector<VId>*> cycles;
    std::vector<std::vector<VId>*> paths;
};
void compact(Triangulation& t, Protected& prot);

} // namespace plcover::mesh

#endif
