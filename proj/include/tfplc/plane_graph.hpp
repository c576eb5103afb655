#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "tfplc/error.hpp"

namespace tfplc {

using VertexId = int;

// A directed edge of the embedding.
struct Dart {
    VertexId from = 0;
    VertexId to = 0;

    bool operator==(const Dart& o) const { return from == o.from && to == o.to; }
    bool operator<(const Dart& o) const {
        return from != o.from ? from < o.from : to < o.to;
    }
};

// Immutable plane graph: per-vertex clockwise rotations plus a designated
// outer face. Faces are traced from the rotation system at construction.
// Disconnected graphs keep one outer face per component; the designated
// ("primary") outer face is the one naming B(G).
class PlaneGraph {
public:
    // An empty graph; populate through build() or the edit operations.
    PlaneGraph() = default;

    // Validating constructor for user input. `rotations` maps each vertex to
    // its clockwise neighbour list, `outer` is the outer face as a cyclic
    // vertex sequence. For disconnected input, components other than the one
    // containing `outer` get their longest face as outer face.
    static PlaneGraph build(const std::map<VertexId, std::vector<VertexId>>& rotations,
                            const std::vector<VertexId>& outer);

    // --- basic queries -----------------------------------------------------

    int num_vertices() const { return static_cast<int>(verts_.size()); }
    int num_edges() const { return num_edges_; }
    int num_faces() const { return static_cast<int>(faces_.size()); }
    bool empty() const { return verts_.empty(); }

    const std::vector<VertexId>& vertices() const { return verts_; }
    bool has_vertex(VertexId v) const { return index_.count(v) != 0; }
    const std::vector<VertexId>& rotation(VertexId v) const { return rot_[idx(v)]; }
    int degree(VertexId v) const { return static_cast<int>(rot_[idx(v)].size()); }
    bool has_edge(VertexId u, VertexId v) const;
    // Neighbours in ascending id order.
    std::vector<VertexId> neighbours_sorted(VertexId v) const;

    // --- faces and boundary ------------------------------------------------

    // Face as a dart cycle; face(i)[j].from gives the vertex sequence.
    const std::vector<Dart>& face(int face_id) const { return faces_[face_id]; }
    int face_of_dart(VertexId u, VertexId v) const;
    int outer_face_id() const { return outer_face_; }
    // Outer face id of the component containing v.
    int outer_face_id_of_component(VertexId v) const;
    std::vector<VertexId> face_vertices(int face_id) const;

    // Vertex sequence of the designated outer face.
    std::vector<VertexId> outer_walk() const { return face_vertices(outer_face_); }
    // True iff v lies on the outer face of its own component.
    bool is_boundary(VertexId v) const;
    bool is_interior(VertexId v) const { return !is_boundary(v); }

    int num_components() const { return num_components_; }
    int component_of(VertexId v) const { return comp_[idx(v)]; }
    bool connected() const { return num_components_ <= 1; }

    // --- structure ---------------------------------------------------------

    bool is_triangle_free() const;
    bool is_two_connected() const;
    std::vector<VertexId> cut_vertices() const;
    bool is_cycle_of_graph(const std::vector<VertexId>& cycle) const;

    // Vertices strictly inside the cycle (side not containing the
    // component's outer face).
    std::vector<VertexId> interior_of_cycle(const std::vector<VertexId>& cycle) const;

    // --- embedding-preserving edits (value-returning) ----------------------

    // Induced subgraph on `keep`; every surviving component's outer face is
    // the face containing the old outer region (faces incident to deleted
    // vertices merge into the region that held them).
    PlaneGraph induced(const std::vector<VertexId>& keep) const;
    PlaneGraph delete_vertices(const std::vector<VertexId>& remove) const;

    // int[C] (outer face becomes C) and ext[C] (outer face inherited).
    std::pair<PlaneGraph, PlaneGraph> split_at_cycle(const std::vector<VertexId>& cycle) const;

    // Merge non-adjacent u, v at distance 2 along a shared face. The merged
    // vertex keeps id min(u, v); parallel edges are coalesced.
    PlaneGraph identify_vertices(VertexId u, VertexId v) const;

    // Insert edge u-v through the interior of face `face_id` (u, v on that
    // face and non-adjacent).
    PlaneGraph add_edge_in_face(VertexId u, VertexId v, int face_id) const;

    // Insert a fan of new vertices: path u - w1 - ... - wt - v drawn inside
    // face `face_id`. Used by generators.
    PlaneGraph add_path_in_face(VertexId u, VertexId v, const std::vector<VertexId>& interior_path,
                                int face_id) const;

    std::string debug_string() const;

private:
    int idx(VertexId v) const;
    void trace_faces();
    void validate_euler() const;
    // Find the traced face equal to `cycle` as a cyclic dart sequence
    // (orientation-sensitive). Returns -1 if absent.
    int find_face_matching(const std::vector<VertexId>& cycle) const;
    static PlaneGraph from_rotations_unchecked(
        const std::map<VertexId, std::vector<VertexId>>& rotations);
    // Rebuild after an edit, assigning each component's outer face from a
    // representative dart (must survive in the new graph). The first
    // representative names the primary outer face.
    PlaneGraph rebuilt_with_outer_darts(const std::map<VertexId, std::vector<VertexId>>& rotations,
                                        const std::vector<Dart>& outer_reps) const;
    // One surviving dart per component outer face, primary first.
    std::vector<Dart> outer_representatives() const;
    PlaneGraph finish_identify(const std::map<VertexId, std::vector<VertexId>>& rotations,
                               VertexId u, VertexId v, VertexId star) const;

    std::vector<VertexId> verts_;                  // sorted
    std::unordered_map<VertexId, int> index_;
    std::vector<std::vector<VertexId>> rot_;       // clockwise
    std::vector<std::vector<VertexId>> adj_sorted_;
    int num_edges_ = 0;

    std::vector<std::vector<Dart>> faces_;
    std::unordered_map<std::uint64_t, int> dart_face_;
    int outer_face_ = -1;

    std::vector<int> comp_;
    int num_components_ = 0;
    std::vector<int> comp_outer_face_;             // per component
};

// Boundary walk of the designated outer face with v^- / v^+ accessors
// following the clockwise cyclic order. The walk is a simple cycle iff the
// graph is 2-connected; pred/succ require a simple walk.
class BoundaryWalk {
public:
    explicit BoundaryWalk(const PlaneGraph& g);

    const std::vector<VertexId>& cycle() const { return walk_; }
    bool simple() const { return simple_; }
    bool contains(VertexId v) const { return pos_.count(v) != 0; }
    // v^- : predecessor of v along the clockwise order.
    VertexId pred(VertexId v) const;
    // v^+ : successor of v along the clockwise order.
    VertexId succ(VertexId v) const;
    // Positions within the cyclic walk (simple walks only).
    int position(VertexId v) const;

private:
    std::vector<VertexId> walk_;
    std::unordered_map<VertexId, int> pos_;
    bool simple_ = true;
};

// A path of length i between non-consecutive boundary vertices whose
// internal vertices are interior.
struct IChord {
    std::vector<VertexId> path;     // length i+1
    int length() const { return static_cast<int>(path.size()) - 1; }
    VertexId end_u() const { return path.front(); }
    VertexId end_v() const { return path.back(); }
};

// All i-chords, ends ordered so the lexicographically smaller sequence of
// the two orientations is kept; output sorted lexicographically.
std::vector<IChord> find_i_chords(const PlaneGraph& g, int i);

struct CycleRegion {
    std::vector<VertexId> cycle;
    std::vector<VertexId> interior_vertices;
    PlaneGraph int_closed;
    PlaneGraph ext_closed;
};

// All cycles of length `len` with nonempty interior, deterministic order.
std::vector<CycleRegion> find_separating_cycles(const PlaneGraph& g, int len);

// Cycle enumeration helper (canonical forms, sorted). Exposed for tests.
std::vector<std::vector<VertexId>> enumerate_cycles(const PlaneGraph& g, int len);

// A path v1..v_{2q+1} plus a center adjacent to the odd-indexed rim
// vertices.
struct SemiFan {
    VertexId center = 0;
    std::vector<VertexId> rim;      // v1 .. v_{2q+1}
    int q() const { return (static_cast<int>(rim.size()) - 1) / 2; }
};

// Recognize g as exactly a semi-fan with the given center: rim is an induced
// path, center adjacent to precisely the odd rim positions.
std::optional<SemiFan> recognize_semi_fan(const PlaneGraph& g, VertexId center);

} // namespace tfplc
