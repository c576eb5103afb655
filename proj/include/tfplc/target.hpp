#pragma once

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "tfplc/lists.hpp"
#include "tfplc/plane_graph.hpp"

namespace tfplc {

// The unit of recursion: a triangle-free plane graph, a path P of at most
// five consecutive boundary vertices, and a constrained list assignment.
struct Target {
    std::shared_ptr<const PlaneGraph> graph;
    std::vector<VertexId> p_path;
    ListAssignment lists;

    const PlaneGraph& g() const { return *graph; }
    int k() const { return static_cast<int>(p_path.size()); }
    bool in_p(VertexId v) const {
        for (VertexId p : p_path)
            if (p == v) return true;
        return false;
    }
    // Edges with both ends in P impose no colouring constraint.
    EdgeSet exempt_edges() const;
    // Interior vertices with 3-lists.
    std::vector<VertexId> s_set() const;
    // Lexicographic progress measure (|V|, sum of list sizes).
    std::pair<int, int> measure() const { return {g().num_vertices(), lists.total_size()}; }
};

// Build and fully check a target (Definition 2 conditions).
Target make_target(std::shared_ptr<const PlaneGraph> g, std::vector<VertexId> p,
                   ListAssignment lists);
Target make_target(const PlaneGraph& g, std::vector<VertexId> p, ListAssignment lists);

struct BadEdge {
    VertexId x, y; // x < y

    bool operator==(const BadEdge& o) const { return x == o.x && y == o.y; }
    bool operator<(const BadEdge& o) const { return std::tie(x, y) < std::tie(o.x, o.y); }
};

struct Bad4Cycle {
    // x, y, z consecutive boundary vertices, w interior; sizes 3,2,3 and 3.
    VertexId x, y, z, w;

    bool operator==(const Bad4Cycle& o) const {
        return x == o.x && y == o.y && z == o.z && w == o.w;
    }
    bool operator<(const Bad4Cycle& o) const {
        return std::tie(x, y, z, w) < std::tie(o.x, o.y, o.z, o.w);
    }
};

struct ValidityReport {
    std::vector<VertexId> bad_vertices;
    std::vector<BadEdge> bad_edges;
    std::vector<Bad4Cycle> bad_4cycles;

    bool is_valid() const {
        return bad_vertices.empty() && bad_edges.empty() && bad_4cycles.empty();
    }
};

ValidityReport validity_report(const Target& t);

// A chord split per the section-2 conventions: side 1 holds P as a boundary
// path with as much of P as possible; u^- and v^+ live on side 2.
struct ChordSplit {
    IChord chord;                 // oriented u .. v
    PlaneGraph g1, g2;
    std::vector<VertexId> p_w;    // subpath of B(g2), in boundary order
    bool feasible = false;
    PlaneGraph g1_aug;            // induced on V(g1) + P_W
};

// Shapes of Observation 7 for non-feasible chords.
enum class NonFeasibleShape {
    AttachmentPinch,   // u, v not in P, v^+ = u^- with a 2-list
    InsideP,           // u, v in P and v^+ = u^- in P
    PPrefix,           // v = p_j (j <= 3), u^- = p_1, side 2 is p_1..p_{j-1}
};

// All admissible splits for the chord (0, 1 or 2 depending on which sides
// carry P as a boundary path), best first per convention (2).
std::vector<ChordSplit> all_chord_splits(const Target& t, const IChord& w);

// The preferred split; NOT_A_CHORD / NOT_APPLICABLE on failure.
ChordSplit chord_split(const Target& t, const IChord& w);

// Endpoint list sizes and length, in the chord's stored orientation.
std::array<int, 3> classify_chord(const Target& t, const IChord& w);

std::optional<NonFeasibleShape> classify_non_feasible(const Target& t, const ChordSplit& split);

} // namespace tfplc
