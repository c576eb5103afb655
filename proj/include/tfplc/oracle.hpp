#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "tfplc/lists.hpp"
#include "tfplc/plane_graph.hpp"

namespace tfplc {

// Backtracking list colourer: smallest-remaining-list vertex order, colours
// ascending, forward pruning. Edges in `excluded` impose no constraint.
std::optional<Colouring> brute_force_colour(const PlaneGraph& g, const ListAssignment& lists,
                                            const EdgeSet& excluded = {});

// Reference implementation: full cartesian product scan. Exponential; only
// for cross-validation on tiny instances.
std::optional<Colouring> naive_colour(const PlaneGraph& g, const ListAssignment& lists,
                                      const EdgeSet& excluded = {});

// Canonical list assignments with the given sizes over colours
// {1..universe_cap}, one representative per colour-renaming orbit
// (restricted-growth labelling over the vertex order). Visitor returns false
// to stop early. Returns the number of assignments visited.
std::uint64_t enumerate_canonical_lists(const std::vector<VertexId>& order,
                                        const std::function<int(VertexId)>& sizes,
                                        int universe_cap,
                                        const std::function<bool(const ListAssignment&)>& visit);

std::vector<ListAssignment> collect_canonical_lists(const PlaneGraph& g,
                                                    const std::function<int(VertexId)>& sizes,
                                                    int universe_cap);

struct SufficiencyQuery {
    const PlaneGraph* graph;
    std::vector<VertexId> x_set;
    int k = 3;
};

enum class VerdictStatus { AllColourable, Counterexample, Capped };

struct Verdict {
    VerdictStatus status = VerdictStatus::AllColourable;
    std::optional<ListAssignment> witness_lists;
    std::uint64_t graphs_checked = 0;
    std::uint64_t x_sets_checked = 0;
    std::uint64_t assignments_checked = 0;
    int universe_cap = 0;
    double wall_seconds = 0.0;
};

// Check every canonical f_{X,k} assignment under the cap. witness re-checked
// by an independent solver before reporting.
Verdict verify_k_sufficient(const SufficiencyQuery& q, int universe_cap);

enum class SweepMode { MaximalX, AllX };

// All maximal (or all) independent sets, ascending-lex order.
std::vector<std::vector<VertexId>> independent_sets(const PlaneGraph& g, SweepMode mode);

Verdict verify_theorem1_sweep(const PlaneGraph& g, SweepMode mode, int universe_cap);

// Parallel resumable sweep over a corpus of graphs.
struct SweepOptions {
    SweepMode mode = SweepMode::MaximalX;
    int universe_cap = 6;
    int jobs = 1;
    std::string checkpoint_path; // empty: no checkpointing
};

Verdict sweep_corpus(const std::vector<PlaneGraph>& corpus, const SweepOptions& opts);

// All connected plane graphs up to n_max vertices, one embedding each,
// deduplicated up to isomorphism. `triangle_free` restricts the family.
std::vector<PlaneGraph> enumerate_connected_plane_graphs(int n_max, bool triangle_free,
                                                         int hard_bound = 8);

inline std::vector<PlaneGraph> enumerate_triangle_free_plane_graphs(int n_max,
                                                                    int hard_bound = 8) {
    return enumerate_connected_plane_graphs(n_max, true, hard_bound);
}

// Embed an abstract graph (adjacency lists) in the plane by searching
// rotation systems; empty when the graph is not planar.
std::optional<PlaneGraph> embed_planar(const std::map<VertexId, std::vector<VertexId>>& adj);

bool graphs_isomorphic(const PlaneGraph& a, const PlaneGraph& b);

} // namespace tfplc
