#pragma once

#include <cstdint>
#include <random>

#include "tfplc/target.hpp"

namespace tfplc {

using Rng = std::mt19937_64;

// Random 2-connected triangle-free plane graph with exactly n vertices
// (n >= 4), grown from a short cycle by inserting chords and paths into
// faces.
PlaneGraph random_plane_graph(Rng& rng, int n);

struct TargetGenOptions {
    int max_n = 12;
    int min_n = 4;
    int universe = 7;         // colours drawn from 1..universe
    int max_attempts = 64;    // resampling budget before the safe fallback
};

// Random valid target (wellformed per Definition 2 and valid per
// Definition 3). Falls back to a no-2-list, empty-P assignment when random
// sampling keeps producing bad elements.
Target random_valid_target(Rng& rng, const TargetGenOptions& opts = {});

// Random lists of the given sizes over 1..universe.
ListAssignment random_lists(Rng& rng, const PlaneGraph& g,
                            const std::function<int(VertexId)>& sizes, int universe);

} // namespace tfplc
