#include "tfplc/generator.hpp"

#include <algorithm>
#include <set>

namespace tfplc {

namespace {

int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Vertices that appear exactly once on the face.
std::vector<VertexId> face_once(const PlaneGraph& g, int face_id) {
    std::map<VertexId, int> count;
    for (const Dart& d : g.face(face_id)) ++count[d.from];
    std::vector<VertexId> out;
    for (auto [v, c] : count)
        if (c == 1) out.push_back(v);
    return out;
}

bool common_neighbour(const PlaneGraph& g, VertexId u, VertexId v) {
    for (VertexId w : g.neighbours_sorted(u))
        if (g.has_edge(v, w)) return true;
    return false;
}

} // namespace

PlaneGraph random_plane_graph(Rng& rng, int n) {
    if (n < 4) fail(ErrorCode::Internal, "random_plane_graph needs n >= 4");
    int start = std::min(n, 4 + rand_int(rng, 0, 2));
    std::map<VertexId, std::vector<VertexId>> rot;
    std::vector<VertexId> outer;
    for (int v = 1; v <= start; ++v) {
        int prev = v == 1 ? start : v - 1;
        int next = v == start ? 1 : v + 1;
        rot[v] = {next, prev};
        outer.push_back(v);
    }
    PlaneGraph g = PlaneGraph::build(rot, outer);
    VertexId next_id = start + 1;

    int stall = 0;
    while (g.num_vertices() < n && stall < 200) {
        int f = rand_int(rng, 0, g.num_faces() - 1);
        auto once = face_once(g, f);
        if (once.size() < 2) {
            ++stall;
            continue;
        }
        VertexId u = once[rand_int(rng, 0, static_cast<int>(once.size()) - 1)];
        VertexId v = once[rand_int(rng, 0, static_cast<int>(once.size()) - 1)];
        if (u == v) {
            ++stall;
            continue;
        }
        int budget = n - g.num_vertices();
        int t = std::min(budget, rand_int(rng, 1, 3));
        if (t == 0) break;
        if (g.has_edge(u, v) && t == 1) t = 2; // a single path vertex would close a triangle
        if (t > budget) {
            ++stall;
            continue;
        }
        std::vector<VertexId> fresh;
        for (int i = 0; i < t; ++i) fresh.push_back(next_id + i);
        // A plain chord (t == 1 would add an edge, which we only do through
        // paths here) always gets at least one interior vertex so the graph
        // stays triangle free without global checks; occasionally add a true
        // chord when safe.
        if (t == 1) {
            if (!g.has_edge(u, v) && !common_neighbour(g, u, v) && rand_int(rng, 0, 1) == 0) {
                g = g.add_edge_in_face(u, v, f);
                stall = 0;
                continue;
            }
            fresh = {next_id};
        }
        g = g.add_path_in_face(u, v, fresh, f);
        next_id += t;
        stall = 0;
    }
    return g;
}

ListAssignment random_lists(Rng& rng, const PlaneGraph& g,
                            const std::function<int(VertexId)>& sizes, int universe) {
    ListAssignment l;
    for (VertexId v : g.vertices()) {
        int s = sizes(v);
        std::vector<int> pool(universe);
        for (int i = 0; i < universe; ++i) pool[i] = i + 1;
        std::shuffle(pool.begin(), pool.end(), rng);
        ColourList cl;
        for (int i = 0; i < s; ++i) cl.insert(pool[i]);
        l.set(v, cl);
    }
    return l;
}

Target random_valid_target(Rng& rng, const TargetGenOptions& opts) {
    for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
        int n = rand_int(rng, std::max(4, opts.min_n), std::max(4, opts.max_n));
        PlaneGraph g = random_plane_graph(rng, n);
        std::vector<VertexId> walk = g.outer_walk();
        int k = rand_int(rng, 0, 5);
        if (k > static_cast<int>(walk.size())) k = 0;
        std::vector<VertexId> p;
        if (k > 0) {
            int s = rand_int(rng, 0, static_cast<int>(walk.size()) - 1);
            for (int i = 0; i < k; ++i) p.push_back(walk[(s + i) % walk.size()]);
        }
        std::set<VertexId> p_set(p.begin(), p.end());

        // Independent subset of the interior takes the 3-lists.
        std::vector<VertexId> interior;
        for (VertexId v : g.vertices())
            if (g.is_interior(v)) interior.push_back(v);
        std::shuffle(interior.begin(), interior.end(), rng);
        std::set<VertexId> s3;
        for (VertexId v : interior) {
            bool ok = rand_int(rng, 0, 1) == 0;
            for (VertexId w : g.neighbours_sorted(v))
                if (s3.count(w)) ok = false;
            if (ok) s3.insert(v);
        }
        auto sizes = [&](VertexId v) {
            if (p_set.count(v)) return rand_int(rng, 1, 4) == 1 ? rand_int(rng, 2, 4) : 1;
            if (g.is_interior(v)) return s3.count(v) ? 3 : 4;
            return rand_int(rng, 2, 4);
        };
        ListAssignment l = random_lists(rng, g, sizes, opts.universe);
        try {
            Target t = make_target(g, p, l);
            if (validity_report(t).is_valid()) return t;
        } catch (const Error&) {
        }
    }
    // Safe fallback: no P, no 2-lists; valid by construction.
    PlaneGraph g = random_plane_graph(rng, std::max(4, opts.min_n));
    auto sizes = [&](VertexId v) { return g.is_interior(v) ? 4 : rand_int(rng, 3, 4); };
    ListAssignment l = random_lists(rng, g, sizes, opts.universe);
    return make_target(g, {}, l);
}

} // namespace tfplc
