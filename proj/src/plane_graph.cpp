#include "tfplc/plane_graph.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <sstream>

namespace tfplc {

namespace {

std::uint64_t dart_key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}

// Canonical rotation of a cyclic sequence: smallest rotation lexicographically.
std::vector<VertexId> canonical_rotation(const std::vector<VertexId>& seq) {
    if (seq.empty()) return seq;
    std::vector<VertexId> best = seq;
    std::vector<VertexId> cur = seq;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

bool cyclic_equal(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
    if (a.size() != b.size()) return false;
    return canonical_rotation(a) == canonical_rotation(b);
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

int PlaneGraph::idx(VertexId v) const {
    auto it = index_.find(v);
    if (it == index_.end()) fail(ErrorCode::Internal, "unknown vertex " + std::to_string(v));
    return it->second;
}

bool PlaneGraph::has_edge(VertexId u, VertexId v) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    const auto& a = adj_sorted_[idx(u)];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<VertexId> PlaneGraph::neighbours_sorted(VertexId v) const {
    return adj_sorted_[idx(v)];
}

PlaneGraph PlaneGraph::from_rotations_unchecked(
    const std::map<VertexId, std::vector<VertexId>>& rotations) {
    PlaneGraph g;
    g.verts_.reserve(rotations.size());
    for (const auto& [v, _] : rotations) g.verts_.push_back(v);
    std::sort(g.verts_.begin(), g.verts_.end());
    for (std::size_t i = 0; i < g.verts_.size(); ++i) g.index_[g.verts_[i]] = static_cast<int>(i);
    g.rot_.resize(g.verts_.size());
    g.adj_sorted_.resize(g.verts_.size());
    int dart_count = 0;
    for (const auto& [v, nbrs] : rotations) {
        g.rot_[g.index_[v]] = nbrs;
        auto s = nbrs;
        std::sort(s.begin(), s.end());
        g.adj_sorted_[g.index_[v]] = std::move(s);
        dart_count += static_cast<int>(nbrs.size());
    }
    g.num_edges_ = dart_count / 2;
    return g;
}

void PlaneGraph::trace_faces() {
    faces_.clear();
    dart_face_.clear();
    // Components.
    comp_.assign(verts_.size(), -1);
    num_components_ = 0;
    for (std::size_t s = 0; s < verts_.size(); ++s) {
        if (comp_[s] >= 0) continue;
        int c = num_components_++;
        std::vector<int> stack{static_cast<int>(s)};
        comp_[s] = c;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (VertexId w : rot_[x]) {
                int wi = idx(w);
                if (comp_[wi] < 0) {
                    comp_[wi] = c;
                    stack.push_back(wi);
                }
            }
        }
    }
    // Position of each dart within rot_ for O(1) successor lookup.
    std::unordered_map<std::uint64_t, int> pos;
    pos.reserve(num_edges_ * 2 + verts_.size());
    for (std::size_t vi = 0; vi < verts_.size(); ++vi) {
        for (std::size_t p = 0; p < rot_[vi].size(); ++p) {
            auto key = dart_key(static_cast<int>(vi), idx(rot_[vi][p]));
            if (pos.count(key))
                fail(ErrorCode::AsymmetricAdjacency,
                     "duplicate neighbour " + std::to_string(rot_[vi][p]) + " at vertex " +
                         std::to_string(verts_[vi]));
            pos[key] = static_cast<int>(p);
        }
    }
    std::unordered_map<std::uint64_t, bool> used;
    used.reserve(pos.size());
    for (std::size_t vi = 0; vi < verts_.size(); ++vi) {
        if (rot_[vi].empty()) {
            // Isolated vertex: single face marked with the pseudo-dart (v, v).
            int f = static_cast<int>(faces_.size());
            faces_.push_back({Dart{verts_[vi], verts_[vi]}});
            dart_face_[dart_key(static_cast<int>(vi), static_cast<int>(vi))] = f;
            continue;
        }
        for (std::size_t p = 0; p < rot_[vi].size(); ++p) {
            auto key0 = dart_key(static_cast<int>(vi), idx(rot_[vi][p]));
            if (used.count(key0)) continue;
            std::vector<Dart> face;
            int u = static_cast<int>(vi);
            int v = idx(rot_[vi][p]);
            while (true) {
                auto key = dart_key(u, v);
                if (used.count(key)) break;
                used[key] = true;
                face.push_back(Dart{verts_[u], verts_[v]});
                auto it = pos.find(dart_key(v, u));
                if (it == pos.end())
                    fail(ErrorCode::AsymmetricAdjacency,
                         "edge " + std::to_string(verts_[u]) + "-" + std::to_string(verts_[v]) +
                             " present in one rotation only");
                int next_pos = (it->second + 1) % static_cast<int>(rot_[v].size());
                int w = idx(rot_[v][next_pos]);
                u = v;
                v = w;
            }
            int f = static_cast<int>(faces_.size());
            faces_.push_back(std::move(face));
            for (const Dart& d : faces_.back()) dart_face_[dart_key(idx(d.from), idx(d.to))] = f;
        }
    }
}

void PlaneGraph::validate_euler() const {
    std::vector<int> v_count(num_components_, 0), e2_count(num_components_, 0),
        f_count(num_components_, 0);
    for (std::size_t vi = 0; vi < verts_.size(); ++vi) {
        v_count[comp_[vi]]++;
        e2_count[comp_[vi]] += static_cast<int>(rot_[vi].size());
    }
    for (const auto& face : faces_) f_count[comp_[idx(face.front().from)]]++;
    for (int c = 0; c < num_components_; ++c) {
        int euler = v_count[c] - e2_count[c] / 2 + f_count[c];
        if (euler != 2)
            fail(ErrorCode::NotAnEmbedding,
                 "component has V-E+F=" + std::to_string(euler) + ", expected 2");
    }
}

int PlaneGraph::find_face_matching(const std::vector<VertexId>& cycle) const {
    for (std::size_t f = 0; f < faces_.size(); ++f) {
        std::vector<VertexId> seq = face_vertices(static_cast<int>(f));
        if (cyclic_equal(seq, cycle)) return static_cast<int>(f);
    }
    return -1;
}

PlaneGraph PlaneGraph::build(const std::map<VertexId, std::vector<VertexId>>& rotations,
                             const std::vector<VertexId>& outer) {
    // Symmetry first, so face tracing never walks off a one-sided edge.
    for (const auto& [v, nbrs] : rotations) {
        for (VertexId w : nbrs) {
            if (w == v) fail(ErrorCode::AsymmetricAdjacency, "self loop at " + std::to_string(v));
            auto it = rotations.find(w);
            if (it == rotations.end() ||
                std::count(it->second.begin(), it->second.end(), v) != 1)
                fail(ErrorCode::AsymmetricAdjacency,
                     "edge " + std::to_string(v) + "-" + std::to_string(w) + " not symmetric");
            if (std::count(nbrs.begin(), nbrs.end(), w) != 1)
                fail(ErrorCode::AsymmetricAdjacency,
                     "duplicate neighbour " + std::to_string(w) + " at " + std::to_string(v));
        }
    }
    if (rotations.empty()) fail(ErrorCode::ParseError, "empty graph");
    for (VertexId v : outer)
        if (!rotations.count(v)) fail(ErrorCode::OuterNotAFace, "unknown outer vertex");

    PlaneGraph g = from_rotations_unchecked(rotations);
    g.trace_faces();
    g.validate_euler();
    int f = outer.empty() ? -1 : g.find_face_matching(outer);
    if (f < 0) {
        // Mirrored input: reverse every rotation and retry once.
        std::map<VertexId, std::vector<VertexId>> mirrored = rotations;
        for (auto& [v, nbrs] : mirrored) std::reverse(nbrs.begin(), nbrs.end());
        PlaneGraph m = from_rotations_unchecked(mirrored);
        m.trace_faces();
        m.validate_euler();
        f = outer.empty() ? -1 : m.find_face_matching(outer);
        if (f < 0) fail(ErrorCode::OuterNotAFace, "outer cycle is not a traced face");
        g = std::move(m);
    }
    g.outer_face_ = f;
    g.comp_outer_face_.assign(g.num_components_, -1);
    int outer_comp = g.comp_[g.idx(g.faces_[f].front().from)];
    g.comp_outer_face_[outer_comp] = f;
    // Other components (disconnected input): designate the longest face,
    // smallest face id on ties.
    for (std::size_t fi = 0; fi < g.faces_.size(); ++fi) {
        int c = g.comp_[g.idx(g.faces_[fi].front().from)];
        if (g.comp_outer_face_[c] == -1 ||
            (c != outer_comp &&
             g.faces_[fi].size() > g.faces_[g.comp_outer_face_[c]].size()))
            g.comp_outer_face_[c] = static_cast<int>(fi);
    }
    return g;
}

PlaneGraph PlaneGraph::rebuilt_with_outer_darts(
    const std::map<VertexId, std::vector<VertexId>>& rotations,
    const std::vector<Dart>& outer_reps) const {
    PlaneGraph g = from_rotations_unchecked(rotations);
    g.trace_faces();
    g.validate_euler();
    g.comp_outer_face_.assign(g.num_components_, -1);
    g.outer_face_ = -1;
    for (const Dart& d : outer_reps) {
        int f = g.face_of_dart(d.from, d.to);
        int c = g.comp_[g.idx(d.from)];
        g.comp_outer_face_[c] = f;
        if (g.outer_face_ < 0) g.outer_face_ = f;
    }
    for (int c = 0; c < g.num_components_; ++c)
        if (g.comp_outer_face_[c] < 0) fail(ErrorCode::Internal, "component without outer face");
    if (g.outer_face_ < 0) fail(ErrorCode::Internal, "no outer face representative");
    return g;
}

int PlaneGraph::face_of_dart(VertexId u, VertexId v) const {
    auto it = dart_face_.find(dart_key(idx(u), idx(v)));
    if (it == dart_face_.end())
        fail(ErrorCode::Internal,
             "no dart " + std::to_string(u) + "->" + std::to_string(v));
    return it->second;
}

int PlaneGraph::outer_face_id_of_component(VertexId v) const {
    return comp_outer_face_[comp_[idx(v)]];
}

std::vector<VertexId> PlaneGraph::face_vertices(int face_id) const {
    std::vector<VertexId> seq;
    const auto& f = faces_[face_id];
    if (f.size() == 1 && f[0].from == f[0].to) return {f[0].from};
    seq.reserve(f.size());
    for (const Dart& d : f) seq.push_back(d.from);
    return seq;
}

bool PlaneGraph::is_boundary(VertexId v) const {
    int f = comp_outer_face_[comp_[idx(v)]];
    for (const Dart& d : faces_[f])
        if (d.from == v) return true;
    return false;
}

bool PlaneGraph::is_triangle_free() const {
    for (std::size_t vi = 0; vi < verts_.size(); ++vi) {
        for (VertexId w : adj_sorted_[vi]) {
            if (w <= verts_[vi]) continue;
            for (VertexId x : adj_sorted_[vi]) {
                if (x <= w) continue;
                if (has_edge(w, x)) return false;
            }
        }
    }
    return true;
}

std::vector<VertexId> PlaneGraph::cut_vertices() const {
    // Tarjan articulation points.
    int n = num_vertices();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<bool> art(n, false);
    int timer = 0;
    // Iterative DFS to keep stack depth independent of n.
    for (int s = 0; s < n; ++s) {
        if (disc[s] >= 0) continue;
        std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
        disc[s] = low[s] = timer++;
        int root_children = 0;
        while (!stack.empty()) {
            auto& [x, ei] = stack.back();
            if (ei < rot_[x].size()) {
                int w = idx(rot_[x][ei]);
                ++ei;
                if (disc[w] < 0) {
                    parent[w] = x;
                    disc[w] = low[w] = timer++;
                    if (x == s) ++root_children;
                    stack.push_back({w, 0});
                } else if (w != parent[x]) {
                    low[x] = std::min(low[x], disc[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().first;
                    low[p] = std::min(low[p], low[x]);
                    if (p != s && low[x] >= disc[p]) art[p] = true;
                }
            }
        }
        if (root_children >= 2) art[s] = true;
    }
    std::vector<VertexId> out;
    for (int i = 0; i < n; ++i)
        if (art[i]) out.push_back(verts_[i]);
    return out;
}

bool PlaneGraph::is_two_connected() const {
    return num_vertices() >= 3 && connected() && cut_vertices().empty();
}

bool PlaneGraph::is_cycle_of_graph(const std::vector<VertexId>& cycle) const {
    if (cycle.size() < 3) return false;
    std::set<VertexId> seen(cycle.begin(), cycle.end());
    if (seen.size() != cycle.size()) return false;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (!has_vertex(cycle[i])) return false;
        if (!has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
    }
    return true;
}

std::vector<VertexId> PlaneGraph::interior_of_cycle(const std::vector<VertexId>& cycle) const {
    if (!is_cycle_of_graph(cycle)) fail(ErrorCode::NotACycle, "not a cycle of the graph");
    // Flood-fill faces across edges not on the cycle; the side without the
    // component's outer face is the interior.
    std::set<std::pair<VertexId, VertexId>> cyc_edges;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        VertexId a = cycle[i], b = cycle[(i + 1) % cycle.size()];
        cyc_edges.insert({std::min(a, b), std::max(a, b)});
    }
    int nf = num_faces();
    UnionFind uf(nf);
    for (const auto& face : faces_) {
        for (const Dart& d : face) {
            if (d.from == d.to) continue;
            auto e = std::make_pair(std::min(d.from, d.to), std::max(d.from, d.to));
            if (cyc_edges.count(e)) continue;
            uf.unite(face_of_dart(d.from, d.to), face_of_dart(d.to, d.from));
        }
    }
    int outer_zone = uf.find(comp_outer_face_[comp_[idx(cycle[0])]]);
    std::vector<VertexId> interior;
    std::set<VertexId> on_cycle(cycle.begin(), cycle.end());
    for (std::size_t vi = 0; vi < verts_.size(); ++vi) {
        VertexId v = verts_[vi];
        if (on_cycle.count(v)) continue;
        if (comp_[vi] != comp_[idx(cycle[0])]) continue;
        int f;
        if (rot_[vi].empty())
            f = face_of_dart(v, v);
        else
            f = face_of_dart(v, rot_[vi][0]);
        if (uf.find(f) != outer_zone) interior.push_back(v);
    }
    return interior;
}

PlaneGraph PlaneGraph::induced(const std::vector<VertexId>& keep) const {
    std::set<VertexId> keep_set(keep.begin(), keep.end());
    for (VertexId v : keep)
        if (!has_vertex(v)) fail(ErrorCode::Internal, "induced: unknown vertex");
    if (keep_set.empty()) fail(ErrorCode::Internal, "induced: empty vertex set");

    std::map<VertexId, std::vector<VertexId>> rotations;
    for (VertexId v : keep_set) {
        std::vector<VertexId> nbrs;
        for (VertexId w : rot_[idx(v)])
            if (keep_set.count(w)) nbrs.push_back(w);
        rotations[v] = std::move(nbrs);
    }
    PlaneGraph g = from_rotations_unchecked(rotations);
    g.trace_faces();
    g.validate_euler();

    // Merge parent faces across deleted edges (an edge is deleted when
    // either endpoint is). A zone is "dirty" when some deletion touched it.
    UnionFind uf(num_faces());
    std::vector<bool> touched(num_faces(), false);
    for (const auto& face : faces_) {
        for (const Dart& d : face) {
            if (d.from == d.to) {
                if (!keep_set.count(d.from)) touched[face_of_dart(d.from, d.to)] = true;
                continue;
            }
            if (keep_set.count(d.from) && keep_set.count(d.to)) continue;
            int f1 = face_of_dart(d.from, d.to);
            int f2 = face_of_dart(d.to, d.from);
            uf.unite(f1, f2);
            touched[f1] = touched[f2] = true;
        }
    }
    std::vector<bool> zone_dirty(num_faces(), false);
    for (int f = 0; f < num_faces(); ++f)
        if (touched[f]) zone_dirty[uf.find(f)] = true;

    auto zone_of_new_face = [&](int nf) {
        const Dart& d = g.faces_[nf].front();
        if (d.from == d.to) {
            // Isolated kept vertex: all of its old incident faces merged.
            int vi = idx(d.from);
            int f = rot_[vi].empty() ? face_of_dart(d.from, d.from)
                                     : face_of_dart(d.from, rot_[vi][0]);
            return uf.find(f);
        }
        return uf.find(face_of_dart(d.from, d.to));
    };

    g.comp_outer_face_.assign(g.num_components_, -1);
    g.outer_face_ = -1;
    int primary_zone = uf.find(outer_face_);
    for (int c = 0; c < g.num_components_; ++c) {
        VertexId rep = 0;
        for (std::size_t vi = 0; vi < g.verts_.size(); ++vi)
            if (g.comp_[vi] == c) {
                rep = g.verts_[vi];
                break;
            }
        int parent_outer_zone = uf.find(comp_outer_face_[comp_[idx(rep)]]);
        int match_outer = -1, match_dirty = -1, longest = -1;
        std::set<int> dirty_zones;
        for (std::size_t fi = 0; fi < g.faces_.size(); ++fi) {
            if (g.comp_[g.idx(g.faces_[fi].front().from)] != c) continue;
            int z = zone_of_new_face(static_cast<int>(fi));
            if (z == parent_outer_zone && match_outer < 0) match_outer = static_cast<int>(fi);
            if (zone_dirty[z] && dirty_zones.insert(z).second && match_dirty < 0)
                match_dirty = static_cast<int>(fi);
            if (longest < 0 || g.faces_[fi].size() > g.faces_[longest].size())
                longest = static_cast<int>(fi);
        }
        // Priority: the face continuing the old outer region; else the face
        // against the unique region opened by deletions; else (untouched or
        // ambiguous component) the longest face.
        if (match_outer >= 0)
            g.comp_outer_face_[c] = match_outer;
        else if (dirty_zones.size() == 1)
            g.comp_outer_face_[c] = match_dirty;
        else
            g.comp_outer_face_[c] = longest;
    }
    // Primary outer: the face continuing the old primary outer region.
    for (std::size_t fi = 0; fi < g.faces_.size() && g.outer_face_ < 0; ++fi)
        if (zone_of_new_face(static_cast<int>(fi)) == primary_zone)
            g.outer_face_ = static_cast<int>(fi);
    if (g.outer_face_ < 0) g.outer_face_ = g.comp_outer_face_[0];
    g.comp_outer_face_[g.comp_[g.idx(g.faces_[g.outer_face_].front().from)]] = g.outer_face_;
    return g;
}

PlaneGraph PlaneGraph::delete_vertices(const std::vector<VertexId>& remove) const {
    std::set<VertexId> rm(remove.begin(), remove.end());
    std::vector<VertexId> keep;
    for (VertexId v : verts_)
        if (!rm.count(v)) keep.push_back(v);
    return induced(keep);
}

std::pair<PlaneGraph, PlaneGraph> PlaneGraph::split_at_cycle(
    const std::vector<VertexId>& cycle) const {
    if (!is_cycle_of_graph(cycle)) fail(ErrorCode::NotACycle, "split_at_cycle: not a cycle");
    std::vector<VertexId> inside = interior_of_cycle(cycle);

    // int[C]: induced on C and interior, outer face = C.
    std::vector<VertexId> int_keep = inside;
    int_keep.insert(int_keep.end(), cycle.begin(), cycle.end());
    PlaneGraph int_part = induced(int_keep);
    int cyc_face = int_part.find_face_matching(cycle);
    if (cyc_face < 0) fail(ErrorCode::Internal, "split_at_cycle: cycle is not a face of int[C]");
    int_part.outer_face_ = cyc_face;
    int_part.comp_outer_face_[int_part.comp_[int_part.idx(cycle[0])]] = cyc_face;

    // ext[C]: everything but the interior.
    std::set<VertexId> inside_set(inside.begin(), inside.end());
    std::vector<VertexId> ext_keep;
    for (VertexId v : verts_)
        if (!inside_set.count(v)) ext_keep.push_back(v);
    PlaneGraph ext_part = induced(ext_keep);
    return {std::move(int_part), std::move(ext_part)};
}

PlaneGraph PlaneGraph::identify_vertices(VertexId u, VertexId v) const {
    if (!has_vertex(u) || !has_vertex(v) || u == v)
        fail(ErrorCode::Internal, "identify_vertices: bad arguments");
    if (has_edge(u, v)) fail(ErrorCode::AdjacentVertices, "endpoints are adjacent");

    VertexId star = std::min(u, v);
    auto coalesce = [](std::vector<VertexId>& seq) {
        bool changed = true;
        while (changed && seq.size() > 1) {
            changed = false;
            for (std::size_t i = 0; i < seq.size(); ++i) {
                if (seq[i] == seq[(i + 1) % seq.size()]) {
                    seq.erase(seq.begin() + static_cast<long>(i));
                    changed = true;
                    break;
                }
            }
        }
    };
    auto all_distinct = [](const std::vector<VertexId>& seq) {
        std::set<VertexId> s(seq.begin(), seq.end());
        return s.size() == seq.size();
    };

    // Try each face corner a -> w -> v in face-walk order; the pinch across
    // that corner merges the rotations as rot(a) from w followed by rot(c)
    // after w. Collapsed parallel edges must end up rotation-adjacent, else
    // this corner does not admit a simple merge.
    bool saw_corner = false;
    for (std::size_t fi = 0; fi < faces_.size(); ++fi) {
        const auto& f = faces_[fi];
        std::size_t m = f.size();
        if (m < 2) continue;
        for (std::size_t i = 0; i < m; ++i) {
            VertexId a = f[i].from, w = f[i].to, c = f[(i + 1) % m].to;
            if (!((a == u && c == v) || (a == v && c == u))) continue;
            saw_corner = true;
            auto from_w = [&](VertexId x, bool include_w) {
                const auto& r = rot_[idx(x)];
                auto it = std::find(r.begin(), r.end(), w);
                std::vector<VertexId> out;
                std::size_t start = static_cast<std::size_t>(it - r.begin());
                for (std::size_t k = include_w ? 0 : 1; k < r.size(); ++k)
                    out.push_back(r[(start + k) % r.size()]);
                return out;
            };
            std::vector<VertexId> merged = from_w(a, true);
            std::vector<VertexId> tail = from_w(c, false);
            merged.insert(merged.end(), tail.begin(), tail.end());
            coalesce(merged);
            if (!all_distinct(merged)) continue;

            std::map<VertexId, std::vector<VertexId>> rotations;
            bool ok = true;
            for (VertexId x : verts_) {
                if (x == u || x == v) continue;
                std::vector<VertexId> r;
                for (VertexId y : rot_[idx(x)]) r.push_back((y == u || y == v) ? star : y);
                coalesce(r);
                if (!all_distinct(r)) {
                    ok = false;
                    break;
                }
                rotations[x] = std::move(r);
            }
            if (!ok) continue;
            rotations[star] = merged;
            return finish_identify(rotations, u, v, star);
        }
    }
    if (!saw_corner) fail(ErrorCode::NoSharedFace, "no face with the two vertices at distance 2");
    fail(ErrorCode::NoSharedFace, "identification would break the embedding");
}

PlaneGraph PlaneGraph::finish_identify(const std::map<VertexId, std::vector<VertexId>>& rotations,
                                       VertexId u, VertexId v, VertexId star) const {

    // Outer representatives: surviving outer darts, with u/v renamed.
    std::vector<Dart> reps;
    for (const Dart& rep0 : outer_representatives()) {
        const auto& f = faces_[face_of_dart(rep0.from, rep0.to)];
        bool found = false;
        for (const Dart& d : f) {
            VertexId a = (d.from == u || d.from == v) ? star : d.from;
            VertexId b = (d.to == u || d.to == v) ? star : d.to;
            if (a == b) continue;
            auto it = rotations.find(a);
            if (it != rotations.end() &&
                std::count(it->second.begin(), it->second.end(), b) == 1) {
                reps.push_back(Dart{a, b});
                found = true;
                break;
            }
        }
        if (!found) fail(ErrorCode::Internal, "identify_vertices: lost an outer face");
    }
    return rebuilt_with_outer_darts(rotations, reps);
}

PlaneGraph PlaneGraph::add_edge_in_face(VertexId u, VertexId v, int face_id) const {
    if (has_edge(u, v)) fail(ErrorCode::Internal, "add_edge_in_face: edge exists");
    const auto& f = faces_[face_id];
    auto occurrences = [&](VertexId x) {
        int n = 0;
        for (const Dart& d : f)
            if (d.from == x) ++n;
        return n;
    };
    if (occurrences(u) != 1 || occurrences(v) != 1)
        fail(ErrorCode::Internal, "add_edge_in_face: endpoints must appear exactly once on the face");

    std::map<VertexId, std::vector<VertexId>> rotations;
    for (VertexId x : verts_) rotations[x] = rot_[idx(x)];
    auto insert_at = [&](VertexId x, VertexId added) {
        // Face walk at x: enters via (t, x), leaves via (x, s); insert the
        // new neighbour between t and s in the clockwise rotation.
        VertexId enter = 0;
        bool found = false;
        for (std::size_t i = 0; i < f.size(); ++i)
            if (f[i].to == x) {
                enter = f[i].from;
                found = true;
                break;
            }
        if (!found) fail(ErrorCode::Internal, "add_edge_in_face: endpoint not on face");
        auto& r = rotations[x];
        auto it = std::find(r.begin(), r.end(), enter);
        r.insert(it + 1, added);
    };
    insert_at(u, v);
    insert_at(v, u);
    return rebuilt_with_outer_darts(rotations, outer_representatives());
}

std::vector<Dart> PlaneGraph::outer_representatives() const {
    std::vector<Dart> reps;
    for (int c = 0; c < num_components_; ++c) reps.push_back(faces_[comp_outer_face_[c]].front());
    // rebuilt_with_outer_darts treats the first representative as primary.
    std::swap(reps.front(), reps[comp_[idx(faces_[outer_face_].front().from)]]);
    return reps;
}

PlaneGraph PlaneGraph::add_path_in_face(VertexId u, VertexId v,
                                        const std::vector<VertexId>& interior_path,
                                        int face_id) const {
    if (interior_path.empty()) return add_edge_in_face(u, v, face_id);
    for (VertexId x : interior_path)
        if (has_vertex(x)) fail(ErrorCode::Internal, "add_path_in_face: vertex id in use");
    const auto& f = faces_[face_id];
    std::map<VertexId, std::vector<VertexId>> rotations;
    for (VertexId x : verts_) rotations[x] = rot_[idx(x)];
    auto insert_at = [&](VertexId x, VertexId added) {
        VertexId enter = 0;
        bool found = false;
        for (std::size_t i = 0; i < f.size(); ++i)
            if (f[i].to == x) {
                enter = f[i].from;
                found = true;
                break;
            }
        if (!found) fail(ErrorCode::Internal, "add_path_in_face: endpoint not on face");
        auto& r = rotations[x];
        auto it = std::find(r.begin(), r.end(), enter);
        r.insert(it + 1, added);
    };
    insert_at(u, interior_path.front());
    insert_at(v, interior_path.back());
    for (std::size_t i = 0; i < interior_path.size(); ++i) {
        VertexId prev = (i == 0) ? u : interior_path[i - 1];
        VertexId next = (i + 1 == interior_path.size()) ? v : interior_path[i + 1];
        rotations[interior_path[i]] = {prev, next};
    }
    return rebuilt_with_outer_darts(rotations, outer_representatives());
}

std::string PlaneGraph::debug_string() const {
    std::ostringstream os;
    os << "PlaneGraph V=" << num_vertices() << " E=" << num_edges() << " F=" << num_faces()
       << " comps=" << num_components_ << "\n";
    for (VertexId v : verts_) {
        os << "  rot " << v << ":";
        for (VertexId w : rotation(v)) os << ' ' << w;
        os << '\n';
    }
    os << "  outer:";
    for (VertexId v : outer_walk()) os << ' ' << v;
    os << '\n';
    return os.str();
}

// ---------------------------------------------------------------------------

BoundaryWalk::BoundaryWalk(const PlaneGraph& g) {
    walk_ = g.outer_walk();
    for (std::size_t i = 0; i < walk_.size(); ++i) {
        if (pos_.count(walk_[i])) simple_ = false;
        pos_[walk_[i]] = static_cast<int>(i);
    }
    if (walk_.size() < 3) simple_ = false;
}

VertexId BoundaryWalk::pred(VertexId v) const {
    if (!simple_) fail(ErrorCode::NotTwoConnected, "boundary walk is not a simple cycle");
    auto it = pos_.find(v);
    if (it == pos_.end()) fail(ErrorCode::Internal, "vertex not on boundary");
    int n = static_cast<int>(walk_.size());
    return walk_[(it->second + n - 1) % n];
}

VertexId BoundaryWalk::succ(VertexId v) const {
    if (!simple_) fail(ErrorCode::NotTwoConnected, "boundary walk is not a simple cycle");
    auto it = pos_.find(v);
    if (it == pos_.end()) fail(ErrorCode::Internal, "vertex not on boundary");
    return walk_[(it->second + 1) % static_cast<int>(walk_.size())];
}

int BoundaryWalk::position(VertexId v) const {
    auto it = pos_.find(v);
    if (it == pos_.end()) fail(ErrorCode::Internal, "vertex not on boundary");
    return it->second;
}

// ---------------------------------------------------------------------------

std::vector<IChord> find_i_chords(const PlaneGraph& g, int i) {
    if (!g.is_two_connected()) fail(ErrorCode::NotTwoConnected, "find_i_chords needs 2-connectivity");
    BoundaryWalk walk(g);
    auto consecutive = [&](VertexId a, VertexId b) {
        return walk.succ(a) == b || walk.pred(a) == b;
    };
    std::vector<IChord> out;
    std::vector<VertexId> path;
    // DFS over paths of length exactly i whose internal vertices are interior.
    std::function<void()> dfs = [&]() {
        VertexId last = path.back();
        if (static_cast<int>(path.size()) == i) {
            for (VertexId w : g.neighbours_sorted(last)) {
                if (!g.is_boundary(w)) continue;
                if (std::find(path.begin(), path.end(), w) != path.end()) continue;
                if (consecutive(path.front(), w) || path.front() == w) continue;
                path.push_back(w);
                std::vector<VertexId> rev(path.rbegin(), path.rend());
                if (path <= rev) out.push_back(IChord{path});
                path.pop_back();
            }
            return;
        }
        for (VertexId w : g.neighbours_sorted(last)) {
            if (g.is_boundary(w)) continue;
            if (std::find(path.begin(), path.end(), w) != path.end()) continue;
            path.push_back(w);
            dfs();
            path.pop_back();
        }
    };
    for (VertexId u : g.vertices()) {
        if (!g.is_boundary(u)) continue;
        path = {u};
        dfs();
    }
    std::sort(out.begin(), out.end(),
              [](const IChord& a, const IChord& b) { return a.path < b.path; });
    return out;
}

std::vector<std::vector<VertexId>> enumerate_cycles(const PlaneGraph& g, int len) {
    std::vector<std::vector<VertexId>> out;
    std::vector<VertexId> path;
    // Cycles with minimum vertex first; the second vertex smaller than the
    // last one kills the reflected duplicate.
    std::function<void()> dfs = [&]() {
        VertexId last = path.back();
        if (static_cast<int>(path.size()) == len) {
            if (g.has_edge(last, path.front()) && path[1] < path.back()) out.push_back(path);
            return;
        }
        for (VertexId w : g.neighbours_sorted(last)) {
            if (w <= path.front()) continue;
            if (std::find(path.begin(), path.end(), w) != path.end()) continue;
            path.push_back(w);
            dfs();
            path.pop_back();
        }
    };
    for (VertexId s : g.vertices()) {
        path = {s};
        dfs();
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CycleRegion> find_separating_cycles(const PlaneGraph& g, int len) {
    std::vector<CycleRegion> out;
    for (const auto& cyc : enumerate_cycles(g, len)) {
        std::vector<VertexId> inside = g.interior_of_cycle(cyc);
        if (inside.empty()) continue;
        auto [int_part, ext_part] = g.split_at_cycle(cyc);
        out.push_back(CycleRegion{cyc, inside, std::move(int_part), std::move(ext_part)});
    }
    return out;
}

std::optional<SemiFan> recognize_semi_fan(const PlaneGraph& g, VertexId center) {
    if (!g.has_vertex(center) || g.num_vertices() < 4) return std::nullopt;
    int n = g.num_vertices();
    std::vector<VertexId> rim_vertices;
    for (VertexId v : g.vertices())
        if (v != center) rim_vertices.push_back(v);
    // Rim must be a path: exactly two rim vertices of rim-degree 1.
    std::vector<VertexId> ends;
    for (VertexId v : rim_vertices) {
        int d = 0;
        for (VertexId w : g.neighbours_sorted(v))
            if (w != center) ++d;
        if (d == 1) ends.push_back(v);
        else if (d != 2) return std::nullopt;
    }
    if (ends.size() != 2) return std::nullopt;
    VertexId start = std::min(ends[0], ends[1]);
    std::vector<VertexId> rim{start};
    VertexId prev = 0, cur = start;
    while (static_cast<int>(rim.size()) < n - 1) {
        VertexId next = 0;
        bool found = false;
        for (VertexId w : g.neighbours_sorted(cur)) {
            if (w == center || w == prev) continue;
            if (found) return std::nullopt;
            next = w;
            found = true;
        }
        if (!found) break;
        rim.push_back(next);
        prev = cur;
        cur = next;
    }
    if (static_cast<int>(rim.size()) != n - 1) return std::nullopt;
    if (rim.size() % 2 == 0 || rim.size() < 3) return std::nullopt;
    for (std::size_t i = 0; i < rim.size(); ++i) {
        bool want = (i % 2 == 0);
        if (g.has_edge(center, rim[i]) != want) return std::nullopt;
    }
    return SemiFan{center, rim};
}

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::AsymmetricAdjacency: return "ASYMMETRIC_ADJACENCY";
        case ErrorCode::NotAnEmbedding: return "NOT_AN_EMBEDDING";
        case ErrorCode::OuterNotAFace: return "OUTER_NOT_A_FACE";
        case ErrorCode::NotTwoConnected: return "NOT_TWO_CONNECTED";
        case ErrorCode::NotACycle: return "NOT_A_CYCLE";
        case ErrorCode::AdjacentVertices: return "ADJACENT_VERTICES";
        case ErrorCode::NoSharedFace: return "NO_SHARED_FACE";
        case ErrorCode::NotTriangleFree: return "NOT_TRIANGLE_FREE";
        case ErrorCode::PNotBoundaryPath: return "P_NOT_BOUNDARY_PATH";
        case ErrorCode::PTooLong: return "P_TOO_LONG";
        case ErrorCode::ListSizeOutOfRange: return "LIST_SIZE_OUT_OF_RANGE";
        case ErrorCode::SNotIndependent: return "S_NOT_INDEPENDENT";
        case ErrorCode::NotAChord: return "NOT_A_CHORD";
        case ErrorCode::NotApplicable: return "NOT_APPLICABLE";
        case ErrorCode::InvalidTarget: return "INVALID_TARGET";
        case ErrorCode::InternalNoReduction: return "INTERNAL_NO_REDUCTION";
        case ErrorCode::NoAdmissibleColour: return "NO_ADMISSIBLE_COLOUR";
        case ErrorCode::NoColouring: return "NO_COLOURING";
        case ErrorCode::DisagreementOnShared: return "DISAGREEMENT_ON_SHARED";
        case ErrorCode::CapTooSmall: return "CAP_TOO_SMALL";
        case ErrorCode::BoundExceeded: return "BOUND_EXCEEDED";
        case ErrorCode::ParseError: return "PARSE_ERROR";
        case ErrorCode::Truncated: return "TRUNCATED";
        case ErrorCode::BadHeader: return "BAD_HEADER";
        case ErrorCode::Internal: return "INTERNAL";
    }
    return "UNKNOWN";
}

} // namespace tfplc
