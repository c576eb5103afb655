#include "tfplc/target.hpp"

#include <algorithm>
#include <set>

namespace tfplc {

EdgeSet Target::exempt_edges() const {
    EdgeSet s;
    for (VertexId a : p_path)
        for (VertexId b : p_path)
            if (a < b && g().has_edge(a, b)) s.insert({a, b});
    return s;
}

std::vector<VertexId> Target::s_set() const {
    std::vector<VertexId> out;
    for (VertexId v : g().vertices())
        if (g().is_interior(v) && lists.at(v).size() == 3) out.push_back(v);
    return out;
}

Target make_target(std::shared_ptr<const PlaneGraph> g, std::vector<VertexId> p,
                   ListAssignment lists) {
    const PlaneGraph& graph = *g;
    if (!graph.is_triangle_free()) fail(ErrorCode::NotTriangleFree, "target host has a triangle");
    if (p.size() > 5) fail(ErrorCode::PTooLong, "P has more than five vertices");

    // P must be consecutive on the boundary walk of the designated outer face.
    if (!p.empty()) {
        std::set<VertexId> distinct(p.begin(), p.end());
        if (distinct.size() != p.size()) fail(ErrorCode::PNotBoundaryPath, "P repeats a vertex");
        for (VertexId v : p)
            if (!graph.has_vertex(v) || !graph.is_boundary(v))
                fail(ErrorCode::PNotBoundaryPath, "P vertex off the boundary");
        if (p.size() >= 2) {
            std::vector<VertexId> walk = graph.outer_walk();
            int n = static_cast<int>(walk.size());
            bool found = false;
            for (int start = 0; start < n && !found; ++start) {
                for (int dir : {1, -1}) {
                    bool ok = true;
                    for (std::size_t t = 0; t < p.size() && ok; ++t)
                        if (walk[((start + dir * static_cast<int>(t)) % n + n) % n] != p[t])
                            ok = false;
                    if (ok) {
                        found = true;
                        break;
                    }
                }
            }
            if (!found)
                fail(ErrorCode::PNotBoundaryPath, "P is not consecutive on the boundary walk");
        }
    }

    std::set<VertexId> p_set(p.begin(), p.end());
    for (VertexId v : graph.vertices()) {
        if (!lists.has(v))
            fail(ErrorCode::ListSizeOutOfRange, "vertex " + std::to_string(v) + " has no list");
        int s = lists.at(v).size();
        if (p_set.count(v)) {
            if (s < 1 || s > 4)
                fail(ErrorCode::ListSizeOutOfRange,
                     "P vertex " + std::to_string(v) + " needs 1..4 colours");
        } else if (graph.is_boundary(v)) {
            if (s < 2 || s > 4)
                fail(ErrorCode::ListSizeOutOfRange,
                     "boundary vertex " + std::to_string(v) + " needs 2..4 colours");
        } else {
            if (s < 3 || s > 4)
                fail(ErrorCode::ListSizeOutOfRange,
                     "interior vertex " + std::to_string(v) + " needs 3..4 colours");
        }
    }

    Target t{std::move(g), std::move(p), std::move(lists)};
    auto s = t.s_set();
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (t.g().has_edge(s[i], s[j]))
                fail(ErrorCode::SNotIndependent, "interior 3-list vertices " +
                                                     std::to_string(s[i]) + " and " +
                                                     std::to_string(s[j]) + " are adjacent");
    return t;
}

Target make_target(const PlaneGraph& g, std::vector<VertexId> p, ListAssignment lists) {
    return make_target(std::make_shared<PlaneGraph>(g), std::move(p), std::move(lists));
}

ValidityReport validity_report(const Target& t) {
    ValidityReport rep;
    const PlaneGraph& g = t.g();
    int k = t.k();

    // Bad vertices exist only under a full-length P. P vertices themselves
    // are never bad: their colour is already fixed, nothing is obstructed.
    if (k == 5) {
        for (VertexId u : g.vertices()) {
            if (t.in_p(u)) continue;
            ColourList cup;
            int p_nbrs = 0;
            for (VertexId x : t.p_path)
                if (g.has_edge(u, x)) {
                    ++p_nbrs;
                    cup = cup.union_with(t.lists.at(x));
                }
            const ColourList& lu = t.lists.at(u);
            if (lu.subset_of(cup) || (p_nbrs == 2 && lu.minus(cup).size() == 1))
                rep.bad_vertices.push_back(u);
        }
    }

    // Bad edges.
    std::set<BadEdge> edges;
    for (VertexId x : g.vertices())
        for (VertexId y : g.neighbours_sorted(x)) {
            if (y < x) continue;
            if (t.lists.at(x).size() == 2 && t.lists.at(y).size() == 2) edges.insert({x, y});
        }
    if (k >= 3) {
        std::vector<VertexId> anchors;
        if (k == 5)
            anchors = t.p_path;
        else
            anchors = {t.p_path.front(), t.p_path.back()};
        for (VertexId x : anchors)
            for (VertexId y : g.neighbours_sorted(x))
                if (t.lists.at(y).size() == 2)
                    edges.insert({std::min(x, y), std::max(x, y)});
    }
    rep.bad_edges.assign(edges.begin(), edges.end());

    // Bad 4-cycles: x, y, z consecutive on an outer walk, w interior, sizes
    // (3,2,3) and 3. Both walk directions give the same triples.
    std::set<Bad4Cycle> cycles;
    std::set<int> outer_faces;
    for (VertexId v : g.vertices()) outer_faces.insert(g.outer_face_id_of_component(v));
    for (int f : outer_faces) {
        std::vector<VertexId> walk;
        for (const Dart& d : g.face(f))
            if (d.from != d.to) walk.push_back(d.from);
        int n = static_cast<int>(walk.size());
        if (n < 3) continue;
        for (int i = 0; i < n; ++i) {
            VertexId x = walk[(i + n - 1) % n], y = walk[i], z = walk[(i + 1) % n];
            if (x == y || y == z || x == z) continue;
            if (t.lists.at(x).size() != 3 || t.lists.at(y).size() != 2 ||
                t.lists.at(z).size() != 3)
                continue;
            for (VertexId w : g.neighbours_sorted(x)) {
                if (w == y || w == z || !g.is_interior(w)) continue;
                if (!g.has_edge(w, z)) continue;
                if (t.lists.at(w).size() != 3) continue;
                Bad4Cycle cyc{x, y, z, w};
                if (z < x) cyc = Bad4Cycle{z, y, x, w};
                cycles.insert(cyc);
            }
        }
    }
    rep.bad_4cycles.assign(cycles.begin(), cycles.end());
    return rep;
}

namespace {

bool is_ichord_of(const PlaneGraph& g, const IChord& w) {
    const auto& path = w.path;
    if (path.size() < 2 || path.size() > 5) return false;
    std::set<VertexId> distinct(path.begin(), path.end());
    if (distinct.size() != path.size()) return false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.has_edge(path[i], path[i + 1])) return false;
    if (!g.is_boundary(path.front()) || !g.is_boundary(path.back())) return false;
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
        if (!g.is_interior(path[i])) return false;
    BoundaryWalk walk(g);
    if (!walk.simple()) return false;
    VertexId u = path.front(), v = path.back();
    if (walk.succ(u) == v || walk.pred(u) == v) return false;
    return true;
}

} // namespace

std::vector<ChordSplit> all_chord_splits(const Target& t, const IChord& w) {
    const PlaneGraph& g = t.g();
    if (!g.is_two_connected())
        fail(ErrorCode::NotTwoConnected, "chord split needs 2-connectivity");
    if (!is_ichord_of(g, w)) fail(ErrorCode::NotAChord, "not an i-chord of the graph");

    BoundaryWalk walk(g);
    const std::vector<VertexId>& cyc = walk.cycle();
    int n = static_cast<int>(cyc.size());
    VertexId a = w.path.front(), b = w.path.back();
    int pa = walk.position(a), pb = walk.position(b);

    auto arc_between = [&](int from, int to) {
        std::vector<VertexId> arc;
        for (int i = (from + 1) % n; i != to; i = (i + 1) % n) arc.push_back(cyc[i]);
        return arc;
    };
    std::vector<VertexId> arc_ab = arc_between(pa, pb); // strictly between, walk order
    std::vector<VertexId> arc_ba = arc_between(pb, pa);

    // Vertices strictly inside the pocket bounded by the chord path and one
    // boundary arc.
    auto pocket = [&](const std::vector<VertexId>& arc, bool arc_runs_a_to_b) {
        std::vector<VertexId> cycle = w.path; // a .. b
        if (arc_runs_a_to_b) {
            for (auto it = arc.rbegin(); it != arc.rend(); ++it) cycle.push_back(*it);
        } else {
            for (VertexId x : arc) cycle.push_back(x);
        }
        return g.interior_of_cycle(cycle);
    };

    struct Side {
        std::vector<VertexId> vertices;
    };
    auto make_side = [&](const std::vector<VertexId>& arc, bool a_to_b) {
        Side s;
        s.vertices = w.path;
        s.vertices.insert(s.vertices.end(), arc.begin(), arc.end());
        auto inner = pocket(arc, a_to_b);
        s.vertices.insert(s.vertices.end(), inner.begin(), inner.end());
        return s;
    };
    Side side_ab = make_side(arc_ab, true);
    Side side_ba = make_side(arc_ba, false);

    std::set<VertexId> p_set(t.p_path.begin(), t.p_path.end());
    auto p_indices_in = [&](const Side& s) {
        std::set<VertexId> vs(s.vertices.begin(), s.vertices.end());
        std::vector<int> idx;
        for (int i = 0; i < t.k(); ++i)
            if (vs.count(t.p_path[i])) idx.push_back(i);
        return idx;
    };
    auto contiguous = [](const std::vector<int>& idx) {
        for (std::size_t i = 1; i < idx.size(); ++i)
            if (idx[i] != idx[i - 1] + 1) return false;
        return true;
    };

    struct Option {
        const Side* g1;
        const Side* g2;
        VertexId u, v;
        int p_in_g1;
    };
    std::vector<Option> options;
    auto consider = [&](const Side& s1, const Side& s2, VertexId u, VertexId v) {
        auto idx1 = p_indices_in(s1);
        if (!contiguous(idx1)) return;
        options.push_back({&s1, &s2, u, v, static_cast<int>(idx1.size())});
    };
    // G2 = side_ba holds pred(a) and succ(b): label u = a, v = b.
    consider(side_ab, side_ba, a, b);
    // G2 = side_ab holds pred(b) and succ(a): label u = b, v = a.
    consider(side_ba, side_ab, b, a);
    std::stable_sort(options.begin(), options.end(),
                     [](const Option& x, const Option& y) { return x.p_in_g1 > y.p_in_g1; });
    // Convention (2): side 1 carries as much of P as possible; drop the
    // other orientation unless it ties.
    while (options.size() > 1 && options.back().p_in_g1 < options.front().p_in_g1)
        options.pop_back();

    std::vector<ChordSplit> out;
    for (const Option& opt : options) {
        ChordSplit split;
        split.chord.path = w.path;
        if (split.chord.path.front() != opt.u)
            std::reverse(split.chord.path.begin(), split.chord.path.end());
        split.g1 = g.induced(opt.g1->vertices);
        split.g2 = g.induced(opt.g2->vertices);

        std::set<VertexId> s2(opt.g2->vertices.begin(), opt.g2->vertices.end());
        std::set<VertexId> pw_set(w.path.begin(), w.path.end());
        for (VertexId x : opt.g2->vertices)
            if (p_set.count(x)) pw_set.insert(x);
        VertexId u_minus = walk.pred(opt.u);
        VertexId v_plus = walk.succ(opt.v);
        if (!s2.count(u_minus) || !s2.count(v_plus))
            fail(ErrorCode::Internal, "chord labelling lost its side-2 neighbours");
        if (t.lists.at(u_minus).size() == 2) pw_set.insert(u_minus);
        if (t.lists.at(v_plus).size() == 2) pw_set.insert(v_plus);

        // Assemble P_W as a contiguous subpath of B(g2).
        std::vector<VertexId> cyc2;
        for (const Dart& d : split.g2.face(split.g2.outer_face_id()))
            if (d.from != d.to) cyc2.push_back(d.from);
        int m = static_cast<int>(cyc2.size());
        std::vector<VertexId> path;
        bool assembled = false;
        if (static_cast<int>(pw_set.size()) == m) {
            // Whole boundary: open the cycle at the u side.
            for (int start = 0; start < m && !assembled; ++start)
                if (cyc2[start] == opt.u) {
                    for (int i = 0; i < m; ++i) path.push_back(cyc2[(start + i) % m]);
                    assembled = true;
                }
        } else {
            for (int start = 0; start < m && !assembled; ++start) {
                if (!pw_set.count(cyc2[start])) continue;
                if (pw_set.count(cyc2[(start + m - 1) % m])) continue;
                std::vector<VertexId> trial;
                int i = start;
                while (pw_set.count(cyc2[i % m]) && static_cast<int>(trial.size()) < m) {
                    trial.push_back(cyc2[i % m]);
                    ++i;
                }
                std::set<VertexId> seen(trial.begin(), trial.end());
                if (seen.size() == trial.size() && trial.size() == pw_set.size()) {
                    path = trial;
                    assembled = true;
                }
            }
        }
        if (!assembled) continue; // P_W does not form a single boundary path
        split.p_w = path;

        std::vector<VertexId> aug = opt.g1->vertices;
        for (VertexId x : split.p_w)
            if (std::find(aug.begin(), aug.end(), x) == aug.end()) aug.push_back(x);
        split.g1_aug = g.induced(aug);
        split.feasible = split.g1_aug.num_vertices() != g.num_vertices();
        out.push_back(std::move(split));
    }
    return out;
}

ChordSplit chord_split(const Target& t, const IChord& w) {
    auto splits = all_chord_splits(t, w);
    if (splits.empty())
        fail(ErrorCode::NotApplicable, "no admissible split: P_W is not a single boundary path");
    return splits.front();
}

std::array<int, 3> classify_chord(const Target& t, const IChord& w) {
    return {t.lists.at(w.path.front()).size(), t.lists.at(w.path.back()).size(), w.length()};
}

std::optional<NonFeasibleShape> classify_non_feasible(const Target& t, const ChordSplit& split) {
    if (split.feasible) return std::nullopt;
    const PlaneGraph& g = t.g();
    BoundaryWalk walk(g);
    VertexId u = split.chord.end_u(), v = split.chord.end_v();
    VertexId u_minus = walk.pred(u);
    VertexId v_plus = walk.succ(v);

    // The first two shapes are both pinches (u^- = v^+); they differ in
    // whether the pinch vertex is a 2-list boundary vertex or a P vertex.
    // With k <= 2 the chord ends themselves may land in P.
    if (u_minus == v_plus && !t.in_p(u_minus) && t.lists.at(v_plus).size() == 2)
        return NonFeasibleShape::AttachmentPinch;
    if (u_minus == v_plus && t.in_p(u_minus)) return NonFeasibleShape::InsideP;
    for (VertexId end : {v, u}) {
        int j = -1;
        for (int i = 0; i < t.k(); ++i)
            if (t.p_path[i] == end) j = i + 1;
        if (j < 1 || j > 3) continue;
        std::set<VertexId> beyond(split.g2.vertices().begin(), split.g2.vertices().end());
        for (VertexId x : split.chord.path) beyond.erase(x);
        std::set<VertexId> expect;
        for (int i = 0; i + 1 < j; ++i) expect.insert(t.p_path[i]);
        if (beyond == expect) return NonFeasibleShape::PPrefix;
    }
    return std::nullopt;
}

} // namespace tfplc
