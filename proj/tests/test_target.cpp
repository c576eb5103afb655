#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "tfplc/generator.hpp"
#include "tfplc/target.hpp"

using namespace tfplc;

namespace {

using Rot = std::map<VertexId, std::vector<VertexId>>;

PlaneGraph four_cycle() {
    return PlaneGraph::build({{1, {2, 4}}, {2, {3, 1}}, {3, {4, 2}}, {4, {1, 3}}},
                             {1, 2, 3, 4});
}

PlaneGraph hexagon_center() {
    Rot r{{1, {2, 7, 6}}, {2, {3, 1}}, {3, {4, 7, 2}}, {4, {5, 3}},
          {5, {6, 7, 4}}, {6, {1, 5}}, {7, {1, 3, 5}}};
    return PlaneGraph::build(r, {1, 2, 3, 4, 5, 6});
}

// Hexagon with one interior vertex adjacent to 1 and 3 only.
PlaneGraph hexagon_ear() {
    Rot r{{1, {2, 7, 6}}, {2, {3, 1}}, {3, {4, 7, 2}}, {4, {5, 3}},
          {5, {6, 4}}, {6, {1, 5}}, {7, {3, 1}}};
    return PlaneGraph::build(r, {1, 2, 3, 4, 5, 6});
}

ListAssignment uniform_lists(const PlaneGraph& g, ColourList l) {
    ListAssignment out;
    for (VertexId v : g.vertices()) out.set(v, l);
    return out;
}

// Literal re-implementation of the validity predicate by quantifier
// expansion, sharing nothing with validity_report's loops.
struct NaiveValidity {
    std::vector<VertexId> bad_vertices;
    std::set<std::pair<VertexId, VertexId>> bad_edges;
    std::set<std::tuple<VertexId, VertexId, VertexId, VertexId>> bad_4cycles;
};

NaiveValidity naive_validity(const Target& t) {
    NaiveValidity out;
    const PlaneGraph& g = t.g();
    std::set<VertexId> p(t.p_path.begin(), t.p_path.end());

    if (t.k() == 5) {
        for (VertexId u : g.vertices()) {
            if (p.count(u)) continue;
            std::set<Colour> cup;
            int deg_p = 0;
            for (VertexId x : t.p_path)
                if (g.has_edge(u, x)) {
                    ++deg_p;
                    for (Colour c : t.lists.at(x)) cup.insert(c);
                }
            bool subset = true;
            int outside = 0;
            for (Colour c : t.lists.at(u)) {
                if (!cup.count(c)) {
                    subset = false;
                    ++outside;
                }
            }
            if (subset || (deg_p == 2 && outside == 1)) out.bad_vertices.push_back(u);
        }
    }
    for (VertexId x : g.vertices())
        for (VertexId y : g.vertices()) {
            if (x >= y || !g.has_edge(x, y)) continue;
            bool bad = t.lists.at(x).size() == 2 && t.lists.at(y).size() == 2;
            auto clause = [&](VertexId a, VertexId b) {
                if (t.lists.at(b).size() != 2) return false;
                if (t.k() == 5) return p.count(a) != 0;
                if (t.k() == 3 || t.k() == 4)
                    return a == t.p_path.front() || a == t.p_path.back();
                return false;
            };
            if (clause(x, y) || clause(y, x)) bad = true;
            if (bad) out.bad_edges.insert({x, y});
        }

    auto consecutive3 = [&](VertexId a, VertexId b, VertexId c) {
        std::set<int> faces;
        for (VertexId v : g.vertices()) faces.insert(g.outer_face_id_of_component(v));
        for (int f : faces) {
            std::vector<VertexId> w;
            for (const Dart& d : g.face(f))
                if (d.from != d.to) w.push_back(d.from);
            int n = static_cast<int>(w.size());
            for (int i = 0; i < n; ++i) {
                VertexId x = w[i], y = w[(i + 1) % n], z = w[(i + 2) % n];
                if ((x == a && y == b && z == c) || (x == c && y == b && z == a)) return true;
            }
        }
        return false;
    };
    for (VertexId x : g.vertices())
        for (VertexId y : g.vertices())
            for (VertexId z : g.vertices())
                for (VertexId w : g.vertices()) {
                    if (x == y || x == z || x == w || y == z || y == w || z == w) continue;
                    if (x > z) continue; // canonical orientation
                    if (!g.has_edge(x, y) || !g.has_edge(y, z) || !g.has_edge(z, w) ||
                        !g.has_edge(w, x))
                        continue;
                    if (!g.is_interior(w)) continue;
                    if (g.is_interior(x) || g.is_interior(y) || g.is_interior(z)) continue;
                    if (!consecutive3(x, y, z)) continue;
                    if (t.lists.at(x).size() == 3 && t.lists.at(y).size() == 2 &&
                        t.lists.at(z).size() == 3 && t.lists.at(w).size() == 3)
                        out.bad_4cycles.insert({x, y, z, w});
                }
    return out;
}

} // namespace

TEST_CASE("make_target accepts the spec examples") {
    Target t = make_target(four_cycle(), {}, uniform_lists(four_cycle(), {1, 2, 3}));
    CHECK(t.k() == 0);
    CHECK(validity_report(t).is_valid());

    PlaneGraph hc = hexagon_center();
    Target t2 = make_target(hc, {}, uniform_lists(hc, {1, 2, 3}));
    CHECK(t2.s_set() == std::vector<VertexId>{7});
    CHECK(validity_report(t2).is_valid());
}

TEST_CASE("make_target rejections") {
    PlaneGraph k4 =
        PlaneGraph::build({{1, {2, 4, 3}}, {2, {3, 4, 1}}, {3, {1, 4, 2}}, {4, {1, 2, 3}}},
                          {1, 2, 3});
    CHECK_THROWS_WITH_AS(make_target(k4, {}, uniform_lists(k4, {1, 2, 3})),
                         doctest::Contains("NOT_TRIANGLE_FREE"), Error);

    Rot r{{1, {2, 5, 4}}, {2, {3, 6, 1}}, {3, {4, 7, 2}}, {4, {1, 8, 3}},
          {5, {1, 6, 8}}, {6, {2, 7, 5}}, {7, {3, 8, 6}}, {8, {4, 5, 7}}};
    PlaneGraph cube = PlaneGraph::build(r, {1, 2, 3, 4});
    ListAssignment l = uniform_lists(cube, {1, 2, 3, 4});
    l.set(5, {1, 2, 3});
    l.set(6, {1, 2, 3});
    CHECK_THROWS_WITH_AS(make_target(cube, {}, l), doctest::Contains("S_NOT_INDEPENDENT"), Error);

    PlaneGraph c4 = four_cycle();
    CHECK_THROWS_WITH_AS(make_target(c4, {1, 3}, uniform_lists(c4, {1, 2, 3})),
                         doctest::Contains("P_NOT_BOUNDARY_PATH"), Error);

    ListAssignment small = uniform_lists(cube, {1, 2, 3, 4});
    small.set(6, {1, 2});
    CHECK_THROWS_WITH_AS(make_target(cube, {}, small),
                         doctest::Contains("LIST_SIZE_OUT_OF_RANGE"), Error);
}

TEST_CASE("P_TOO_LONG surfaces on six-vertex paths") {
    Rot r;
    std::vector<VertexId> outer;
    for (int v = 1; v <= 8; ++v) {
        int prev = v == 1 ? 8 : v - 1;
        int next = v == 8 ? 1 : v + 1;
        r[v] = {next, prev};
        outer.push_back(v);
    }
    PlaneGraph oct = PlaneGraph::build(r, outer);
    CHECK_THROWS_WITH_AS(make_target(oct, {1, 2, 3, 4, 5, 6}, uniform_lists(oct, {1, 2})),
                         doctest::Contains("P_TOO_LONG"), Error);
}

TEST_CASE("validity_report spec examples") {
    Rot r;
    std::vector<VertexId> outer;
    for (int v = 1; v <= 8; ++v) {
        int prev = v == 1 ? 8 : v - 1;
        int next = v == 8 ? 1 : v + 1;
        r[v] = {next, prev};
        outer.push_back(v);
    }
    r[9] = {1, 3};
    r[1] = {2, 9, 8};
    r[3] = {4, 9, 2};
    PlaneGraph g = PlaneGraph::build(r, outer);

    ListAssignment l;
    l.set(1, {1});
    l.set(2, {2});
    l.set(3, {2});
    l.set(4, {4});
    l.set(5, {1, 2, 3});
    l.set(6, {1, 2, 3});
    l.set(7, {1, 2, 3});
    l.set(8, {1, 2, 3});
    l.set(9, {1, 2, 3});
    Target t4 = make_target(g, {1, 2, 3, 4}, l);
    CHECK(validity_report(t4).bad_vertices.empty());

    // k = 5: u = 9 adjacent to p1 = 1 and p3 = 3, L(9) = {1,2,3},
    // L(1) = {1}, L(3) = {2}: exactly one colour survives, so 9 is bad.
    l.set(5, {5});
    Target t5 = make_target(g, {1, 2, 3, 4, 5}, l);
    auto rep = validity_report(t5);
    CHECK(rep.bad_vertices == std::vector<VertexId>{9});
    CHECK(rep.bad_edges.empty());
    CHECK(rep.bad_4cycles.empty());
}

TEST_CASE("bad 4-cycle example") {
    PlaneGraph hc = hexagon_center();
    ListAssignment l = uniform_lists(hc, {1, 2, 3});
    l.set(2, {1, 2});
    Target t = make_target(hc, {}, l);
    auto rep = validity_report(t);
    REQUIRE(rep.bad_4cycles.size() == 1);
    CHECK(rep.bad_4cycles[0] == Bad4Cycle{1, 2, 3, 7});
    CHECK(rep.bad_edges.empty());
}

TEST_CASE("bad edge clauses at each k") {
    PlaneGraph hc = hexagon_ear();
    ListAssignment l = uniform_lists(hc, {1, 2, 3});
    l.set(4, {1, 2});
    l.set(5, {2, 3});
    Target t = make_target(hc, {}, l);
    auto rep = validity_report(t);
    REQUIRE(rep.bad_edges.size() == 1);
    CHECK(rep.bad_edges[0] == BadEdge{4, 5});

    ListAssignment l2 = uniform_lists(hc, {1, 2, 3});
    l2.set(1, {1});
    l2.set(2, {2});
    l2.set(3, {3});
    l2.set(4, {1, 2});
    Target t3 = make_target(hc, {1, 2, 3}, l2);
    auto rep3 = validity_report(t3);
    REQUIRE(rep3.bad_edges.size() == 1);
    CHECK(rep3.bad_edges[0] == BadEdge{3, 4}); // p3 is an end, 4 carries a 2-list

    ListAssignment l3 = uniform_lists(hc, {1, 2, 3});
    l3.set(1, {1});
    l3.set(2, {2});
    l3.set(4, {1, 2});
    Target t2 = make_target(hc, {1, 2}, l3);
    CHECK(validity_report(t2).bad_edges.empty());
}

TEST_CASE("validity_report agrees with the quantifier-expansion evaluator") {
    Rng rng(20260810);
    TargetGenOptions opts;
    opts.max_n = 12;
    int trials = 400;
    for (int i = 0; i < trials; ++i) {
        Target t = random_valid_target(rng, opts);
        // Shrink some boundary lists to grow bad elements too.
        if (i % 2 == 0 && t.g().num_vertices() > 4) {
            ListAssignment l = t.lists;
            for (VertexId v : t.g().vertices()) {
                if (t.in_p(v) || t.g().is_interior(v)) continue;
                if (l.at(v).size() > 2 && i % 4 == 0) {
                    ColourList c = l.at(v);
                    c.remove(c.min());
                    l.set(v, c);
                }
            }
            try {
                t = make_target(t.graph, t.p_path, l);
            } catch (const Error&) {
                continue;
            }
        }
        auto fast = validity_report(t);
        auto slow = naive_validity(t);
        CHECK(fast.bad_vertices == slow.bad_vertices);
        std::set<std::pair<VertexId, VertexId>> fe;
        for (auto e : fast.bad_edges) fe.insert({e.x, e.y});
        CHECK(fe == slow.bad_edges);
        std::set<std::tuple<VertexId, VertexId, VertexId, VertexId>> fc;
        for (auto c : fast.bad_4cycles) fc.insert({c.x, c.y, c.z, c.w});
        CHECK(fc == slow.bad_4cycles);
    }
}

TEST_CASE("chord split on a hexagon with an ear") {
    PlaneGraph g = hexagon_ear();
    ListAssignment l = uniform_lists(g, {1, 2, 3});
    l.set(2, {1, 2});
    Target t = make_target(g, {}, l);
    IChord w{{1, 7, 3}};

    auto splits = all_chord_splits(t, w);
    REQUIRE(splits.size() == 2);

    const ChordSplit& s0 = splits[0];
    CHECK(s0.feasible);
    CHECK(s0.p_w == std::vector<VertexId>{1, 7, 3});
    CHECK(s0.g1.num_vertices() == 4);
    CHECK(s0.g2.num_vertices() == 6);
    std::set<VertexId> inter;
    for (VertexId v : s0.g1.vertices())
        if (s0.g2.has_vertex(v)) inter.insert(v);
    CHECK(inter == std::set<VertexId>{1, 7, 3});

    // The pinch side: non-feasible, first Observation-7 shape.
    const ChordSplit& s1 = splits[1];
    CHECK_FALSE(s1.feasible);
    CHECK(s1.g1_aug.num_vertices() == g.num_vertices());
    auto shape = classify_non_feasible(t, s1);
    REQUIRE(shape.has_value());
    CHECK(*shape == NonFeasibleShape::AttachmentPinch);
}

TEST_CASE("chord split with P across the junction") {
    Rot r;
    std::vector<VertexId> outer;
    for (int v = 1; v <= 8; ++v) {
        int prev = v == 1 ? 8 : v - 1;
        int next = v == 8 ? 1 : v + 1;
        r[v] = {next, prev};
        outer.push_back(v);
    }
    r[9] = {3, 6};
    r[3] = {4, 9, 2};
    r[6] = {7, 9, 5};
    PlaneGraph g = PlaneGraph::build(r, outer);
    REQUIRE(g.is_interior(9));

    ListAssignment l = uniform_lists(g, {1, 2, 3});
    l.set(1, {1});
    l.set(2, {2});
    l.set(3, {3});
    l.set(4, {1, 2});
    Target t = make_target(g, {1, 2, 3}, l);

    auto splits = all_chord_splits(t, IChord{{3, 9, 6}});
    REQUIRE(splits.size() == 1); // side 1 must carry the whole of P
    const ChordSplit& s = splits[0];
    CHECK(s.g1.has_vertex(1));
    CHECK(s.g1.has_vertex(2));
    CHECK(s.feasible);
    // W plus the 2-list boundary neighbour 4, in g2 boundary order.
    CHECK(s.p_w == std::vector<VertexId>{6, 9, 3, 4});
}

TEST_CASE("classify_chord sizes") {
    PlaneGraph g = hexagon_ear();
    ListAssignment l = uniform_lists(g, {1, 2, 3});
    l.set(1, {1, 2, 3, 4});
    Target t = make_target(g, {}, l);
    auto abc = classify_chord(t, IChord{{1, 7, 3}});
    CHECK(abc == std::array<int, 3>{4, 3, 2});
    auto cba = classify_chord(t, IChord{{3, 7, 1}});
    CHECK(cba == std::array<int, 3>{3, 4, 2});
}

TEST_CASE("chord split partition invariants on fuzzed targets") {
    Rng rng(7);
    TargetGenOptions opts;
    opts.max_n = 11;
    int splits_checked = 0;
    for (int i = 0; i < 120; ++i) {
        Target t = random_valid_target(rng, opts);
        if (!t.g().is_two_connected()) continue;
        for (int len = 1; len <= 4; ++len) {
            for (const IChord& w : find_i_chords(t.g(), len)) {
                for (const ChordSplit& s : all_chord_splits(t, w)) {
                    std::set<VertexId> v1(s.g1.vertices().begin(), s.g1.vertices().end());
                    std::set<VertexId> v2(s.g2.vertices().begin(), s.g2.vertices().end());
                    std::set<VertexId> uni = v1;
                    uni.insert(v2.begin(), v2.end());
                    CHECK(uni.size() == static_cast<std::size_t>(t.g().num_vertices()));
                    std::set<VertexId> expect_w(s.chord.path.begin(), s.chord.path.end());
                    std::set<VertexId> inter;
                    for (VertexId v : v1)
                        if (v2.count(v)) inter.insert(v);
                    CHECK(inter == expect_w);
                    for (VertexId v : s.chord.path)
                        CHECK(std::find(s.p_w.begin(), s.p_w.end(), v) != s.p_w.end());
                    // Observation-7 shapes cover every non-feasible split
                    // whose P_W could serve as a target's P.
                    if (!s.feasible && s.p_w.size() <= 5)
                        CHECK(classify_non_feasible(t, s).has_value());
                    ++splits_checked;
                }
            }
        }
    }
    CHECK(splits_checked > 50);
}
