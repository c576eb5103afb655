#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "tfplc/oracle.hpp"

using namespace tfplc;

namespace {

PlaneGraph cycle_graph(int n) {
    std::map<VertexId, std::vector<VertexId>> r;
    std::vector<VertexId> outer;
    for (int v = 1; v <= n; ++v) {
        int prev = v == 1 ? n : v - 1;
        int next = v == n ? 1 : v + 1;
        r[v] = {next, prev};
        outer.push_back(v);
    }
    return PlaneGraph::build(r, outer);
}

PlaneGraph single_edge() { return PlaneGraph::build({{1, {2}}, {2, {1}}}, {1, 2}); }

// Naive canonical counting: enumerate every assignment over {1..cap},
// canonicalize by renaming colours in order of first appearance, dedupe.
std::set<std::vector<std::vector<int>>> naive_canonical(const PlaneGraph& g,
                                                        const std::map<VertexId, int>& sizes,
                                                        int cap) {
    std::vector<VertexId> vs = g.vertices();
    std::vector<std::vector<std::vector<int>>> partials{{}};
    for (VertexId v : vs) {
        int s = sizes.at(v);
        std::vector<std::vector<int>> subsets;
        std::vector<int> comb;
        std::function<void(int)> gen = [&](int from) {
            if (static_cast<int>(comb.size()) == s) {
                subsets.push_back(comb);
                return;
            }
            for (int c = from; c <= cap; ++c) {
                comb.push_back(c);
                gen(c + 1);
                comb.pop_back();
            }
        };
        gen(1);
        std::vector<std::vector<std::vector<int>>> next;
        for (const auto& p : partials)
            for (const auto& sset : subsets) {
                auto q = p;
                q.push_back(sset);
                next.push_back(q);
            }
        partials = std::move(next);
    }
    std::set<std::vector<std::vector<int>>> canon;
    std::vector<int> perm(cap);
    for (const auto& a : partials) {
        // Lex-min image over every permutation of {1..cap}.
        std::iota(perm.begin(), perm.end(), 1);
        std::vector<std::vector<int>> best;
        do {
            std::vector<std::vector<int>> img;
            for (const auto& l : a) {
                std::vector<int> cl;
                for (int col : l) cl.push_back(perm[col - 1]);
                std::sort(cl.begin(), cl.end());
                img.push_back(std::move(cl));
            }
            if (best.empty() || img < best) best = std::move(img);
        } while (std::next_permutation(perm.begin(), perm.end()));
        canon.insert(best);
    }
    return canon;
}

} // namespace

TEST_CASE("excluded edges impose no constraint") {
    PlaneGraph g = single_edge();
    ListAssignment l;
    l.set(1, {1});
    l.set(2, {1});
    EdgeSet excluded = make_edge_set({{1, 2}});
    auto c = brute_force_colour(g, l, excluded);
    REQUIRE(c.has_value());
    CHECK(c->at(1) == 1);
    CHECK(c->at(2) == 1);
    CHECK(is_proper_list_colouring(g, l, excluded, *c));

    CHECK_FALSE(brute_force_colour(g, l).has_value());
    CHECK_FALSE(naive_colour(g, l).has_value());
}

TEST_CASE("even cycle with all 2-lists is colourable") {
    PlaneGraph c6 = cycle_graph(6);
    ListAssignment l;
    for (VertexId v : c6.vertices()) l.set(v, {1, 2});
    auto c = brute_force_colour(c6, l);
    REQUIRE(c.has_value());
    CHECK(is_proper_list_colouring(c6, l, {}, *c));
}

TEST_CASE("backtracker agrees with the naive enumerator on small graphs") {
    auto corpus = enumerate_triangle_free_plane_graphs(5);
    int checked = 0;
    for (const auto& g : corpus) {
        for (int pattern = 0; pattern < 4; ++pattern) {
            ListAssignment l;
            int i = 0;
            for (VertexId v : g.vertices()) {
                switch ((pattern + i++) % 4) {
                    case 0: l.set(v, {1}); break;
                    case 1: l.set(v, {1, 2}); break;
                    case 2: l.set(v, {2, 3}); break;
                    default: l.set(v, {1, 2, 3}); break;
                }
            }
            auto fast = brute_force_colour(g, l);
            auto slow = naive_colour(g, l);
            CHECK(fast.has_value() == slow.has_value());
            if (fast) CHECK(is_proper_list_colouring(g, l, {}, *fast));
            ++checked;
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("canonical list enumeration on the spec examples") {
    PlaneGraph e = single_edge();
    auto lists = collect_canonical_lists(e, [](VertexId) { return 1; }, 4);
    REQUIRE(lists.size() == 2);
    CHECK(lists[0].at(1) == ColourList{1});
    std::set<std::vector<int>> seconds;
    for (const auto& l : lists)
        seconds.insert(std::vector<int>(l.at(2).begin(), l.at(2).end()));
    CHECK(seconds == std::set<std::vector<int>>{{1}, {2}});

    PlaneGraph k1 = PlaneGraph::build({{1, {}}}, {1});
    auto l3 = collect_canonical_lists(k1, [](VertexId) { return 3; }, 6);
    REQUIRE(l3.size() == 1);
    CHECK(l3[0].at(1) == ColourList{1, 2, 3});

    CHECK_THROWS_WITH_AS(collect_canonical_lists(k1, [](VertexId) { return 3; }, 2),
                         doctest::Contains("CAP_TOO_SMALL"), Error);
}

TEST_CASE("canonical enumeration matches naive canonicalization on P3") {
    PlaneGraph p3 = PlaneGraph::build({{1, {2}}, {2, {1, 3}}, {3, {2}}}, {1, 2, 3, 2});
    std::map<VertexId, int> sizes{{1, 2}, {2, 2}, {3, 2}};
    auto fast = collect_canonical_lists(p3, [&](VertexId v) { return sizes.at(v); }, 6);
    auto slow = naive_canonical(p3, sizes, 6);
    CHECK(fast.size() == slow.size());
}

TEST_CASE("canonical orbit sizes sum to the naive assignment count") {
    PlaneGraph e = single_edge();
    std::map<VertexId, int> sizes{{1, 2}, {2, 1}};
    auto canon = collect_canonical_lists(e, [&](VertexId v) { return sizes.at(v); }, 3);
    std::uint64_t naive_count = 9; // C(3,2) * C(3,1)
    std::uint64_t orbit_total = 0;
    for (const auto& l : canon) {
        std::vector<int> perm{1, 2, 3};
        std::set<std::vector<std::vector<int>>> images;
        do {
            std::vector<std::vector<int>> img;
            for (VertexId v : e.vertices()) {
                std::vector<int> cl;
                for (int c : l.at(v)) cl.push_back(perm[c - 1]);
                std::sort(cl.begin(), cl.end());
                img.push_back(cl);
            }
            images.insert(img);
        } while (std::next_permutation(perm.begin(), perm.end()));
        orbit_total += images.size();
    }
    CHECK(orbit_total == naive_count);
}

TEST_CASE("verify_k_sufficient on the spec examples") {
    PlaneGraph c5 = cycle_graph(5);
    Verdict v = verify_k_sufficient({&c5, {1}, 3}, 6);
    CHECK(v.status != VerdictStatus::Counterexample);
    CHECK(v.assignments_checked > 0);

    PlaneGraph c4 = cycle_graph(4);
    Verdict v2 = verify_k_sufficient({&c4, {1, 3}, 3}, 6);
    CHECK(v2.status != VerdictStatus::Counterexample);

    PlaneGraph e = single_edge();
    Verdict v3 = verify_k_sufficient({&e, {1}, 1}, 4);
    CHECK(v3.status == VerdictStatus::AllColourable);
    Verdict v4 = verify_k_sufficient({&e, {1, 2}, 1}, 4);
    CHECK(v4.status == VerdictStatus::Counterexample);
    REQUIRE(v4.witness_lists.has_value());
    CHECK(v4.witness_lists->at(1) == v4.witness_lists->at(2));
}

TEST_CASE("independent sets enumeration") {
    PlaneGraph c4 = cycle_graph(4);
    auto all = independent_sets(c4, SweepMode::AllX);
    CHECK(all.size() == 7); // {}, four singletons, {1,3}, {2,4}
    auto maximal = independent_sets(c4, SweepMode::MaximalX);
    REQUIRE(maximal.size() == 2);
    CHECK(maximal[0] == std::vector<VertexId>{1, 3});
    CHECK(maximal[1] == std::vector<VertexId>{2, 4});
}

TEST_CASE("theorem-1 sweep examples") {
    PlaneGraph c4 = cycle_graph(4);
    // Capped at universe 6 (sum of sizes exceeds it), still no counterexample.
    Verdict v = verify_theorem1_sweep(c4, SweepMode::AllX, 6);
    CHECK(v.status == VerdictStatus::Capped);

    // Absolutely complete at cap = sum of list sizes.
    Verdict vc = verify_k_sufficient({&c4, {1, 3}, 3}, 14);
    CHECK(vc.status == VerdictStatus::AllColourable);

    PlaneGraph k4 =
        PlaneGraph::build({{1, {2, 4, 3}}, {2, {3, 4, 1}}, {3, {1, 4, 2}}, {4, {1, 2, 3}}},
                          {1, 2, 3});
    CHECK_THROWS_WITH_AS(verify_theorem1_sweep(k4, SweepMode::MaximalX, 6),
                         doctest::Contains("NOT_TRIANGLE_FREE"), Error);
}

TEST_CASE("odd cycles have the all-equal 2-list witness") {
    for (int n : {5, 7}) {
        PlaneGraph g = cycle_graph(n);
        ListAssignment l;
        for (VertexId v : g.vertices()) l.set(v, {1, 2});
        CHECK_FALSE(brute_force_colour(g, l).has_value());
    }
}

TEST_CASE("triangle-free enumeration counts") {
    auto up_to_3 = enumerate_triangle_free_plane_graphs(3);
    CHECK(up_to_3.size() == 3); // K1, K2, P3

    auto up_to_4 = enumerate_triangle_free_plane_graphs(4);
    CHECK(up_to_4.size() == 6); // + P4, K_{1,3}, C4
    for (const auto& g : up_to_4) CHECK(g.is_triangle_free());

    PlaneGraph c4 = cycle_graph(4);
    int c4_count = 0;
    for (const auto& g : up_to_4)
        if (graphs_isomorphic(g, c4)) ++c4_count;
    CHECK(c4_count == 1);

    CHECK_THROWS_WITH_AS(enumerate_triangle_free_plane_graphs(9),
                         doctest::Contains("BOUND_EXCEEDED"), Error);
}

TEST_CASE("embed_planar accepts K4 and rejects K5 and K33") {
    std::map<VertexId, std::vector<VertexId>> k4;
    for (int v = 1; v <= 4; ++v)
        for (int w = 1; w <= 4; ++w)
            if (v != w) k4[v].push_back(w);
    CHECK(embed_planar(k4).has_value());

    std::map<VertexId, std::vector<VertexId>> k5;
    for (int v = 1; v <= 5; ++v)
        for (int w = 1; w <= 5; ++w)
            if (v != w) k5[v].push_back(w);
    CHECK_FALSE(embed_planar(k5).has_value());

    std::map<VertexId, std::vector<VertexId>> k33;
    for (int v = 1; v <= 3; ++v)
        for (int w = 4; w <= 6; ++w) {
            k33[v].push_back(w);
            k33[w].push_back(v);
        }
    CHECK_FALSE(embed_planar(k33).has_value());
}

TEST_CASE("sweep checkpoint skips completed items") {
    PlaneGraph c4 = cycle_graph(4);
    SweepOptions opts;
    opts.mode = SweepMode::MaximalX;
    opts.universe_cap = 6;
    std::string path = "/tmp/tfplc_ck_test.txt";
    std::remove(path.c_str());
    opts.checkpoint_path = path;
    Verdict v1 = sweep_corpus({c4}, opts);
    CHECK(v1.x_sets_checked == 2);
    Verdict v2 = sweep_corpus({c4}, opts);
    CHECK(v2.x_sets_checked == 0);
    std::remove(path.c_str());
}
