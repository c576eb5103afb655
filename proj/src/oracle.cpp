#include "tfplc/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

namespace tfplc {

bool is_proper_list_colouring(const PlaneGraph& g, const ListAssignment& lists,
                              const EdgeSet& excluded, const Colouring& colouring) {
    for (VertexId v : g.vertices()) {
        auto it = colouring.find(v);
        if (it == colouring.end()) return false;
        if (!lists.at(v).contains(it->second)) return false;
        for (VertexId w : g.neighbours_sorted(v)) {
            if (w < v) continue;
            if (edge_in(excluded, v, w)) continue;
            auto jt = colouring.find(w);
            if (jt == colouring.end()) return false;
            if (it->second == jt->second) return false;
        }
    }
    return true;
}

namespace {

struct SolveInstance {
    std::vector<VertexId> verts;
    std::vector<std::vector<int>> nbrs; // constraint edges only (non-excluded)
    std::vector<ColourList> lists;

    SolveInstance(const PlaneGraph& g, const ListAssignment& l, const EdgeSet& excluded) {
        verts = g.vertices();
        std::map<VertexId, int> index;
        for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
        nbrs.resize(verts.size());
        lists.resize(verts.size());
        for (std::size_t i = 0; i < verts.size(); ++i) {
            lists[i] = l.at(verts[i]);
            for (VertexId w : g.neighbours_sorted(verts[i]))
                if (!edge_in(excluded, verts[i], w)) nbrs[i].push_back(index[w]);
        }
    }
};

} // namespace

std::optional<Colouring> brute_force_colour(const PlaneGraph& g, const ListAssignment& lists,
                                            const EdgeSet& excluded) {
    if (g.empty()) return Colouring{};
    SolveInstance inst(g, lists, excluded);
    int n = static_cast<int>(inst.verts.size());
    std::vector<Colour> assigned(n, 0);
    std::vector<bool> done(n, false);

    std::function<bool(int)> solve = [&](int coloured) -> bool {
        if (coloured == n) return true;
        // Smallest remaining list first, vertex order ascending on ties;
        // abort as soon as some vertex has no admissible colour.
        int best = -1;
        ColourList best_adm;
        for (int i = 0; i < n; ++i) {
            if (done[i]) continue;
            ColourList adm = inst.lists[i];
            for (int w : inst.nbrs[i])
                if (done[w]) adm.remove(assigned[w]);
            if (adm.empty()) return false;
            if (best < 0 || adm.size() < best_adm.size()) {
                best = i;
                best_adm = adm;
                if (adm.size() == 1) break;
            }
        }
        done[best] = true;
        for (Colour c : best_adm) {
            assigned[best] = c;
            if (solve(coloured + 1)) {
                return true;
            }
        }
        done[best] = false;
        return false;
    };

    if (!solve(0)) return std::nullopt;
    Colouring out;
    for (int i = 0; i < n; ++i) out[inst.verts[i]] = assigned[i];
    return out;
}

std::optional<Colouring> naive_colour(const PlaneGraph& g, const ListAssignment& lists,
                                      const EdgeSet& excluded) {
    if (g.empty()) return Colouring{};
    SolveInstance inst(g, lists, excluded);
    int n = static_cast<int>(inst.verts.size());
    std::vector<int> pick(n, 0);
    while (true) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int w : inst.nbrs[i])
                if (w < i && inst.lists[i][pick[i]] == inst.lists[w][pick[w]]) {
                    ok = false;
                    break;
                }
        if (ok) {
            Colouring out;
            for (int i = 0; i < n; ++i) out[inst.verts[i]] = inst.lists[i][pick[i]];
            return out;
        }
        int i = 0;
        while (i < n) {
            if (++pick[i] < inst.lists[i].size()) break;
            pick[i] = 0;
            ++i;
        }
        if (i == n) return std::nullopt;
    }
}

std::uint64_t enumerate_canonical_lists(const std::vector<VertexId>& order,
                                        const std::function<int(VertexId)>& sizes,
                                        int universe_cap,
                                        const std::function<bool(const ListAssignment&)>& visit) {
    int max_size = 0;
    for (VertexId v : order) max_size = std::max(max_size, sizes(v));
    if (universe_cap < max_size)
        fail(ErrorCode::CapTooSmall, "universe cap below the largest list size");

    std::uint64_t count = 0;
    ListAssignment cur;
    bool stop = false;

    // Orderly generation. Fresh colours must be the next unused integers
    // (restricted growth); on top of that, a prefix survives only if no
    // colour permutation fixing the earlier lists maps the new list to a
    // lexicographically smaller one. The stabilizer is carried explicitly as
    // permutations of the used colours, which keeps every emitted assignment
    // the unique lex-min of its renaming orbit. Beyond 8 colours the
    // stabilizer is dropped and the enumeration is a complete superset.
    const bool filter = universe_cap <= 8;

    using Perm = std::vector<int>; // perm[c] for c in 1..max_used, index 0 unused
    std::function<void(std::size_t, int, const std::vector<Perm>&)> rec =
        [&](std::size_t pos, int max_used, const std::vector<Perm>& stab) {
            if (stop) return;
            if (pos == order.size()) {
                ++count;
                if (!visit(cur)) stop = true;
                return;
            }
            VertexId v = order[pos];
            int s = sizes(v);
            for (int j = std::min(s, max_used); j >= 0; --j) {
                int fresh = s - j;
                if (max_used + fresh > universe_cap) continue;
                std::vector<int> comb(j);
                std::iota(comb.begin(), comb.end(), 1);
                while (true) {
                    ColourList l;
                    for (int c : comb) l.insert(c);
                    for (int t = 1; t <= fresh; ++t) l.insert(max_used + t);

                    bool canonical = true;
                    std::vector<Perm> next_stab;
                    if (filter) {
                        // Old part of the candidate, sorted.
                        for (const Perm& sigma : stab) {
                            std::vector<int> image;
                            for (int c : comb) image.push_back(sigma[c]);
                            std::sort(image.begin(), image.end());
                            if (std::lexicographical_compare(image.begin(), image.end(),
                                                             comb.begin(), comb.end())) {
                                canonical = false;
                                break;
                            }
                            if (image == comb) {
                                // Extend over the fresh block in every way.
                                std::vector<int> f(fresh);
                                std::iota(f.begin(), f.end(), max_used + 1);
                                std::sort(f.begin(), f.end());
                                do {
                                    Perm ext = sigma;
                                    ext.resize(max_used + fresh + 1);
                                    for (int t = 0; t < fresh; ++t)
                                        ext[max_used + 1 + t] = f[t];
                                    next_stab.push_back(std::move(ext));
                                } while (std::next_permutation(f.begin(), f.end()));
                            }
                        }
                    }
                    if (canonical) {
                        cur.set(v, l);
                        rec(pos + 1, max_used + fresh, next_stab);
                        if (stop) return;
                    }
                    if (j == 0) break;
                    int i = j - 1;
                    while (i >= 0 && comb[i] == max_used - (j - 1 - i)) --i;
                    if (i < 0) break;
                    ++comb[i];
                    for (int t = i + 1; t < j; ++t) comb[t] = comb[t - 1] + 1;
                }
            }
            cur.erase(v);
        };
    std::vector<Perm> identity_stab{Perm{0}}; // no used colours yet
    rec(0, 0, identity_stab);
    return count;
}

std::vector<ListAssignment> collect_canonical_lists(const PlaneGraph& g,
                                                    const std::function<int(VertexId)>& sizes,
                                                    int universe_cap) {
    std::vector<ListAssignment> out;
    enumerate_canonical_lists(g.vertices(), sizes, universe_cap, [&](const ListAssignment& l) {
        out.push_back(l);
        return true;
    });
    return out;
}

Verdict verify_k_sufficient(const SufficiencyQuery& q, int universe_cap) {
    const PlaneGraph& g = *q.graph;
    std::set<VertexId> x(q.x_set.begin(), q.x_set.end());
    for (VertexId v : q.x_set)
        if (!g.has_vertex(v)) fail(ErrorCode::Internal, "X contains unknown vertex");
    auto sizes = [&](VertexId v) { return x.count(v) ? q.k : q.k + 1; };

    Verdict verdict;
    verdict.universe_cap = universe_cap;
    verdict.graphs_checked = 1;
    verdict.x_sets_checked = 1;
    auto t0 = std::chrono::steady_clock::now();
    int total = 0;
    for (VertexId v : g.vertices()) total += sizes(v);

    enumerate_canonical_lists(g.vertices(), sizes, universe_cap, [&](const ListAssignment& l) {
        ++verdict.assignments_checked;
        if (!brute_force_colour(g, l).has_value()) {
            // Re-check the witness independently before reporting.
            std::uint64_t product = 1;
            for (VertexId v : g.vertices()) {
                product *= static_cast<std::uint64_t>(l.at(v).size());
                if (product > 2'000'000) break;
            }
            bool confirmed = product <= 2'000'000 ? !naive_colour(g, l).has_value()
                                                  : !brute_force_colour(g, l).has_value();
            if (confirmed) {
                verdict.status = VerdictStatus::Counterexample;
                verdict.witness_lists = l;
                return false;
            }
        }
        return true;
    });
    if (verdict.status != VerdictStatus::Counterexample && universe_cap < total)
        verdict.status = VerdictStatus::Capped;
    verdict.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return verdict;
}

std::vector<std::vector<VertexId>> independent_sets(const PlaneGraph& g, SweepMode mode) {
    const auto& vs = g.vertices();
    int n = static_cast<int>(vs.size());
    if (n > 24) fail(ErrorCode::BoundExceeded, "independent set enumeration bound");
    std::vector<std::vector<VertexId>> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            for (int j = i + 1; j < n && ok; ++j)
                if ((mask >> j & 1) && g.has_edge(vs[i], vs[j])) ok = false;
        }
        if (!ok) continue;
        if (mode == SweepMode::MaximalX) {
            bool maximal = true;
            for (int i = 0; i < n && maximal; ++i) {
                if (mask >> i & 1) continue;
                bool can_add = true;
                for (int j = 0; j < n && can_add; ++j)
                    if ((mask >> j & 1) && g.has_edge(vs[i], vs[j])) can_add = false;
                if (can_add) maximal = false;
            }
            if (!maximal) continue;
        }
        std::vector<VertexId> x;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) x.push_back(vs[i]);
        out.push_back(std::move(x));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Verdict verify_theorem1_sweep(const PlaneGraph& g, SweepMode mode, int universe_cap) {
    SweepOptions opts;
    opts.mode = mode;
    opts.universe_cap = universe_cap;
    return sweep_corpus({g}, opts);
}

Verdict sweep_corpus(const std::vector<PlaneGraph>& corpus, const SweepOptions& opts) {
    for (const PlaneGraph& g : corpus)
        if (!g.is_triangle_free())
            fail(ErrorCode::NotTriangleFree, "sweep host must be triangle free");

    struct Item {
        int gi;
        int xi;
    };
    std::vector<std::vector<std::vector<VertexId>>> xs(corpus.size());
    std::vector<Item> items;
    for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
        xs[gi] = independent_sets(corpus[gi], opts.mode);
        for (std::size_t xi = 0; xi < xs[gi].size(); ++xi)
            items.push_back({static_cast<int>(gi), static_cast<int>(xi)});
    }

    std::set<std::pair<int, int>> completed;
    if (!opts.checkpoint_path.empty()) {
        std::ifstream in(opts.checkpoint_path);
        int a, b;
        while (in >> a >> b) completed.insert({a, b});
    }

    Verdict total;
    total.universe_cap = opts.universe_cap;
    total.graphs_checked = corpus.size();
    auto t0 = std::chrono::steady_clock::now();

    std::atomic<std::size_t> next{0};
    std::atomic<bool> found_counterexample{false};
    std::atomic<std::uint64_t> assignments{0}, x_checked{0};
    std::mutex mu;
    std::ofstream ck;
    if (!opts.checkpoint_path.empty()) ck.open(opts.checkpoint_path, std::ios::app);

    auto worker = [&]() {
        while (!found_counterexample.load()) {
            std::size_t i = next.fetch_add(1);
            if (i >= items.size()) return;
            auto [gi, xi] = items[i];
            if (completed.count({gi, xi})) continue;
            SufficiencyQuery q{&corpus[gi], xs[gi][xi], 3};
            Verdict v = verify_k_sufficient(q, opts.universe_cap);
            assignments += v.assignments_checked;
            ++x_checked;
            std::lock_guard<std::mutex> lock(mu);
            if (v.status == VerdictStatus::Counterexample) {
                found_counterexample = true;
                total.status = VerdictStatus::Counterexample;
                if (!total.witness_lists) total.witness_lists = v.witness_lists;
            } else if (v.status == VerdictStatus::Capped &&
                       total.status == VerdictStatus::AllColourable) {
                total.status = VerdictStatus::Capped;
            }
            if (ck.is_open()) ck << gi << ' ' << xi << '\n' << std::flush;
        }
    };

    int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    total.assignments_checked = assignments.load();
    total.x_sets_checked = x_checked.load();
    total.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return total;
}

// ---------------------------------------------------------------------------
// Small graph enumeration.

namespace {

using AdjMask = std::vector<std::uint32_t>; // adjacency bitmasks, vertex i in [0,n)

bool abstract_isomorphic(const AdjMask& a, const AdjMask& b) {
    int n = static_cast<int>(a.size());
    if (static_cast<int>(b.size()) != n) return false;
    std::vector<int> deg_a(n), deg_b(n);
    for (int i = 0; i < n; ++i) {
        deg_a[i] = __builtin_popcount(a[i]);
        deg_b[i] = __builtin_popcount(b[i]);
    }
    {
        auto sa = deg_a, sb = deg_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<int> map_ab(n, -1);
    std::vector<int> used(n, 0);
    std::function<bool(int)> match = [&](int i) -> bool {
        if (i == n) return true;
        for (int j = 0; j < n; ++j) {
            if (used[j] || deg_a[i] != deg_b[j]) continue;
            bool ok = true;
            for (int k = 0; k < i && ok; ++k) {
                bool ea = (a[i] >> k) & 1;
                bool eb = (b[j] >> map_ab[k]) & 1;
                if (ea != eb) ok = false;
            }
            if (!ok) continue;
            map_ab[i] = j;
            used[j] = 1;
            if (match(i + 1)) return true;
            used[j] = 0;
        }
        return false;
    };
    return match(0);
}

std::vector<int> invariant_key(const AdjMask& a) {
    int n = static_cast<int>(a.size());
    std::vector<int> key;
    std::vector<std::vector<int>> per_vertex;
    for (int i = 0; i < n; ++i) {
        std::vector<int> row;
        row.push_back(__builtin_popcount(a[i]));
        std::vector<int> nd;
        for (int j = 0; j < n; ++j)
            if ((a[i] >> j) & 1) nd.push_back(__builtin_popcount(a[j]));
        std::sort(nd.begin(), nd.end());
        row.insert(row.end(), nd.begin(), nd.end());
        per_vertex.push_back(std::move(row));
    }
    std::sort(per_vertex.begin(), per_vertex.end());
    for (auto& r : per_vertex) {
        key.insert(key.end(), r.begin(), r.end());
        key.push_back(-1);
    }
    return key;
}

// One traced face of a rotation system (enough to seed PlaneGraph::build).
std::vector<VertexId> any_face(const std::map<VertexId, std::vector<VertexId>>& rotations) {
    VertexId u = rotations.begin()->first;
    if (rotations.begin()->second.empty()) return {u};
    std::vector<VertexId> cycle;
    VertexId cur = u, nxt = rotations.begin()->second[0];
    do {
        cycle.push_back(cur);
        const auto& r = rotations.at(nxt);
        auto it = std::find(r.begin(), r.end(), cur);
        VertexId after = r[(static_cast<std::size_t>(it - r.begin()) + 1) % r.size()];
        cur = nxt;
        nxt = after;
    } while (!(cur == u && nxt == rotations.at(u)[0]));
    return cycle;
}

} // namespace

std::optional<PlaneGraph> embed_planar(const std::map<VertexId, std::vector<VertexId>>& adj) {
    int n = static_cast<int>(adj.size());
    int e2 = 0;
    for (const auto& [v, nbrs] : adj) e2 += static_cast<int>(nbrs.size());
    int e = e2 / 2;
    if (n >= 3 && e > 3 * n - 6) return std::nullopt;

    std::vector<VertexId> vs;
    for (const auto& [v, _] : adj) vs.push_back(v);
    std::vector<std::vector<VertexId>> rot(vs.size());

    std::optional<PlaneGraph> found;
    // Fix the first neighbour of every rotation (cyclic symmetry of each
    // rotation) and permute the rest.
    std::function<void(std::size_t)> rec = [&](std::size_t vi) {
        if (found) return;
        if (vi == vs.size()) {
            std::map<VertexId, std::vector<VertexId>> rotations;
            for (std::size_t i = 0; i < vs.size(); ++i) rotations[vs[i]] = rot[i];
            try {
                found = PlaneGraph::build(rotations, any_face(rotations));
            } catch (const Error&) {
            }
            return;
        }
        const auto& nbrs = adj.at(vs[vi]);
        if (nbrs.size() <= 2) {
            rot[vi] = nbrs;
            rec(vi + 1);
            return;
        }
        std::vector<VertexId> rest(nbrs.begin() + 1, nbrs.end());
        std::sort(rest.begin(), rest.end());
        do {
            rot[vi].clear();
            rot[vi].push_back(nbrs[0]);
            rot[vi].insert(rot[vi].end(), rest.begin(), rest.end());
            rec(vi + 1);
            if (found) return;
        } while (std::next_permutation(rest.begin(), rest.end()));
    };
    rec(0);
    return found;
}

std::vector<PlaneGraph> enumerate_connected_plane_graphs(int n_max, bool triangle_free,
                                                         int hard_bound) {
    if (n_max > hard_bound) fail(ErrorCode::BoundExceeded, "enumeration bound exceeded");
    std::vector<PlaneGraph> result;
    if (n_max < 1) return result;

    std::vector<AdjMask> level{AdjMask{0u}}; // K1
    result.push_back(PlaneGraph::build({{1, {}}}, {1}));

    for (int n = 2; n <= n_max; ++n) {
        std::vector<AdjMask> next_level;
        std::vector<std::vector<int>> keys;
        for (const AdjMask& g : level) {
            int m = n - 1;
            for (std::uint32_t s = 1; s < (1u << m); ++s) {
                if (triangle_free) {
                    bool indep = true;
                    for (int i = 0; i < m && indep; ++i)
                        if ((s >> i & 1) && (g[i] & s)) indep = false;
                    if (!indep) continue;
                }
                AdjMask h = g;
                h.push_back(s);
                for (int i = 0; i < m; ++i)
                    if (s >> i & 1) h[i] |= (1u << m);
                int e = 0;
                for (auto row : h) e += __builtin_popcount(row);
                e /= 2;
                if (n >= 3 && e > (triangle_free ? 2 * n - 4 : 3 * n - 6)) continue;
                auto key = invariant_key(h);
                bool dup = false;
                for (std::size_t i = 0; i < next_level.size() && !dup; ++i)
                    if (keys[i] == key && abstract_isomorphic(next_level[i], h)) dup = true;
                if (dup) continue;
                std::map<VertexId, std::vector<VertexId>> adj;
                for (int i = 0; i < n; ++i) {
                    std::vector<VertexId> nbrs;
                    for (int j = 0; j < n; ++j)
                        if (h[i] >> j & 1) nbrs.push_back(j + 1);
                    adj[i + 1] = nbrs;
                }
                auto embedded = embed_planar(adj);
                if (!embedded) continue;
                next_level.push_back(h);
                keys.push_back(std::move(key));
                result.push_back(std::move(*embedded));
            }
        }
        level = std::move(next_level);
    }
    return result;
}

bool graphs_isomorphic(const PlaneGraph& a, const PlaneGraph& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    auto to_mask = [](const PlaneGraph& g) {
        const auto& vs = g.vertices();
        std::map<VertexId, int> index;
        for (std::size_t i = 0; i < vs.size(); ++i) index[vs[i]] = static_cast<int>(i);
        AdjMask m(vs.size(), 0u);
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (VertexId w : g.neighbours_sorted(vs[i])) m[i] |= 1u << index[w];
        return m;
    };
    return abstract_isomorphic(to_mask(a), to_mask(b));
}

} // namespace tfplc
