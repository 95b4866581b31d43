#include "kstab/planar_greedy.hpp"

#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "kstab/exact_oracle.hpp"

namespace kstab {

namespace {

// Mutable working copy used by the removal loop.
struct Working {
    std::vector<std::vector<int>> adj;
    std::vector<char> alive;
    std::vector<int> deg;
    int alive_count;

    explicit Working(const Graph& g)
        : adj(static_cast<size_t>(g.n())), alive(static_cast<size_t>(g.n()), 1),
          deg(static_cast<size_t>(g.n())), alive_count(g.n()) {
        for (int v = 0; v < g.n(); ++v) {
            adj[static_cast<size_t>(v)] = g.neighbors(v);
            deg[static_cast<size_t>(v)] = g.degree(v);
        }
    }

    int max_degree() const {
        int d = 0;
        for (size_t v = 0; v < adj.size(); ++v)
            if (alive[v]) d = std::max(d, deg[v]);
        return d;
    }

    void remove(int v) {
        alive[static_cast<size_t>(v)] = 0;
        --alive_count;
        for (int w : adj[static_cast<size_t>(v)])
            if (alive[static_cast<size_t>(w)]) --deg[static_cast<size_t>(w)];
    }

    VertexSet alive_set() const {
        std::vector<int> out;
        for (size_t v = 0; v < adj.size(); ++v)
            if (alive[v]) out.push_back(static_cast<int>(v));
        return VertexSet(std::move(out));
    }
};

int pick_removal(const Working& w, int maxdeg, Tiebreak tiebreak) {
    int best = -1, best_key = -1;
    for (size_t v = 0; v < w.adj.size(); ++v) {
        if (!w.alive[v] || w.deg[v] != maxdeg) continue;
        if (tiebreak == Tiebreak::LowestId) return static_cast<int>(v);
        // Adversarial: fewest max-degree neighbors keeps the max-degree pool
        // large, maximizing the number of future removals.
        int key = 0;
        for (int u : w.adj[v])
            if (w.alive[static_cast<size_t>(u)] && w.deg[static_cast<size_t>(u)] == maxdeg) ++key;
        if (best == -1 || key < best_key) {
            best = static_cast<int>(v);
            best_key = key;
        }
    }
    return best;
}

// Removes max-degree vertices until the alive graph has degree <= target.
void remove_to_degree(Working& w, int target, Tiebreak tiebreak, RemovalTrace& trace) {
    int mx = w.max_degree();
    auto note_snapshots = [&](int from, int to) {
        for (int i = from; i >= to; --i)
            if (!trace.snapshot_sizes.count(i)) trace.snapshot_sizes[i] = w.alive_count;
    };
    note_snapshots(std::max(mx, target), mx);
    while (mx > target) {
        int v = pick_removal(w, mx, tiebreak);
        trace.removed_by_degree[mx] += 1;
        trace.removal_log.emplace_back(v, mx);
        w.remove(v);
        int nmx = w.max_degree();
        if (nmx < mx) note_snapshots(mx - 1, nmx);
        mx = nmx;
    }
    note_snapshots(target, mx);
}

std::vector<Edge> saturate_edges_within(std::vector<std::set<int>>& adj, const std::vector<int>& verts,
                                        int r) {
    std::vector<Edge> added;
    for (;;) {
        int pu = -1, pv = -1;
        for (size_t i = 0; i < verts.size() && pu == -1; ++i) {
            int u = verts[i];
            if (static_cast<int>(adj[static_cast<size_t>(u)].size()) >= r) continue;
            for (size_t j = i + 1; j < verts.size(); ++j) {
                int v = verts[j];
                if (static_cast<int>(adj[static_cast<size_t>(v)].size()) >= r) continue;
                if (adj[static_cast<size_t>(u)].count(v)) continue;
                pu = u;
                pv = v;
                break;
            }
        }
        if (pu == -1) break;
        adj[static_cast<size_t>(pu)].insert(pv);
        adj[static_cast<size_t>(pv)].insert(pu);
        added.emplace_back(pu, pv);
    }
    return added;
}

Graph graph_from_adj(const std::vector<std::set<int>>& adj) {
    std::vector<Edge> edges;
    for (size_t u = 0; u < adj.size(); ++u)
        for (int v : adj[u])
            if (static_cast<int>(u) < v) edges.emplace_back(static_cast<int>(u), v);
    return Graph::from_edges(static_cast<int>(adj.size()), edges);
}

VertexSet heuristic_dominating(const Graph& g) {
    int n = g.n();
    std::vector<char> in_set(static_cast<size_t>(n), 0);
    std::vector<int> cover(static_cast<size_t>(n), 0);
    int uncovered = n;
    auto gain = [&](int u) {
        int c = cover[static_cast<size_t>(u)] == 0 ? 1 : 0;
        for (int w : g.neighbors(u)) c += cover[static_cast<size_t>(w)] == 0 ? 1 : 0;
        return c;
    };
    auto add = [&](int u) {
        in_set[static_cast<size_t>(u)] = 1;
        if (cover[static_cast<size_t>(u)]++ == 0) --uncovered;
        for (int w : g.neighbors(u))
            if (cover[static_cast<size_t>(w)]++ == 0) --uncovered;
    };
    auto drop = [&](int u) {
        in_set[static_cast<size_t>(u)] = 0;
        if (--cover[static_cast<size_t>(u)] == 0) ++uncovered;
        for (int w : g.neighbors(u))
            if (--cover[static_cast<size_t>(w)] == 0) ++uncovered;
    };
    while (uncovered > 0) {
        int pick = -1, best = -1;
        for (int u = 0; u < n; ++u) {
            if (in_set[static_cast<size_t>(u)]) continue;
            int c = gain(u);
            if (c > best) {
                best = c;
                pick = u;
            }
        }
        add(pick);
    }
    // Drop redundant members, then try add-one-remove-two swaps.
    auto prune = [&]() {
        for (int u = n - 1; u >= 0; --u) {
            if (!in_set[static_cast<size_t>(u)]) continue;
            drop(u);
            if (uncovered > 0) add(u);
        }
    };
    prune();
    bool improved = true;
    int rounds = 0;
    while (improved && rounds++ < 20) {
        improved = false;
        for (int u = 0; u < n && !improved; ++u) {
            if (in_set[static_cast<size_t>(u)]) continue;
            add(u);
            std::vector<int> dropped;
            for (int v = 0; v < n; ++v) {
                if (v == u || !in_set[static_cast<size_t>(v)]) continue;
                drop(v);
                if (uncovered > 0)
                    add(v);
                else
                    dropped.push_back(v);
            }
            if (dropped.size() >= 2) {
                improved = true;
            } else {
                for (int v : dropped) add(v);
                drop(u);
            }
        }
    }
    std::vector<int> out;
    for (int u = 0; u < n; ++u)
        if (in_set[static_cast<size_t>(u)]) out.push_back(u);
    return VertexSet(std::move(out));
}

std::string multiset_id(int x, const std::vector<int>& degs) {
    std::ostringstream s;
    s << "x=" << x << ":deg[";
    for (size_t i = 0; i < degs.size(); ++i) s << (i ? "," : "") << degs[i];
    s << "]";
    return s.str();
}

}  // namespace

Graph edge_saturate(const Graph& g, int r) {
    KSTAB_CHECK(g.max_degree() <= r, "edge_saturate requires degree <= r");
    std::vector<std::set<int>> adj(static_cast<size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v)
        adj[static_cast<size_t>(v)] = std::set<int>(g.neighbors(v).begin(), g.neighbors(v).end());
    std::vector<int> all(static_cast<size_t>(g.n()));
    std::iota(all.begin(), all.end(), 0);
    saturate_edges_within(adj, all, r);
    Graph out = graph_from_adj(adj);
    // Deficient vertices must now induce a clique of at most r vertices.
    std::vector<int> deficient;
    for (int v = 0; v < out.n(); ++v)
        if (out.degree(v) < r) deficient.push_back(v);
    KSTAB_CHECK(static_cast<int>(deficient.size()) <= r, "more than r deficient vertices remain");
    for (size_t i = 0; i < deficient.size(); ++i)
        for (size_t j = i + 1; j < deficient.size(); ++j)
            KSTAB_CHECK(out.has_edge(deficient[i], deficient[j]), "deficient vertices not a clique");
    return out;
}

std::optional<Gadget> find_gadget(const std::vector<int>& deficiencies, int r, int max_new) {
    int x = static_cast<int>(deficiencies.size());
    long long total = std::accumulate(deficiencies.begin(), deficiencies.end(), 0LL);
    if (x == 0) return Gadget{};
    std::optional<Gadget> fallback;
    for (int t = 1; t <= max_new; ++t) {
        if ((static_cast<long long>(r) * t - total) % 2 != 0) continue;
        if (total > static_cast<long long>(r) * t) continue;
        // Choose, per residual vertex, the subset of new vertices it attaches
        // to. Subsets are enumerated as bitmasks in increasing order, with a
        // symmetry break: equal deficiencies take non-decreasing masks.
        std::vector<int> masks(static_cast<size_t>(x), 0);
        std::vector<int> b(static_cast<size_t>(t), 0);
        std::optional<Gadget> found;
        std::function<bool(int)> rec = [&](int j) -> bool {
            if (j == x) {
                std::vector<int> q(static_cast<size_t>(t));
                for (int i = 0; i < t; ++i) {
                    q[static_cast<size_t>(i)] = r - b[static_cast<size_t>(i)];
                    if (q[static_cast<size_t>(i)] < 0 || q[static_cast<size_t>(i)] > t - 1) return false;
                }
                // Havel-Hakimi realization of the internal degree sequence.
                std::vector<std::pair<int, int>> seq;
                for (int i = 0; i < t; ++i) seq.emplace_back(q[static_cast<size_t>(i)], i);
                std::vector<Edge> internal;
                for (;;) {
                    std::sort(seq.begin(), seq.end(), std::greater<>());
                    if (seq[0].first == 0) break;
                    int d = seq[0].first, v = seq[0].second;
                    if (d > static_cast<int>(seq.size()) - 1) return false;
                    for (int i = 1; i <= d; ++i) {
                        if (seq[static_cast<size_t>(i)].first == 0) return false;
                        --seq[static_cast<size_t>(i)].first;
                        internal.emplace_back(std::min(v, seq[static_cast<size_t>(i)].second),
                                              std::max(v, seq[static_cast<size_t>(i)].second));
                    }
                    seq[0].first = 0;
                }
                Gadget gd;
                gd.t = t;
                gd.internal_edges = internal;
                for (int jj = 0; jj < x; ++jj)
                    for (int i = 0; i < t; ++i)
                        if (masks[static_cast<size_t>(jj)] & (1 << i)) gd.attachments.emplace_back(jj, i);
                // Prefer a gadget whose new vertices all connect (through the
                // residual clique) into one component.
                std::vector<std::vector<int>> adj(static_cast<size_t>(x + t));
                for (int i2 = 0; i2 < x; ++i2)
                    for (int j2 = i2 + 1; j2 < x; ++j2) {
                        adj[static_cast<size_t>(i2)].push_back(j2);
                        adj[static_cast<size_t>(j2)].push_back(i2);
                    }
                for (auto [res, nv] : gd.attachments) {
                    adj[static_cast<size_t>(res)].push_back(x + nv);
                    adj[static_cast<size_t>(x + nv)].push_back(res);
                }
                for (auto [a2, b2] : internal) {
                    adj[static_cast<size_t>(x + a2)].push_back(x + b2);
                    adj[static_cast<size_t>(x + b2)].push_back(x + a2);
                }
                std::vector<char> seen(static_cast<size_t>(x + t), 0);
                std::vector<int> stack{0};
                seen[0] = 1;
                int cnt = 1;
                while (!stack.empty()) {
                    int v2 = stack.back();
                    stack.pop_back();
                    for (int w2 : adj[static_cast<size_t>(v2)])
                        if (!seen[static_cast<size_t>(w2)]) {
                            seen[static_cast<size_t>(w2)] = 1;
                            ++cnt;
                            stack.push_back(w2);
                        }
                }
                if (cnt == x + t) {
                    found = gd;
                    return true;
                }
                if (!fallback) fallback = gd;
                return false;
            }
            int dj = deficiencies[static_cast<size_t>(j)];
            int start = (j > 0 && deficiencies[static_cast<size_t>(j - 1)] == dj)
                            ? masks[static_cast<size_t>(j - 1)]
                            : 0;
            for (int m = start; m < (1 << t); ++m) {
                if (__builtin_popcount(static_cast<unsigned>(m)) != dj) continue;
                bool ok = true;
                for (int i = 0; i < t && ok; ++i)
                    if ((m & (1 << i)) && b[static_cast<size_t>(i)] + 1 > r) ok = false;
                if (!ok) continue;
                masks[static_cast<size_t>(j)] = m;
                for (int i = 0; i < t; ++i)
                    if (m & (1 << i)) ++b[static_cast<size_t>(i)];
                if (rec(j + 1)) return true;
                for (int i = 0; i < t; ++i)
                    if (m & (1 << i)) --b[static_cast<size_t>(i)];
            }
            return false;
        };
        if (rec(0) && found) return found;
    }
    return fallback;
}

std::pair<Graph, AugmentationReport> augment_to_regular(const Graph& g, int r) {
    KSTAB_CHECK(r == 4 || r == 5, "augmentation targets r in {4,5}");
    KSTAB_CHECK(g.max_degree() <= r, "augment_to_regular requires degree <= r");
    AugmentationReport report;
    std::vector<std::set<int>> adj(static_cast<size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v)
        adj[static_cast<size_t>(v)] = std::set<int>(g.neighbors(v).begin(), g.neighbors(v).end());
    int next_id = g.n();
    std::vector<Edge> extra_edges;
    std::ostringstream cases;
    bool first_case = true;
    for (const auto& comp : g.connected_components()) {
        auto sat = saturate_edges_within(adj, comp, r);
        report.added_edges.insert(report.added_edges.end(), sat.begin(), sat.end());
        std::vector<int> residual;
        std::vector<int> degs;
        for (int v : comp)
            if (static_cast<int>(adj[static_cast<size_t>(v)].size()) < r) residual.push_back(v);
        for (int v : residual) degs.push_back(static_cast<int>(adj[static_cast<size_t>(v)].size()));
        if (residual.empty()) {
            report.added_vertices_per_component.push_back(0);
            continue;
        }
        std::vector<int> ds;
        for (int d : degs) ds.push_back(r - d);
        auto gadget = find_gadget(ds, r, r == 4 ? 6 : 7);
        KSTAB_CHECK(gadget.has_value(), "no augmentation gadget within the vertex budget");
        if (!first_case) cases << ";";
        first_case = false;
        cases << multiset_id(static_cast<int>(residual.size()), degs);
        report.added_vertices_per_component.push_back(gadget->t);
        int base = next_id;
        next_id += gadget->t;
        for (auto [res, nv] : gadget->attachments) extra_edges.emplace_back(residual[static_cast<size_t>(res)], base + nv);
        for (auto [a, b] : gadget->internal_edges) extra_edges.emplace_back(base + a, base + b);
    }
    report.gadget_case = cases.str();
    std::vector<Edge> all_edges;
    for (size_t u = 0; u < adj.size(); ++u)
        for (int v : adj[u])
            if (static_cast<int>(u) < v) all_edges.emplace_back(static_cast<int>(u), v);
    for (auto e : extra_edges) all_edges.push_back(e);
    report.added_edges.insert(report.added_edges.end(), extra_edges.begin(), extra_edges.end());
    Graph out = Graph::from_edges(next_id, all_edges);
    for (int v = 0; v < out.n(); ++v) KSTAB_CHECK(out.degree(v) == r, "augmented graph is not r-regular");
    return {out, report};
}

VertexSet dominating_set(const Graph& g, DomMode mode, int exact_cap) {
    if (mode == DomMode::Exact) {
        if (g.n() > exact_cap) throw ExactTooLarge("exact dominating set beyond the size cap");
        return exact_min_dominating(g).first;
    }
    return heuristic_dominating(g);
}

BoundReport bound_calculator(long long n, long long m, int d, int k, std::optional<int> girth) {
    if (m < 0 || d < 4 || k < 3 || k > d - 1) throw NoCaseApplies("need m >= 0, d >= 4, 3 <= k <= d-1");
    BoundReport rep;
    rep.n = n;
    rep.m = m;
    rep.d = d;
    rep.k = k;
    rep.girth = girth;
    if (girth) {
        long long g = *girth;
        if (g < 3) throw NoCaseApplies("girth must be >= 3");
        if (k == 3) {
            rep.value = Rational((25 * g - 60) * n - 14 * g + 48, 39 * (g - 2));
            rep.case_id = "girth-k3";
        } else if (k == 4) {
            rep.value = Rational((45 * g - 108) * n - 17 * g + 70, 59 * (g - 2));
            rep.case_id = "girth-k4";
        } else {
            rep.value = Rational((g * k - 2 * k - 2) * n + 2 * g, (g - 2) * (k + 1));
            rep.case_id = "girth-k5plus";
        }
        return rep;
    }
    if (d == 4 && k == 3) {
        rep.value = Rational(7 * n - 24, 11);
        rep.case_id = "case1-d4-k3";
    } else if (d == 5 && k == 3) {
        rep.value = Rational(35 * n, 78) - Rational(8, 13);
        rep.case_id = "case2-d5-k3";
    } else if (d >= 6 && k == 3) {
        rep.value = Rational(10 * n, 13) - Rational(5 * m, 39) - Rational(8, 13);
        rep.case_id = "case3-d6-k3";
    } else if (d == 5 && k == 4) {
        rep.value = Rational(9 * n, 14) - Rational(1, 2);
        rep.case_id = "case4-d5-k4";
    } else if (d >= 6 && k == 4) {
        rep.value = Rational(54 * n, 59) - Rational(9 * m, 59) - Rational(35, 59);
        rep.case_id = "case5-d6-k4";
    } else if (d >= 6 && k >= 5) {
        rep.value = Rational(n) - Rational(m, k + 1);
        rep.case_id = "case6-d6-k5plus";
    } else {
        throw NoCaseApplies("no bound case for these parameters");
    }
    return rep;
}

namespace {

struct StrategyOutcome {
    VertexSet set;
    RemovalTrace trace;
};

StrategyOutcome run_plain(const Graph& g, int k, Tiebreak tiebreak) {
    StrategyOutcome out;
    out.trace.strategy_used = "plain";
    Working w(g);
    remove_to_degree(w, k, tiebreak, out.trace);
    out.set = w.alive_set();
    // Counting identities of the analysis hold on every plain run.
    if (k >= 5)
        KSTAB_CHECK(out.trace.removed_total() * (k + 1) <= g.m(),
                    "plain removal exceeded the m/(k+1) counting bound");
    if (g.max_degree() == 5 && k == 3) {
        long long r5 = out.trace.removed_by_degree.count(5) ? out.trace.removed_by_degree.at(5) : 0;
        long long r4 = out.trace.removed_by_degree.count(4) ? out.trace.removed_by_degree.at(4) : 0;
        KSTAB_CHECK(8 * (r4 + r5) <= 5 * g.n() - 2 * r5, "plain removal violated the degree-5 bound");
    }
    return out;
}

StrategyOutcome run_domset(const Graph& g, int k, Tiebreak tiebreak, int exact_cap) {
    if (k != 3 && k != 4) throw StrategyUnavailable("dominating-set strategy needs k in {3,4}");
    StrategyOutcome out;
    out.trace.strategy_used = "domset";
    out.trace.used_domset = true;
    Working w(g);
    remove_to_degree(w, k + 1, tiebreak, out.trace);
    int r = k + 1;
    std::vector<int> remap;
    Graph reduced = induced_subgraph(g, w.alive_set(), &remap);
    auto [aug, report] = augment_to_regular(reduced, r);
    (void)report;
    // Dominate each augmented component; removing the original members of the
    // dominating set drops every original vertex below degree r.
    std::vector<char> in_dom(static_cast<size_t>(aug.n()), 0);
    for (const auto& comp : aug.connected_components()) {
        VertexSet cs(comp);
        std::vector<int> cremap;
        Graph cg = induced_subgraph(aug, cs, &cremap);
        RemovalTrace::ComponentDom cd;
        cd.augmented_size = cg.n();
        cd.original_size = 0;
        for (int v : comp)
            if (v < reduced.n()) ++cd.original_size;
        cd.added_vertices = cg.n() - cd.original_size;
        VertexSet dom;
        if (cg.n() <= exact_cap) {
            SearchBudget budget;
            budget.node_limit = 500'000;
            budget.time_limit_ms = 2'000;
            auto [dset, stats] = exact_min_dominating(cg, budget);
            VertexSet heur = heuristic_dominating(cg);
            dom = heur.size() < dset.size() ? heur : dset;
            cd.exact = stats.proven_optimal;
        } else {
            dom = heuristic_dominating(cg);
            cd.exact = false;
        }
        cd.domset_size = dom.size();
        long long num = r == 4 ? 4 : 5, den = r == 4 ? 11 : 14;
        cd.cited_bound_met = dom.size() <= (num * cg.n()) / den;
        out.trace.domset_components.push_back(cd);
        for (int v : dom) in_dom[static_cast<size_t>(cremap[static_cast<size_t>(v)])] = 1;
    }
    long long removed_here = 0;
    for (int v = 0; v < reduced.n(); ++v) {
        if (in_dom[static_cast<size_t>(v)]) {
            w.remove(remap[static_cast<size_t>(v)]);
            out.trace.removal_log.emplace_back(remap[static_cast<size_t>(v)], r);
            ++removed_here;
        }
    }
    out.trace.removed_by_degree[r] += removed_here;
    out.set = w.alive_set();
    KSTAB_CHECK(max_induced_degree(g, out.set) <= k, "dominating-set strategy left a high-degree vertex");
    return out;
}

Rational guarantee_for(const Graph& g, int k, Strategy strategy) {
    long long n = g.n(), m = g.m();
    int d = g.max_degree();
    if (d <= k) return Rational(n);
    switch (strategy) {
        case Strategy::Plain:
            return Rational(n) - Rational(m, k + 1);
        case Strategy::DominatingSet: {
            long long rho_num = k == 3 ? 4 : 5, rho_den = k == 3 ? 11 : 14, a = k == 3 ? 6 : 7;
            if (d == k + 1) {
                // Items 1 and 4 of the case table.
                return k == 3 ? Rational(7 * n - 24, 11) : Rational(9 * n, 14) - Rational(1, 2);
            }
            return Rational((rho_den - rho_num) * n, rho_den) - Rational(m, k + 2) -
                   Rational(rho_num * a, rho_den);
        }
        case Strategy::Best:
            if (d >= 4 && k <= d - 1) return bound_calculator(n, m, d, k).value;
            return Rational(n) - Rational(m, k + 1);
    }
    return Rational(0);
}

}  // namespace

std::pair<Certificate, RemovalTrace> greedy_removal(const Graph& g, int k, Strategy strategy,
                                                    Tiebreak tiebreak, int exact_cap) {
    KSTAB_CHECK(k >= 3, "greedy_removal needs k >= 3");
    if (strategy == Strategy::DominatingSet && k != 3 && k != 4)
        throw StrategyUnavailable("dominating-set strategy needs k in {3,4}");
    if (g.max_degree() <= k) {
        Certificate cert;
        cert.k = k;
        cert.set = VertexSet::full(g.n());
        cert.algorithm = Algorithm::GreedyRemoval;
        cert.guaranteed_size = Rational(g.n());
        cert.achieved_size = g.n();
        RemovalTrace trace;
        trace.strategy_used = "none";
        return {cert, trace};
    }
    StrategyOutcome outcome;
    if (strategy == Strategy::Plain) {
        outcome = run_plain(g, k, tiebreak);
    } else if (strategy == Strategy::DominatingSet) {
        outcome = run_domset(g, k, tiebreak, exact_cap);
    } else {
        StrategyOutcome plain = run_plain(g, k, tiebreak);
        if (k == 3 || k == 4) {
            StrategyOutcome dom = run_domset(g, k, tiebreak, exact_cap);
            outcome = dom.set.size() > plain.set.size() ? std::move(dom) : std::move(plain);
        } else {
            outcome = std::move(plain);
        }
        outcome.trace.strategy_used = "best:" + outcome.trace.strategy_used;
    }
    Certificate cert;
    cert.k = k;
    cert.set = outcome.set;
    cert.algorithm = Algorithm::GreedyRemoval;
    cert.guaranteed_size = guarantee_for(g, k, strategy);
    cert.achieved_size = cert.set.size();
    KSTAB_CHECK(verify_kstable(g, cert.set, k), "greedy removal output is not k-stable");
    return {cert, outcome.trace};
}

std::string removal_trace_to_jsonl(const RemovalTrace& trace) {
    std::ostringstream out;
    for (auto [v, deg] : trace.removal_log) out << "{\"removed\":" << v << ",\"degree\":" << deg << "}\n";
    out << "{\"strategy\":\"" << trace.strategy_used << "\",\"snapshots\":{";
    bool first = true;
    for (const auto& [i, sz] : trace.snapshot_sizes) {
        if (!first) out << ",";
        first = false;
        out << "\"" << i << "\":" << sz;
    }
    out << "},\"r\":{";
    first = true;
    for (const auto& [i, c] : trace.removed_by_degree) {
        if (!first) out << ",";
        first = false;
        out << "\"" << i << "\":" << c;
    }
    out << "}}\n";
    return out.str();
}

}  // namespace kstab
