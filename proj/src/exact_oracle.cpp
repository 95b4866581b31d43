#include "kstab/exact_oracle.hpp"

#include <chrono>

namespace kstab {

namespace {

using Clock = std::chrono::steady_clock;

long long elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

// Branch and bound for one connected component, on local ids 0..n-1.
class KStableSearch {
public:
    KStableSearch(const Graph& g, int k, const SearchBudget& budget, Clock::time_point t0)
        : g_(g), k_(k), budget_(budget), t0_(t0), kept_(static_cast<size_t>(g.n()), 1),
          locked_(static_cast<size_t>(g.n()), 0), deg_(static_cast<size_t>(g.n())) {
        for (int v = 0; v < g_.n(); ++v) deg_[static_cast<size_t>(v)] = g_.degree(v);
        kept_count_ = g_.n();
        greedy_incumbent();
    }

    void run() {
        aborted_ = false;
        dfs();
    }

    std::vector<int> best_set() const { return best_set_; }
    long long nodes() const { return nodes_; }
    bool proven() const { return !aborted_; }

private:
    void greedy_incumbent() {
        std::vector<int> deg(deg_);
        std::vector<char> in(static_cast<size_t>(g_.n()), 1);
        int cnt = g_.n();
        for (;;) {
            int v = -1;
            for (int u = 0; u < g_.n(); ++u)
                if (in[static_cast<size_t>(u)] && deg[static_cast<size_t>(u)] > k_ &&
                    (v == -1 || deg[static_cast<size_t>(u)] > deg[static_cast<size_t>(v)]))
                    v = u;
            if (v == -1) break;
            in[static_cast<size_t>(v)] = 0;
            --cnt;
            for (int w : g_.neighbors(v))
                if (in[static_cast<size_t>(w)]) --deg[static_cast<size_t>(w)];
        }
        best_ = cnt;
        best_set_.clear();
        for (int u = 0; u < g_.n(); ++u)
            if (in[static_cast<size_t>(u)]) best_set_.push_back(u);
    }

    void remove_vertex(int v) {
        kept_[static_cast<size_t>(v)] = 0;
        --kept_count_;
        for (int w : g_.neighbors(v))
            if (kept_[static_cast<size_t>(w)]) --deg_[static_cast<size_t>(w)];
    }
    void restore_vertex(int v) {
        kept_[static_cast<size_t>(v)] = 1;
        ++kept_count_;
        for (int w : g_.neighbors(v))
            if (kept_[static_cast<size_t>(w)]) ++deg_[static_cast<size_t>(w)];
    }

    // Number of kept vertices with pairwise-disjoint closed neighborhoods that
    // are still violated; each forces at least one removal.
    int forced_removal_lb() {
        int lb = 0;
        mark_.assign(static_cast<size_t>(g_.n()), 0);
        for (int v = 0; v < g_.n(); ++v) {
            if (!kept_[static_cast<size_t>(v)] || deg_[static_cast<size_t>(v)] <= k_) continue;
            if (mark_[static_cast<size_t>(v)]) continue;
            bool free = true;
            for (int w : g_.neighbors(v))
                if (kept_[static_cast<size_t>(w)] && mark_[static_cast<size_t>(w)]) {
                    free = false;
                    break;
                }
            if (!free) continue;
            ++lb;
            mark_[static_cast<size_t>(v)] = 1;
            for (int w : g_.neighbors(v))
                if (kept_[static_cast<size_t>(w)]) mark_[static_cast<size_t>(w)] = 1;
        }
        return lb;
    }

    bool budget_hit() {
        if (nodes_ >= budget_.node_limit) return true;
        if ((nodes_ & 0x3ff) == 0 && elapsed_ms(t0_) > budget_.time_limit_ms) return true;
        return false;
    }

    void dfs() {
        ++nodes_;
        if (aborted_) return;
        if (budget_hit()) {
            aborted_ = true;
            return;
        }
        int v = -1;
        for (int u = 0; u < g_.n(); ++u) {
            if (!kept_[static_cast<size_t>(u)] || deg_[static_cast<size_t>(u)] <= k_) continue;
            if (v == -1 || deg_[static_cast<size_t>(u)] > deg_[static_cast<size_t>(v)]) v = u;
        }
        if (v == -1) {
            if (kept_count_ > best_) {
                best_ = kept_count_;
                best_set_.clear();
                for (int u = 0; u < g_.n(); ++u)
                    if (kept_[static_cast<size_t>(u)]) best_set_.push_back(u);
            }
            return;
        }
        if (kept_count_ - forced_removal_lb() <= best_) return;

        // Remove v itself, or keep v and remove one of its kept neighbors; the
        // lock prevents revisiting overlapping subtrees.
        std::vector<int> branch_nbrs;
        for (int w : g_.neighbors(v))
            if (kept_[static_cast<size_t>(w)] && !locked_[static_cast<size_t>(w)]) branch_nbrs.push_back(w);
        if (!locked_[static_cast<size_t>(v)]) {
            remove_vertex(v);
            dfs();
            restore_vertex(v);
            if (aborted_) return;
        } else if (branch_nbrs.empty()) {
            return;  // v locked and all neighbors locked: infeasible
        }
        locked_[static_cast<size_t>(v)] = 1;
        std::vector<int> newly_locked;
        for (int w : branch_nbrs) {
            remove_vertex(w);
            dfs();
            restore_vertex(w);
            if (aborted_) break;
            locked_[static_cast<size_t>(w)] = 1;
            newly_locked.push_back(w);
        }
        for (int w : newly_locked) locked_[static_cast<size_t>(w)] = 0;
        locked_[static_cast<size_t>(v)] = 0;
    }

    const Graph& g_;
    int k_;
    SearchBudget budget_;
    Clock::time_point t0_;
    std::vector<char> kept_, locked_;
    std::vector<int> deg_;
    std::vector<char> mark_;
    int kept_count_ = 0;
    int best_ = 0;
    std::vector<int> best_set_;
    long long nodes_ = 0;
    bool aborted_ = false;
};

class DominatingSearch {
public:
    DominatingSearch(const Graph& g, const SearchBudget& budget, Clock::time_point t0)
        : g_(g), budget_(budget), t0_(t0), in_set_(static_cast<size_t>(g.n()), 0),
          excluded_(static_cast<size_t>(g.n()), 0), cover_(static_cast<size_t>(g.n()), 0) {
        greedy_incumbent();
    }

    void run() { dfs(0); }

    std::vector<int> best_set() const { return best_set_; }
    long long nodes() const { return nodes_; }
    bool proven() const { return !aborted_; }

private:
    int closed_uncovered(int u, const std::vector<int>& cov) const {
        int c = cov[static_cast<size_t>(u)] == 0 ? 1 : 0;
        for (int w : g_.neighbors(u)) c += cov[static_cast<size_t>(w)] == 0 ? 1 : 0;
        return c;
    }

    void greedy_incumbent() {
        std::vector<int> cov(static_cast<size_t>(g_.n()), 0);
        std::vector<int> ds;
        int uncovered = g_.n();
        while (uncovered > 0) {
            int pick = -1, gain = -1;
            for (int u = 0; u < g_.n(); ++u) {
                int c = closed_uncovered(u, cov);
                if (c > gain) {
                    gain = c;
                    pick = u;
                }
            }
            ds.push_back(pick);
            if (cov[static_cast<size_t>(pick)]++ == 0) --uncovered;
            for (int w : g_.neighbors(pick))
                if (cov[static_cast<size_t>(w)]++ == 0) --uncovered;
        }
        best_ = static_cast<int>(ds.size());
        best_set_ = ds;
    }

    bool budget_hit() {
        if (nodes_ >= budget_.node_limit) return true;
        if ((nodes_ & 0x3ff) == 0 && elapsed_ms(t0_) > budget_.time_limit_ms) return true;
        return false;
    }

    int packing_lb() {
        mark_.assign(static_cast<size_t>(g_.n()), 0);
        int lb = 0;
        for (int v = 0; v < g_.n(); ++v) {
            if (cover_[static_cast<size_t>(v)] > 0 || mark_[static_cast<size_t>(v)]) continue;
            bool free = true;
            for (int w : g_.neighbors(v))
                if (mark_[static_cast<size_t>(w)]) {
                    free = false;
                    break;
                }
            if (!free) continue;
            ++lb;
            // Mark the two-ball around v: any dominator of v is in N[v], and
            // marking its neighbors keeps chosen balls dominator-disjoint.
            mark_[static_cast<size_t>(v)] = 1;
            for (int w : g_.neighbors(v)) {
                mark_[static_cast<size_t>(w)] = 1;
                for (int x : g_.neighbors(w)) mark_[static_cast<size_t>(x)] = 1;
            }
        }
        return lb;
    }

    void add(int u) {
        in_set_[static_cast<size_t>(u)] = 1;
        ++size_;
        ++cover_[static_cast<size_t>(u)];
        for (int w : g_.neighbors(u)) ++cover_[static_cast<size_t>(w)];
    }
    void drop(int u) {
        in_set_[static_cast<size_t>(u)] = 0;
        --size_;
        --cover_[static_cast<size_t>(u)];
        for (int w : g_.neighbors(u)) --cover_[static_cast<size_t>(w)];
    }

    void dfs(int depth) {
        ++nodes_;
        if (aborted_) return;
        if (budget_hit()) {
            aborted_ = true;
            return;
        }
        int v = -1, v_cands = -1;
        for (int u = 0; u < g_.n(); ++u) {
            if (cover_[static_cast<size_t>(u)] > 0) continue;
            int cands = excluded_[static_cast<size_t>(u)] ? 0 : 1;
            for (int w : g_.neighbors(u)) cands += excluded_[static_cast<size_t>(w)] ? 0 : 1;
            if (v == -1 || cands < v_cands) {
                v = u;
                v_cands = cands;
            }
        }
        if (v == -1) {
            if (size_ < best_) {
                best_ = size_;
                best_set_.clear();
                for (int u = 0; u < g_.n(); ++u)
                    if (in_set_[static_cast<size_t>(u)]) best_set_.push_back(u);
            }
            return;
        }
        if (v_cands == 0) return;
        if (size_ + packing_lb() >= best_) return;

        std::vector<int> cands;
        if (!excluded_[static_cast<size_t>(v)]) cands.push_back(v);
        for (int w : g_.neighbors(v))
            if (!excluded_[static_cast<size_t>(w)]) cands.push_back(w);
        std::vector<int> newly_excluded;
        for (int u : cands) {
            add(u);
            dfs(depth + 1);
            drop(u);
            if (aborted_) break;
            excluded_[static_cast<size_t>(u)] = 1;
            newly_excluded.push_back(u);
        }
        for (int u : newly_excluded) excluded_[static_cast<size_t>(u)] = 0;
    }

    const Graph& g_;
    SearchBudget budget_;
    Clock::time_point t0_;
    std::vector<char> in_set_, excluded_;
    std::vector<int> cover_;
    std::vector<char> mark_;
    int size_ = 0;
    int best_ = 0;
    std::vector<int> best_set_;
    long long nodes_ = 0;
    bool aborted_ = false;
};

}  // namespace

std::pair<VertexSet, SearchStats> exact_max_kstable(const Graph& g, int k, SearchBudget budget) {
    KSTAB_CHECK(k >= 0, "k must be >= 0");
    auto t0 = Clock::now();
    SearchStats stats;
    stats.proven_optimal = true;
    std::vector<int> result;
    for (const auto& comp : g.connected_components()) {
        VertexSet cs(comp);
        std::vector<int> remap;
        Graph sub = induced_subgraph(g, cs, &remap);
        if (sub.max_degree() <= k) {
            result.insert(result.end(), comp.begin(), comp.end());
            continue;
        }
        KStableSearch search(sub, k, budget, t0);
        search.run();
        stats.nodes_expanded += search.nodes();
        stats.proven_optimal = stats.proven_optimal && search.proven();
        for (int v : search.best_set()) result.push_back(remap[static_cast<size_t>(v)]);
    }
    stats.time_ms = elapsed_ms(t0);
    VertexSet out(std::move(result));
    stats.best_size = out.size();
    return {out, stats};
}

std::pair<VertexSet, SearchStats> exact_min_dominating(const Graph& g, SearchBudget budget) {
    auto t0 = Clock::now();
    SearchStats stats;
    stats.proven_optimal = true;
    std::vector<int> result;
    for (const auto& comp : g.connected_components()) {
        VertexSet cs(comp);
        std::vector<int> remap;
        Graph sub = induced_subgraph(g, cs, &remap);
        DominatingSearch search(sub, budget, t0);
        search.run();
        stats.nodes_expanded += search.nodes();
        stats.proven_optimal = stats.proven_optimal && search.proven();
        for (int v : search.best_set()) result.push_back(remap[static_cast<size_t>(v)]);
    }
    stats.time_ms = elapsed_ms(t0);
    VertexSet out(std::move(result));
    stats.best_size = out.size();
    return {out, stats};
}

long long catalan(int n) {
    // C(0)=1; C(n) = C(2n,n)/(n+1)
    long long c = 1;
    for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

namespace {

// Enumerate triangulations of the sub-polygon lo..hi (inclusive), rooted at
// the edge (lo,hi): choose the apex m of the triangle on that edge, recurse on
// both sides. Each triangulation is produced exactly once.
void tri_rec(int lo, int hi, std::vector<Edge>& chords, const std::function<void()>& cont) {
    if (hi - lo < 2) {
        cont();
        return;
    }
    for (int m = lo + 1; m < hi; ++m) {
        size_t pushed = 0;
        if (m - lo >= 2) {
            chords.emplace_back(lo, m);
            ++pushed;
        }
        if (hi - m >= 2) {
            chords.emplace_back(m, hi);
            ++pushed;
        }
        tri_rec(lo, m, chords, [&] { tri_rec(m, hi, chords, cont); });
        for (size_t i = 0; i < pushed; ++i) chords.pop_back();
    }
}

}  // namespace

void enumerate_polygon_triangulations(int n, const std::function<void(const OuterplaneGraph&)>& fn) {
    if (n < 3 || n > 14) throw NTooLarge("triangulation enumeration supports 3 <= n <= 14");
    std::vector<Edge> chords;
    tri_rec(0, n - 1, chords, [&] { fn(OuterplaneGraph(n, chords)); });
}

}  // namespace kstab
