#include "imcol/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <numeric>
#include <random>
#include <thread>

namespace imcol::oracle {

namespace {

// Color bitmasks limit the palette; far beyond anything the backtracker can
// exhaust anyway.
constexpr int kMaxPalette = 64;

std::uint64_t low_bits(int t) {
    return t >= kMaxPalette ? ~0ull : ((1ull << t) - 1);
}

struct EngineConfig {
    int t = 0;
    bool require_all_colors = false;
    // Sound only when color classes are interchangeable (plain properness):
    // an edge may use at most one color above the highest placed so far.
    bool symmetry_break = false;
    std::vector<std::uint64_t> allowed; // per vertex; bit c-1 = color c allowed
    std::vector<char> track_span;       // per vertex; prune non-consecutive spectra
    std::vector<int> class_cap;         // empty, or 1-based per-color edge quota
};

struct BranchOutcome {
    bool found = false;
    bool capped = false;
    bool cancelled = false;
    long long nodes = 0;
    std::vector<int> colors;
};

// Explores the subtree where edge 1 takes one fixed color. Counting one node
// per committed placement makes outcomes composable: a sequential run is the
// branch runs back to back, which run_search reassembles.
class BranchSearcher {
public:
    BranchSearcher(const Multigraph& g, const EngineConfig& cfg, long long budget,
                   const std::atomic<int>* stop_at, int branch)
        : g_(g), cfg_(cfg), budget_(budget), stop_at_(stop_at), branch_(branch) {
        int n = g.vertex_count();
        used_mask_.assign(static_cast<size_t>(n) + 1, 0);
        min_col_.assign(static_cast<size_t>(n) + 1, 0);
        max_col_.assign(static_cast<size_t>(n) + 1, 0);
        degree_.assign(static_cast<size_t>(n) + 1, 0);
        for (VertexId v = 1; v <= n; ++v) degree_[static_cast<size_t>(v)] = g.degree(v);
        colors_.assign(static_cast<size_t>(g.edge_count()), 0);
        color_count_.assign(static_cast<size_t>(cfg.t) + 1, 0);
    }

    BranchOutcome run(int root_color) {
        out_ = {};
        search(1, root_color);
        return std::move(out_);
    }

private:
    bool feasible(VertexId u, VertexId v, int c, int idx) const {
        std::uint64_t bit = 1ull << (c - 1);
        if ((used_mask_[static_cast<size_t>(u)] | used_mask_[static_cast<size_t>(v)]) & bit)
            return false;
        if (!(cfg_.allowed[static_cast<size_t>(u)] & cfg_.allowed[static_cast<size_t>(v)] & bit))
            return false;
        if (!cfg_.class_cap.empty() &&
            color_count_[static_cast<size_t>(c)] >= cfg_.class_cap[static_cast<size_t>(c)])
            return false;
        for (VertexId x : {u, v}) {
            if (!cfg_.track_span[static_cast<size_t>(x)]) continue;
            size_t xi = static_cast<size_t>(x);
            int lo = min_col_[xi] == 0 ? c : std::min(min_col_[xi], c);
            int hi = std::max(max_col_[xi], c);
            if (hi - lo + 1 > degree_[xi]) return false;
        }
        if (cfg_.require_all_colors) {
            int used_after =
                used_colors_ + (color_count_[static_cast<size_t>(c)] == 0 ? 1 : 0);
            if (used_after + (g_.edge_count() - idx) < cfg_.t) return false;
        }
        return true;
    }

    // Returns true once a complete assignment has been recorded.
    bool search(int idx, int forced) {
        const Edge& ed = g_.edges()[static_cast<size_t>(idx - 1)];
        size_t ui = static_cast<size_t>(ed.u), vi = static_cast<size_t>(ed.v);
        int first = forced != 0 ? forced : 1;
        int last = forced != 0 ? forced
                               : (cfg_.symmetry_break ? std::min(cfg_.t, highest_ + 1) : cfg_.t);
        for (int c = first; c <= last; ++c) {
            if (!feasible(ed.u, ed.v, c, idx)) continue;

            std::uint64_t bit = 1ull << (c - 1);
            int save_min_u = min_col_[ui], save_max_u = max_col_[ui];
            int save_min_v = min_col_[vi], save_max_v = max_col_[vi];
            int save_highest = highest_;
            used_mask_[ui] |= bit;
            used_mask_[vi] |= bit;
            min_col_[ui] = save_min_u == 0 ? c : std::min(save_min_u, c);
            max_col_[ui] = std::max(save_max_u, c);
            min_col_[vi] = min_col_[vi] == 0 ? c : std::min(min_col_[vi], c);
            max_col_[vi] = std::max(max_col_[vi], c);
            if (++color_count_[static_cast<size_t>(c)] == 1) ++used_colors_;
            highest_ = std::max(highest_, c);
            colors_[static_cast<size_t>(idx - 1)] = c;

            ++out_.nodes;
            if (idx == g_.edge_count()) {
                out_.found = true;
                out_.colors = colors_;
                return true;
            }
            if (out_.nodes >= budget_) {
                out_.capped = true;
                return false;
            }
            if (stop_at_ && (out_.nodes & 1023) == 0 &&
                branch_ > stop_at_->load(std::memory_order_relaxed)) {
                out_.cancelled = true;
                return false;
            }
            if (search(idx + 1, 0)) return true;
            if (out_.capped || out_.cancelled) return false;

            used_mask_[ui] &= ~bit;
            used_mask_[vi] &= ~bit;
            min_col_[ui] = save_min_u;
            max_col_[ui] = save_max_u;
            min_col_[vi] = save_min_v;
            max_col_[vi] = save_max_v;
            highest_ = save_highest;
            if (--color_count_[static_cast<size_t>(c)] == 0) --used_colors_;
        }
        return false;
    }

    const Multigraph& g_;
    const EngineConfig& cfg_;
    long long budget_;
    const std::atomic<int>* stop_at_;
    int branch_;

    std::vector<std::uint64_t> used_mask_;
    std::vector<int> min_col_, max_col_, degree_, colors_, color_count_;
    int used_colors_ = 0;
    int highest_ = 0;
    BranchOutcome out_;
};

// Splits on edge 1's color. Every branch gets the full budget; the results
// are then replayed in branch order against the shared budget, which makes
// existence, witness, node count, and cap behavior independent of jobs.
OracleResult run_search(const Multigraph& g, const EngineConfig& cfg,
                        const SearchLimits& limits) {
    if (limits.node_cap < 1) throw InputError("node cap must be positive");
    if (limits.jobs < 1) throw InputError("jobs must be positive");
    if (cfg.t > kMaxPalette)
        throw InputError("palette of " + std::to_string(cfg.t) + " colors exceeds the supported " +
                         std::to_string(kMaxPalette));
    if (!limits.ignore_edge_guard && g.edge_count() > limits.max_edges)
        throw InputError("graph has " + std::to_string(g.edge_count()) +
                         " edges, above the search guard of " + std::to_string(limits.max_edges));

    OracleResult res;
    if (g.edge_count() == 0) {
        // Only the demand that colors get used can fail without edges.
        res.exists = !cfg.require_all_colors || cfg.t == 0;
        if (res.exists) res.witness = EdgeColoring();
        return res;
    }
    if (cfg.t < 1) return res; // no palette, no coloring

    const int branches = cfg.symmetry_break ? 1 : cfg.t;
    std::vector<BranchOutcome> outcomes(static_cast<size_t>(branches));

    if (limits.jobs == 1) {
        // Same replay semantics, streamed: give each branch what is left of
        // the budget and stop at the first decisive branch.
        long long consumed = 0;
        for (int b = 1; b <= branches; ++b) {
            BranchSearcher searcher(g, cfg, limits.node_cap - consumed, nullptr, b);
            BranchOutcome o = searcher.run(b);
            if (o.capped) {
                res.capped = true;
                res.nodes_explored = limits.node_cap;
                return res;
            }
            if (o.found) {
                res.exists = true;
                res.nodes_explored = consumed + o.nodes;
                res.witness = EdgeColoring(std::move(o.colors));
                return res;
            }
            consumed += o.nodes;
        }
        res.nodes_explored = consumed;
        return res;
    }

    std::atomic<int> stop_at{INT_MAX};
    std::atomic<int> next{1};
    auto work = [&] {
        while (true) {
            int b = next.fetch_add(1);
            if (b > branches) return;
            size_t bi = static_cast<size_t>(b - 1);
            if (b > stop_at.load(std::memory_order_relaxed)) {
                outcomes[bi].cancelled = true;
                continue;
            }
            BranchSearcher searcher(g, cfg, limits.node_cap, &stop_at, b);
            outcomes[bi] = searcher.run(b);
            if (outcomes[bi].found || outcomes[bi].capped) {
                int cur = stop_at.load();
                while (b < cur && !stop_at.compare_exchange_weak(cur, b)) {
                }
            }
        }
    };
    {
        std::vector<std::thread> pool;
        int workers = std::min(limits.jobs, branches);
        pool.reserve(static_cast<size_t>(workers));
        for (int i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    long long consumed = 0;
    for (int b = 1; b <= branches; ++b) {
        BranchOutcome& o = outcomes[static_cast<size_t>(b - 1)];
        if (o.cancelled)
            throw InternalError("branch " + std::to_string(b) +
                                " was cancelled but needed for replay");
        long long remaining = limits.node_cap - consumed;
        if (o.capped || (o.found && o.nodes > remaining) || (!o.found && o.nodes >= remaining)) {
            res.capped = true;
            res.nodes_explored = limits.node_cap;
            return res;
        }
        if (o.found) {
            res.exists = true;
            res.nodes_explored = consumed + o.nodes;
            res.witness = EdgeColoring(std::move(o.colors));
            return res;
        }
        consumed += o.nodes;
    }
    res.nodes_explored = consumed;
    return res;
}

EngineConfig base_config(const Multigraph& g, int t) {
    EngineConfig cfg;
    cfg.t = t;
    cfg.allowed.assign(static_cast<size_t>(g.vertex_count()) + 1, low_bits(t));
    cfg.track_span.assign(static_cast<size_t>(g.vertex_count()) + 1, 0);
    return cfg;
}

void check_palette(int t) {
    if (t < 1) throw InputError("color count t must be positive, got " + std::to_string(t));
}

} // namespace

OracleResult solve_interval_on(const Multigraph& g, const VertexSet& r, int t,
                               const SearchLimits& limits) {
    check_palette(t);
    r.check_against(g);
    EngineConfig cfg = base_config(g, t);
    cfg.require_all_colors = true;
    for (VertexId v : r.members()) cfg.track_span[static_cast<size_t>(v)] = 1;
    OracleResult res = run_search(g, cfg, limits);
    if (res.exists && !is_interval_on(g, *res.witness, r, t))
        throw InternalError("search returned a witness that fails interval validation");
    return res;
}

OracleResult solve_continuous_on(const Multigraph& g, const VertexSet& r, int t,
                                 const SearchLimits& limits) {
    check_palette(t);
    r.check_against(g);
    EngineConfig cfg = base_config(g, t);
    cfg.require_all_colors = true;
    // Spectrum {1..d(v)} means no edge at v may exceed d(v); together with
    // properness that pins the spectrum exactly.
    for (VertexId v : r.members())
        cfg.allowed[static_cast<size_t>(v)] &= low_bits(std::min(g.degree(v), t));
    OracleResult res = run_search(g, cfg, limits);
    if (res.exists && !is_continuous_on(g, *res.witness, r, t))
        throw InternalError("search returned a witness that fails continuous validation");
    return res;
}

OracleResult solve_proper(const Multigraph& g, int t, const SearchLimits& limits) {
    check_palette(t);
    EngineConfig cfg = base_config(g, t);
    cfg.symmetry_break = true;
    OracleResult res = run_search(g, cfg, limits);
    if (res.exists && !(is_proper(g, *res.witness) && res.witness->max_color() <= t))
        throw InternalError("search returned a witness that fails properness validation");
    return res;
}

OracleResult solve_list_edge_coloring(const Multigraph& g, const Bipartition& bip,
                                      const Preassignment& pre, const SearchLimits& limits) {
    bip.check_against(g);
    pre.check_against(g);
    if (g.max_degree() > 3)
        throw InputError("preassigned coloring is over the palette {1,2,3}; max degree " +
                         std::to_string(g.max_degree()) + " cannot be proper within it");
    EngineConfig cfg = base_config(g, 3);
    for (VertexId v : pre.constrained_vertices()) {
        std::uint64_t mask = 0;
        for (int c : pre.colors_of(v)) mask |= 1ull << (c - 1);
        cfg.allowed[static_cast<size_t>(v)] = mask;
    }
    OracleResult res = run_search(g, cfg, limits);
    if (res.exists) {
        bool ok = is_proper(g, *res.witness) && res.witness->max_color() <= 3;
        for (VertexId v : pre.constrained_vertices())
            for (int c : spectrum(g, *res.witness, v).colors)
                ok = ok && std::find(pre.colors_of(v).begin(), pre.colors_of(v).end(), c) !=
                               pre.colors_of(v).end();
        if (!ok) throw InternalError("search returned a witness that violates a preassignment");
    }
    return res;
}

OracleResult solve_fixed_class_sizes(const Multigraph& g, const std::vector<int>& sizes,
                                     const SearchLimits& limits) {
    long long total = 0;
    for (int s : sizes) {
        if (s < 0) throw InputError("class sizes must be nonnegative");
        total += s;
    }
    if (total != g.edge_count())
        throw InputError("class sizes sum to " + std::to_string(total) + " but the graph has " +
                         std::to_string(g.edge_count()) + " edges");
    int t = static_cast<int>(sizes.size());
    EngineConfig cfg = base_config(g, t);
    cfg.class_cap.assign(static_cast<size_t>(t) + 1, 0);
    for (int c = 1; c <= t; ++c) cfg.class_cap[static_cast<size_t>(c)] = sizes[static_cast<size_t>(c - 1)];
    OracleResult res = run_search(g, cfg, limits);
    if (res.exists) {
        bool ok = is_proper(g, *res.witness);
        std::vector<int> count(static_cast<size_t>(t) + 1, 0);
        for (int c : res.witness->colors()) {
            ok = ok && c <= t;
            if (c <= t) ++count[static_cast<size_t>(c)];
        }
        for (int c = 1; c <= t; ++c)
            ok = ok && count[static_cast<size_t>(c)] == sizes[static_cast<size_t>(c - 1)];
        if (!ok) throw InternalError("search returned a witness with wrong class sizes");
    }
    return res;
}

IntervalStats interval_stats(const Multigraph& g, const VertexSet& r,
                             const SearchLimits& limits) {
    if (g.edge_count() < 1) throw InputError("graph has no edges");
    IntervalStats st;
    for (int t = 1; t <= g.edge_count(); ++t) {
        OracleResult res = solve_interval_on(g, r, t, limits);
        st.nodes_explored += res.nodes_explored;
        if (res.capped) {
            st.capped = true;
            return st;
        }
        if (res.exists) {
            if (!st.w) {
                st.w = t;
                st.w_witness = res.witness;
            }
            st.W = t;
            st.W_witness = res.witness;
        }
    }
    return st;
}

MembershipResult interval_membership(const Multigraph& g, const SearchLimits& limits) {
    MembershipResult out;
    VertexSet all = VertexSet::all(g);
    for (int t = 1; t <= g.edge_count(); ++t) {
        OracleResult res = solve_interval_on(g, all, t, limits);
        out.nodes_explored += res.nodes_explored;
        if (res.capped) {
            out.capped = true;
            return out;
        }
        if (res.exists) {
            out.member = true;
            out.t = t;
            out.witness = res.witness;
            return out;
        }
    }
    return out;
}

ChromaticIndexResult chromatic_index(const Multigraph& g, const SearchLimits& limits) {
    if (g.edge_count() < 1) throw InputError("graph has no edges");
    ChromaticIndexResult out;
    for (int t = std::max(1, g.max_degree()); t <= g.edge_count(); ++t) {
        OracleResult res = solve_proper(g, t, limits);
        out.nodes_explored += res.nodes_explored;
        if (res.capped) {
            out.capped = true;
            return out;
        }
        if (res.exists) {
            out.value = t;
            out.witness = res.witness;
            return out;
        }
    }
    throw InternalError("no proper coloring found although m distinct colors always work");
}

namespace {

// Multiplicity vectors over the given vertex pairs, lexicographic with the
// first pair most significant. part1_last[u] marks the index of the last
// pair touching a vertex whose coverage can be settled early.
void enumerate_multisets(const std::vector<Edge>& pairs, int vertex_count, int max_m,
                         int max_mult, const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> mult(pairs.size(), 0);
    std::vector<int> degree(static_cast<size_t>(vertex_count) + 1, 0);

    // Vertices whose pair list ends at index k (no later pair touches them).
    std::vector<std::vector<VertexId>> finished_at(pairs.size() + 1);
    for (VertexId v = 1; v <= vertex_count; ++v) {
        int last = -1;
        for (size_t k = 0; k < pairs.size(); ++k)
            if (pairs[k].u == v || pairs[k].v == v) last = static_cast<int>(k);
        finished_at[static_cast<size_t>(last + 1)].push_back(v);
    }

    std::function<void(size_t, int)> rec = [&](size_t k, int used) {
        for (VertexId v : finished_at[k])
            if (degree[static_cast<size_t>(v)] == 0) return;
        if (k == pairs.size()) {
            if (used >= 1) emit(mult);
            return;
        }
        const Edge& p = pairs[k];
        for (int c = 0; c <= max_mult && used + c <= max_m; ++c) {
            mult[k] = c;
            degree[static_cast<size_t>(p.u)] += c;
            degree[static_cast<size_t>(p.v)] += c;
            rec(k + 1, used + c);
            degree[static_cast<size_t>(p.u)] -= c;
            degree[static_cast<size_t>(p.v)] -= c;
        }
        mult[k] = 0;
    };
    rec(0, 0);
}

Multigraph graph_from_multiplicities(int vertex_count, const std::vector<Edge>& pairs,
                                     const std::vector<int>& mult) {
    std::vector<Edge> edges;
    for (size_t k = 0; k < pairs.size(); ++k)
        for (int i = 0; i < mult[k]; ++i) edges.push_back(pairs[k]);
    return Multigraph(vertex_count, std::move(edges));
}

} // namespace

void enumerate_bipartite_multigraphs(
    int max_n1, int max_n2, int max_m,
    const std::function<void(const Multigraph&, const Bipartition&)>& visit) {
    if (max_n1 < 1 || max_n2 < 1 || max_m < 1)
        throw InputError("enumeration bounds must be positive");
    for (int n1 = 1; n1 <= max_n1; ++n1)
        for (int n2 = 1; n2 <= max_n2; ++n2) {
            std::vector<Edge> pairs;
            for (VertexId u = 1; u <= n1; ++u)
                for (VertexId w = 1; w <= n2; ++w) pairs.push_back({u, n1 + w});
            Bipartition bip = Bipartition::prefix(n1 + n2, n1);
            enumerate_multisets(pairs, n1 + n2, max_m, 3, [&](const std::vector<int>& mult) {
                visit(graph_from_multiplicities(n1 + n2, pairs, mult), bip);
            });
        }
}

void enumerate_multigraphs(int max_n, int max_m, int max_multiplicity,
                           const std::function<void(const Multigraph&)>& visit) {
    if (max_n < 1 || max_m < 1 || max_multiplicity < 1)
        throw InputError("enumeration bounds must be positive");
    for (int n = 2; n <= max_n; ++n) {
        std::vector<Edge> pairs;
        for (VertexId u = 1; u <= n; ++u)
            for (VertexId v = u + 1; v <= n; ++v) pairs.push_back({u, v});
        enumerate_multisets(pairs, n, max_m, max_multiplicity,
                            [&](const std::vector<int>& mult) {
                                visit(graph_from_multiplicities(n, pairs, mult));
                            });
    }
}

std::pair<Multigraph, Bipartition> sample_bipartite_multigraph(int n1, int n2, int m,
                                                               std::uint64_t seed) {
    if (n1 < 1 || n2 < 1) throw InputError("part sizes must be positive");
    if (m < std::max(n1, n2))
        throw InputError("need at least max(n1,n2) edges to cover every vertex");
    if (static_cast<long long>(m) > 3ll * n1 * n2)
        throw InputError("multiplicity cap 3 admits at most 3*n1*n2 edges");

    std::mt19937_64 rng(seed);
    auto pick = [&](int bound) { return static_cast<int>(rng() % static_cast<unsigned>(bound)) + 1; };

    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<std::vector<int>> mult(static_cast<size_t>(n1) + 1,
                                           std::vector<int>(static_cast<size_t>(n2) + 1, 0));
        std::vector<std::pair<int, int>> chosen;
        auto add = [&](int u, int w) {
            if (mult[static_cast<size_t>(u)][static_cast<size_t>(w)] == 3) return false;
            ++mult[static_cast<size_t>(u)][static_cast<size_t>(w)];
            chosen.emplace_back(u, w);
            return true;
        };
        // One edge per part-2 vertex covers that side.
        for (int w = 1; w <= n2; ++w) add(pick(n1), w);
        // Then cover any part-1 vertex the first pass missed.
        std::vector<int> deg1(static_cast<size_t>(n1) + 1, 0);
        for (auto& [u, w] : chosen) ++deg1[static_cast<size_t>(u)];
        for (int u = 1; u <= n1; ++u)
            if (deg1[static_cast<size_t>(u)] == 0) add(u, pick(n2));
        if (static_cast<int>(chosen.size()) > m) continue; // coverage needed too many edges
        while (static_cast<int>(chosen.size()) < m) add(pick(n1), pick(n2));

        std::sort(chosen.begin(), chosen.end());
        std::vector<Edge> edges;
        edges.reserve(chosen.size());
        for (auto& [u, w] : chosen) edges.push_back({u, n1 + w});
        return {Multigraph(n1 + n2, std::move(edges)), Bipartition::prefix(n1 + n2, n1)};
    }
    throw InternalError("sampler failed to cover both parts within the attempt bound");
}

} // namespace imcol::oracle
