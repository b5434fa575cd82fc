#include "imcol/oracle.hpp"

#include "doctest.h"
#include "naive_checker.hpp"

#include <set>
#include <sstream>
#include <vector>

using namespace imcol;
using oracle::SearchLimits;

namespace {

Multigraph cycle4() { return Multigraph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}); }
Multigraph star3() { return Multigraph(4, {{1, 2}, {1, 3}, {1, 4}}); }
Multigraph triangle() { return Multigraph(3, {{1, 2}, {2, 3}, {3, 1}}); }

std::string graph_key(const Multigraph& g) {
    return serialize_graph(g);
}

} // namespace

TEST_CASE("interval bounds of the 4-cycle and the 3-star") {
    auto c4 = cycle4();
    auto st = oracle::interval_stats(c4, VertexSet::all(c4));
    REQUIRE_FALSE(st.capped);
    CHECK(st.w == 2);
    CHECK(st.W == 3);
    CHECK(is_interval_on(c4, *st.w_witness, VertexSet::all(c4), 2));
    CHECK(is_interval_on(c4, *st.W_witness, VertexSet::all(c4), 3));

    auto k13 = star3();
    auto st2 = oracle::interval_stats(k13, VertexSet::all(k13));
    CHECK(st2.w == 3);
    CHECK(st2.W == 3);

    // The independent full-enumeration checker agrees.
    for (int t = 1; t <= 4; ++t) {
        CHECK(naive::interval_on(c4, VertexSet::all(c4), t).has_value() == (t == 2 || t == 3));
        if (t <= 3)
            CHECK(naive::interval_on(k13, VertexSet::all(k13), t).has_value() == (t == 3));
    }
}

TEST_CASE("solve_interval_on basics") {
    auto c4 = cycle4();
    CHECK(oracle::solve_interval_on(c4, VertexSet::all(c4), 3).exists);
    CHECK_FALSE(oracle::solve_interval_on(c4, VertexSet::all(c4), 4).exists);
    auto single = Multigraph(2, {{1, 2}});
    CHECK(oracle::solve_interval_on(single, VertexSet::all(single), 1).exists);
    CHECK_THROWS_AS(oracle::solve_interval_on(single, VertexSet::all(single), 0), InputError);
}

TEST_CASE("membership and chromatic index") {
    CHECK(oracle::interval_membership(cycle4()).member);
    CHECK(oracle::interval_membership(Multigraph(2, {{1, 2}})).member);
    auto k3 = oracle::interval_membership(triangle());
    CHECK_FALSE(k3.member);
    CHECK_FALSE(k3.capped);

    CHECK(oracle::chromatic_index(cycle4()).value == 2);
    CHECK(oracle::chromatic_index(triangle()).value == 3);
    CHECK(oracle::chromatic_index(star3()).value == 3);
    CHECK_THROWS_AS(oracle::chromatic_index(Multigraph(2, {})), InputError);

    // Colorings found while scanning are genuine witnesses.
    auto chi = oracle::chromatic_index(triangle());
    CHECK(is_proper(triangle(), *chi.witness));
    CHECK(chi.witness->max_color() <= 3);
}

TEST_CASE("oracle agrees with the naive checker on a small corpus") {
    int graphs = 0;
    oracle::enumerate_bipartite_multigraphs(2, 2, 4, [&](const Multigraph& g, const Bipartition& bip) {
        ++graphs;
        auto all = VertexSet::all(g);
        auto part1 = VertexSet::part(bip, 1);
        for (int t = 1; t <= g.edge_count(); ++t) {
            CAPTURE(graph_key(g));
            CAPTURE(t);
            CHECK(oracle::solve_interval_on(g, all, t).exists ==
                  naive::interval_on(g, all, t).has_value());
            CHECK(oracle::solve_interval_on(g, part1, t).exists ==
                  naive::interval_on(g, part1, t).has_value());
            CHECK(oracle::solve_continuous_on(g, part1, t).exists ==
                  naive::continuous_on(g, part1, t).has_value());
            CHECK(oracle::solve_proper(g, t).exists == naive::proper(g, t).has_value());
        }
    });
    CHECK(graphs > 0);

    oracle::enumerate_multigraphs(4, 4, 3, [&](const Multigraph& g) {
        auto all = VertexSet::all(g);
        for (int t = 1; t <= g.edge_count(); ++t) {
            CAPTURE(graph_key(g));
            CAPTURE(t);
            CHECK(oracle::solve_interval_on(g, all, t).exists ==
                  naive::interval_on(g, all, t).has_value());
        }
    });
}

TEST_CASE("list edge coloring with preassignments") {
    // One degree-2 vertex with two pendant neighbors: T={1,3} is satisfiable.
    {
        Multigraph h(3, {{1, 2}, {1, 3}});
        Preassignment pre;
        pre.set(1, {1, 3});
        auto res = oracle::solve_list_edge_coloring(h, Bipartition::prefix(3, 1), pre);
        REQUIRE(res.exists);
        auto s = spectrum(h, *res.witness, 1);
        CHECK(s.colors == std::vector<int>{1, 3});
    }
    // Two constrained vertices forced to clash at a shared degree-3 neighbor:
    // u has two parallel edges to y, v one edge to y and one to z, and both
    // u and v may only use {1,2}. The u edges exhaust {1,2} at y.
    {
        Multigraph h(4, {{1, 3}, {1, 3}, {2, 3}, {2, 4}});
        Preassignment pre;
        pre.set(1, {1, 2});
        pre.set(2, {1, 2});
        auto res = oracle::solve_list_edge_coloring(h, Bipartition::prefix(4, 2), pre);
        CHECK_FALSE(res.exists);
        CHECK_FALSE(res.capped);
    }
    // No constrained vertices at all.
    {
        Multigraph h(2, {{1, 2}});
        auto res = oracle::solve_list_edge_coloring(h, Bipartition::prefix(2, 1), {});
        CHECK(res.exists);
    }
    // Constraint size must match the degree.
    {
        Multigraph h(3, {{1, 2}, {1, 3}});
        Preassignment pre;
        pre.set(1, {1});
        CHECK_THROWS_AS(
            oracle::solve_list_edge_coloring(h, Bipartition::prefix(3, 1), pre), InputError);
    }
}

TEST_CASE("fixed class sizes") {
    Multigraph path(3, {{1, 2}, {2, 3}});
    CHECK(oracle::solve_fixed_class_sizes(path, {1, 1}).exists);
    CHECK_FALSE(oracle::solve_fixed_class_sizes(path, {2, 0}).exists);
    CHECK_THROWS_AS(oracle::solve_fixed_class_sizes(path, {1, 2}), InputError);
    CHECK_THROWS_AS(oracle::solve_fixed_class_sizes(path, {3, -1}), InputError);

    auto res = oracle::solve_fixed_class_sizes(cycle4(), {2, 2});
    REQUIRE(res.exists);
    int ones = 0;
    for (int c : res.witness->colors()) ones += c == 1;
    CHECK(ones == 2);
}

TEST_CASE("node cap yields a distinct capped verdict") {
    auto c4 = cycle4();
    SearchLimits tight;
    tight.node_cap = 2;
    auto res = oracle::solve_interval_on(c4, VertexSet::all(c4), 3, tight);
    CHECK(res.capped);
    CHECK_FALSE(res.exists);
    CHECK(res.nodes_explored == 2);

    // With room to breathe the same query resolves.
    auto ok = oracle::solve_interval_on(c4, VertexSet::all(c4), 3);
    CHECK(ok.exists);
    CHECK_FALSE(ok.capped);
}

TEST_CASE("edge guard rejects big instances unless overridden") {
    std::vector<Edge> edges;
    for (int i = 0; i < 13; ++i) edges.push_back({1, 2});
    // 13 parallel edges break the multiplicity habit but are legal input.
    Multigraph wide(2, std::move(edges));
    CHECK_THROWS_AS(oracle::solve_proper(wide, 13), InputError);
    SearchLimits open;
    open.ignore_edge_guard = true;
    CHECK(oracle::solve_proper(wide, 13, open).exists);
}

TEST_CASE("results are identical across job counts") {
    SearchLimits par;
    par.jobs = 4;

    auto check_same = [&](const Multigraph& g, const VertexSet& r, int t,
                          const SearchLimits& base) {
        SearchLimits seq = base;
        seq.jobs = 1;
        SearchLimits wide = base;
        wide.jobs = 4;
        auto a = oracle::solve_interval_on(g, r, t, seq);
        auto b = oracle::solve_interval_on(g, r, t, wide);
        CHECK(a.exists == b.exists);
        CHECK(a.capped == b.capped);
        CHECK(a.nodes_explored == b.nodes_explored);
        CHECK(a.witness.has_value() == b.witness.has_value());
        if (a.witness && b.witness) CHECK(*a.witness == *b.witness);
    };

    check_same(cycle4(), VertexSet::all(cycle4()), 3, SearchLimits{});
    check_same(cycle4(), VertexSet::all(cycle4()), 4, SearchLimits{}); // not-exists case
    check_same(star3(), VertexSet::all(star3()), 3, SearchLimits{});

    SearchLimits tight;
    tight.node_cap = 3;
    check_same(cycle4(), VertexSet::all(cycle4()), 3, tight); // capped case

    oracle::enumerate_bipartite_multigraphs(2, 2, 3, [&](const Multigraph& g, const Bipartition&) {
        for (int t = 1; t <= g.edge_count(); ++t)
            check_same(g, VertexSet::all(g), t, SearchLimits{});
    });
}

TEST_CASE("bipartite enumeration matches hand counts") {
    // Bounds (1,2,2): one part-1 vertex u. Exact sizes (1,1) give {u-a} and
    // {u-a,u-a}; sizes (1,2) force one edge to each of a,b. Three graphs.
    std::vector<std::string> seen;
    oracle::enumerate_bipartite_multigraphs(1, 2, 2, [&](const Multigraph& g, const Bipartition& bip) {
        CHECK(bip.prefix_size() == 1);
        seen.push_back(serialize_graph(g, bip));
    });
    CHECK(seen.size() == 3);

    bool has_double_edge = false;
    oracle::enumerate_bipartite_multigraphs(1, 1, 2, [&](const Multigraph& g, const Bipartition&) {
        if (g.edge_count() == 2) has_double_edge = true;
        CHECK(g.vertex_count() == 2);
    });
    CHECK(has_double_edge);

    bool has_path2 = false;
    oracle::enumerate_bipartite_multigraphs(2, 1, 2, [&](const Multigraph& g, const Bipartition&) {
        if (g.vertex_count() == 3 && g.edge_count() == 2 && g.is_simple()) has_path2 = true;
    });
    CHECK(has_path2);
}

TEST_CASE("enumeration is deterministic, covering, and multiplicity-capped") {
    std::ostringstream first, second;
    auto dump = [](std::ostringstream& out) {
        return [&out](const Multigraph& g, const Bipartition& bip) {
            out << serialize_graph(g, bip);
        };
    };
    oracle::enumerate_bipartite_multigraphs(2, 2, 4, dump(first));
    oracle::enumerate_bipartite_multigraphs(2, 2, 4, dump(second));
    CHECK(first.str() == second.str());

    oracle::enumerate_bipartite_multigraphs(2, 2, 4, [&](const Multigraph& g, const Bipartition& bip) {
        CHECK_NOTHROW(bip.check_against(g));
        for (VertexId v = 1; v <= g.vertex_count(); ++v) CHECK(g.degree(v) >= 1);
        std::map<std::pair<int, int>, int> mult;
        for (const Edge& e : g.edges()) ++mult[{e.u, e.v}];
        for (auto& [_, k] : mult) CHECK(k <= 3);
    });

    int with_max_two = 0, with_max_one = 0;
    oracle::enumerate_multigraphs(3, 3, 2, [&](const Multigraph&) { ++with_max_two; });
    oracle::enumerate_multigraphs(3, 3, 1, [&](const Multigraph& g) {
        ++with_max_one;
        CHECK(g.is_simple());
    });
    CHECK(with_max_one < with_max_two);
}

TEST_CASE("seeded sampler is reproducible and well-formed") {
    auto [g1, b1] = oracle::sample_bipartite_multigraph(3, 5, 9, 42);
    auto [g2, b2] = oracle::sample_bipartite_multigraph(3, 5, 9, 42);
    CHECK(g1 == g2);
    CHECK(b1 == b2);
    auto [g3, b3] = oracle::sample_bipartite_multigraph(3, 5, 9, 43);
    CHECK(serialize_graph(g1, b1) != serialize_graph(g3, b3));

    CHECK(g1.vertex_count() == 8);
    CHECK(g1.edge_count() == 9);
    CHECK_NOTHROW(b1.check_against(g1));
    for (VertexId v = 1; v <= g1.vertex_count(); ++v) CHECK(g1.degree(v) >= 1);

    CHECK_THROWS_AS(oracle::sample_bipartite_multigraph(2, 5, 3, 1), InputError);
    CHECK_THROWS_AS(oracle::sample_bipartite_multigraph(1, 1, 4, 1), InputError);
}
