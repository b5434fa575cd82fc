#include <array>
#include <string>
#include <vector>

#include "doctest.h"
#include "imcol/errors.hpp"
#include "imcol/gadgets.hpp"
#include "imcol/graph.hpp"
#include "imcol/oracle.hpp"
#include "imcol/preassignment.hpp"

using namespace imcol;

namespace {

std::string message_of(const std::exception& e) { return e.what(); }

// One part-1 vertex of degree 2 with color set {1,3}, two pendant part-2
// neighbors. The smallest instance that exercises ties and pendant paths.
struct SmallInstance {
    Multigraph h{3, {{1, 2}, {1, 3}}};
    Bipartition bip{{1, 2, 2}};
    Preassignment pre;

    SmallInstance() { pre.set(1, {1, 3}); }
};

} // namespace

TEST_CASE("build_reduction doubles, ties, and plants pendant paths") {
    SmallInstance in;
    const ReductionOutput out = build_reduction(in.h, in.bip, in.pre);

    CHECK(out.g1.vertex_count() == 6);
    CHECK(out.g1.edge_count() == 8);
    const std::vector<Edge> expected1{{1, 2}, {1, 3}, {4, 5}, {4, 6},
                                      {2, 5}, {2, 5}, {3, 6}, {3, 6}};
    CHECK(out.g1.edges() == expected1);
    CHECK(out.bip1 == Bipartition{{1, 2, 2, 2, 1, 1}});

    CHECK(out.sets1.colors_of(1) == std::vector<int>{1, 3});
    CHECK(out.sets1.colors_of(4) == std::vector<int>{1, 3});
    for (VertexId v : {2, 3, 5, 6}) CHECK(out.sets1.colors_of(v) == std::vector<int>{1, 2, 3});

    CHECK(out.g.vertex_count() == 10);
    CHECK(out.g.edge_count() == 12);
    const std::vector<Edge> tail{{1, 7}, {7, 8}, {4, 9}, {9, 10}};
    CHECK(std::vector<Edge>(out.g.edges().end() - 4, out.g.edges().end()) == tail);
    CHECK(out.bip == Bipartition{{1, 2, 2, 2, 1, 1, 2, 1, 1, 2}});

    CHECK(serialize_trace(out.trace) ==
          "map 1 h:1\nmap 2 h:2\nmap 3 h:3\n"
          "map 4 h':1\nmap 5 h':2\nmap 6 h':3\n"
          "map 7 p1:1\nmap 8 p2:1\nmap 9 p1:4\nmap 10 p2:4\n");
}

TEST_CASE("build_reduction tie count follows the part-2 degree") {
    // Complete bipartite 2x2: both part-2 vertices have degree 2, one tie
    // each, no pendants for the {1,2} sets.
    const Multigraph h(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    const Bipartition bip{{1, 1, 2, 2}};
    Preassignment pre;
    pre.set(1, {1, 2});
    pre.set(2, {1, 2});
    const ReductionOutput out = build_reduction(h, bip, pre);

    CHECK(out.g.vertex_count() == 8); // no pendants anywhere
    CHECK(out.g1.edge_count() == 10); // 4 + 4 + one tie per part-2 vertex
    int ties37 = 0;
    int ties48 = 0;
    for (const Edge& e : out.g1.edges()) {
        if (e == Edge{3, 7}) ++ties37;
        if (e == Edge{4, 8}) ++ties48;
    }
    CHECK(ties37 == 1);
    CHECK(ties48 == 1);

    // Degree-3 part-2 vertices get no tie at all.
    const Multigraph h3(5, {{1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}});
    const Bipartition bip3{{1, 1, 1, 2, 2}};
    Preassignment pre3;
    for (VertexId v : {1, 2, 3}) pre3.set(v, {1, 2});
    const ReductionOutput out3 = build_reduction(h3, bip3, pre3);
    CHECK(out3.g1.edge_count() == 12);
    for (const Edge& e : out3.g1.edges()) CHECK(e != Edge{4, 9});
}

TEST_CASE("build_reduction plants a single pendant for a {2,3} set") {
    const Multigraph h(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    const Bipartition bip{{1, 1, 2, 2}};
    Preassignment pre;
    pre.set(1, {2, 3});
    pre.set(2, {1, 2});
    const ReductionOutput out = build_reduction(h, bip, pre);

    // One pendant edge at vertex 1 and one at its copy 5, nothing else.
    CHECK(out.g.vertex_count() == 10);
    CHECK(out.g.edge_count() == 12);
    REQUIRE(out.trace.size() == 11);
    CHECK(out.trace[9] == TraceOrigin{TraceOrigin::Kind::PendantFirst, 1});
    CHECK(out.trace[10] == TraceOrigin{TraceOrigin::Kind::PendantFirst, 5});
    CHECK(out.g.degree(1) == 3);
    CHECK(out.g.degree(5) == 3);
}

TEST_CASE("build_reduction names the offending vertex") {
    const auto build = [](const Multigraph& h, const Bipartition& bip, const Preassignment& pre) {
        return build_reduction(h, bip, pre);
    };

    SUBCASE("degree above three") {
        const Multigraph h(2, {{1, 2}, {1, 2}, {1, 2}, {1, 2}});
        Preassignment pre;
        try {
            build(h, Bipartition{{1, 2}}, pre);
            FAIL("expected an input error");
        } catch (const InputError& e) {
            CHECK(message_of(e).find("vertex 1") != std::string::npos);
            CHECK(message_of(e).find("degree 4") != std::string::npos);
        }
    }
    SUBCASE("pendant part-1 vertex") {
        const Multigraph h(2, {{1, 2}});
        Preassignment pre;
        pre.set(1, {1});
        try {
            build(h, Bipartition{{1, 2}}, pre);
            FAIL("expected an input error");
        } catch (const InputError& e) {
            CHECK(message_of(e).find("part-1 vertex 1 is pendant") != std::string::npos);
        }
    }
    SUBCASE("color set on a part-2 vertex") {
        SmallInstance in;
        in.pre.set(2, {1});
        try {
            build(in.h, in.bip, in.pre);
            FAIL("expected an input error");
        } catch (const InputError& e) {
            CHECK(message_of(e).find("vertex 2") != std::string::npos);
            CHECK(message_of(e).find("part 2") != std::string::npos);
        }
    }
    SUBCASE("missing color set") {
        SmallInstance in;
        try {
            build(in.h, in.bip, Preassignment{});
            FAIL("expected an input error");
        } catch (const InputError& e) {
            CHECK(message_of(e).find("part-1 vertex 1 has no color set") != std::string::npos);
        }
    }
    SUBCASE("set size differs from the degree") {
        SmallInstance in;
        Preassignment pre;
        pre.set(1, {1});
        CHECK_THROWS_AS(build(in.h, in.bip, pre), InputError);
    }
    SUBCASE("no edges") {
        CHECK_THROWS_AS(build(Multigraph(2, {}), Bipartition{{1, 2}}, Preassignment{}),
                        InputError);
    }
}

TEST_CASE("class_size_vector counts part-1 degrees cumulatively") {
    const Multigraph a(6, {{1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {3, 4}});
    CHECK(class_size_vector(a, Bipartition{{1, 1, 1, 2, 2, 2}}) == std::array<int, 3>{3, 2, 1});

    const Multigraph b(6, {{1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {3, 4}, {3, 6}});
    CHECK(class_size_vector(b, Bipartition{{1, 1, 1, 2, 2, 2}}) == std::array<int, 3>{3, 3, 1});

    CHECK(class_size_vector(Multigraph(2, {}), Bipartition{{2, 2}}) == std::array<int, 3>{0, 0, 0});

    const Multigraph big(2, {{1, 2}, {1, 2}, {1, 2}, {1, 2}});
    CHECK_THROWS_AS(class_size_vector(big, Bipartition{{1, 2}}), InputError);
}

TEST_CASE("verify_equivalences agrees on the satisfiable example") {
    SmallInstance in;
    const EquivalenceReport report = verify_equivalences(in.h, in.bip, in.pre);
    CHECK(report.list_form == true);
    CHECK(report.constrained_form == true);
    CHECK(report.continuous_all_form == true);
    CHECK(report.continuous_part_form == true);
    CHECK(report.class_size_form == true);
    CHECK_FALSE(report.inconclusive);
    CHECK(report.agree);
}

TEST_CASE("verify_equivalences agrees on an unsatisfiable instance") {
    // Parallel edges pin both colors of vertex 1 at vertex 3, so the edge
    // (2,3) would need color 3, which vertex 2's set forbids.
    const Multigraph h(4, {{1, 3}, {1, 3}, {2, 3}, {2, 4}});
    const Bipartition bip{{1, 1, 2, 2}};
    Preassignment pre;
    pre.set(1, {1, 2});
    pre.set(2, {1, 2});

    const EquivalenceReport report = verify_equivalences(h, bip, pre);
    CHECK(report.list_form == false);
    CHECK(report.constrained_form == false);
    CHECK(report.continuous_all_form == false);
    CHECK(report.continuous_part_form == false);
    CHECK(report.class_size_form == false);
    CHECK(report.agree);
}

TEST_CASE("verify_equivalences agrees on the no-pendant instance") {
    SmallInstance in;
    Preassignment easy;
    easy.set(1, {1, 2});
    const EquivalenceReport report = verify_equivalences(in.h, in.bip, easy);
    CHECK(report.list_form == true);
    CHECK(report.agree);
}

TEST_CASE("verify_equivalences reports a capped search as inconclusive") {
    SmallInstance in;
    oracle::SearchLimits limits;
    limits.node_cap = 1;
    const EquivalenceReport report = verify_equivalences(in.h, in.bip, in.pre, limits);
    CHECK(report.inconclusive);
    CHECK_FALSE(report.agree);
}

TEST_CASE("the five forms agree across an enumerated corpus") {
    int instances = 0;
    oracle::enumerate_bipartite_multigraphs(2, 2, 4, [&](const Multigraph& h,
                                                         const Bipartition& bip) {
        if (h.max_degree() > 3) return;
        std::vector<VertexId> part1;
        for (VertexId v = 1; v <= h.vertex_count(); ++v) {
            if (bip.part(v) == 1) part1.push_back(v);
        }
        for (VertexId v : part1) {
            if (h.degree(v) < 2) return;
        }

        // Every way of assigning a color set of the right size to each
        // part-1 vertex.
        const std::vector<std::vector<int>> pairs{{1, 2}, {1, 3}, {2, 3}};
        std::vector<Preassignment> combos{Preassignment{}};
        for (VertexId v : part1) {
            std::vector<Preassignment> widened;
            for (const Preassignment& base : combos) {
                if (h.degree(v) == 3) {
                    Preassignment next = base;
                    next.set(v, {1, 2, 3});
                    widened.push_back(next);
                } else {
                    for (const std::vector<int>& colors : pairs) {
                        Preassignment next = base;
                        next.set(v, colors);
                        widened.push_back(next);
                    }
                }
            }
            combos = std::move(widened);
        }

        for (const Preassignment& pre : combos) {
            const EquivalenceReport report = verify_equivalences(h, bip, pre);
            REQUIRE_FALSE(report.inconclusive);
            CHECK(report.agree);
            ++instances;
        }
    });
    CHECK(instances >= 30);
}
