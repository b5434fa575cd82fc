#ifndef IMCOL_GRAPH_HPP
#define IMCOL_GRAPH_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "imcol/errors.hpp"

namespace imcol {

// Vertex and edge ids are 1-based and dense. Edge ids equal the position of
// the edge in the construction order and are never renumbered by coloring
// operations, so parallel edges stay distinguishable.
using VertexId = int;
using EdgeId = int;

struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    bool operator==(const Edge&) const = default;
};

// Loopless multigraph. Parallel edges are allowed; isolated vertices are
// allowed and impose no coloring constraint.
class Multigraph {
public:
    Multigraph() = default;
    Multigraph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(EdgeId e) const;
    const std::vector<Edge>& edges() const { return edges_; }

    // Incident edge ids of v, ascending.
    std::span<const EdgeId> incident(VertexId v) const;

    // Given one endpoint of an edge, returns the other.
    VertexId other_endpoint(EdgeId e, VertexId v) const;

    int degree(VertexId v) const;
    int max_degree() const;

    bool is_connected() const;
    bool is_triangle_free() const;

    // No parallel edges.
    bool is_simple() const;
    // Every vertex has degree max_degree().
    bool is_regular() const;

    void check_vertex(VertexId v) const;
    void check_edge(EdgeId e) const;

    bool operator==(const Multigraph& rhs) const {
        return n_ == rhs.n_ && edges_ == rhs.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incident_; // indexed by vertex id
};

// Assignment of every vertex to part 1 or part 2. Stored separately from the
// graph: only the bipartite-specific operations need it.
class Bipartition {
public:
    Bipartition() = default;
    // parts[i] is the part (1 or 2) of vertex i+1.
    explicit Bipartition(std::vector<int> parts);
    // Vertices 1..k in part 1, the rest in part 2 (the on-disk form).
    static Bipartition prefix(int vertex_count, int k);

    int vertex_count() const { return static_cast<int>(parts_.size()); }
    int part(VertexId v) const;

    // Vertices of the given part, ascending.
    std::vector<VertexId> part_vertices(int which) const;

    // k such that part 1 = {1..k}, if the parts are laid out that way.
    std::optional<int> prefix_size() const;

    // Throws InputError unless every edge of g joins part 1 to part 2.
    void check_against(const Multigraph& g) const;

    bool operator==(const Bipartition&) const = default;

private:
    std::vector<int> parts_;
};

struct VertexDeletion {
    Multigraph graph;
    // old vertex id -> new id; 0 for the deleted vertex. Entry 0 unused.
    std::vector<VertexId> vertex_map;
    // old edge id -> new id; 0 for removed edges. Entry 0 unused.
    std::vector<EdgeId> edge_map;
};

// Removes v and its incident edges; survivors are renumbered densely with
// their relative order preserved.
VertexDeletion delete_vertex(const Multigraph& g, VertexId v);

// Applies a vertex deletion's renumbering to a bipartition.
Bipartition restrict_bipartition(const Bipartition& bip, const VertexDeletion& del);

struct ParsedGraph {
    Multigraph graph;
    std::optional<Bipartition> bipartition;
};

// Graph file format (UTF-8, line oriented, '#' starts a comment line):
//   p imcg <n> <m>      exactly one, first non-comment line
//   b <k>               optional, before any edge line; parts = {1..k | rest}
//   e <u> <v>           m lines; the i-th edge line defines edge id i
ParsedGraph parse_graph(std::string_view text);
std::string serialize_graph(const Multigraph& g,
                            const std::optional<Bipartition>& bip = std::nullopt);

} // namespace imcol

#endif
