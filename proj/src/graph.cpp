#include "imcol/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

namespace imcol {

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0)
        throw InputError("vertex count must be nonnegative");
    incident_.assign(static_cast<size_t>(n_) + 1, {});
    for (size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.u < 1 || e.u > n_ || e.v < 1 || e.v > n_)
            throw InputError("edge " + std::to_string(i + 1) + " has endpoint out of range 1.." +
                             std::to_string(n_));
        if (e.u == e.v)
            throw InputError("edge " + std::to_string(i + 1) + " is a loop at vertex " +
                             std::to_string(e.u));
        EdgeId id = static_cast<EdgeId>(i + 1);
        incident_[static_cast<size_t>(e.u)].push_back(id);
        incident_[static_cast<size_t>(e.v)].push_back(id);
    }
}

void Multigraph::check_vertex(VertexId v) const {
    if (v < 1 || v > n_)
        throw InputError("vertex id " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
}

void Multigraph::check_edge(EdgeId e) const {
    if (e < 1 || e > edge_count())
        throw InputError("edge id " + std::to_string(e) + " out of range 1.." +
                         std::to_string(edge_count()));
}

const Edge& Multigraph::edge(EdgeId e) const {
    check_edge(e);
    return edges_[static_cast<size_t>(e - 1)];
}

std::span<const EdgeId> Multigraph::incident(VertexId v) const {
    check_vertex(v);
    return incident_[static_cast<size_t>(v)];
}

VertexId Multigraph::other_endpoint(EdgeId e, VertexId v) const {
    const Edge& ed = edge(e);
    if (ed.u == v) return ed.v;
    if (ed.v == v) return ed.u;
    throw InputError("vertex " + std::to_string(v) + " is not an endpoint of edge " +
                     std::to_string(e));
}

int Multigraph::degree(VertexId v) const {
    check_vertex(v);
    return static_cast<int>(incident_[static_cast<size_t>(v)].size());
}

int Multigraph::max_degree() const {
    int d = 0;
    for (VertexId v = 1; v <= n_; ++v)
        d = std::max(d, static_cast<int>(incident_[static_cast<size_t>(v)].size()));
    return d;
}

bool Multigraph::is_connected() const {
    if (n_ == 0) return true;
    std::vector<char> seen(static_cast<size_t>(n_) + 1, 0);
    std::vector<VertexId> stack{1};
    seen[1] = 1;
    int reached = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (EdgeId e : incident_[static_cast<size_t>(v)]) {
            VertexId w = other_endpoint(e, v);
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n_;
}

bool Multigraph::is_triangle_free() const {
    // Adjacency as sorted neighbor lists; a triangle needs three distinct
    // pairwise adjacent vertices, so multiplicities do not matter.
    std::vector<std::vector<VertexId>> adj(static_cast<size_t>(n_) + 1);
    for (const Edge& e : edges_) {
        adj[static_cast<size_t>(e.u)].push_back(e.v);
        adj[static_cast<size_t>(e.v)].push_back(e.u);
    }
    for (auto& nb : adj) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    for (const Edge& e : edges_) {
        const auto& a = adj[static_cast<size_t>(e.u)];
        const auto& b = adj[static_cast<size_t>(e.v)];
        // Intersect the two sorted neighbor lists.
        size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) return false;
            if (a[i] < b[j]) ++i;
            else ++j;
        }
    }
    return true;
}

bool Multigraph::is_simple() const {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(edges_.size());
    for (const Edge& e : edges_)
        pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(pairs.begin(), pairs.end());
    return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

bool Multigraph::is_regular() const {
    int d = max_degree();
    for (VertexId v = 1; v <= n_; ++v)
        if (degree(v) != d) return false;
    return true;
}

Bipartition::Bipartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i)
        if (parts_[i] != 1 && parts_[i] != 2)
            throw InputError("vertex " + std::to_string(i + 1) + " has part " +
                             std::to_string(parts_[i]) + "; expected 1 or 2");
}

Bipartition Bipartition::prefix(int vertex_count, int k) {
    if (k < 0 || k > vertex_count)
        throw InputError("bipartition prefix " + std::to_string(k) + " out of range 0.." +
                         std::to_string(vertex_count));
    std::vector<int> parts(static_cast<size_t>(vertex_count), 2);
    for (int i = 0; i < k; ++i) parts[static_cast<size_t>(i)] = 1;
    return Bipartition(std::move(parts));
}

int Bipartition::part(VertexId v) const {
    if (v < 1 || v > vertex_count())
        throw InputError("vertex id " + std::to_string(v) + " out of range for bipartition");
    return parts_[static_cast<size_t>(v - 1)];
}

std::vector<VertexId> Bipartition::part_vertices(int which) const {
    std::vector<VertexId> out;
    for (VertexId v = 1; v <= vertex_count(); ++v)
        if (parts_[static_cast<size_t>(v - 1)] == which) out.push_back(v);
    return out;
}

std::optional<int> Bipartition::prefix_size() const {
    int k = 0;
    while (k < vertex_count() && parts_[static_cast<size_t>(k)] == 1) ++k;
    for (int i = k; i < vertex_count(); ++i)
        if (parts_[static_cast<size_t>(i)] == 1) return std::nullopt;
    return k;
}

void Bipartition::check_against(const Multigraph& g) const {
    if (vertex_count() != g.vertex_count())
        throw InputError("bipartition covers " + std::to_string(vertex_count()) +
                         " vertices but graph has " + std::to_string(g.vertex_count()));
    for (EdgeId e = 1; e <= g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (part(ed.u) == part(ed.v))
            throw InputError("edge " + std::to_string(e) + " (" + std::to_string(ed.u) + "," +
                             std::to_string(ed.v) + ") does not cross the bipartition");
    }
}

VertexDeletion delete_vertex(const Multigraph& g, VertexId v) {
    g.check_vertex(v);
    VertexDeletion out;
    out.vertex_map.assign(static_cast<size_t>(g.vertex_count()) + 1, 0);
    VertexId next = 0;
    for (VertexId w = 1; w <= g.vertex_count(); ++w)
        if (w != v) out.vertex_map[static_cast<size_t>(w)] = ++next;

    out.edge_map.assign(static_cast<size_t>(g.edge_count()) + 1, 0);
    std::vector<Edge> edges;
    for (EdgeId e = 1; e <= g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.u == v || ed.v == v) continue;
        edges.push_back({out.vertex_map[static_cast<size_t>(ed.u)],
                         out.vertex_map[static_cast<size_t>(ed.v)]});
        out.edge_map[static_cast<size_t>(e)] = static_cast<EdgeId>(edges.size());
    }
    out.graph = Multigraph(g.vertex_count() - 1, std::move(edges));
    return out;
}

Bipartition restrict_bipartition(const Bipartition& bip, const VertexDeletion& del) {
    std::vector<int> parts(static_cast<size_t>(del.graph.vertex_count()), 0);
    for (VertexId old = 1; old < static_cast<VertexId>(del.vertex_map.size()); ++old) {
        VertexId now = del.vertex_map[static_cast<size_t>(old)];
        if (now != 0) parts[static_cast<size_t>(now - 1)] = bip.part(old);
    }
    return Bipartition(std::move(parts));
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    throw InputError("line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

int parse_int(const std::string& tok, int line, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        parse_fail(line, std::string("expected an integer for ") + what + ", got '" + tok + "'");
    return value;
}

} // namespace

ParsedGraph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;

    bool have_header = false;
    int n = 0, m = 0;
    std::optional<int> prefix;
    int prefix_line = 0;
    std::vector<Edge> edges;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto toks = tokenize(line);
        if (toks.empty()) continue;

        if (!have_header) {
            if (toks[0] != "p" || toks.size() != 4 || toks[1] != "imcg")
                parse_fail(lineno, "expected header 'p imcg <n> <m>'");
            n = parse_int(toks[2], lineno, "vertex count");
            m = parse_int(toks[3], lineno, "edge count");
            if (n < 0 || m < 0) parse_fail(lineno, "counts must be nonnegative");
            have_header = true;
            continue;
        }
        if (toks[0] == "p") parse_fail(lineno, "duplicate header");
        if (toks[0] == "b") {
            if (!edges.empty()) parse_fail(lineno, "'b' line must precede edge lines");
            if (prefix) parse_fail(lineno, "duplicate 'b' line");
            if (toks.size() != 2) parse_fail(lineno, "expected 'b <k>'");
            int k = parse_int(toks[1], lineno, "part size");
            if (k < 0 || k > n) parse_fail(lineno, "part size out of range 0.." + std::to_string(n));
            prefix = k;
            prefix_line = lineno;
            continue;
        }
        if (toks[0] == "e") {
            if (toks.size() != 3) parse_fail(lineno, "expected 'e <u> <v>'");
            if (static_cast<int>(edges.size()) == m)
                parse_fail(lineno, "more than " + std::to_string(m) + " edge lines");
            VertexId u = parse_int(toks[1], lineno, "endpoint");
            VertexId v = parse_int(toks[2], lineno, "endpoint");
            if (u < 1 || u > n || v < 1 || v > n)
                parse_fail(lineno, "endpoint out of range 1.." + std::to_string(n));
            if (u == v) parse_fail(lineno, "loop edge at vertex " + std::to_string(u));
            if (prefix) {
                bool u1 = u <= *prefix, v1 = v <= *prefix;
                if (u1 == v1)
                    parse_fail(lineno, "edge " + std::to_string(u) + "-" + std::to_string(v) +
                                           " does not cross the declared bipartition");
            }
            edges.push_back({u, v});
            continue;
        }
        parse_fail(lineno, "unrecognized line type '" + toks[0] + "'");
    }
    if (!have_header) throw InputError("missing header 'p imcg <n> <m>'");
    if (static_cast<int>(edges.size()) != m)
        throw InputError("header declares " + std::to_string(m) + " edges but " +
                         std::to_string(edges.size()) + " edge lines found");

    ParsedGraph out;
    out.graph = Multigraph(n, std::move(edges));
    if (prefix) {
        out.bipartition = Bipartition::prefix(n, *prefix);
        try {
            out.bipartition->check_against(out.graph);
        } catch (const InputError& err) {
            parse_fail(prefix_line, err.what());
        }
    }
    return out;
}

std::string serialize_graph(const Multigraph& g, const std::optional<Bipartition>& bip) {
    std::string out;
    out += "p imcg " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) +
           "\n";
    if (bip) {
        auto k = bip->prefix_size();
        if (!k)
            throw InputError("bipartition is not in prefix form; renumber part-1 vertices first");
        out += "b " + std::to_string(*k) + "\n";
    }
    for (const Edge& e : g.edges())
        out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

} // namespace imcol
