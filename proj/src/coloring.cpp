#include "imcol/coloring.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace imcol {

EdgeColoring::EdgeColoring(std::vector<int> colors) : colors_(std::move(colors)) {
    for (size_t i = 0; i < colors_.size(); ++i)
        if (colors_[i] < 1)
            throw InputError("edge " + std::to_string(i + 1) + " has color " +
                             std::to_string(colors_[i]) + "; colors must be positive");
}

int EdgeColoring::color(EdgeId e) const {
    if (e < 1 || e > edge_count())
        throw InputError("edge id " + std::to_string(e) + " out of range 1.." +
                         std::to_string(edge_count()));
    return colors_[static_cast<size_t>(e - 1)];
}

void EdgeColoring::set_color(EdgeId e, int c) {
    if (e < 1 || e > edge_count())
        throw InputError("edge id " + std::to_string(e) + " out of range 1.." +
                         std::to_string(edge_count()));
    if (c < 1) throw InputError("color " + std::to_string(c) + " must be positive");
    colors_[static_cast<size_t>(e - 1)] = c;
}

int EdgeColoring::min_color() const {
    if (colors_.empty()) return 0;
    return *std::min_element(colors_.begin(), colors_.end());
}

int EdgeColoring::max_color() const {
    if (colors_.empty()) return 0;
    return *std::max_element(colors_.begin(), colors_.end());
}

int Spectrum::min() const {
    if (colors.empty()) throw InputError("empty spectrum has no minimum");
    return colors.front();
}

int Spectrum::max() const {
    if (colors.empty()) throw InputError("empty spectrum has no maximum");
    return colors.back();
}

bool Spectrum::contains(int c) const {
    return std::binary_search(colors.begin(), colors.end(), c);
}

bool Spectrum::is_consecutive() const {
    if (colors.empty()) return true;
    return colors.back() - colors.front() + 1 == size();
}

VertexSet::VertexSet(std::vector<VertexId> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (VertexId v : members_)
        if (v < 1) throw InputError("vertex id " + std::to_string(v) + " must be positive");
}

VertexSet VertexSet::all(const Multigraph& g) {
    std::vector<VertexId> m(static_cast<size_t>(g.vertex_count()));
    for (int i = 0; i < g.vertex_count(); ++i) m[static_cast<size_t>(i)] = i + 1;
    return VertexSet(std::move(m));
}

VertexSet VertexSet::part(const Bipartition& bip, int which) {
    return VertexSet(bip.part_vertices(which));
}

bool VertexSet::contains(VertexId v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::check_against(const Multigraph& g) const {
    if (!members_.empty() && members_.back() > g.vertex_count())
        throw InputError("vertex set member " + std::to_string(members_.back()) +
                         " exceeds vertex count " + std::to_string(g.vertex_count()));
}

namespace {

void check_total(const Multigraph& g, const EdgeColoring& c) {
    if (c.edge_count() != g.edge_count())
        throw InputError("coloring covers " + std::to_string(c.edge_count()) +
                         " edges but graph has " + std::to_string(g.edge_count()));
}

} // namespace

Spectrum spectrum(const Multigraph& g, const EdgeColoring& c, VertexId v) {
    check_total(g, c);
    Spectrum s;
    s.vertex = v;
    for (EdgeId e : g.incident(v)) s.colors.push_back(c.color(e));
    std::sort(s.colors.begin(), s.colors.end());
    s.colors.erase(std::unique(s.colors.begin(), s.colors.end()), s.colors.end());
    return s;
}

bool is_proper(const Multigraph& g, const EdgeColoring& c) {
    check_total(g, c);
    std::vector<int> at_vertex;
    for (VertexId v = 1; v <= g.vertex_count(); ++v) {
        at_vertex.clear();
        for (EdgeId e : g.incident(v)) at_vertex.push_back(c.color(e));
        std::sort(at_vertex.begin(), at_vertex.end());
        if (std::adjacent_find(at_vertex.begin(), at_vertex.end()) != at_vertex.end())
            return false;
    }
    return true;
}

bool is_interval_on(const Multigraph& g, const EdgeColoring& c, const VertexSet& r, int t) {
    if (t < 1) throw InputError("color count t must be positive, got " + std::to_string(t));
    check_total(g, c);
    r.check_against(g);
    if (!is_proper(g, c)) return false;

    std::vector<char> used(static_cast<size_t>(t) + 1, 0);
    for (int col : c.colors()) {
        if (col > t) return false;
        used[static_cast<size_t>(col)] = 1;
    }
    for (int col = 1; col <= t; ++col)
        if (!used[static_cast<size_t>(col)]) return false;

    for (VertexId v : r.members()) {
        Spectrum s = spectrum(g, c, v);
        // Properness already gives |spectrum| = d(v); consecutiveness is the
        // only extra constraint.
        if (!s.is_consecutive()) return false;
    }
    return true;
}

bool is_continuous_on(const Multigraph& g, const EdgeColoring& c, const VertexSet& r, int t) {
    if (!is_interval_on(g, c, r, t)) return false;
    for (VertexId v : r.members()) {
        if (g.degree(v) == 0) continue;
        Spectrum s = spectrum(g, c, v);
        if (s.min() != 1) return false;
    }
    return true;
}

EdgeColoring normalize_shift(const EdgeColoring& c) {
    if (c.edge_count() == 0) throw InputError("cannot normalize a coloring with no edges");
    int shift = 1 - c.min_color();
    std::vector<int> out = c.colors();
    for (int& col : out) col += shift;
    return EdgeColoring(std::move(out));
}

int interval_closure_check(const Multigraph& g, const EdgeColoring& c) {
    check_total(g, c);
    if (g.edge_count() == 0) throw InputError("graph has no edges");
    if (!g.is_connected()) throw InputError("graph is not connected");
    if (!is_proper(g, c)) throw InputError("coloring is not proper");
    for (VertexId v = 1; v <= g.vertex_count(); ++v)
        if (!spectrum(g, c, v).is_consecutive())
            throw InputError("vertex " + std::to_string(v) + " has a non-consecutive spectrum");

    EdgeColoring norm = normalize_shift(c);
    int t = norm.max_color();
    std::vector<char> used(static_cast<size_t>(t) + 1, 0);
    for (int col : norm.colors()) used[static_cast<size_t>(col)] = 1;
    for (int col = 1; col <= t; ++col)
        if (!used[static_cast<size_t>(col)])
            throw InternalError("color " + std::to_string(col) +
                                " unused below the maximum; connected consecutive-spectrum "
                                "colorings cannot have gaps");
    return t;
}

namespace detail {

std::vector<EdgeId> kempe_walk_swap(const Multigraph& g, std::vector<int>& colors,
                                    VertexId start, int j, int k) {
    g.check_vertex(start);
    if (j < 1 || k < 1 || j == k)
        throw InputError("alternating-path colors must be positive and distinct");
    if (static_cast<int>(colors.size()) != g.edge_count())
        throw InputError("color array size does not match edge count");

    auto edge_with = [&](VertexId v, int want) -> EdgeId {
        EdgeId found = 0;
        for (EdgeId e : g.incident(v)) {
            if (colors[static_cast<size_t>(e - 1)] == want) {
                if (found != 0)
                    throw InternalError("two edges of color " + std::to_string(want) +
                                        " meet at vertex " + std::to_string(v));
                found = e;
            }
        }
        return found;
    };

    bool has_j = edge_with(start, j) != 0;
    bool has_k = edge_with(start, k) != 0;
    if (has_j && has_k)
        throw InputError("vertex " + std::to_string(start) + " carries both colors " +
                         std::to_string(j) + " and " + std::to_string(k) +
                         "; the alternating path is not anchored");

    std::vector<EdgeId> path;
    if (!has_j && !has_k) return path;

    std::vector<char> visited(static_cast<size_t>(g.vertex_count()) + 1, 0);
    visited[static_cast<size_t>(start)] = 1;
    VertexId cur = start;
    int want = has_j ? j : k;
    while (true) {
        EdgeId e = edge_with(cur, want);
        if (e == 0) break;
        path.push_back(e);
        cur = g.other_endpoint(e, cur);
        if (visited[static_cast<size_t>(cur)])
            throw InternalError("alternating path revisited vertex " + std::to_string(cur));
        visited[static_cast<size_t>(cur)] = 1;
        want = (want == j) ? k : j;
    }
    for (EdgeId e : path) {
        int& col = colors[static_cast<size_t>(e - 1)];
        col = (col == j) ? k : j;
    }
    return path;
}

} // namespace detail

EdgeColoring kempe_swap(const Multigraph& g, const EdgeColoring& c, VertexId start, int j, int k) {
    check_total(g, c);
    if (!is_proper(g, c)) throw InputError("coloring is not proper");
    std::vector<int> work = c.colors();
    detail::kempe_walk_swap(g, work, start, j, k);
    return EdgeColoring(std::move(work));
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    throw InputError("line " + std::to_string(line) + ": " + msg);
}

int parse_int(const std::string& tok, int line, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        parse_fail(line, std::string("expected an integer for ") + what + ", got '" + tok + "'");
    return value;
}

} // namespace

ParsedColoring parse_coloring(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;

    bool have_header = false;
    int m = 0, t = 0;
    std::vector<int> colors;
    std::vector<char> seen;
    int assigned = 0;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream toks(line);
        std::vector<std::string> parts;
        std::string tok;
        while (toks >> tok) parts.push_back(tok);
        if (parts.empty()) continue;

        if (!have_header) {
            if (parts[0] != "p" || parts.size() != 4 || parts[1] != "imcol")
                parse_fail(lineno, "expected header 'p imcol <m> <t>'");
            m = parse_int(parts[2], lineno, "edge count");
            t = parse_int(parts[3], lineno, "color count");
            if (m < 0 || t < 0) parse_fail(lineno, "counts must be nonnegative");
            colors.assign(static_cast<size_t>(m), 0);
            seen.assign(static_cast<size_t>(m) + 1, 0);
            have_header = true;
            continue;
        }
        if (parts[0] == "p") parse_fail(lineno, "duplicate header");
        if (parts[0] == "c") {
            if (parts.size() != 3) parse_fail(lineno, "expected 'c <edge> <color>'");
            int e = parse_int(parts[1], lineno, "edge id");
            int col = parse_int(parts[2], lineno, "color");
            if (e < 1 || e > m) parse_fail(lineno, "edge id out of range 1.." + std::to_string(m));
            if (seen[static_cast<size_t>(e)])
                parse_fail(lineno, "edge " + std::to_string(e) + " colored twice");
            if (col < 1 || col > t)
                parse_fail(lineno, "color out of range 1.." + std::to_string(t));
            seen[static_cast<size_t>(e)] = 1;
            colors[static_cast<size_t>(e - 1)] = col;
            ++assigned;
            continue;
        }
        parse_fail(lineno, "unrecognized line type '" + parts[0] + "'");
    }
    if (!have_header) throw InputError("missing header 'p imcol <m> <t>'");
    if (assigned != m)
        throw InputError("header declares " + std::to_string(m) + " edges but " +
                         std::to_string(assigned) + " are colored");

    ParsedColoring out;
    out.coloring = EdgeColoring(std::move(colors));
    out.t = t;
    return out;
}

std::string serialize_coloring(const EdgeColoring& c, int t) {
    if (t < c.max_color())
        throw InputError("declared color count " + std::to_string(t) +
                         " is below the maximum used color " + std::to_string(c.max_color()));
    std::string out;
    out += "p imcol " + std::to_string(c.edge_count()) + " " + std::to_string(t) + "\n";
    for (EdgeId e = 1; e <= c.edge_count(); ++e)
        out += "c " + std::to_string(e) + " " + std::to_string(c.color(e)) + "\n";
    return out;
}

} // namespace imcol
