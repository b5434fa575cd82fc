#include "imcol/preassignment.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace imcol {

void Preassignment::set(VertexId v, std::vector<int> colors) {
    if (v < 1) throw InputError("vertex id " + std::to_string(v) + " must be positive");
    if (colors.empty() || colors.size() > 3)
        throw InputError("vertex " + std::to_string(v) + " needs 1 to 3 allowed colors");
    std::sort(colors.begin(), colors.end());
    if (std::adjacent_find(colors.begin(), colors.end()) != colors.end())
        throw InputError("vertex " + std::to_string(v) + " has a duplicate allowed color");
    for (int c : colors)
        if (c < 1 || c > 3)
            throw InputError("vertex " + std::to_string(v) + " has allowed color " +
                             std::to_string(c) + " outside 1..3");
    sets_[v] = std::move(colors);
}

bool Preassignment::constrained(VertexId v) const { return sets_.count(v) != 0; }

const std::vector<int>& Preassignment::colors_of(VertexId v) const {
    auto it = sets_.find(v);
    if (it == sets_.end())
        throw InputError("vertex " + std::to_string(v) + " has no preassigned colors");
    return it->second;
}

std::vector<VertexId> Preassignment::constrained_vertices() const {
    std::vector<VertexId> out;
    out.reserve(sets_.size());
    for (const auto& [v, _] : sets_) out.push_back(v);
    return out;
}

void Preassignment::check_against(const Multigraph& g) const {
    for (const auto& [v, colors] : sets_) {
        g.check_vertex(v);
        if (static_cast<int>(colors.size()) != g.degree(v))
            throw InputError("vertex " + std::to_string(v) + " has " +
                             std::to_string(colors.size()) + " allowed colors but degree " +
                             std::to_string(g.degree(v)));
    }
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

Preassignment parse_preassignment(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    Preassignment pre;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream toks(line);
        std::vector<std::string> parts;
        std::string tok;
        while (toks >> tok) parts.push_back(tok);
        if (parts.empty()) continue;

        if (parts[0] != "t" || parts.size() < 3 || parts.size() > 5)
            parse_fail(lineno, "expected 't <vertex> <c1> [<c2> [<c3>]]'");
        VertexId v = parse_int(parts[1], lineno, "vertex id");
        if (pre.constrained(v))
            parse_fail(lineno, "vertex " + std::to_string(v) + " constrained twice");
        std::vector<int> colors;
        for (size_t i = 2; i < parts.size(); ++i)
            colors.push_back(parse_int(parts[i], lineno, "color"));
        try {
            pre.set(v, std::move(colors));
        } catch (const InputError& err) {
            parse_fail(lineno, err.what());
        }
    }
    return pre;
}

std::string serialize_preassignment(const Preassignment& pre) {
    std::string out;
    for (VertexId v : pre.constrained_vertices()) {
        out += "t " + std::to_string(v);
        for (int c : pre.colors_of(v)) out += " " + std::to_string(c);
        out += "\n";
    }
    return out;
}

} // namespace imcol
