#ifndef IMCOL_PREASSIGNMENT_HPP
#define IMCOL_PREASSIGNMENT_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "imcol/graph.hpp"

namespace imcol {

// Per-vertex allowed color sets over the palette {1,2,3}: the edges at a
// constrained vertex must use colors from its set. Unconstrained vertices
// only obey properness.
class Preassignment {
public:
    Preassignment() = default;

    // colors must be a nonempty subset of {1,2,3}; duplicates rejected.
    void set(VertexId v, std::vector<int> colors);

    bool constrained(VertexId v) const;
    // Ascending colors of a constrained vertex.
    const std::vector<int>& colors_of(VertexId v) const;
    std::vector<VertexId> constrained_vertices() const;
    int size() const { return static_cast<int>(sets_.size()); }

    // Constrained ids are vertices of g and each set has exactly d(v) colors.
    void check_against(const Multigraph& g) const;

    bool operator==(const Preassignment&) const = default;

private:
    std::map<VertexId, std::vector<int>> sets_;
};

// Preassignment file: one line per constrained vertex,
//   t <vertex> <c1> [<c2> [<c3>]]
// colors from {1,2,3}; '#' starts a comment line.
Preassignment parse_preassignment(std::string_view text);
// Lines come out sorted by vertex id, colors ascending.
std::string serialize_preassignment(const Preassignment& pre);

} // namespace imcol

#endif
