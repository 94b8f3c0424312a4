#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace linksub {

// One crossing of a PD code: arc labels counterclockwise starting at the
// incoming under-strand. Slots 0 and 2 carry the under-strand, 1 and 3 the
// over-strand.
struct Crossing {
    std::array<int, 4> arcs;
    bool operator==(const Crossing&) const = default;
};

struct LinkDiagram {
    std::vector<Crossing> crossings;
    int arc_count = 0; // number of distinct arc labels

    int crossing_count() const { return static_cast<int>(crossings.size()); }
};

// Parses the PD text format: one `X a,b,c,d` per line, 1-indexed positive arc
// labels, `#` comments and blank lines ignored, `/` accepted as an inline
// separator. Throws parse_error with line/column on malformed input, and on
// arc labels not used exactly twice.
LinkDiagram parse_pd_code(std::string_view text);

// Canonical writer: each tuple rotated by 0 or 2 to its lexicographic minimum
// (rotation by 2 preserves under/over roles), crossings sorted, single spaces.
std::string emit_pd(const LinkDiagram& d);

// Number of link components (strand traversal).
int component_count(const LinkDiagram& d);

} // namespace linksub
