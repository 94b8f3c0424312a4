#pragma once

#include <string>
#include <vector>

#include "linksub/pd.hpp"
#include "linksub/planar_map.hpp"

namespace linksub {

// 4-valent sphere map of a diagram. Dart 4v+s sits at crossing v, slot s,
// pointing away along the arc in that slot; next = s+1 (mod 4).
struct DiagramMap {
    PlanarMap map;
    int crossing_count = 0;

    static int crossing_of(Dart d) { return d >> 2; }
    static int slot_of(Dart d) { return d & 3; }
    // slots 0,2 = under-strand, 1,3 = over-strand
    static int slot_parity(Dart d) { return d & 1; }
};

// Throws parse_error when the rotation system is not a disjoint union of
// sphere maps (genus > 0 somewhere), which signals a malformed PD code.
DiagramMap build_planar_map(const LinkDiagram& d);

struct ValidationReport {
    bool alternating = false;
    bool reduced = false;
    bool prime = false;
    bool non_split = false;

    // witnesses for failed checks (empty when the check passed)
    std::vector<int> bad_arcs;              // arcs whose two ends have equal parity
    std::vector<int> nugatory_crossings;    // 1-indexed crossing numbers
    struct SharedEdges {
        int face_a, face_b;                 // face orbit indices
        std::vector<int> arcs;              // >= 2 shared arcs
    };
    std::vector<SharedEdges> prime_violations;
    std::vector<std::vector<int>> components; // crossing sets when split

    bool admissible() const { return alternating && reduced && prime && non_split; }
    std::string summary() const;
};

ValidationReport validate(const LinkDiagram& d, const DiagramMap& m);

} // namespace linksub
