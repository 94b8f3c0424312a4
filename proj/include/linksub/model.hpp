#pragma once

#include <string>
#include <vector>

#include "linksub/diagram.hpp"
#include "linksub/planar_map.hpp"

namespace linksub {

enum class EdgeKind : uint8_t { Link = 0, Trunc = 1 };

// Checkerboard orientation of the diagram faces. The two classes coincide with
// the slot-parity classes of the face orbits (a consequence of alternation);
// `spin` stores that parity per face. Naming: the class of the face containing
// the canonical dart of the lowest-numbered arc is called clockwise, unless
// flipped.
struct OrientationAssignment {
    std::vector<int> spin;   // per diagram face: 0 or 1
    int clockwise_spin = 1;  // which spin value is named "clockwise"

    bool is_clockwise(int face) const { return spin[face] == clockwise_spin; }
};

OrientationAssignment checkerboard(const LinkDiagram& d, const DiagramMap& dm,
                                   bool flip_orientation = false);

// Boundary complex of the truncated ideal polyhedron: every crossing blown up
// into a truncation square. Dart layout per crossing v: link darts 12v+s
// (s = 0..3, pointing along the diagram arcs), square darts 12v+4+s (toward
// slot s+1) and 12v+8+s (toward slot s-1).
struct TruncatedComplex {
    PlanarMap map;
    std::vector<EdgeKind> kind;  // per dart
    std::vector<int8_t> par;     // slot parity for link darts, -1 for trunc darts
    int crossing_count = 0;

    // face structure (computed once; region faces first is NOT guaranteed)
    std::vector<std::vector<Dart>> faces;
    std::vector<int> face_of;      // per dart
    std::vector<uint8_t> is_square; // per face
    std::vector<int8_t> face_spin; // per face; -1 for squares
    std::vector<int> diagram_face; // per face: originating diagram face orbit index, -1 squares
    OrientationAssignment orient;

    int region_count() const;
    bool is_region(int f) const { return !is_square[f]; }
    Dart edge_min(Dart d) const { return std::min(d, map.twin[d]); }

    static Dart link_dart(int v, int s) { return 12 * v + s; }

    // one edge step along the face orbit of a boundary dart (face on the right)
    Dart step_edge(Dart d, int steps) const;
};

TruncatedComplex truncate(const DiagramMap& dm, const OrientationAssignment& orient);

// The face pairing between the two mirror polyhedra, restricted to one region:
// for each boundary dart of the region, the boundary dart of the mirror
// polyhedron's matching face glued over the same edge. The twist moves one
// link-edge step along the boundary, direction given by the region's class
// (spin 1: +1 step along the face orbit; spin 0: -1).
struct GluingDatum {
    int region = -1;
    std::vector<std::pair<Dart, Dart>> dart_pairs;
};

GluingDatum gluing_twist(const TruncatedComplex& tc, int region);

// Twist step for one boundary dart (the core of gluing_twist; used by the
// evolution engine). `from_mirror` negates the direction (crossing the pairing
// in the opposite sense).
Dart twist_image(const TruncatedComplex& tc, Dart boundary_dart, bool from_mirror);

std::string emit_complex_json(const TruncatedComplex& tc);

} // namespace linksub
