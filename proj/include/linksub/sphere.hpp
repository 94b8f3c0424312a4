#pragma once

#include <vector>

#include "linksub/model.hpp"
#include "linksub/planar_map.hpp"

namespace linksub {

// Growing boundary complex of the universal cover (replacement semantics).
// Every dart remembers the model dart it copies (prov) and whether its
// polyhedron copy was instantiated mirrored (reflected). Link edges carry a
// wedge count: the number of polyhedra glued around them so far (1 fresh,
// 3 loaded, 4 saturated and erased). Truncation edges never load.
struct Sphere {
    const TruncatedComplex* model = nullptr;
    PlanarMap m;
    std::vector<EdgeKind> kind;
    std::vector<int8_t> par;       // over-parity bit for link darts, -1 otherwise
    std::vector<Dart> prov;        // model dart copied
    std::vector<uint8_t> reflected;
    std::vector<uint8_t> outer;    // darts of a non-region outer face (disk mode)
    std::vector<int32_t> eid;      // stable edge ids
    std::vector<int8_t> wedge;     // per eid; meaningful for link edges only
    int stage = 0;
    long saturated_edges = 0;      // edges that reached 4 polyhedra and were erased
    bool disk_mode = false;

    int32_t edge_id(Dart d) const { return eid[d]; }
    bool edge_has_outer(Dart d) const { return outer[d] || outer[m.twin[d]]; }
};

struct SphereRegion {
    std::vector<Dart> orbit; // face_next order
    bool square = false;
    int8_t spin = -1;
    Dart loaded = kNil;      // this region's loaded boundary dart, if any
    int model_face = -1;
    bool is_outer = false;
};

// Face scan with the running structural checks (constant spin per region, at
// most one loaded edge, uniform provenance face and chirality).
std::vector<SphereRegion> scan_regions(const Sphere& s);

Sphere make_seed_sphere(const TruncatedComplex& tc);

// Standalone closed tile (disk mode): one region copying model face f at the
// given chirality, plus an outer face. Used for pattern extraction.
Sphere make_region_disk(const TruncatedComplex& tc, int face, bool chirality);

// Standalone loaded pair: two regions joined along a loaded edge whose two
// side darts copy model darts p1 (in face(p1)) and p2, at the given chirality.
// In plain chirality p1/p2 are boundary darts of the two faces; in reflected
// chirality they are the twins of such darts.
Sphere make_pair_disk(const TruncatedComplex& tc, Dart p1, Dart p2, bool chirality);

struct EvolveStats {
    int singles = 0;
    int pairs = 0;
};

// One round: glues a mirror polyhedron onto every single region and one onto
// every loaded pair. Throws invariant_breach on any local-homeomorphism or
// Theorem-3.1 violation.
EvolveStats evolve_round(Sphere& s);

Sphere replacement_evolve(const TruncatedComplex& tc, int depth);

// Full invariant battery (twin/next validity, Euler characteristic, wedge
// ledger, loaded flanker spins, truncation grid valences).
void check_sphere(const Sphere& s);

} // namespace linksub
