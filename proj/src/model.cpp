#include "linksub/model.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "linksub/errors.hpp"

namespace linksub {

OrientationAssignment checkerboard(const LinkDiagram& d, const DiagramMap& dm,
                                   bool flip_orientation) {
    auto faces = dm.map.face_orbits();
    OrientationAssignment oa;
    oa.spin.resize(faces.size());
    std::vector<int> face_of(dm.map.dart_slots(), -1);
    for (size_t f = 0; f < faces.size(); ++f) {
        int p = DiagramMap::slot_parity(faces[f][0]);
        for (Dart x : faces[f]) {
            require(DiagramMap::slot_parity(x) == p,
                    "face with mixed slot parity: diagram is not alternating");
            face_of[x] = static_cast<int>(f);
        }
        oa.spin[f] = p;
    }
    // adjacency proper 2-coloring sanity: twins must have opposite parity
    for (Dart x = 0; x < dm.map.dart_slots(); ++x)
        require(oa.spin[face_of[x]] != oa.spin[face_of[dm.map.twin[x]]],
                "checkerboard classes not alternating across an edge");

    // normalization: the face containing the canonical dart of the lowest
    // arc (smallest dart id among its two occurrences) is named clockwise
    int min_arc = 0;
    Dart dstar = 0;
    for (int v = 0; v < d.crossing_count(); ++v) {
        for (int s = 0; s < 4; ++s) {
            int a = d.crossings[v].arcs[s];
            if (min_arc == 0 || a < min_arc) {
                min_arc = a;
                dstar = 4 * v + s;
            }
        }
    }
    oa.clockwise_spin = oa.spin[face_of[dstar]];
    if (flip_orientation) oa.clockwise_spin ^= 1;
    return oa;
}

int TruncatedComplex::region_count() const {
    int n = 0;
    for (uint8_t s : is_square) n += !s;
    return n;
}

Dart TruncatedComplex::step_edge(Dart d, int steps) const {
    auto orbit = map.face_orbit_of(d);
    int n = static_cast<int>(orbit.size());
    int i = static_cast<int>(std::find(orbit.begin(), orbit.end(), d) - orbit.begin());
    int j = ((i + steps) % n + n) % n;
    return orbit[j];
}

TruncatedComplex truncate(const DiagramMap& dm, const OrientationAssignment& orient) {
    int c = dm.crossing_count;
    TruncatedComplex tc;
    tc.crossing_count = c;
    PlanarMap& m = tc.map;
    m.twin.assign(12 * c, kNil);
    m.next.assign(12 * c, kNil);
    m.alive.assign(12 * c, 1);
    tc.kind.assign(12 * c, EdgeKind::Trunc);
    tc.par.assign(12 * c, -1);

    auto L = [](int v, int s) { return 12 * v + s; };
    auto P = [](int v, int s) { return 12 * v + 4 + s; };       // toward slot s+1
    auto M = [](int v, int s) { return 12 * v + 8 + s; };       // toward slot s-1
    for (int v = 0; v < c; ++v) {
        for (int s = 0; s < 4; ++s) {
            Dart dt = dm.map.twin[4 * v + s];
            m.twin[L(v, s)] = L(DiagramMap::crossing_of(dt), DiagramMap::slot_of(dt));
            m.twin[P(v, s)] = M(v, (s + 1) & 3);
            m.twin[M(v, s)] = P(v, (s + 3) & 3);
            m.next[L(v, s)] = P(v, s);
            m.next[P(v, s)] = M(v, s);
            m.next[M(v, s)] = L(v, s);
            tc.kind[L(v, s)] = EdgeKind::Link;
            tc.par[L(v, s)] = static_cast<int8_t>(s & 1);
        }
    }
    m.check_valid();
    require(m.euler_characteristic() == 2, "truncated complex not a sphere");

    // face structure
    tc.faces = m.face_orbits();
    tc.face_of.assign(12 * c, -1);
    tc.is_square.assign(tc.faces.size(), 0);
    tc.face_spin.assign(tc.faces.size(), -1);
    tc.diagram_face.assign(tc.faces.size(), -1);
    auto dfaces = dm.map.face_orbits();
    std::vector<int> dface_of(dm.map.dart_slots(), -1);
    for (size_t f = 0; f < dfaces.size(); ++f)
        for (Dart d : dfaces[f]) dface_of[d] = static_cast<int>(f);

    for (size_t f = 0; f < tc.faces.size(); ++f) {
        bool has_link = false;
        for (Dart d : tc.faces[f]) {
            tc.face_of[d] = static_cast<int>(f);
            if (tc.kind[d] == EdgeKind::Link) has_link = true;
        }
        if (!has_link) {
            tc.is_square[f] = 1;
            require(tc.faces[f].size() == 4, "truncation square of degree != 4");
            continue;
        }
        int8_t spin = -1;
        for (Dart d : tc.faces[f]) {
            if (tc.kind[d] != EdgeKind::Link) continue;
            require(spin == -1 || spin == tc.par[d], "region with mixed spin");
            spin = tc.par[d];
            int v = d / 12, s = d % 12;
            int df = dface_of[4 * v + s];
            require(tc.diagram_face[f] == -1 || tc.diagram_face[f] == df,
                    "region maps to two diagram faces");
            tc.diagram_face[f] = df;
        }
        tc.face_spin[f] = spin;
        require(orient.spin[tc.diagram_face[f]] == spin, "orientation/spin mismatch");
    }
    tc.orient = orient;

    // counts: V=4c, E=6c, F=2c+2
    require(static_cast<int>(m.vertex_orbits().size()) == 4 * c, "truncate: V != 4c");
    require(m.live_darts() == 12 * c, "truncate: E != 6c");
    require(static_cast<int>(tc.faces.size()) == 2 * c + 2, "truncate: F != 2c+2");
    return tc;
}

Dart twist_image(const TruncatedComplex& tc, Dart boundary_dart, bool from_mirror) {
    int f = tc.face_of[boundary_dart];
    require(!tc.is_square[f], "twist on a truncation square");
    int w = (tc.face_spin[f] == 1) ? 1 : -1;
    if (from_mirror) w = -w;
    // one link-edge step = two positions along the truncated boundary
    return tc.step_edge(boundary_dart, 2 * w);
}

GluingDatum gluing_twist(const TruncatedComplex& tc, int region) {
    require(region >= 0 && region < static_cast<int>(tc.faces.size()), "bad region id");
    if (tc.is_square[region])
        throw invariant_breach("gluing_twist: truncation squares are never glued");
    GluingDatum g;
    g.region = region;
    for (Dart d : tc.faces[region]) g.dart_pairs.emplace_back(d, twist_image(tc, d, false));
    return g;
}

std::string emit_complex_json(const TruncatedComplex& tc) {
    std::ostringstream os;
    os << "{\n  \"schema\": \"complex-v1\",\n  \"crossings\": " << tc.crossing_count
       << ",\n  \"darts\": " << tc.map.dart_slots() << ",\n  \"twin\": [";
    for (Dart d = 0; d < tc.map.dart_slots(); ++d) os << (d ? "," : "") << tc.map.twin[d];
    os << "],\n  \"next\": [";
    for (Dart d = 0; d < tc.map.dart_slots(); ++d) os << (d ? "," : "") << tc.map.next[d];
    os << "],\n  \"edge_kind\": [";
    for (Dart d = 0; d < tc.map.dart_slots(); ++d)
        os << (d ? "," : "") << (tc.kind[d] == EdgeKind::Link ? "\"link\"" : "\"trunc\"");
    os << "],\n  \"faces\": [\n";
    for (size_t f = 0; f < tc.faces.size(); ++f) {
        os << "    {\"id\": " << f << ", \"role\": \""
           << (tc.is_square[f] ? "trunc" : "region") << "\"";
        if (!tc.is_square[f]) {
            bool cw = tc.orient.is_clockwise(tc.diagram_face[f]);
            os << ", \"orientation\": \"" << (cw ? "clockwise" : "counterclockwise") << "\""
               << ", \"diagram_face\": " << tc.diagram_face[f];
        }
        os << ", \"darts\": [";
        for (size_t i = 0; i < tc.faces[f].size(); ++i)
            os << (i ? "," : "") << tc.faces[f][i];
        os << "]}" << (f + 1 < tc.faces.size() ? "," : "") << "\n";
    }
    os << "  ]\n}\n";
    return os.str();
}

} // namespace linksub
