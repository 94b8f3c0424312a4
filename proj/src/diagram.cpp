#include "linksub/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "linksub/errors.hpp"

namespace linksub {

DiagramMap build_planar_map(const LinkDiagram& d) {
    int c = d.crossing_count();
    DiagramMap dm;
    dm.crossing_count = c;
    PlanarMap& m = dm.map;
    m.twin.assign(4 * c, kNil);
    m.next.assign(4 * c, kNil);
    m.alive.assign(4 * c, 1);

    std::map<int, std::vector<Dart>> occ;
    for (int v = 0; v < c; ++v)
        for (int s = 0; s < 4; ++s) occ[d.crossings[v].arcs[s]].push_back(4 * v + s);
    for (auto& [arc, ds] : occ) {
        if (ds.size() != 2)
            throw parse_error("arc " + std::to_string(arc) + " not used exactly twice");
        m.twin[ds[0]] = ds[1];
        m.twin[ds[1]] = ds[0];
    }
    for (Dart x = 0; x < 4 * c; ++x) m.next[x] = (x & ~3) | ((x + 1) & 3);
    m.check_valid();

    // Rotation systems of PD codes always close up into a surface; planarity
    // means Euler characteristic 2 per connected component.
    std::vector<int> comp(c, -1);
    int ncomp = 0;
    for (int v0 = 0; v0 < c; ++v0) {
        if (comp[v0] >= 0) continue;
        std::vector<int> stack{v0};
        comp[v0] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int s = 0; s < 4; ++s) {
                int w = DiagramMap::crossing_of(m.twin[4 * v + s]);
                if (comp[w] < 0) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
            }
        }
        ++ncomp;
    }
    if (m.euler_characteristic() != 2L * ncomp)
        throw parse_error("PD rotation system is not planar (Euler characteristic " +
                          std::to_string(m.euler_characteristic()) + " for " +
                          std::to_string(ncomp) + " component(s))");
    return dm;
}

ValidationReport validate(const LinkDiagram& d, const DiagramMap& dm) {
    const PlanarMap& m = dm.map;
    ValidationReport r;

    // alternating: each arc has one under-end and one over-end
    r.alternating = true;
    for (Dart x = 0; x < m.dart_slots(); ++x) {
        Dart t = m.twin[x];
        if (x < t && DiagramMap::slot_parity(x) == DiagramMap::slot_parity(t)) {
            r.alternating = false;
            int v = DiagramMap::crossing_of(x);
            r.bad_arcs.push_back(d.crossings[v].arcs[DiagramMap::slot_of(x)]);
        }
    }

    auto faces = m.face_orbits();
    std::vector<int> face_of(m.dart_slots(), -1);
    for (size_t f = 0; f < faces.size(); ++f)
        for (Dart x : faces[f]) face_of[x] = static_cast<int>(f);

    // reduced: no crossing sees the same face at two of its four corners
    r.reduced = true;
    for (int v = 0; v < dm.crossing_count; ++v) {
        std::set<int> fs;
        for (int s = 0; s < 4; ++s) fs.insert(face_of[4 * v + s]);
        if (fs.size() < 4) {
            r.reduced = false;
            r.nugatory_crossings.push_back(v + 1);
        }
    }

    // prime: no two faces share more than one edge
    r.prime = true;
    std::map<std::pair<int, int>, std::vector<int>> shared;
    for (Dart x = 0; x < m.dart_slots(); ++x) {
        Dart t = m.twin[x];
        if (x > t) continue;
        int a = face_of[x], b = face_of[t];
        if (a > b) std::swap(a, b);
        int arc = d.crossings[DiagramMap::crossing_of(x)].arcs[DiagramMap::slot_of(x)];
        shared[{a, b}].push_back(arc);
    }
    for (auto& [fp, arcs] : shared) {
        if (arcs.size() > 1) {
            r.prime = false;
            r.prime_violations.push_back({fp.first, fp.second, arcs});
        }
    }

    // non-split: underlying 4-valent graph connected
    int c = dm.crossing_count;
    std::vector<int> comp(c, -1);
    int ncomp = 0;
    for (int v0 = 0; v0 < c; ++v0) {
        if (comp[v0] >= 0) continue;
        std::vector<int> stack{v0};
        comp[v0] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int s = 0; s < 4; ++s) {
                int w = DiagramMap::crossing_of(m.twin[4 * v + s]);
                if (comp[w] < 0) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
            }
        }
        ++ncomp;
    }
    r.non_split = (ncomp == 1);
    if (!r.non_split) {
        r.components.assign(ncomp, {});
        for (int v = 0; v < c; ++v) r.components[comp[v]].push_back(v + 1);
    }
    return r;
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    os << "alternating: " << (alternating ? "true" : "false");
    if (!alternating) {
        os << " (arcs with equal-parity ends:";
        for (int a : bad_arcs) os << ' ' << a;
        os << ')';
    }
    os << "\nreduced: " << (reduced ? "true" : "false");
    if (!reduced) {
        os << " (nugatory crossing";
        for (int v : nugatory_crossings) os << ' ' << v;
        os << ')';
    }
    os << "\nprime: " << (prime ? "true" : "false");
    if (!prime) {
        for (const auto& pv : prime_violations) {
            os << " (faces " << pv.face_a << " and " << pv.face_b << " share arcs";
            for (int a : pv.arcs) os << ' ' << a;
            os << ')';
        }
    }
    os << "\nnon_split: " << (non_split ? "true" : "false");
    if (!non_split) {
        os << " (components:";
        for (const auto& comp : components) {
            os << " {";
            for (size_t i = 0; i < comp.size(); ++i) os << (i ? "," : "") << comp[i];
            os << '}';
        }
        os << ')';
    }
    os << '\n';
    return os.str();
}

} // namespace linksub
