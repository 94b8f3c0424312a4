#include "linksub/sphere.hpp"

#include <algorithm>
#include <map>

#include "linksub/errors.hpp"

namespace linksub {

namespace {

int32_t fresh_edge(Sphere& s, bool link) {
    s.wedge.push_back(link ? 1 : 0);
    return static_cast<int32_t>(s.wedge.size()) - 1;
}

// Appends a fresh polyhedron copy; returns the base dart index.
Dart instantiate(Sphere& s, bool reflect) {
    const TruncatedComplex& M = *s.model;
    int n = M.map.dart_slots();
    Dart base = static_cast<Dart>(s.m.twin.size());
    s.m.twin.resize(base + n);
    s.m.next.resize(base + n);
    s.m.alive.resize(base + n, 1);
    s.kind.resize(base + n);
    s.par.resize(base + n);
    s.prov.resize(base + n);
    s.reflected.resize(base + n, reflect);
    s.outer.resize(base + n, 0);
    s.eid.resize(base + n, -1);
    for (Dart d = 0; d < n; ++d) {
        s.m.twin[base + d] = base + M.map.twin[d];
        if (reflect)
            s.m.next[base + M.map.next[d]] = base + d;
        else
            s.m.next[base + d] = base + M.map.next[d];
        s.kind[base + d] = M.kind[d];
        s.par[base + d] =
            M.kind[d] == EdgeKind::Link ? static_cast<int8_t>(M.par[d] ^ (reflect ? 1 : 0)) : -1;
        s.prov[base + d] = d;
    }
    for (Dart d = 0; d < n; ++d) {
        if (s.eid[base + d] >= 0) continue;
        int32_t e = fresh_edge(s, M.kind[d] == EdgeKind::Link);
        s.eid[base + d] = e;
        s.eid[base + M.map.twin[d]] = e;
    }
    return base;
}

// Model dart whose pattern copy becomes the new far-side dart of the sewn
// edge at region dart r (see gluing derivation: the pairing is the mirror
// identity composed with the twist).
Dart pairing_target(const Sphere& s, Dart r) {
    const TruncatedComplex& M = *s.model;
    if (!s.reflected[r]) return twist_image(M, s.prov[r], /*from_mirror=*/false);
    return M.map.twin[twist_image(M, M.map.twin[s.prov[r]], /*from_mirror=*/true)];
}

// Generic hole sew: hole[i] are the dying region-side darts (face_next
// consecutive), q[i] the pattern darts taking their place. Pattern-side hole
// darts h[i] = pattern twin of q[i] must traverse the pattern hole in reverse.
void sew(Sphere& s, const std::vector<Dart>& hole, const std::vector<Dart>& q) {
    const size_t n = hole.size();
    require(q.size() == n, "sew: size mismatch");
    std::vector<Dart> h(n), o(n), nxt_r(n), nxt_h(n);
    for (size_t i = 0; i < n; ++i) {
        h[i] = s.m.twin[q[i]];
        o[i] = s.m.twin[hole[i]];
        nxt_r[i] = s.m.next[hole[i]];
        nxt_h[i] = s.m.next[h[i]];
        require(s.kind[hole[i]] == s.kind[q[i]], "sew: edge kind mismatch");
    }
    for (size_t i = 0; i < n; ++i) {
        size_t prev = (i + n - 1) % n;
        require(s.m.face_next(h[i]) == h[prev],
                "sew: pattern hole not reverse-aligned (gluing convention breach)");
    }
    for (size_t i = 0; i < n; ++i) {
        s.m.twin[o[i]] = q[i];
        s.m.twin[q[i]] = o[i];
        s.eid[q[i]] = s.eid[o[i]];
    }
    for (size_t i = 0; i < n; ++i) {
        s.m.next[o[i]] = nxt_h[i];
        s.m.next[q[i]] = nxt_r[i];
    }
    for (size_t i = 0; i < n; ++i) {
        s.m.alive[hole[i]] = 0;
        s.m.alive[h[i]] = 0;
        s.m.twin[hole[i]] = s.m.next[hole[i]] = kNil;
        s.m.twin[h[i]] = s.m.next[h[i]] = kNil;
    }
}

std::vector<Dart> rotate_from(const std::vector<Dart>& v, size_t i) {
    std::vector<Dart> out(v.begin() + i, v.end());
    out.insert(out.end(), v.begin(), v.begin() + i);
    return out;
}

void glue_single(Sphere& s, const SphereRegion& R) {
    bool reflect = !s.reflected[R.orbit[0]];
    Dart base = instantiate(s, reflect);
    std::vector<Dart> q;
    q.reserve(R.orbit.size());
    for (Dart r : R.orbit) {
        q.push_back(base + pairing_target(s, r));
        if (s.kind[r] == EdgeKind::Link) s.wedge[s.eid[r]] += 1;
    }
    sew(s, R.orbit, q);
}

void glue_pair(Sphere& s, const SphereRegion& R1, const SphereRegion& R2) {
    const TruncatedComplex& M = *s.model;
    bool reflect = !s.reflected[R1.orbit[0]];
    require(reflect == !s.reflected[R2.orbit[0]], "pair chirality mismatch");
    require(R1.spin != R2.spin, "loaded pair with equal spins");

    // the polyhedron edge that lands on the loaded edge, from both sides
    Dart t1 = pairing_target(s, R1.loaded);
    Dart t2 = pairing_target(s, R2.loaded);
    require(M.edge_min(t1) == M.edge_min(t2),
            "pair gluing inconsistent: the two twists disagree on the covered edge "
            "(edge would not meet exactly four polyhedra)");
    require(t2 == M.map.twin[t1], "pair gluing targets are not the two sides of one edge");
    int f1 = M.face_of[t1], f2 = M.face_of[t2];
    require((f1 == R1.model_face && f2 == R2.model_face) ||
                (f1 == R2.model_face && f2 == R1.model_face),
            "pair polyhedron faces do not match region provenance");

    int32_t le = s.eid[R1.loaded];
    s.wedge[le] += 1;
    require(s.wedge[le] == 4, "loaded edge not at four polyhedra after pair gluing");
    s.saturated_edges += 1;

    Dart base = instantiate(s, reflect);

    // combined hole circle: R1's boundary after its loaded dart, then R2's
    size_t i1 = std::find(R1.orbit.begin(), R1.orbit.end(), R1.loaded) - R1.orbit.begin();
    size_t i2 = std::find(R2.orbit.begin(), R2.orbit.end(), R2.loaded) - R2.orbit.begin();
    auto part1 = rotate_from(R1.orbit, i1);
    auto part2 = rotate_from(R2.orbit, i2);
    std::vector<Dart> hole, q;
    for (size_t i = 1; i < part1.size(); ++i) hole.push_back(part1[i]);
    for (size_t i = 1; i < part2.size(); ++i) hole.push_back(part2[i]);
    for (Dart r : hole) {
        q.push_back(base + pairing_target(s, r));
        if (s.kind[r] == EdgeKind::Link) s.wedge[s.eid[r]] += 1;
    }

    s.m.delete_edge(R1.loaded);       // loaded edge becomes interior to the manifold
    s.m.delete_edge(base + t1);       // the pattern edge it is covered by
    sew(s, hole, q);
}

} // namespace

std::vector<SphereRegion> scan_regions(const Sphere& s) {
    auto faces = s.m.face_orbits();
    std::vector<SphereRegion> out;
    out.reserve(faces.size());
    for (auto& orb : faces) {
        SphereRegion R;
        R.orbit = std::move(orb);
        bool has_link = false, has_outer = false;
        for (Dart d : R.orbit) {
            if (s.kind[d] == EdgeKind::Link) has_link = true;
            if (s.outer[d]) has_outer = true;
        }
        if (has_outer) {
            R.is_outer = true;
            out.push_back(std::move(R));
            continue;
        }
        if (!has_link) {
            R.square = true;
            require(R.orbit.size() == 4, "truncation square of degree != 4");
            out.push_back(std::move(R));
            continue;
        }
        const TruncatedComplex& M = *s.model;
        int loaded_count = 0;
        EdgeKind prev_kind = s.kind[R.orbit.back()];
        for (Dart d : R.orbit) {
            require(s.kind[d] != prev_kind, "region boundary does not alternate link/trunc");
            prev_kind = s.kind[d];
            require(s.reflected[d] == s.reflected[R.orbit[0]], "region with mixed chirality");
            if (s.kind[d] == EdgeKind::Link) {
                require(R.spin == -1 || R.spin == s.par[d], "region with mixed spin");
                R.spin = s.par[d];
                int mf = s.reflected[d] ? M.face_of[M.map.twin[s.prov[d]]] : M.face_of[s.prov[d]];
                require(R.model_face == -1 || R.model_face == mf,
                        "region provenance maps to two model faces");
                R.model_face = mf;
                if (s.wedge[s.eid[d]] == 3) {
                    ++loaded_count;
                    R.loaded = d;
                }
            }
        }
        require(loaded_count <= 1, "region with two loaded edges (Theorem 3.1 breach)");
        out.push_back(std::move(R));
    }
    return out;
}

Sphere make_seed_sphere(const TruncatedComplex& tc) {
    Sphere s;
    s.model = &tc;
    instantiate(s, /*reflect=*/false);
    return s;
}

Sphere make_region_disk(const TruncatedComplex& tc, int face, bool chirality) {
    require(!tc.is_square[face], "cannot make a tile disk from a truncation square");
    Sphere s;
    s.model = &tc;
    s.disk_mode = true;
    const auto& orbit = tc.faces[face]; // model face_next order
    int n = static_cast<int>(orbit.size());
    s.m.twin.resize(2 * n);
    s.m.next.resize(2 * n);
    s.m.alive.assign(2 * n, 1);
    s.kind.resize(2 * n);
    s.par.resize(2 * n);
    s.prov.resize(2 * n);
    s.reflected.assign(2 * n, chirality);
    s.outer.assign(2 * n, 0);
    s.eid.assign(2 * n, -1);
    for (int j = 0; j < n; ++j) {
        Dart in = j, out = n + j;
        // plain: boundary walks the model orbit; reflected: twins in reverse
        Dart p = chirality ? tc.map.twin[orbit[(n - j) % n]] : orbit[j];
        s.prov[in] = p;
        s.prov[out] = tc.map.twin[p];
        s.kind[in] = s.kind[out] = tc.kind[p];
        if (tc.kind[p] == EdgeKind::Link) {
            int8_t pp = static_cast<int8_t>(tc.par[p] ^ (chirality ? 1 : 0));
            s.par[in] = pp;
            s.par[out] = static_cast<int8_t>(pp ^ 1);
        } else {
            s.par[in] = s.par[out] = -1;
        }
        s.outer[out] = 1;
        s.m.twin[in] = out;
        s.m.twin[out] = in;
        int32_t e = fresh_edge(s, s.kind[in] == EdgeKind::Link);
        s.eid[in] = s.eid[out] = e;
        // vertex between edge j and j+1 carries darts {in_{j+1}, out_j}
        s.m.next[(j + 1) % n] = n + j;
        s.m.next[n + j] = (j + 1) % n;
    }
    s.m.check_valid();
    return s;
}

Sphere make_pair_disk(const TruncatedComplex& tc, Dart p1, Dart p2, bool chirality) {
    // Normalize to model boundary darts x1, x2 with edge(x1) == edge(x2)
    Dart x1 = chirality ? tc.map.twin[p1] : p1;
    Dart x2 = chirality ? tc.map.twin[p2] : p2;
    require(tc.kind[x1] == EdgeKind::Link, "pair disk: loaded edge must be a link edge");
    require(tc.edge_min(x1) == tc.edge_min(x2) && x1 != x2,
            "pair disk: side darts must be the two sides of one model edge");
    int f1 = tc.face_of[x1], f2 = tc.face_of[x2];
    require(f1 != f2 && !tc.is_square[f1] && !tc.is_square[f2], "pair disk: bad faces");

    Sphere s;
    s.model = &tc;
    s.disk_mode = true;

    auto build_face = [&](int face, Dart loaded_model_dart, std::vector<Dart>& inner) {
        auto orbit = tc.map.face_orbit_of(loaded_model_dart);
        // orbit starts at the loaded dart
        int n = static_cast<int>(orbit.size());
        Dart base = static_cast<Dart>(s.m.twin.size());
        s.m.twin.resize(base + 2 * n, kNil);
        s.m.next.resize(base + 2 * n, kNil);
        s.m.alive.resize(base + 2 * n, 1);
        s.kind.resize(base + 2 * n);
        s.par.resize(base + 2 * n);
        s.prov.resize(base + 2 * n);
        s.reflected.resize(base + 2 * n, chirality);
        s.outer.resize(base + 2 * n, 0);
        s.eid.resize(base + 2 * n, -1);
        inner.clear();
        for (int j = 0; j < n; ++j) {
            Dart in = base + j, out = base + n + j;
            Dart p = chirality ? tc.map.twin[orbit[(n - j) % n]] : orbit[j];
            s.prov[in] = p;
            s.prov[out] = tc.map.twin[p];
            s.kind[in] = s.kind[out] = tc.kind[p];
            if (tc.kind[p] == EdgeKind::Link) {
                int8_t pp = static_cast<int8_t>(tc.par[p] ^ (chirality ? 1 : 0));
                s.par[in] = pp;
                s.par[out] = static_cast<int8_t>(pp ^ 1);
            } else {
                s.par[in] = s.par[out] = -1;
            }
            s.outer[out] = 1;
            s.m.twin[in] = out;
            s.m.twin[out] = in;
            int32_t e = fresh_edge(s, s.kind[in] == EdgeKind::Link);
            s.eid[in] = s.eid[out] = e;
            s.m.next[base + (j + 1) % n] = out;
            s.m.next[out] = base + (j + 1) % n;
            inner.push_back(in);
        }
        (void)face;
    };

    // Boundary position of the loaded dart inside each inner cycle: j = 0 for
    // plain chirality (orbit anchored there); for reflected copies the dart
    // with prov twin(x) sits at j = 0 as well ((n - 0) % n = 0).
    std::vector<Dart> in1, in2;
    build_face(f1, x1, in1);
    build_face(f2, x2, in2);

    // fuse the two loaded boundary edges into one interior loaded edge; the
    // junction vertices get 3-cycles (loaded dart, far inner dart, outer dart)
    int n1 = static_cast<int>(in1.size()), n2 = static_cast<int>(in2.size());
    Dart l1 = in1[0], l2 = in2[0];
    Dart o1 = s.m.twin[l1], o2 = s.m.twin[l2];
    Dart out1_last = s.m.twin[in1[n1 - 1]], out2_last = s.m.twin[in2[n2 - 1]];
    s.m.twin[l1] = l2;
    s.m.twin[l2] = l1;
    s.m.next[l2] = in1[1];
    s.m.next[in1[1]] = out2_last;
    s.m.next[l1] = in2[1];
    s.m.next[in2[1]] = out1_last;
    s.m.alive[o1] = s.m.alive[o2] = 0;
    s.m.twin[o1] = s.m.twin[o2] = kNil;
    s.m.next[o1] = s.m.next[o2] = kNil;
    int32_t le = s.eid[l1];
    s.eid[l2] = le;
    s.wedge[le] = 3; // loaded
    s.m.check_valid();
    require(s.m.euler_characteristic() == 2, "pair disk not a sphere");
    return s;
}

EvolveStats evolve_round(Sphere& s) {
    auto regions = scan_regions(s);
    EvolveStats stats;

    std::vector<const SphereRegion*> singles;
    std::map<int32_t, std::vector<const SphereRegion*>> pairs;
    for (const auto& R : regions) {
        if (R.square || R.is_outer) continue;
        if (R.loaded == kNil)
            singles.push_back(&R);
        else
            pairs[s.eid[R.loaded]].push_back(&R);
    }
    for (auto& [eidv, sides] : pairs) {
        require(sides.size() == 2, "loaded edge without two region flankers");
        glue_pair(s, *sides[0], *sides[1]);
        ++stats.pairs;
    }
    for (const SphereRegion* R : singles) {
        glue_single(s, *R);
        ++stats.singles;
    }
    s.stage += 1;
    return stats;
}

Sphere replacement_evolve(const TruncatedComplex& tc, int depth) {
    require(depth >= 0, "depth must be >= 0");
    Sphere s = make_seed_sphere(tc);
    check_sphere(s);
    for (int i = 0; i < depth; ++i) {
        evolve_round(s);
        check_sphere(s);
    }
    return s;
}

void check_sphere(const Sphere& s) {
    s.m.check_valid();
    if (!s.disk_mode)
        require(s.m.euler_characteristic() == 2, "sphere lost Euler characteristic 2");
    for (Dart d = 0; d < s.m.dart_slots(); ++d) {
        if (!s.m.alive[d] || s.kind[d] != EdgeKind::Link) continue;
        if (s.edge_has_outer(d)) continue;
        int w = s.wedge[s.eid[d]];
        require(w == 1 || w == 3, "live link edge with wedge count " + std::to_string(w));
    }
    // loaded flankers have opposite spins; checked via the region scan
    auto regions = scan_regions(s);
    std::map<int32_t, std::vector<int8_t>> flank;
    for (const auto& R : regions) {
        if (R.square || R.is_outer || R.loaded == kNil) continue;
        flank[s.eid[R.loaded]].push_back(R.spin);
    }
    for (auto& [e, spins] : flank) {
        if (spins.size() == 2)
            require(spins[0] != spins[1], "loaded edge flanked by equal spins");
    }
    // saturated truncation-square grid: vertices with only trunc edges have valence 4
    for (const auto& vorb : s.m.vertex_orbits()) {
        bool all_trunc = true, has_outer = false;
        for (Dart d : vorb) {
            if (s.kind[d] != EdgeKind::Trunc) all_trunc = false;
            if (s.outer[d] || s.outer[s.m.twin[d]]) has_outer = true;
        }
        if (all_trunc && !has_outer)
            require(vorb.size() == 4, "saturated truncation vertex of valence != 4");
    }
}

} // namespace linksub
