#include "linksub/planar_map.hpp"

#include "linksub/errors.hpp"

namespace linksub {

int PlanarMap::live_darts() const {
    int n = 0;
    for (uint8_t a : alive) n += a;
    return n;
}

Dart PlanarMap::rot_prev(Dart d) const {
    Dart x = d;
    while (next[x] != d) x = next[x];
    return x;
}

std::vector<std::vector<Dart>> orbits_of(const std::vector<Dart>& step,
                                         const std::vector<uint8_t>& alive) {
    std::vector<std::vector<Dart>> out;
    std::vector<char> seen(step.size(), 0);
    for (Dart d = 0; d < static_cast<Dart>(step.size()); ++d) {
        if (!alive[d] || seen[d]) continue;
        std::vector<Dart> orb;
        Dart x = d;
        while (!seen[x]) {
            seen[x] = 1;
            orb.push_back(x);
            x = step[x];
        }
        out.push_back(std::move(orb));
    }
    return out;
}

std::vector<std::vector<Dart>> PlanarMap::vertex_orbits() const {
    return orbits_of(next, alive);
}

std::vector<std::vector<Dart>> PlanarMap::face_orbits() const {
    std::vector<Dart> fn(twin.size(), kNil);
    for (Dart d = 0; d < static_cast<Dart>(twin.size()); ++d)
        if (alive[d]) fn[d] = face_next(d);
    return orbits_of(fn, alive);
}

std::vector<Dart> PlanarMap::face_orbit_of(Dart d) const {
    std::vector<Dart> orb;
    Dart x = d;
    do {
        orb.push_back(x);
        x = face_next(x);
    } while (x != d);
    return orb;
}

std::vector<Dart> PlanarMap::vertex_orbit_of(Dart d) const {
    std::vector<Dart> orb;
    Dart x = d;
    do {
        orb.push_back(x);
        x = next[x];
    } while (x != d);
    return orb;
}

long PlanarMap::euler_characteristic() const {
    long V = static_cast<long>(vertex_orbits().size());
    long E = live_darts() / 2;
    long F = static_cast<long>(face_orbits().size());
    return V - E + F;
}

void PlanarMap::check_valid() const {
    std::vector<char> next_hit(twin.size(), 0);
    for (Dart d = 0; d < static_cast<Dart>(twin.size()); ++d) {
        if (!alive[d]) continue;
        Dart t = twin[d];
        require(t >= 0 && t < static_cast<Dart>(twin.size()) && alive[t], "twin out of range/dead");
        require(t != d, "twin has a fixed point");
        require(twin[t] == d, "twin not an involution");
        Dart n = next[d];
        require(n >= 0 && n < static_cast<Dart>(twin.size()) && alive[n], "next out of range/dead");
        require(!next_hit[n], "next is not injective");
        next_hit[n] = 1;
    }
}

void PlanarMap::delete_edge(Dart d) {
    Dart t = twin[d];
    require(alive[d] && alive[t], "delete_edge on dead dart");
    for (Dart x : {d, t}) {
        Dart p = rot_prev(x);
        if (p == x) {
            // lone dart at its vertex: vertex disappears with the edge
        } else {
            next[p] = next[x];
        }
    }
    alive[d] = alive[t] = 0;
    twin[d] = twin[t] = kNil;
    next[d] = next[t] = kNil;
}

} // namespace linksub
