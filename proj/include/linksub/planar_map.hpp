#pragma once

#include <cstdint>
#include <vector>

namespace linksub {

using Dart = int32_t;
inline constexpr Dart kNil = -1;

// Half-edge map: twin is a fixed-point-free involution, next the
// counterclockwise rotation at each dart's origin vertex. Faces are orbits of
// face_next(d) = next[twin[d]]; each orbit walks its face boundary with the
// face on the right. Darts can be tombstoned by surgery.
struct PlanarMap {
    std::vector<Dart> twin;
    std::vector<Dart> next;
    std::vector<uint8_t> alive;

    int dart_slots() const { return static_cast<int>(twin.size()); }
    int live_darts() const;

    Dart face_next(Dart d) const { return next[twin[d]]; }
    Dart add_dart() {
        twin.push_back(kNil);
        next.push_back(kNil);
        alive.push_back(1);
        return static_cast<Dart>(twin.size()) - 1;
    }

    // previous dart in the rotation at origin(d): the x with next[x] == d
    Dart rot_prev(Dart d) const;

    std::vector<std::vector<Dart>> vertex_orbits() const;
    std::vector<std::vector<Dart>> face_orbits() const;
    // orbit of an arbitrary permutation step function
    std::vector<Dart> face_orbit_of(Dart d) const;
    std::vector<Dart> vertex_orbit_of(Dart d) const;

    long euler_characteristic() const; // V - E + F over live darts

    // twin involution + permutation checks; throws invariant_breach
    void check_valid() const;

    // Removes edge {d, twin[d]} splicing both rotations; merges the two faces.
    void delete_edge(Dart d);
};

// Deterministic orbit partition helper used by both orbit kinds.
std::vector<std::vector<Dart>> orbits_of(const std::vector<Dart>& step,
                                         const std::vector<uint8_t>& alive);

} // namespace linksub
