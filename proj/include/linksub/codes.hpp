#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "linksub/planar_map.hpp"

namespace linksub {

// A planar map plus per-dart labels, for isomorphism and canonical forms.
// Isomorphisms must preserve labels and commute with twin and next
// (orientation-preserving) or with twin and next^{-1} (mirror).
struct LabeledMap {
    const PlanarMap* map = nullptr;
    std::vector<int64_t> label; // indexed by dart slot; dead slots ignored
};

// Canonical BFS numbering code rooted at `root`. Equal codes from matched
// roots ⟺ rooted isomorphism. `mirror` traverses next inverted.
std::vector<int64_t> bfs_code(const LabeledMap& lm, Dart root, bool mirror);

// Minimum bfs_code over all live roots; if allow_mirror, also over mirrored
// traversals. Connected maps only.
std::vector<int64_t> canonical_code(const LabeledMap& lm, bool allow_mirror);

// Orientation-preserving labeled isomorphism; returns the dart bijection
// (indexed by a's dart slots, kNil on dead slots) or nullopt.
std::optional<std::vector<Dart>> find_isomorphism(const LabeledMap& a, const LabeledMap& b);

} // namespace linksub
