#include "linksub/codes.hpp"

#include <algorithm>
#include <map>

#include "linksub/errors.hpp"

namespace linksub {

namespace {

std::vector<Dart> rot_prev_table(const PlanarMap& m) {
    std::vector<Dart> prev(m.dart_slots(), kNil);
    for (Dart d = 0; d < m.dart_slots(); ++d)
        if (m.alive[d]) prev[m.next[d]] = d;
    return prev;
}

} // namespace

std::vector<int64_t> bfs_code(const LabeledMap& lm, Dart root, bool mirror) {
    const PlanarMap& m = *lm.map;
    std::vector<Dart> prev;
    if (mirror) prev = rot_prev_table(m);
    std::vector<Dart> id(m.dart_slots(), kNil);
    std::vector<Dart> order;
    order.reserve(m.live_darts());
    id[root] = 0;
    order.push_back(root);
    std::vector<int64_t> code;
    code.reserve(3 * m.live_darts());
    for (size_t i = 0; i < order.size(); ++i) {
        Dart d = order[i];
        Dart t = m.twin[d];
        Dart n = mirror ? prev[d] : m.next[d];
        for (Dart x : {t, n}) {
            if (id[x] == kNil) {
                id[x] = static_cast<Dart>(order.size());
                order.push_back(x);
            }
        }
        code.push_back(lm.label[d]);
        code.push_back(id[t]);
        code.push_back(id[n]);
    }
    return code;
}

std::vector<int64_t> canonical_code(const LabeledMap& lm, bool allow_mirror) {
    const PlanarMap& m = *lm.map;
    std::vector<int64_t> best;
    for (Dart d = 0; d < m.dart_slots(); ++d) {
        if (!m.alive[d]) continue;
        for (int mir = 0; mir <= (allow_mirror ? 1 : 0); ++mir) {
            auto code = bfs_code(lm, d, mir != 0);
            if (best.empty() || code < best) best = std::move(code);
        }
    }
    require(!best.empty(), "canonical_code on empty map");
    return best;
}

std::optional<std::vector<Dart>> find_isomorphism(const LabeledMap& a, const LabeledMap& b) {
    const PlanarMap& ma = *a.map;
    const PlanarMap& mb = *b.map;
    if (ma.live_darts() != mb.live_darts()) return std::nullopt;
    if (ma.live_darts() == 0) return std::vector<Dart>{};

    // pick a root in `a` from the rarest label class of `b` to cut candidates
    std::map<int64_t, std::vector<Dart>> b_by_label;
    for (Dart d = 0; d < mb.dart_slots(); ++d)
        if (mb.alive[d]) b_by_label[b.label[d]].push_back(d);
    Dart root_a = kNil;
    size_t rarest = SIZE_MAX;
    for (Dart d = 0; d < ma.dart_slots(); ++d) {
        if (!ma.alive[d]) continue;
        auto it = b_by_label.find(a.label[d]);
        if (it == b_by_label.end()) return std::nullopt;
        if (it->second.size() < rarest) {
            rarest = it->second.size();
            root_a = d;
        }
    }

    const int n_live = ma.live_darts();
    for (Dart root_b : b_by_label[a.label[root_a]]) {
        std::vector<Dart> img(ma.dart_slots(), kNil);
        std::vector<Dart> pre(mb.dart_slots(), kNil);
        std::vector<Dart> stack{root_a};
        img[root_a] = root_b;
        pre[root_b] = root_a;
        bool ok = true;
        int matched = 1;
        while (!stack.empty() && ok) {
            Dart x = stack.back();
            stack.pop_back();
            Dart y = img[x];
            const Dart nx[2] = {ma.twin[x], ma.next[x]};
            const Dart ny[2] = {mb.twin[y], mb.next[y]};
            for (int k = 0; k < 2 && ok; ++k) {
                Dart u = nx[k], v = ny[k];
                if (a.label[u] != b.label[v]) {
                    ok = false;
                    break;
                }
                if (img[u] == kNil && pre[v] == kNil) {
                    img[u] = v;
                    pre[v] = u;
                    ++matched;
                    stack.push_back(u);
                } else if (img[u] != v) {
                    ok = false;
                }
            }
        }
        if (ok && matched == n_live) return img;
    }
    return std::nullopt;
}

} // namespace linksub
