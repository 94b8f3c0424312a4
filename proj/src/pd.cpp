#include "linksub/pd.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "linksub/errors.hpp"

namespace linksub {

namespace {

bool is_blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

} // namespace

LinkDiagram parse_pd_code(std::string_view text) {
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos)
        throw parse_error("empty PD input", 1, 1);

    LinkDiagram d;
    std::map<int, int> arc_uses;

    int lineno = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
        // '/' acts as an inline line separator
        std::vector<std::pair<std::string, int>> chunks; // text, start col (1-based)
        size_t start = 0;
        while (true) {
            size_t slash = raw.find('/', start);
            chunks.emplace_back(raw.substr(start, slash - start), static_cast<int>(start) + 1);
            if (slash == std::string::npos) break;
            start = slash + 1;
        }
        for (auto& [chunk, col0] : chunks) {
            if (is_blank(chunk)) continue;
            size_t p = chunk.find_first_not_of(" \t");
            int col = col0 + static_cast<int>(p);
            if (chunk[p] != 'X' && chunk[p] != 'x')
                throw parse_error("expected 'X' at start of crossing", lineno, col);
            std::string rest = chunk.substr(p + 1);
            for (char& ch : rest)
                if (ch == ',') ch = ' ';
            std::istringstream cs(rest);
            Crossing cr{};
            for (int i = 0; i < 4; ++i) {
                long v;
                if (!(cs >> v) || v <= 0)
                    throw parse_error("crossing needs 4 positive arc labels", lineno, col);
                cr.arcs[i] = static_cast<int>(v);
            }
            std::string trailing;
            if (cs >> trailing)
                throw parse_error("trailing tokens after crossing", lineno, col);
            d.crossings.push_back(cr);
            for (int a : cr.arcs) arc_uses[a]++;
        }
    }
    if (d.crossings.empty()) throw parse_error("no crossings in PD input", 1, 1);
    for (auto [arc, uses] : arc_uses) {
        if (uses != 2)
            throw parse_error("arc " + std::to_string(arc) + " used " + std::to_string(uses) +
                              " times (each arc must appear exactly twice)");
    }
    d.arc_count = static_cast<int>(arc_uses.size());
    return d;
}

std::string emit_pd(const LinkDiagram& d) {
    std::vector<std::array<int, 4>> rows;
    rows.reserve(d.crossings.size());
    for (const Crossing& c : d.crossings) {
        std::array<int, 4> a = c.arcs;
        std::array<int, 4> b = {a[2], a[3], a[0], a[1]};
        rows.push_back(std::min(a, b));
    }
    std::sort(rows.begin(), rows.end());
    std::string out;
    for (const auto& r : rows) {
        out += "X " + std::to_string(r[0]) + "," + std::to_string(r[1]) + "," +
               std::to_string(r[2]) + "," + std::to_string(r[3]) + "\n";
    }
    return out;
}

int component_count(const LinkDiagram& d) {
    // darts (v,s) with strand continuation s -> s+2; components = strand orbits
    int n = 4 * d.crossing_count();
    std::map<int, std::vector<int>> occ;
    for (int v = 0; v < d.crossing_count(); ++v)
        for (int s = 0; s < 4; ++s) occ[d.crossings[v].arcs[s]].push_back(4 * v + s);
    std::vector<int> mate(n, -1);
    for (auto& [arc, ds] : occ) {
        mate[ds[0]] = ds[1];
        mate[ds[1]] = ds[0];
    }
    std::vector<char> seen(n, 0);
    int comps = 0;
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        ++comps;
        int x = start;
        while (!seen[x]) {
            seen[x] = 1;
            int across = (x & ~3) | ((x + 2) & 3); // pass through the crossing
            seen[across] = 1;
            x = mate[across];
        }
    }
    return comps;
}

} // namespace linksub
