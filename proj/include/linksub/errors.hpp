#pragma once

#include <stdexcept>
#include <string>

namespace linksub {

// Malformed input (PD syntax, bad arc multiplicities, unrealizable rotation system).
class parse_error : public std::runtime_error {
public:
    parse_error(std::string msg, int line = 0, int col = 0)
        : std::runtime_error(std::move(msg)), line(line), col(col) {}
    int line;
    int col;
};

// A structural invariant that must hold for admissible inputs was violated at
// runtime. Always indicates a bug or an input that slipped validation.
class invariant_breach : public std::runtime_error {
public:
    explicit invariant_breach(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw invariant_breach(msg);
}

} // namespace linksub
