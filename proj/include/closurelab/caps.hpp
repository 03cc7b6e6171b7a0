#ifndef CLOSURELAB_CAPS_HPP
#define CLOSURELAB_CAPS_HPP

#include "closurelab/errors.hpp"

#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <string>

namespace closurelab {

// Resource caps for the exponential-time verifiers. Conservative defaults
// keep every full run in the minutes range; override per call or via the
// CLOSURELAB_CAPS environment variable ("oracle=24,superset=22,...").
struct Caps {
    int oracle_vertex_cap = 22;   // subset-enumeration host size limit
    int clique_vertex_cap = 128;  // maximal-clique enumeration host size limit
    int superset_bits_cap = 20;   // maximality search allows 2^bits supersets
    int alpha_vertex_cap = 40;    // exact independence number limit
    std::uint64_t family_count_cap = 2000000; // generated family size guard
};

inline Caps caps_from_env(Caps base = {}) {
    const char* raw = std::getenv("CLOSURELAB_CAPS");
    if (!raw) return base;
    std::istringstream in(raw);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw parse_error("CLOSURELAB_CAPS entry missing '=': " + item);
        std::string key = item.substr(0, eq);
        long long value = 0;
        try {
            value = std::stoll(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw parse_error("CLOSURELAB_CAPS value not a number: " + item);
        }
        if (key == "oracle") base.oracle_vertex_cap = static_cast<int>(value);
        else if (key == "cliques") base.clique_vertex_cap = static_cast<int>(value);
        else if (key == "superset") base.superset_bits_cap = static_cast<int>(value);
        else if (key == "alpha") base.alpha_vertex_cap = static_cast<int>(value);
        else if (key == "family") base.family_count_cap = static_cast<std::uint64_t>(value);
        else throw parse_error("CLOSURELAB_CAPS unknown key: " + key);
    }
    return base;
}

} // namespace closurelab

#endif
