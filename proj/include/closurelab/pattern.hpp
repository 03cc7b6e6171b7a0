#ifndef CLOSURELAB_PATTERN_HPP
#define CLOSURELAB_PATTERN_HPP

#include "closurelab/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace closurelab {

// A base graph H together with disjoint prescription sets: parts blown up
// from clique_prescribed vertices must induce cliques; in induced mode,
// parts from indep_prescribed vertices must induce independent sets.
struct Pattern {
    Graph h;
    std::vector<int> clique_prescribed; // U+, sorted
    std::vector<int> indep_prescribed;  // U-, sorted

    Pattern() = default;
    Pattern(Graph base, std::vector<int> uplus = {}, std::vector<int> uminus = {})
        : h(std::move(base)), clique_prescribed(std::move(uplus)),
          indep_prescribed(std::move(uminus)) {
        std::sort(clique_prescribed.begin(), clique_prescribed.end());
        std::sort(indep_prescribed.begin(), indep_prescribed.end());
        validate();
    }

    int size() const { return h.vertex_count(); }

    bool in_clique_set(int v) const {
        return std::binary_search(clique_prescribed.begin(), clique_prescribed.end(), v);
    }
    bool in_indep_set(int v) const {
        return std::binary_search(indep_prescribed.begin(), indep_prescribed.end(), v);
    }
    bool prescribed(int v) const { return in_clique_set(v) || in_indep_set(v); }

private:
    void validate() const {
        if (h.vertex_count() < 1) throw argument_error("pattern needs at least one vertex");
        for (int v : clique_prescribed) {
            if (v < 0 || v >= h.vertex_count())
                throw argument_error("U+ vertex out of range");
            if (in_indep_set(v))
                throw argument_error("U+ and U- must be disjoint");
        }
        for (int v : indep_prescribed)
            if (v < 0 || v >= h.vertex_count())
                throw argument_error("U- vertex out of range");
    }
};

// Pattern file format: a graph block, then optional lines "U+ i j ..."
// and "U- i j ...". '#' comments allowed throughout.
inline Pattern load_pattern(std::istream& in) {
    // Re-parse the graph block here so trailing U+/U- lines stay available.
    std::string line;
    int lineno = 0;
    auto next_data_line = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            std::size_t first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos) continue;
            if (line[first] == '#') continue;
            out = line.substr(first);
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_data_line(header)) throw parse_error("missing header line");
    std::istringstream hs(header);
    long long n = -1, m = -1;
    if (!(hs >> n >> m) || n < 0 || m < 0)
        throw parse_error("line " + std::to_string(lineno) + ": malformed header '" + header + "'");

    std::vector<std::pair<int, int>> edges;
    for (long long i = 0; i < m; ++i) {
        std::string row;
        if (!next_data_line(row))
            throw parse_error("line " + std::to_string(lineno) + ": expected " +
                              std::to_string(m) + " edges");
        std::istringstream rs(row);
        long long u, v;
        if (!(rs >> u >> v))
            throw parse_error("line " + std::to_string(lineno) + ": malformed edge '" + row + "'");
        if (u < 0 || u >= n || v < 0 || v >= n || u == v)
            throw parse_error("line " + std::to_string(lineno) + ": bad edge '" + row + "'");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }

    std::vector<int> uplus, uminus;
    std::string extra;
    while (next_data_line(extra)) {
        std::istringstream es(extra);
        std::string tag;
        es >> tag;
        std::vector<int>* dst = nullptr;
        if (tag == "U+") dst = &uplus;
        else if (tag == "U-") dst = &uminus;
        else throw parse_error("line " + std::to_string(lineno) + ": unexpected line '" + extra + "'");
        long long v;
        while (es >> v) {
            if (v < 0 || v >= n)
                throw parse_error("line " + std::to_string(lineno) + ": prescription vertex out of range");
            dst->push_back(static_cast<int>(v));
        }
    }

    try {
        return Pattern(Graph::from_edges(static_cast<int>(n), edges), uplus, uminus);
    } catch (const argument_error& e) {
        throw parse_error(std::string("invalid pattern: ") + e.what());
    }
}

inline Pattern load_pattern(const std::string& text) {
    std::istringstream in(text);
    return load_pattern(in);
}

inline void save_pattern(std::ostream& out, const Pattern& p) {
    save_graph(out, p.h);
    if (!p.clique_prescribed.empty()) {
        out << "U+";
        for (int v : p.clique_prescribed) out << ' ' << v;
        out << '\n';
    }
    if (!p.indep_prescribed.empty()) {
        out << "U-";
        for (int v : p.indep_prescribed) out << ' ' << v;
        out << '\n';
    }
}

} // namespace closurelab

#endif
