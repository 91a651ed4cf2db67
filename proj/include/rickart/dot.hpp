#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "harness.hpp"

namespace rickart {

// Hasse diagram of a finite poset in DOT. One node per element labelled by
// its canonical entry string, one edge per covering pair (lower -> upper).
// Element order is the caller's (canonical/lexicographic), so the output is
// byte-stable.
inline std::string emitHasseDot(const PosetTable& t, const std::vector<std::string>& labels) {
    std::ostringstream out;
    out << "digraph hasse {\n";
    out << "  rankdir=BT;\n";
    for (std::size_t i = 0; i < labels.size(); ++i)
        out << "  n" << i << " [label=\"" << labels[i] << "\"];\n";
    for (const auto& [lo, hi] : t.covers) out << "  n" << lo << " -> n" << hi << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace rickart
