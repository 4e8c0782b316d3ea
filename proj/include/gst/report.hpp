#pragma once

#include "gst/io.hpp"

#include <cstddef>
#include <string>

namespace gst {

// Command back ends shared by the C API. Formats: "json", "dot", "text".
struct Report {
    std::string out;
    int status = 0;  // 0, or 3 / 4 when a certificate is not closed or a check fails
};

std::string analyze_automaton(const LoadedAutomaton& in, const std::string& format);
std::string analyze_semigroup(const Semigroup& s, const std::string& format);
Report kleene_report(const LoadedAutomaton& in, const Rank* rank, int depth, const std::string& format);
std::string cover_report(const Automaton& a, std::size_t cap, const std::string& format);

// name: rkr, kr, rrh, rh, br, rb, lz, rz, zp[:p], malcev; bound <= 0 searches for a stable bound.
Report expand_report(const Semigroup& s, const std::string& name, int bound, int prime, const std::string& basis_text,
                     const std::string& format, Expansion* result = nullptr);

}  // namespace gst
