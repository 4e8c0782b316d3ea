#pragma once

#include "gst/automaton.hpp"
#include "gst/expansion.hpp"
#include "gst/mccammond.hpp"
#include "gst/semigroup.hpp"
#include "gst/uspp.hpp"

#include <optional>
#include <string>

namespace gst {

// Graph / automaton JSON: {"alphabet", "vertices", "edges": [{"id","from","to","label"}], "root", "terminals",
// "rank": {"<edge id>": r}}. Endpoints may be vertex names or indices; edge ids must equal positions.
struct LoadedAutomaton {
    Automaton a;
    std::optional<Rank> rank;
    bool has_root = false;
};
LoadedAutomaton automaton_from_json(const std::string& text);
std::string automaton_to_json(const Automaton& a, const Rank* rank = nullptr);
Rank rank_from_json(const std::string& text, const Graph& g);

Semigroup semigroup_from_json(const std::string& text);
bool is_semigroup_json(const std::string& text);  // has a "table" member
std::string semigroup_to_json(const Semigroup& s);

std::string cover_to_json(const MacCover& m);
std::string expansion_to_json(const Expansion& e, const Semigroup& source);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace gst
