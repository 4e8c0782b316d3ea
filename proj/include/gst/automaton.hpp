#pragma once

#include "gst/digraph.hpp"
#include "gst/graph.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gst {

bool is_partial_deterministic(const Graph& g, std::string* why = nullptr);
bool is_deterministic(const Graph& g);

// Transition table of a partial deterministic automaton: t[v*k + a] = target or -1.
struct DTable {
    int n = 0, k = 0;
    std::vector<int> t;
    int operator()(int v, int a) const { return v < 0 ? -1 : t[static_cast<size_t>(v) * k + a]; }
    int edge_of(const Graph& g, int v, int a) const;
};
DTable dtable(const Graph& g);

int delta(const DTable& t, int q, const Word& w);
inline int delta(const Graph& g, int q, const Word& w) { return delta(dtable(g), q, w); }

using PT = std::vector<int>;  // partial transformation, -1 = undefined
PT compose(const PT& f, const PT& g);  // first f then g

struct TransitionSemigroup {
    std::vector<PT> elems;
    std::vector<Word> rep;              // shortlex-least word for each element
    std::vector<int> gen;               // letter -> element
    std::vector<std::vector<int>> act;  // act[x][a] = element x·a
    bool monoid = false;                // element 0 is the identity when true
    int size() const { return static_cast<int>(elems.size()); }
    int find(const PT& f) const;
};

TransitionSemigroup transition_semigroup(const Graph& g, bool monoid = false, size_t cap = 1000000);

// Words of length <= n labelling a path from the root to a terminal.
std::set<Word> language_upto(const Automaton& a, int n, bool with_empty = false);

struct Relation {
    Word lhs, rhs;
    bool dead = false;  // lhs = □
};

std::vector<Relation> parse_presentation(const std::string& text, std::vector<std::string>& alphabet);

struct Presented {
    Automaton aut;
    bool closed = false;
    int bound = 0;
    std::vector<Word> state_word;  // shortest word per state
};

Presented automaton_from_presentation(const std::vector<std::string>& alphabet, const std::vector<Relation>& rels,
                                      int bound);

struct RewritingSystem {
    std::vector<std::string> alphabet;
    std::vector<std::pair<Word, Word>> rules;  // u -> v
    std::vector<Word> dead;                    // u -> □
};

// Leftmost prefix rewriting; nullopt means □.
std::optional<Word> reduce_word(const RewritingSystem& rs, const Word& w, size_t max_steps = 100000);

// Rules l(slp(e)) -> l([I,τ(e)]) and l([I,v])a -> □ read off the BFS spanning tree.
RewritingSystem derived_rewriting_system(const Automaton& a);

bool elementary_loop_certificate(const Automaton& a);

struct CoveringCheck {
    bool covering = false;
    std::string witness;
    std::vector<int> edge_map;
    std::vector<int> semigroup_map;  // element of S(A) -> element of S(B)
};

// vmap: vertices of A to vertices of B; edges are matched by label.
CoveringCheck is_covering_of_automata(const Automaton& A, const Automaton& B, const std::vector<int>& vmap);

bool isomorphic_pointed(const Automaton& a, const Automaton& b, bool check_terminals = true);

}  // namespace gst
