#pragma once

#include "gst/automaton.hpp"
#include "gst/semigroup.hpp"
#include "gst/uspp.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gst {

struct MacCover {
    Automaton cover;                       // root 0 is the empty simple path
    std::vector<Word> word;                // label of each simple path
    std::vector<std::vector<int>> visits;  // base vertices along it, root first
    std::vector<int> proj_v, proj_e;       // η on vertices and edges
    std::vector<char> extension;           // per cover edge: extension (1) or reduction (0)
    int find(const Word& w) const;         // -1 if w is not a simple path label
};

// Throws Precondition once the cover exceeds cap vertices.
MacCover mac_cover(const Automaton& a, std::size_t cap = 5000);

struct SimpleStep {
    Word w;
    bool extension = false;
};
// nullopt when u is not a simple path label or x is not readable at its end.
std::optional<SimpleStep> act_simple(const Automaton& a, const Word& u, int x);

// Reduction of a word over any alphabet: the distinct-letter word reached from 1 in the cover of A^r.
Word red(const Word& w);

// φ: G -> H given by a vertex map between automata, edges matched by label.
bool is_simple_covering(const Automaton& G, const Automaton& H, const std::vector<int>& vmap, std::string* why = nullptr,
                        std::size_t cap = 200000);

// The unique morphism ψ from the cover of H to G with φψ = η. Throws Violation if it does not exist.
std::vector<int> universal_factorization(const Automaton& G, const Automaton& H, const std::vector<int>& vmap,
                                         std::size_t cap = 5000);

struct MacSemigroup {
    Semigroup t;
    std::vector<int> proj;  // onto S
    MacCover cover;
};
MacSemigroup mac_semigroup(const Semigroup& s, std::size_t cap = 5000);

// Bold arrows at each cover vertex ordered by the algebraic rank of their loop labels, ties by shortlex.
Rank geometric_rank_from_algebraic(const Semigroup& s, const MacCover& mac);

struct DivisionCheck {
    bool applicable = false;  // edge labels are a function of the terminal vertex
    bool injective = false;
    bool equivariant = false;
    std::string witness;
};
// Simulates the embedding of the cover into the wreath-style action on (vertex history, endpoint).
DivisionCheck mc_divides_check(const Automaton& a, std::size_t cap = 5000);

// Witness searches over a pool of A-semigroups. Indices into the pool.
struct NonFunctorialWitness {
    int s = -1, t = -1;
    std::vector<int> morphism;
};
std::optional<NonFunctorialWitness> find_nonfunctorial_witness(const std::vector<Semigroup>& pool);
// First S with Cay(S^Mac, A) not isomorphic to Cay(S, A)^Mac as pointed automata.
std::optional<int> find_cayley_mac_witness(const std::vector<Semigroup>& pool);

}  // namespace gst
