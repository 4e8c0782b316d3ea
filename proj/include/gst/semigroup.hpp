#pragma once

#include "gst/automaton.hpp"
#include "gst/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gst {

// Finite A-semigroup: dense elements 0..n-1, a multiplication table and a generator per letter.
struct Semigroup {
    int n = 0;
    std::vector<int> tab;  // row-major, tab[x*n+y] = xy
    std::vector<std::string> alphabet;
    std::vector<int> gen;  // letter -> element
    std::vector<std::string> names;

    int size() const { return n; }
    int k() const { return static_cast<int>(alphabet.size()); }
    int mul(int x, int y) const { return tab[static_cast<size_t>(x) * n + y]; }
    int eval(const Word& w) const;  // w non-empty
};

// Throws Precondition on a non-square, non-associative or non-generated table.
Semigroup from_table(const std::vector<std::vector<int>>& table, const std::vector<int>& gens,
                     const std::vector<std::string>& alphabet, std::vector<std::string> names = {});
bool is_associative(int n, const std::vector<int>& tab);

// Right regular representation of a transition semigroup, reindexed in BFS order.
Semigroup from_transition_semigroup(const TransitionSemigroup& ts, const std::vector<std::string>& alphabet);
Semigroup semigroup_of(const Graph& g);

struct PresentedSemigroup {
    Semigroup s;
    bool closed = false;
    int bound = 0;
};
// Two-sided congruence on A+ generated by the relations, saturated on words up to the bound.
PresentedSemigroup from_presentation(const std::vector<std::string>& alphabet, const std::vector<Relation>& rels,
                                     int bound);

std::vector<Word> representatives(const Semigroup& s);  // shortlex-least word per element
Semigroup dual(const Semigroup& s);
bool is_monoid(const Semigroup& s, int* identity = nullptr);
bool is_group(const Semigroup& s);
bool is_band(const Semigroup& s);

// Cayley graphs on S^I; vertex n is the adjoined identity I and the root.
Automaton cayley_right(const Semigroup& s);
Automaton cayley_left(const Semigroup& s);

// Dense bit matrix used for the Green preorders.
struct BitMatrix {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> bits;
    BitMatrix() = default;
    explicit BitMatrix(int n_);
    bool get(int i, int j) const { return (bits[static_cast<size_t>(i) * words + (j >> 6)] >> (j & 63)) & 1u; }
    void set(int i, int j) { bits[static_cast<size_t>(i) * words + (j >> 6)] |= std::uint64_t{1} << (j & 63); }
};

struct GreenData {
    // ge_X.get(s,t): s >=_X t, i.e. t ∈ sS^1 (R), S^1 s (L), S^1 s S^1 (J)
    BitMatrix ge_r, ge_l, ge_j;
    std::vector<int> r_class, l_class, j_class, h_class;
    int r_count = 0, l_count = 0, j_count = 0, h_count = 0;
    bool R(int s, int t) const { return r_class[s] == r_class[t]; }
    bool L(int s, int t) const { return l_class[s] == l_class[t]; }
    bool J(int s, int t) const { return j_class[s] == j_class[t]; }
    bool H(int s, int t) const { return h_class[s] == h_class[t]; }
};

GreenData green(const Semigroup& s);
bool is_regular(const Semigroup& s, int x);
bool is_idempotent(const Semigroup& s, int x);
std::vector<int> idempotents(const Semigroup& s);

int omega(const Semigroup& s, int x);
// rank of every element: longest strictly J-increasing chain of idempotents starting at x^ω
std::vector<int> ranks(const Semigroup& s, const GreenData& g);
inline std::vector<int> ranks(const Semigroup& s) { return ranks(s, green(s)); }

// Full subgraph of the right Cayley graph on the R-class of x (x == n means I); initial = terminal = x.
Automaton schutzenberger(const Semigroup& s, int x);
// Vertex ids of both automata are those of cayley_right; terminals = {[w]}.
struct SubAutomaton {
    Automaton aut;
    std::vector<int> vorig;  // vertex -> vertex of cayley_right(S)
};
SubAutomaton str_automaton(const Semigroup& s, const Word& w);
SubAutomaton cay_automaton(const Semigroup& s, const Word& w);
bool str_equals_cay(const Semigroup& s, const Word& w);
// Searches all words up to maxlen for str(w) != Cay(w). str(w) only depends on [w] and the set of
// transition edges the w-path uses, so the search runs over those states.
std::optional<Word> str_cay_counterexample(const Semigroup& s, int maxlen);

struct Stabilizers {
    std::vector<int> right, left, twosided;
};
Stabilizers stabilizers(const Semigroup& s, int x);

std::optional<Word> hamiltonian_word_search(const Semigroup& s, std::size_t cap = 10'000'000);

// A-morphism S -> T matching generators by letter name; nullopt if none exists.
std::optional<std::vector<int>> a_morphism(const Semigroup& s, const Semigroup& t);
bool a_isomorphic(const Semigroup& s, const Semigroup& t);
// Some isomorphism of abstract semigroups (generators ignored).
std::optional<std::vector<int>> isomorphism(const Semigroup& s, const Semigroup& t);

// Multiplication tables of all semigroups of order n up to isomorphism (anti-isomorphic pairs kept apart).
std::vector<std::vector<int>> all_semigroup_tables(int n);
// A-semigroup generated by every element of the table, letters named a, b, c, ...
Semigroup all_generated(int n, const std::vector<int>& tab);

// Subsemigroup of a x b generated by the letter pairs; left/right are the coordinate projections.
struct Product {
    Semigroup s;
    std::vector<int> left, right;
};
Product generated_product(const Semigroup& a, const Semigroup& b);

// Subsemigroup of s generated by the given elements, with the inclusion map.
struct Subsemigroup {
    Semigroup s;
    std::vector<int> incl;
};
Subsemigroup generated_subsemigroup(const Semigroup& s, const std::vector<int>& gens);

}  // namespace gst
