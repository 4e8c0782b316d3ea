#pragma once

#include "gst/automaton.hpp"
#include "gst/semigroup.hpp"

#include <random>

namespace gst {

using Rng = std::mt19937_64;

// Random tree on n vertices rooted at 0 plus `extra` arbitrary edges (loops and parallels allowed).
Automaton random_rooted_graph(Rng& rng, int n, int extra);
// Partial deterministic automaton rooted at 0 over k letters.
Automaton random_rooted_automaton(Rng& rng, int n, int k, int extra);
// Tree with distinct child labels plus up to `bold` edges from a vertex to one of its tree ancestors (or itself).
Automaton random_uspp_automaton(Rng& rng, int n, int bold, int k);
// Trim acceptor with one terminal obtained by restricting a random USPP automaton to the vertices reaching it.
Automaton random_trim_uspp_acceptor(Rng& rng, int max_states, int max_bold, int k);
// Semigroup generated by k random partial transformations of `points` points, at most max_size elements.
Semigroup random_semigroup(Rng& rng, int points, int k, int max_size);
Word random_word(Rng& rng, int k, int len);

}  // namespace gst
