#pragma once

#include "gst/automaton.hpp"
#include "gst/uspp.hpp"

#include <string>
#include <vector>

namespace gst {

struct Edge3 {
    const char* from;
    const char* to;
    const char* label;  // nullptr for unlabeled
};
Automaton make_automaton(const std::vector<std::string>& vertices, const std::vector<Edge3>& edges,
                         const std::string& root, const std::vector<std::string>& terminals = {});

struct KleeneExample {
    std::string name;
    Automaton acc;
    Rank rank;  // empty: default rank
    std::string expected;
};
std::vector<KleeneExample> kleene_examples();

Automaton klein_group_graph();          // group Cayley graph on {1,a,b,ab}, rooted at 1
Automaton not_band_automaton();         // vertices 1,p,q,r
Automaton right_zero_automaton(int k);  // Cayley graph of A^r with I, letters a, b, c, ...
Automaton oriented_k33();               // unlabeled, rooted at p1
Automaton two_root_graph(bool at_w);    // v -> w with two edges back; rooted at v or w
Automaton free_basis_graph(bool at_w);  // v -e-> w -f-> v, loop g at w
Automaton bold_order_graph();           // bold arrows e1..e4 with e1 << e4 << e3
Automaton cut_example_graph();          // three edges entering v
std::string klein_presentation();

}  // namespace gst
