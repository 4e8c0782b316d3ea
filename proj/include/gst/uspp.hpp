#pragma once

#include "gst/digraph.hpp"
#include "gst/graph.hpp"

#include <string>
#include <vector>

namespace gst {

struct UsppData {
    Graph g;
    int root = 0;
    SpanningTree tree;
    Frame frame;
    std::vector<int> bold;
    std::vector<char> is_bold;

    Path geodesic(int v) const { return tree.geodesic(g, v); }
    Path geodesic(int u, int v) const { return tree.geodesic(g, u, v); }
    // u <=_T v: u lies in the subtree below v (reflexive)
    bool tree_below(int u, int v) const { return tree.ancestor(g, v, u); }
};

struct UsppResult {
    bool ok = false;
    UsppData data;
    Path witness1, witness2;  // two distinct simple paths to one vertex when !ok
};

UsppResult has_uspp(const Graph& g, int root);
UsppData uspp_data(const Graph& g, int root);  // throws when the property fails

struct UsppEquivalence {
    bool unique_simple_paths = false;
    bool unique_spanning_tree = false;
    bool tree_condition = false;
    size_t spanning_trees = 0;
};

// Evaluates the three characterizations independently by enumeration; throws on disagreement.
UsppEquivalence check_uspp_equivalence(const Graph& g, int root, size_t cap = 200000);

Path sloop(const UsppData& d, int e);
Path loop_of(const UsppData& d, int e);

using Rank = std::vector<int>;  // per edge; -1 off the bold arrows

Rank default_rank(const UsppData& d);
bool validate_rank(const UsppData& d, const Rank& r, std::string* why = nullptr);

enum class BoldOrder { Less, Greater, Equal, Incomparable };
BoldOrder bold_order(const UsppData& d, const Rank& r, int e, int f);

struct Mask {
    std::vector<char> v, e;
    bool operator==(const Mask& o) const { return v == o.v && e == o.e; }
};
Mask empty_mask(const Graph& g);
Mask path_mask(const Graph& g, const Path& p);
Sub extract(const Graph& g, const Mask& m);

struct CutGraph {
    Graph g;
    int root = 0;
    std::vector<int> new_vertex;  // edge -> new vertex (v,e) or -1
    std::vector<int> eorig;       // edge -> edge id in the graph it was cut from (after any extraction)
    std::vector<int> vorig;       // vertex -> vertex in that graph, new vertices map to the cut vertex
};

CutGraph cut_graph(const Graph& delta, int v);

Mask downset(const UsppData& d, int v);
Mask upset(const UsppData& d, int w);
bool is_closed(const UsppData& d, const Mask& m, int u);
Mask closure(const UsppData& d, const Mask& m, int u);

struct CutSloop {
    CutGraph cut;
    int u = -1;        // tip of the bold arrow, root of the cut
    int u_prime = -1;  // the single new vertex
    Mask closed;       // closure(lp(e), u) in the original graph
};
CutSloop cut_sloop(const UsppData& d, int e);

// Strong component of τ(e) in τ(e)^⇓ after removing the other bold arrows into τ(e).
Mask k_component(const UsppData& d, int e);

}  // namespace gst
