#pragma once

#include "gst/graph.hpp"

#include <string>
#include <vector>

namespace gst {

// Strong components numbered from the top (0) down in a topological order of the frame.
struct Frame {
    std::vector<int> comp;
    std::vector<std::vector<int>> members;
    std::vector<char> nontrivial;
    std::vector<int> transition;
    std::vector<std::vector<char>> below;  // below[c][d]: a path leads from component c to d (reflexive)

    int size() const { return static_cast<int>(members.size()); }
    bool is_transition(const Graph& g, int e) const { return comp[g.edges[e].src] != comp[g.edges[e].dst]; }
};

Frame strong_components(const Graph& g);
bool is_quasilinear(const Graph& g, const Frame& f);
bool is_linear(const Graph& g, const Frame& f);
inline bool is_quasilinear(const Graph& g) { return is_quasilinear(g, strong_components(g)); }
inline bool is_linear(const Graph& g) { return is_linear(g, strong_components(g)); }

struct EntryExit {
    std::vector<int> p, q;  // per component
    std::vector<int> e;     // e[i] runs q[i-1] -> p[i]; e[0] = -1
};

// top_entry defaults to the first vertex of the top component, bottom_exit to the first of the bottom one.
EntryExit entry_exit_points(const Graph& g, const Frame& f, int top_entry = -1, int bottom_exit = -1);

// All simple paths p -> q, optionally restricted to an edge mask. Throws once more than cap are found.
std::vector<Path> simple_paths(const Graph& g, int p, int q, size_t cap, const std::vector<char>* emask = nullptr);

struct QuasiBases {
    std::vector<Path> paths;
    bool is_base = false;
};
QuasiBases quasi_bases(const Graph& g, int p, int q, size_t cap = 100000);

struct SpanningTree {
    int root = -1;
    std::vector<int> parent;  // tree edge into v, -1 at root or unreached
    std::vector<int> depth;   // -1 if unreached
    std::vector<char> tree_edge;
    std::vector<int> order;   // BFS order

    bool reached(int v) const { return depth[v] >= 0; }
    Path geodesic(const Graph& g, int v) const;              // [root, v]
    Path geodesic(const Graph& g, int u, int v) const;       // [u, v], u an ancestor of v
    bool ancestor(const Graph& g, int u, int v) const;       // u <=_T v reversed: u on [root, v]
};

SpanningTree spanning_tree(const Graph& g, int root);

struct PathCover {
    Graph g;  // rooted at vertex 0
    std::vector<int> proj_v, proj_e;
    std::vector<std::vector<int>> path;  // edge sequence of each cover vertex
};
PathCover universal_cover_truncated(const Graph& g, int root, int depth, size_t cap = 1000000);

std::vector<Path> first_return_generators(const Graph& g, int v, int maxlen);

enum class MorphismKind { NotMorphism, Morphism, Immersion, Covering };
const char* to_string(MorphismKind k);

struct MorphismReport {
    MorphismKind kind = MorphismKind::NotMorphism;
    std::string witness;
};

MorphismReport classify_morphism(const Graph& G, const Graph& H, const std::vector<int>& vmap,
                                 const std::vector<int>& emap);

// Number of paths in G starting at v that map onto the path p of H.
size_t count_lifts(const Graph& G, const std::vector<int>& vmap, const std::vector<int>& emap, int v,
                   const Path& p);

std::string to_dot(const Graph& g, const std::vector<char>* bold = nullptr, int root = -1);

}  // namespace gst
