#include "gst/digraph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

namespace gst {

Frame strong_components(const Graph& g) {
    const int n = g.nv();
    std::vector<int> index(n, -1), low(n, 0), stack, sccs(n, -1);
    std::vector<char> on(n, 0);
    int counter = 0, ncomp = 0;
    // iterative Tarjan; components come out sinks first
    std::vector<std::pair<int, size_t>> call;
    for (int s = 0; s < n; ++s) {
        if (index[s] >= 0) continue;
        call.push_back({s, 0});
        index[s] = low[s] = counter++;
        stack.push_back(s);
        on[s] = 1;
        while (!call.empty()) {
            auto& [v, i] = call.back();
            if (i < g.out[v].size()) {
                int w = g.edges[g.out[v][i++]].dst;
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on[w] = 1;
                    call.push_back({w, 0});
                } else if (on[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on[w] = 0;
                    sccs[w] = ncomp;
                } while (w != v);
                ++ncomp;
            }
            int done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
        }
    }
    Frame f;
    f.comp.resize(n);
    f.members.assign(ncomp, {});
    f.nontrivial.assign(ncomp, 0);
    for (int v = 0; v < n; ++v) {
        f.comp[v] = ncomp - 1 - sccs[v];
        f.members[f.comp[v]].push_back(v);
    }
    std::vector<std::vector<int>> succ(ncomp);
    for (int e = 0; e < g.ne(); ++e) {
        int a = f.comp[g.edges[e].src], b = f.comp[g.edges[e].dst];
        if (a == b)
            f.nontrivial[a] = 1;
        else {
            f.transition.push_back(e);
            succ[a].push_back(b);
        }
    }
    for (int c = 0; c < ncomp; ++c)
        if (f.members[c].size() > 1) f.nontrivial[c] = 1;
    f.below.assign(ncomp, std::vector<char>(ncomp, 0));
    for (int c = ncomp - 1; c >= 0; --c) {  // successors have larger numbers
        f.below[c][c] = 1;
        for (int d : succ[c])
            for (int x = 0; x < ncomp; ++x)
                if (f.below[d][x]) f.below[c][x] = 1;
    }
    return f;
}

bool is_quasilinear(const Graph&, const Frame& f) {
    for (int c = 0; c < f.size(); ++c)
        for (int d = c + 1; d < f.size(); ++d)
            if (!f.below[c][d]) return false;
    return true;
}

bool is_linear(const Graph& g, const Frame& f) {
    if (!is_quasilinear(g, f)) return false;
    // transition edges must be pairwise comparable under e < f iff a path e p f exists
    auto precedes = [&](int e, int h) {
        return f.below[f.comp[g.edges[e].dst]][f.comp[g.edges[h].src]];
    };
    const auto& t = f.transition;
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = i + 1; j < t.size(); ++j)
            if (!precedes(t[i], t[j]) && !precedes(t[j], t[i])) return false;
    return true;
}

EntryExit entry_exit_points(const Graph& g, const Frame& f, int top_entry, int bottom_exit) {
    if (!is_linear(g, f)) fail("entry_exit_points: graph is not linear");
    const int k = f.size() - 1;
    EntryExit r;
    r.p.assign(k + 1, -1);
    r.q.assign(k + 1, -1);
    r.e.assign(k + 1, -1);
    for (int e : f.transition) {
        int i = f.comp[g.edges[e].dst];
        if (f.comp[g.edges[e].src] != i - 1 || r.e[i] >= 0) fail("entry_exit_points: transition edges do not form a chain");
        r.e[i] = e;
        r.p[i] = g.edges[e].dst;
        r.q[i - 1] = g.edges[e].src;
    }
    r.p[0] = top_entry >= 0 ? top_entry : f.members[0][0];
    r.q[k] = bottom_exit >= 0 ? bottom_exit : f.members[k][0];
    if (f.comp[r.p[0]] != 0 || f.comp[r.q[k]] != k) fail("entry_exit_points: endpoints not in the extreme components");
    return r;
}

std::vector<Path> simple_paths(const Graph& g, int p, int q, size_t cap, const std::vector<char>* emask) {
    std::vector<Path> res;
    std::vector<char> seen(g.nv(), 0);
    Path cur{p, {}};
    seen[p] = 1;
    std::function<void(int)> dfs = [&](int v) {
        if (v == q) {
            res.push_back(cur);
            if (res.size() > cap) fail("simple path enumeration exceeded cap " + std::to_string(cap));
            return;
        }
        for (int e : g.out[v]) {
            if (emask && !(*emask)[e]) continue;
            int w = g.edges[e].dst;
            if (seen[w]) continue;
            seen[w] = 1;
            cur.edges.push_back(e);
            dfs(w);
            cur.edges.pop_back();
            seen[w] = 0;
        }
    };
    dfs(p);
    return res;
}

QuasiBases quasi_bases(const Graph& g, int p, int q, size_t cap) {
    Frame f = strong_components(g);
    if (!is_linear(g, f)) fail("quasi_bases: graph is not linear");
    if (f.comp[p] != 0 || f.comp[q] != f.size() - 1) fail("quasi_bases: p must be top and q bottom");
    QuasiBases r;
    for (auto& path : simple_paths(g, p, q, cap)) {
        bool all = true;
        for (int t : f.transition)
            if (std::find(path.edges.begin(), path.edges.end(), t) == path.edges.end()) all = false;
        if (all) r.paths.push_back(std::move(path));
    }
    if (r.paths.empty()) throw Error(Error::Violation, "quasi_bases: no quasi-base found");
    r.is_base = r.paths.size() == 1;
    return r;
}

Path SpanningTree::geodesic(const Graph& g, int v) const { return geodesic(g, root, v); }

Path SpanningTree::geodesic(const Graph& g, int u, int v) const {
    if (!reached(v)) fail("geodesic: vertex not reached");
    Path p{u, {}};
    int x = v;
    while (x != u) {
        int e = parent[x];
        if (e < 0) fail("geodesic: " + g.vname[u] + " is not an ancestor of " + g.vname[v]);
        p.edges.push_back(e);
        x = g.edges[e].src;
    }
    std::reverse(p.edges.begin(), p.edges.end());
    return p;
}

bool SpanningTree::ancestor(const Graph& g, int u, int v) const {
    if (!reached(u) || !reached(v)) return false;
    int x = v;
    while (depth[x] > depth[u]) x = g.edges[parent[x]].src;
    return x == u;
}

SpanningTree spanning_tree(const Graph& g, int root) {
    SpanningTree t;
    t.root = root;
    t.parent.assign(g.nv(), -1);
    t.depth.assign(g.nv(), -1);
    t.tree_edge.assign(g.ne(), 0);
    std::deque<int> q{root};
    t.depth[root] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        t.order.push_back(v);
        std::vector<int> es = g.out[v];
        std::sort(es.begin(), es.end(), [&](int a, int b) {
            return std::pair(g.edges[a].label, a) < std::pair(g.edges[b].label, b);
        });
        for (int e : es) {
            int w = g.edges[e].dst;
            if (t.depth[w] >= 0) continue;
            t.depth[w] = t.depth[v] + 1;
            t.parent[w] = e;
            t.tree_edge[e] = 1;
            q.push_back(w);
        }
    }
    return t;
}

PathCover universal_cover_truncated(const Graph& g, int root, int depth, size_t cap) {
    if (depth < 0) fail("universal_cover_truncated: negative depth");
    PathCover c;
    c.g.alphabet = g.alphabet;
    c.g.add_vertex("()");
    c.proj_v.push_back(root);
    c.path.push_back({});
    for (int i = 0; i < c.g.nv(); ++i) {
        if (static_cast<int>(c.path[i].size()) >= depth) continue;
        int v = c.proj_v[i];
        for (int e : g.out[v]) {
            if (static_cast<size_t>(c.g.nv()) >= cap) fail("universal_cover_truncated: vertex cap exceeded");
            auto p = c.path[i];
            p.push_back(e);
            std::string name = "(";
            for (size_t k = 0; k < p.size(); ++k) name += (k ? "," : "") + std::to_string(p[k]);
            int j = c.g.add_vertex(name + ")");
            c.path.push_back(p);
            c.proj_v.push_back(g.edges[e].dst);
            c.g.add_edge(i, j, g.edges[e].label);
            c.proj_e.push_back(e);
        }
    }
    return c;
}

std::vector<Path> first_return_generators(const Graph& g, int v, int maxlen) {
    std::vector<Path> res;
    Path cur{v, {}};
    std::function<void(int)> dfs = [&](int x) {
        if (static_cast<int>(cur.edges.size()) >= maxlen) return;
        for (int e : g.out[x]) {
            cur.edges.push_back(e);
            if (g.edges[e].dst == v)
                res.push_back(cur);
            else
                dfs(g.edges[e].dst);
            cur.edges.pop_back();
        }
    };
    dfs(v);
    std::sort(res.begin(), res.end(), [](const Path& a, const Path& b) { return shortlex_less(a.edges, b.edges); });
    return res;
}

const char* to_string(MorphismKind k) {
    switch (k) {
        case MorphismKind::NotMorphism: return "not-morphism";
        case MorphismKind::Morphism: return "morphism";
        case MorphismKind::Immersion: return "immersion";
        case MorphismKind::Covering: return "covering";
    }
    return "?";
}

MorphismReport classify_morphism(const Graph& G, const Graph& H, const std::vector<int>& vmap,
                                 const std::vector<int>& emap) {
    MorphismReport r;
    if (static_cast<int>(vmap.size()) != G.nv() || static_cast<int>(emap.size()) != G.ne()) {
        r.witness = "map sizes do not match the source graph";
        return r;
    }
    for (int v = 0; v < G.nv(); ++v)
        if (vmap[v] < 0 || vmap[v] >= H.nv()) {
            r.witness = "vertex " + G.vname[v] + " maps outside the target";
            return r;
        }
    for (int e = 0; e < G.ne(); ++e) {
        int h = emap[e];
        if (h < 0 || h >= H.ne() || H.edges[h].src != vmap[G.edges[e].src] || H.edges[h].dst != vmap[G.edges[e].dst]) {
            r.witness = "edge " + std::to_string(e) + " breaks incidence";
            return r;
        }
    }
    r.kind = MorphismKind::Morphism;
    bool bijective = true;
    for (int v = 0; v < G.nv(); ++v) {
        std::vector<int> img;
        for (int e : G.out[v]) img.push_back(emap[e]);
        std::sort(img.begin(), img.end());
        if (std::adjacent_find(img.begin(), img.end()) != img.end()) {
            r.witness = "star of " + G.vname[v] + " is not mapped injectively";
            return r;
        }
        if (img.size() != H.out[vmap[v]].size()) {
            bijective = false;
            if (r.witness.empty()) r.witness = "star of " + G.vname[v] + " is not mapped onto";
        }
    }
    r.kind = MorphismKind::Immersion;
    std::vector<char> hit(H.nv(), 0);
    for (int v : vmap) hit[v] = 1;
    bool onto = std::all_of(hit.begin(), hit.end(), [](char c) { return c; });
    if (!onto) {
        for (int w = 0; w < H.nv(); ++w)
            if (!hit[w]) {
                r.witness = "vertex " + H.vname[w] + " has no preimage";
                break;
            }
    }
    if (onto && bijective) {
        r.kind = MorphismKind::Covering;
        r.witness.clear();
    }
    return r;
}

size_t count_lifts(const Graph& G, const std::vector<int>& vmap, const std::vector<int>& emap, int v,
                   const Path& p) {
    std::function<size_t(int, size_t)> go = [&](int x, size_t i) -> size_t {
        if (i == p.edges.size()) return 1;
        size_t n = 0;
        for (int e : G.out[x])
            if (emap[e] == p.edges[i]) n += go(G.edges[e].dst, i + 1);
        return n;
    };
    if (vmap[v] != p.start) return 0;
    return go(v, 0);
}

static std::string dot_quote(const std::string& s) {
    std::string r = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') r += '\\';
        r += c;
    }
    return r + "\"";
}

std::string to_dot(const Graph& g, const std::vector<char>* bold, int root) {
    Frame f = strong_components(g);
    std::ostringstream os;
    os << "digraph G {\n  rankdir=LR;\n";
    for (int c = 0; c < f.size(); ++c) {
        os << "  subgraph cluster_" << c << " {\n    label=\"C" << c << "\";\n";
        for (int v : f.members[c]) {
            os << "    n" << v << " [label=" << dot_quote(g.vname[v]);
            if (v == root) os << ", shape=doublecircle";
            os << "];\n";
        }
        os << "  }\n";
    }
    for (int e = 0; e < g.ne(); ++e) {
        const Edge& ed = g.edges[e];
        os << "  n" << ed.src << " -> n" << ed.dst << " [";
        std::vector<std::string> attrs;
        if (ed.label >= 0) attrs.push_back("label=" + dot_quote(g.alphabet[ed.label]));
        if (f.is_transition(g, e)) attrs.push_back("style=dashed");
        if (bold && (*bold)[e]) attrs.push_back("color=\"black:invis:black\"");
        for (size_t i = 0; i < attrs.size(); ++i) os << (i ? ", " : "") << attrs[i];
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace gst
