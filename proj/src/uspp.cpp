#include "gst/uspp.hpp"

#include "gst/automaton.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace gst {

static void require_rooted(const Graph& g, int root) {
    if (root < 0 || root >= g.nv()) fail("root out of range");
    auto seen = reachable_from(g, root);
    for (int v = 0; v < g.nv(); ++v)
        if (!seen[v]) fail("graph is not rooted at " + g.vname[root] + ": " + g.vname[v] + " is unreachable");
}

UsppResult has_uspp(const Graph& g, int root) {
    require_rooted(g, root);
    UsppResult r;
    UsppData& d = r.data;
    d.g = g;
    d.root = root;
    d.tree = spanning_tree(g, root);
    d.is_bold.assign(g.ne(), 0);
    for (int e = 0; e < g.ne(); ++e) {
        if (d.tree.tree_edge[e]) continue;
        const Edge& ed = g.edges[e];
        if (!d.tree.ancestor(g, ed.dst, ed.src)) {
            // [I,ι(e)]e is simple and differs from the geodesic [I,τ(e)]
            r.witness1 = d.tree.geodesic(g, ed.dst);
            r.witness2 = d.tree.geodesic(g, ed.src);
            r.witness2.edges.push_back(e);
            return r;
        }
        d.is_bold[e] = 1;
        d.bold.push_back(e);
    }
    d.frame = strong_components(g);
    r.ok = true;
    return r;
}

UsppData uspp_data(const Graph& g, int root) {
    UsppResult r = has_uspp(g, root);
    if (!r.ok) fail("graph does not have the unique simple path property");
    return std::move(r.data);
}

UsppEquivalence check_uspp_equivalence(const Graph& g, int root, size_t cap) {
    require_rooted(g, root);
    const int n = g.nv();
    UsppEquivalence q;
    // (1) simple paths from the root, counted per endpoint
    std::vector<size_t> count(n, 0);
    std::vector<char> seen(n, 0);
    size_t total = 0;
    std::function<void(int)> dfs = [&](int v) {
        ++count[v];
        if (++total > cap) fail("simple path enumeration exceeded cap");
        for (int e : g.out[v]) {
            int w = g.edges[e].dst;
            if (seen[w]) continue;
            seen[w] = 1;
            dfs(w);
            seen[w] = 0;
        }
    };
    seen[root] = 1;
    dfs(root);
    q.unique_simple_paths = std::all_of(count.begin(), count.end(), [](size_t c) { return c == 1; });

    // (2) and (3): enumerate all spanning arborescences by choosing a parent edge per vertex
    std::vector<int> parent(n, -1);
    std::vector<int> order;
    for (int v = 0; v < n; ++v)
        if (v != root) order.push_back(v);
    auto is_ancestor = [&](int a, int v) {  // a on the tree path from root to v
        for (int x = v, steps = 0; steps <= n; ++steps) {
            if (x == a) return true;
            if (x == root) return false;
            x = g.edges[parent[x]].src;
        }
        return false;
    };
    auto reaches_root = [&](int v) {
        for (int x = v, steps = 0; steps <= n; ++steps) {
            if (x == root) return true;
            if (parent[x] < 0) return true;  // unassigned: no cycle yet
            x = g.edges[parent[x]].src;
        }
        return false;
    };
    std::function<void(size_t)> choose = [&](size_t i) {
        if (i == order.size()) {
            ++q.spanning_trees;
            if (q.spanning_trees > cap) fail("spanning tree enumeration exceeded cap");
            if (!q.tree_condition) {
                std::vector<char> tree(g.ne(), 0);
                for (int v : order) tree[parent[v]] = 1;
                bool ok = true;
                for (int e = 0; e < g.ne() && ok; ++e)
                    if (!tree[e] && !is_ancestor(g.edges[e].dst, g.edges[e].src)) ok = false;
                if (ok) q.tree_condition = true;
            }
            return;
        }
        int v = order[i];
        for (int e : g.in[v]) {
            if (g.edges[e].src == v) continue;
            parent[v] = e;
            if (reaches_root(v)) choose(i + 1);
            parent[v] = -1;
        }
    };
    choose(0);
    q.unique_spanning_tree = q.spanning_trees == 1;
    if (q.unique_simple_paths != q.unique_spanning_tree || q.unique_simple_paths != q.tree_condition)
        throw Error(Error::Violation, "USPP characterizations disagree");
    return q;
}

Path sloop(const UsppData& d, int e) {
    if (!d.is_bold[e]) fail("sloop: edge is not a bold arrow");
    Path p = d.geodesic(d.g.edges[e].src);
    p.edges.push_back(e);
    return p;
}

Path loop_of(const UsppData& d, int e) {
    if (!d.is_bold[e]) fail("loop_of: edge is not a bold arrow");
    Path p = d.geodesic(d.g.edges[e].dst, d.g.edges[e].src);
    p.edges.push_back(e);
    return p;
}

Rank default_rank(const UsppData& d) {
    Rank r(d.g.ne(), -1);
    for (int v = 0; v < d.g.nv(); ++v) {
        std::vector<std::pair<Word, int>> at;
        for (int e : d.g.in[v])
            if (d.is_bold[e]) at.push_back({path_label(d.g, loop_of(d, e)), e});
        std::sort(at.begin(), at.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return shortlex_less(a.first, b.first);
            return a.second < b.second;
        });
        for (size_t i = 0; i < at.size(); ++i) r[at[i].second] = static_cast<int>(i);
    }
    return r;
}

bool validate_rank(const UsppData& d, const Rank& r, std::string* why) {
    if (static_cast<int>(r.size()) != d.g.ne()) {
        if (why) *why = "rank has wrong length";
        return false;
    }
    for (int v = 0; v < d.g.nv(); ++v) {
        std::vector<int> vals;
        for (int e : d.g.in[v])
            if (d.is_bold[e]) vals.push_back(r[e]);
        std::sort(vals.begin(), vals.end());
        for (size_t i = 0; i < vals.size(); ++i)
            if (vals[i] != static_cast<int>(i)) {
                if (why) *why = "rank is not a bijection onto an interval at vertex " + d.g.vname[v];
                return false;
            }
    }
    return true;
}

static bool bold_less(const UsppData& d, const Rank& r, int e, int f) {
    int te = d.g.edges[e].dst, tf = d.g.edges[f].dst;
    int ce = d.frame.comp[te], cf = d.frame.comp[tf];
    if (ce != cf) return d.frame.below[ce][cf];
    if (te != tf) return d.tree_below(te, tf);
    return r[e] < r[f];
}

BoldOrder bold_order(const UsppData& d, const Rank& r, int e, int f) {
    if (!d.is_bold[e] || !d.is_bold[f]) fail("bold_order: both edges must be bold arrows");
    if (e == f) return BoldOrder::Equal;
    if (bold_less(d, r, e, f)) return BoldOrder::Less;
    if (bold_less(d, r, f, e)) return BoldOrder::Greater;
    return BoldOrder::Incomparable;
}

Mask empty_mask(const Graph& g) { return {std::vector<char>(g.nv(), 0), std::vector<char>(g.ne(), 0)}; }

Mask path_mask(const Graph& g, const Path& p) {
    Mask m = empty_mask(g);
    for (int v : path_vertices(g, p)) m.v[v] = 1;
    for (int e : p.edges) m.e[e] = 1;
    return m;
}

Sub extract(const Graph& g, const Mask& m) { return subgraph(g, m.v, m.e); }

CutGraph cut_graph(const Graph& delta, int v) {
    CutGraph c;
    c.root = v;
    c.g.alphabet = delta.alphabet;
    for (int x = 0; x < delta.nv(); ++x) {
        c.g.add_vertex(delta.vname[x]);
        c.vorig.push_back(x);
    }
    int ins = 0;
    for (const Edge& e : delta.edges)
        if (e.dst == v) ++ins;
    c.new_vertex.assign(delta.ne(), -1);
    int k = 0;
    for (int e = 0; e < delta.ne(); ++e)
        if (delta.edges[e].dst == v) {
            std::string name = delta.vname[v] + "'" + (ins > 1 ? std::to_string(k) : "");
            ++k;
            c.new_vertex[e] = c.g.add_vertex(name);
            c.vorig.push_back(v);
        }
    for (int e = 0; e < delta.ne(); ++e) {
        const Edge& ed = delta.edges[e];
        c.g.add_edge(ed.src, ed.dst == v ? c.new_vertex[e] : ed.dst, ed.label);
        c.eorig.push_back(e);
    }
    return c;
}

Mask downset(const UsppData& d, int v) {
    Mask m = empty_mask(d.g);
    for (int u = 0; u < d.g.nv(); ++u) m.v[u] = d.tree_below(u, v);
    for (int e = 0; e < d.g.ne(); ++e) m.e[e] = m.v[d.g.edges[e].src] && m.v[d.g.edges[e].dst];
    return m;
}

Mask upset(const UsppData& d, int w) {
    Mask m = empty_mask(d.g);
    m.v = reaching(d.g, w);
    for (int e = 0; e < d.g.ne(); ++e) m.e[e] = m.v[d.g.edges[e].src] && m.v[d.g.edges[e].dst];
    return m;
}

static void require_below(const UsppData& d, const Mask& m, int u) {
    for (int v = 0; v < d.g.nv(); ++v)
        if (m.v[v] && !d.tree_below(v, u)) fail("subgraph is not contained in the tree downset of " + d.g.vname[u]);
    for (int e = 0; e < d.g.ne(); ++e)
        if (m.e[e] && (!m.v[d.g.edges[e].src] || !m.v[d.g.edges[e].dst])) fail("subgraph edge without its endpoints");
}

bool is_closed(const UsppData& d, const Mask& m, int u) {
    if (!m.v[u]) return false;
    for (int v = 0; v < d.g.nv(); ++v) {
        if (!m.v[v]) continue;
        if (!d.tree_below(v, u)) return false;
        for (int e : d.geodesic(u, v).edges)
            if (!m.e[e]) return false;
    }
    for (int e = 0; e < d.g.ne(); ++e) {
        if (m.e[e] && (!m.v[d.g.edges[e].src] || !m.v[d.g.edges[e].dst])) return false;
        int t = d.g.edges[e].dst;
        if (d.is_bold[e] && t != u && m.v[t] && !m.e[e]) return false;
    }
    return true;
}

Mask closure(const UsppData& d, const Mask& m0, int u) {
    Mask m = m0;
    m.v[u] = 1;
    require_below(d, m, u);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < d.g.nv(); ++v) {  // axiom (2)
            if (!m.v[v]) continue;
            for (int e : d.geodesic(u, v).edges) {
                if (!m.e[e]) changed = true;
                m.e[e] = 1;
                if (!m.v[d.g.edges[e].src]) changed = true;
                m.v[d.g.edges[e].src] = 1;
            }
        }
        for (int e : d.bold) {  // axiom (3)
            int t = d.g.edges[e].dst;
            if (t == u || !m.v[t] || m.e[e]) continue;
            m.e[e] = 1;
            m.v[d.g.edges[e].src] = 1;
            changed = true;
        }
    }
    return m;
}

CutSloop cut_sloop(const UsppData& d, int e) {
    if (!d.is_bold[e]) fail("cut_sloop: edge is not a bold arrow");
    CutSloop c;
    c.u = d.g.edges[e].dst;
    c.closed = closure(d, path_mask(d.g, loop_of(d, e)), c.u);
    Sub s = extract(d.g, c.closed);
    c.cut = cut_graph(s.g, s.vnew[c.u]);
    for (auto& x : c.cut.eorig) x = s.eorig[x];
    for (auto& x : c.cut.vorig) x = s.vorig[x];
    int fresh = 0;
    for (int v = s.g.nv(); v < c.cut.g.nv(); ++v) {
        c.u_prime = v;
        ++fresh;
    }
    if (fresh != 1) throw Error(Error::Violation, "cut sloop acquired " + std::to_string(fresh) + " new vertices");
    return c;
}

Mask k_component(const UsppData& d, int e) {
    int u = d.g.edges[e].dst;
    Mask down = downset(d, u);
    std::vector<char> keep = down.e;
    for (int f : d.bold)
        if (f != e && d.g.edges[f].dst == u) keep[f] = 0;
    // strong component of u in the restricted graph: forward and backward reachability
    Sub s = subgraph(d.g, down.v, keep);
    int su = s.vnew[u];
    auto fw = reachable_from(s.g, su), bw = reaching(s.g, su);
    Mask m = empty_mask(d.g);
    for (int v = 0; v < s.g.nv(); ++v)
        if (fw[v] && bw[v]) m.v[s.vorig[v]] = 1;
    for (int x = 0; x < s.g.ne(); ++x) {
        int o = s.eorig[x];
        if (m.v[d.g.edges[o].src] && m.v[d.g.edges[o].dst]) m.e[o] = 1;
    }
    return m;
}

}  // namespace gst
