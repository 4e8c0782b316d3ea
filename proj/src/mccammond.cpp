#include "gst/mccammond.hpp"

#include "gst/hash.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <unordered_map>

namespace gst {

int MacCover::find(const Word& w) const {
    int v = 0;
    for (int a : w) {
        int next = -1;
        for (int e : cover.g.out[v])
            if (cover.g.edges[e].label == a && extension[e]) next = cover.g.edges[e].dst;
        if (next < 0) return -1;
        v = next;
    }
    return v;
}

MacCover mac_cover(const Automaton& a, std::size_t cap) {
    std::string why;
    if (!is_partial_deterministic(a.g, &why)) fail("automaton is not partial deterministic: " + why);
    MacCover m;
    m.cover.g.alphabet = a.g.alphabet;
    std::unordered_map<Word, int, VecHash> index;
    auto add = [&](Word w, std::vector<int> vis) {
        if (m.word.size() >= cap) throw Error(Error::Precondition, "McCammond cover exceeds " + std::to_string(cap) + " vertices");
        int id = m.cover.g.add_vertex(w.empty() ? "1" : word_to_string(a.g.alphabet, w));
        m.proj_v.push_back(vis.back());
        index.emplace(w, id);
        m.word.push_back(std::move(w));
        m.visits.push_back(std::move(vis));
        return id;
    };
    m.cover.root = add({}, {a.root});
    for (int u = 0; u < static_cast<int>(m.word.size()); ++u) {
        int v = m.visits[u].back();
        for (int e : a.g.out[v]) {
            int w = a.g.edges[e].dst;
            const auto& vis = m.visits[u];
            auto pos = std::find(vis.begin(), vis.end(), w);
            int target;
            bool ext = pos == vis.end();
            if (ext) {
                Word nw = m.word[u];
                nw.push_back(a.g.edges[e].label);
                std::vector<int> nv = vis;
                nv.push_back(w);
                target = add(std::move(nw), std::move(nv));
            } else {
                Word nw(m.word[u].begin(), m.word[u].begin() + (pos - vis.begin()));
                target = index.at(nw);
            }
            m.cover.g.add_edge(u, target, a.g.edges[e].label);
            m.proj_e.push_back(e);
            m.extension.push_back(ext);
        }
    }
    for (int t : a.terminals)
        for (int v = 0; v < m.cover.g.nv(); ++v)
            if (m.proj_v[v] == t) m.cover.terminals.push_back(v);
    std::sort(m.cover.terminals.begin(), m.cover.terminals.end());
    return m;
}

std::optional<SimpleStep> act_simple(const Automaton& a, const Word& u, int x) {
    DTable t = dtable(a.g);
    std::vector<int> vis{a.root};
    for (int l : u) {
        int w = t(vis.back(), l);
        if (w < 0 || std::find(vis.begin(), vis.end(), w) != vis.end()) return std::nullopt;
        vis.push_back(w);
    }
    int w = t(vis.back(), x);
    if (w < 0) return std::nullopt;
    auto pos = std::find(vis.begin(), vis.end(), w);
    SimpleStep s;
    if (pos == vis.end()) {
        s.w = u;
        s.w.push_back(x);
        s.extension = true;
    } else {
        s.w.assign(u.begin(), u.begin() + (pos - vis.begin()));
    }
    return s;
}

Word red(const Word& w) {
    Word u;
    for (int x : w) {
        auto pos = std::find(u.begin(), u.end(), x);
        if (pos == u.end())
            u.push_back(x);
        else
            u.erase(pos + 1, u.end());
    }
    return u;
}

static std::vector<int> edge_map_by_label(const Automaton& G, const Automaton& H, const std::vector<int>& vmap) {
    DTable th = dtable(H.g);
    std::vector<int> emap(G.g.ne(), -1);
    for (int e = 0; e < G.g.ne(); ++e) {
        const Edge& ed = G.g.edges[e];
        int l = H.g.letter(G.g.alphabet[ed.label]);
        if (l >= 0) emap[e] = th.edge_of(H.g, vmap[ed.src], l);
    }
    return emap;
}

bool is_simple_covering(const Automaton& G, const Automaton& H, const std::vector<int>& vmap, std::string* why,
                        std::size_t cap) {
    if (static_cast<int>(vmap.size()) != G.g.nv()) fail("vertex map has the wrong length");
    auto emap = edge_map_by_label(G, H, vmap);
    for (int e = 0; e < G.g.ne(); ++e)
        if (emap[e] < 0) {
            if (why) *why = "edge " + std::to_string(e) + " has no image";
            return false;
        }
    MorphismReport rep = classify_morphism(G.g, H.g, vmap, emap);
    if (rep.kind != MorphismKind::Covering) {
        if (why) *why = "not a covering: " + rep.witness;
        return false;
    }
    if (vmap[G.root] != H.root) {
        if (why) *why = "root is not mapped to root";
        return false;
    }
    std::vector<char> onG(G.g.nv(), 0), onH(H.g.nv(), 0);
    Word cur;
    std::size_t count = 0;
    bool ok = true;
    std::function<void(int)> dfs = [&](int v) {
        if (!ok) return;
        if (++count > cap) fail("simple path enumeration exceeded cap");
        for (int e : G.g.out[v]) {
            int w = G.g.edges[e].dst;
            if (onG[w]) continue;
            cur.push_back(G.g.edges[e].label);
            if (onH[vmap[w]]) {
                ok = false;
                if (why) *why = "simple path " + word_to_string(G.g.alphabet, cur) + " maps to a non-simple path";
                return;
            }
            onG[w] = onH[vmap[w]] = 1;
            dfs(w);
            onG[w] = onH[vmap[w]] = 0;
            cur.pop_back();
            if (!ok) return;
        }
    };
    onG[G.root] = onH[H.root] = 1;
    dfs(G.root);
    return ok;
}

std::vector<int> universal_factorization(const Automaton& G, const Automaton& H, const std::vector<int>& vmap,
                                         std::size_t cap) {
    MacCover m = mac_cover(H, cap);
    DTable tg = dtable(G.g);
    std::vector<int> lm(H.g.alphabet.size(), -1);
    for (size_t a = 0; a < lm.size(); ++a) lm[a] = G.g.letter(H.g.alphabet[a]);
    std::vector<int> psi(m.cover.g.nv());
    for (int v = 0; v < m.cover.g.nv(); ++v) {
        int x = G.root;
        for (int a : m.word[v]) x = lm[a] < 0 ? -1 : tg(x, lm[a]);
        if (x < 0) throw Error(Error::Violation, "simple path " + m.cover.g.vname[v] + " does not lift");
        if (vmap[x] != m.proj_v[v]) throw Error(Error::Violation, "factorization does not commute at " + m.cover.g.vname[v]);
        psi[v] = x;
    }
    for (const Edge& e : m.cover.g.edges)
        if (tg(psi[e.src], lm[e.label]) != psi[e.dst])
            throw Error(Error::Violation, "factorization is not a morphism at " + m.cover.g.vname[e.src]);
    return psi;
}

MacSemigroup mac_semigroup(const Semigroup& s, std::size_t cap) {
    MacSemigroup r;
    r.cover = mac_cover(cayley_right(s), cap);
    TransitionSemigroup ts = transition_semigroup(r.cover.cover.g, false, cap * 20);
    r.t = from_transition_semigroup(ts, s.alphabet);
    for (int x = 0; x < r.t.n; ++x) r.proj.push_back(s.eval(ts.rep[x]));
    return r;
}

Rank geometric_rank_from_algebraic(const Semigroup& s, const MacCover& mac) {
    UsppData d = uspp_data(mac.cover.g, mac.cover.root);
    auto rk = ranks(s);
    Rank r(d.g.ne(), -1);
    for (int v = 0; v < d.g.nv(); ++v) {
        std::vector<std::tuple<int, Word, int>> at;
        for (int e : d.g.in[v])
            if (d.is_bold[e]) {
                Word w = path_label(d.g, loop_of(d, e));
                at.emplace_back(rk[s.eval(w)], w, e);
            }
        std::sort(at.begin(), at.end(), [](const auto& a, const auto& b) {
            if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
            if (std::get<1>(a) != std::get<1>(b)) return shortlex_less(std::get<1>(a), std::get<1>(b));
            return std::get<2>(a) < std::get<2>(b);
        });
        for (size_t i = 0; i < at.size(); ++i) r[std::get<2>(at[i])] = static_cast<int>(i);
    }
    return r;
}

DivisionCheck mc_divides_check(const Automaton& a, std::size_t cap) {
    DivisionCheck c;
    std::vector<int> lab(a.g.nv(), -1);
    for (const Edge& e : a.g.edges) {
        if (lab[e.dst] >= 0 && lab[e.dst] != e.label) {
            c.witness = "vertex " + a.g.vname[e.dst] + " is entered by two labels";
            return c;
        }
        lab[e.dst] = e.label;
    }
    c.applicable = true;
    MacCover m = mac_cover(a, cap);
    DTable t = dtable(a.g);
    // f(u) = (vertex history, endpoint); the history is a distinct-letter word over vertices
    auto f = [&](int u) { return std::make_pair(m.visits[u], m.visits[u].back()); };
    std::map<std::pair<std::vector<int>, int>, int> seen;
    c.injective = true;
    for (int u = 0; u < m.cover.g.nv(); ++u)
        if (!seen.emplace(f(u), u).second) {
            c.injective = false;
            c.witness = "f identifies " + m.cover.g.vname[u] + " with another vertex";
        }
    c.equivariant = true;
    for (const Edge& e : m.cover.g.edges) {
        auto [hist, q] = f(e.src);
        int q2 = t(q, e.label);
        std::vector<int> h2 = hist;
        h2.push_back(q2);
        auto expect = std::make_pair(red(h2), q2);
        if (expect != f(e.dst)) {
            c.equivariant = false;
            c.witness = "action disagrees at " + m.cover.g.vname[e.src] + " under " + a.g.alphabet[e.label];
            break;
        }
    }
    return c;
}

std::optional<NonFunctorialWitness> find_nonfunctorial_witness(const std::vector<Semigroup>& pool) {
    std::vector<std::optional<Semigroup>> mac(pool.size());
    auto get = [&](size_t i) -> const Semigroup& {
        if (!mac[i]) mac[i] = mac_semigroup(pool[i]).t;
        return *mac[i];
    };
    for (size_t i = 0; i < pool.size(); ++i)
        for (size_t j = 0; j < pool.size(); ++j) {
            if (i == j || pool[i].alphabet != pool[j].alphabet) continue;
            auto phi = a_morphism(pool[i], pool[j]);
            if (!phi) continue;
            if (!a_morphism(get(i), get(j)))
                return NonFunctorialWitness{static_cast<int>(i), static_cast<int>(j), *phi};
        }
    return std::nullopt;
}

std::optional<int> find_cayley_mac_witness(const std::vector<Semigroup>& pool) {
    for (size_t i = 0; i < pool.size(); ++i) {
        MacSemigroup m = mac_semigroup(pool[i]);
        Automaton upstairs = cayley_right(m.t);
        if (!isomorphic_pointed(upstairs, m.cover.cover, false)) return static_cast<int>(i);
    }
    return std::nullopt;
}

}  // namespace gst
