#include "gst/automaton.hpp"

#include "gst/congruence.hpp"
#include "gst/hash.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_map>

namespace gst {

bool is_partial_deterministic(const Graph& g, std::string* why) {
    for (int v = 0; v < g.nv(); ++v) {
        std::vector<int> ls;
        for (int e : g.out[v]) {
            if (g.edges[e].label < 0) {
                if (why) *why = "edge " + std::to_string(e) + " is unlabeled";
                return false;
            }
            ls.push_back(g.edges[e].label);
        }
        std::sort(ls.begin(), ls.end());
        auto it = std::adjacent_find(ls.begin(), ls.end());
        if (it != ls.end()) {
            if (why) *why = "vertex " + g.vname[v] + " has two out-edges labelled " + g.alphabet[*it];
            return false;
        }
    }
    return true;
}

bool is_deterministic(const Graph& g) {
    if (!is_partial_deterministic(g)) return false;
    for (int v = 0; v < g.nv(); ++v)
        if (g.out[v].size() != g.alphabet.size()) return false;
    return true;
}

int DTable::edge_of(const Graph& g, int v, int a) const {
    for (int e : g.out[v])
        if (g.edges[e].label == a) return e;
    return -1;
}

DTable dtable(const Graph& g) {
    std::string why;
    if (!is_partial_deterministic(g, &why)) fail("automaton is not partial deterministic: " + why);
    DTable t;
    t.n = g.nv();
    t.k = static_cast<int>(g.alphabet.size());
    t.t.assign(static_cast<size_t>(t.n) * t.k, -1);
    for (const Edge& e : g.edges) t.t[static_cast<size_t>(e.src) * t.k + e.label] = e.dst;
    return t;
}

int delta(const DTable& t, int q, const Word& w) {
    for (int a : w) {
        if (q < 0) return -1;
        q = t(q, a);
    }
    return q;
}

PT compose(const PT& f, const PT& g) {
    PT h(f.size());
    for (size_t i = 0; i < f.size(); ++i) h[i] = f[i] < 0 ? -1 : g[f[i]];
    return h;
}

int TransitionSemigroup::find(const PT& f) const {
    for (int i = 0; i < size(); ++i)
        if (elems[i] == f) return i;
    return -1;
}

TransitionSemigroup transition_semigroup(const Graph& g, bool monoid, size_t cap) {
    DTable t = dtable(g);
    TransitionSemigroup s;
    s.monoid = monoid;
    std::unordered_map<PT, int, VecHash> index;
    std::vector<PT> gens(t.k, PT(t.n));
    for (int a = 0; a < t.k; ++a)
        for (int v = 0; v < t.n; ++v) gens[a][v] = t(v, a);
    auto add = [&](const PT& f, Word w) {
        auto it = index.find(f);
        if (it != index.end()) return it->second;
        if (s.elems.size() >= cap) throw Error(Error::Precondition, "transition semigroup exceeds state cap");
        int id = static_cast<int>(s.elems.size());
        index.emplace(f, id);
        s.elems.push_back(f);
        s.rep.push_back(std::move(w));
        return id;
    };
    s.gen.assign(t.k, -1);
    if (monoid) {
        PT id(t.n);
        for (int v = 0; v < t.n; ++v) id[v] = v;
        add(id, {});
    }
    for (int a = 0; a < t.k; ++a) s.gen[a] = add(gens[a], Word{a});
    for (size_t x = 0; x < s.elems.size(); ++x) {
        std::vector<int> row(t.k);
        for (int a = 0; a < t.k; ++a) {
            Word w = s.rep[x];
            w.push_back(a);
            row[a] = add(compose(s.elems[x], gens[a]), std::move(w));
        }
        s.act.push_back(std::move(row));
    }
    return s;
}

std::set<Word> language_upto(const Automaton& a, int n, bool with_empty) {
    std::set<Word> res;
    std::vector<char> term(a.g.nv(), 0);
    for (int q : a.terminals) term[q] = 1;
    Word cur;
    std::function<void(int)> dfs = [&](int v) {
        if (term[v] && (with_empty || !cur.empty())) res.insert(cur);
        if (static_cast<int>(cur.size()) >= n) return;
        for (int e : a.g.out[v]) {
            cur.push_back(a.g.edges[e].label);
            dfs(a.g.edges[e].dst);
            cur.pop_back();
        }
    };
    dfs(a.root);
    return res;
}

static std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

static std::vector<std::string> codepoints(const std::string& s) {
    std::vector<std::string> cps;
    for (size_t i = 0; i < s.size();) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        size_t len = c < 0x80 ? 1 : (c >> 5) == 6 ? 2 : (c >> 4) == 14 ? 3 : 4;
        cps.push_back(s.substr(i, len));
        i += len;
    }
    return cps;
}

std::vector<Relation> parse_presentation(const std::string& text, std::vector<std::string>& alphabet) {
    std::vector<Relation> rels;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    const bool infer = alphabet.empty();
    auto word = [&](const std::string& side) -> Word {
        std::string s;
        for (char c : side)
            if (c != ' ' && c != '\t') s += c;
        if (s.empty() || s == "ε") return {};
        if (infer) {
            // unknown alphabet: each code point is a letter
            Word w;
            for (auto& cp : codepoints(s)) {
                auto it = std::find(alphabet.begin(), alphabet.end(), cp);
                if (it == alphabet.end()) {
                    alphabet.push_back(cp);
                    it = alphabet.end() - 1;
                }
                w.push_back(static_cast<int>(it - alphabet.begin()));
            }
            return w;
        }
        return parse_word(alphabet, s);
    };
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line.rfind("--", 0) == 0) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) fail("presentation line " + std::to_string(lineno) + ": missing '='");
        std::string l = trim(line.substr(0, eq)), r = trim(line.substr(eq + 1));
        Relation rel;
        rel.lhs = word(l);
        if (r == "#" || r == "□") {
            rel.dead = true;
        } else {
            rel.rhs = word(r);
        }
        rels.push_back(std::move(rel));
    }
    return rels;
}

Presented automaton_from_presentation(const std::vector<std::string>& alphabet, const std::vector<Relation>& rels,
                                      int bound) {
    int k = static_cast<int>(alphabet.size());
    for (const auto& r : rels)
        if (static_cast<int>(std::max(r.lhs.size(), r.rhs.size())) > bound)
            fail("bound smaller than the longest relation");
    WordSpace ws(k, bound);
    BoundedCongruence c(ws, false, bound);
    for (const auto& r : rels) {
        if (r.dead)
            c.mark_dead(ws.id(r.lhs));
        else
            c.unite(ws.id(r.lhs), ws.id(r.rhs));
    }
    Presented p;
    p.bound = bound;
    p.closed = c.closed();
    p.aut.g.alphabet = alphabet;
    std::map<std::int64_t, int> state;
    std::deque<std::int64_t> queue;
    auto get = [&](std::int64_t w) {
        std::int64_t r = c.find(w);
        auto it = state.find(r);
        if (it != state.end()) return it->second;
        Word sw = ws.word(c.shortest(r));
        int id = p.aut.g.add_vertex(sw.empty() ? "I" : word_to_string(alphabet, sw));
        p.state_word.push_back(sw);
        state.emplace(r, id);
        queue.push_back(r);
        return id;
    };
    if (c.dead(0)) fail("presentation kills the empty word");
    p.aut.root = get(0);
    while (!queue.empty()) {
        std::int64_t r = queue.front();
        queue.pop_front();
        int v = state[r];
        std::int64_t s = c.shortest(r);
        if (ws.len(s) >= bound) continue;  // certificate already false
        for (int a = 0; a < k; ++a) {
            std::int64_t x = ws.right(s, a);
            if (c.dead(x)) continue;
            p.aut.g.add_edge(v, get(x), a);
        }
    }
    return p;
}

std::optional<Word> reduce_word(const RewritingSystem& rs, const Word& w0, size_t max_steps) {
    Word w = w0;
    for (size_t step = 0; step <= max_steps; ++step) {
        size_t best = SIZE_MAX;
        int which = -1;
        bool dead = false;
        for (size_t i = 0; i < rs.rules.size(); ++i) {
            const Word& u = rs.rules[i].first;
            if (u.size() <= w.size() && u.size() < best && std::equal(u.begin(), u.end(), w.begin())) {
                best = u.size();
                which = static_cast<int>(i);
                dead = false;
            }
        }
        for (const Word& u : rs.dead)
            if (u.size() <= w.size() && u.size() < best && std::equal(u.begin(), u.end(), w.begin())) {
                best = u.size();
                dead = true;
            }
        if (best == SIZE_MAX) return w;
        if (dead) return std::nullopt;
        Word nw = rs.rules[which].second;
        nw.insert(nw.end(), w.begin() + static_cast<long>(best), w.end());
        w = std::move(nw);
    }
    throw Error(Error::Violation, "reduce_word: step cap exceeded");
}

RewritingSystem derived_rewriting_system(const Automaton& a) {
    DTable t = dtable(a.g);
    SpanningTree tr = spanning_tree(a.g, a.root);
    RewritingSystem rs;
    rs.alphabet = a.g.alphabet;
    for (int v = 0; v < a.g.nv(); ++v)
        if (!tr.reached(v)) fail("automaton is not rooted: " + a.g.vname[v] + " is unreachable");
    for (int e = 0; e < a.g.ne(); ++e) {
        if (tr.tree_edge[e]) continue;
        const Edge& ed = a.g.edges[e];
        Word lhs = path_label(a.g, tr.geodesic(a.g, ed.src));
        lhs.push_back(ed.label);
        rs.rules.push_back({lhs, path_label(a.g, tr.geodesic(a.g, ed.dst))});
    }
    for (int v = 0; v < a.g.nv(); ++v)
        for (int x = 0; x < t.k; ++x)
            if (t(v, x) < 0) {
                Word lhs = path_label(a.g, tr.geodesic(a.g, v));
                lhs.push_back(x);
                rs.dead.push_back(lhs);
            }
    return rs;
}

bool elementary_loop_certificate(const Automaton& a) {
    RewritingSystem rs = derived_rewriting_system(a);
    for (const auto& [u, v] : rs.rules)
        if (v.size() >= u.size() || !std::equal(v.begin(), v.end(), u.begin())) return false;  // not a loop relation
    // The irreducibles are the tree words; they sit at distinct states. Confirm the system presents the automaton.
    DTable t = dtable(a.g);
    SpanningTree tr = spanning_tree(a.g, a.root);
    std::vector<Word> geo(a.g.nv());
    for (int v = 0; v < a.g.nv(); ++v) geo[v] = path_label(a.g, tr.geodesic(a.g, v));
    const int maxlen = a.g.nv() + 1;
    size_t budget = 200000;
    Word cur;
    std::function<bool(int)> dfs = [&](int v) {
        if (budget-- == 0) return true;
        auto r = reduce_word(rs, cur);
        if (!r || *r != geo[v]) return false;
        if (static_cast<int>(cur.size()) >= maxlen) return true;
        for (int x = 0; x < t.k; ++x) {
            cur.push_back(x);
            int w = t(v, x);
            bool ok = w >= 0 ? dfs(w) : !reduce_word(rs, cur).has_value();
            cur.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    return dfs(a.root);
}

CoveringCheck is_covering_of_automata(const Automaton& A, const Automaton& B, const std::vector<int>& vmap) {
    CoveringCheck r;
    if (static_cast<int>(vmap.size()) != A.g.nv()) {
        r.witness = "vertex map has wrong size";
        return r;
    }
    DTable tb = dtable(B.g);
    std::vector<int> bl(A.g.alphabet.size(), -1);
    for (size_t a = 0; a < A.g.alphabet.size(); ++a) bl[a] = B.g.letter(A.g.alphabet[a]);
    r.edge_map.assign(A.g.ne(), -1);
    for (int e = 0; e < A.g.ne(); ++e) {
        const Edge& ed = A.g.edges[e];
        int b = bl[ed.label];
        int h = b < 0 ? -1 : tb.edge_of(B.g, vmap[ed.src], b);
        if (h < 0 || B.g.edges[h].dst != vmap[ed.dst]) {
            r.witness = "edge " + std::to_string(e) + " (" + A.g.vname[ed.src] + " -" + A.g.alphabet[ed.label] +
                        "->) has no matching image";
            return r;
        }
        r.edge_map[e] = h;
    }
    MorphismReport m = classify_morphism(A.g, B.g, vmap, r.edge_map);
    if (m.kind != MorphismKind::Covering) {
        r.witness = m.witness.empty() ? std::string("not a covering: ") + to_string(m.kind) : m.witness;
        return r;
    }
    TransitionSemigroup sa = transition_semigroup(A.g), sb = transition_semigroup(B.g);
    r.semigroup_map.assign(sa.size(), -1);
    for (int x = 0; x < sa.size(); ++x) {
        PT f(B.g.nv());
        for (int v = 0; v < B.g.nv(); ++v) {
            Word w;
            for (int l : sa.rep[x]) w.push_back(bl[l]);
            f[v] = delta(tb, v, w);
        }
        r.semigroup_map[x] = sb.find(f);
    }
    for (int x = 0; x < sa.size(); ++x)
        for (size_t a = 0; a < A.g.alphabet.size(); ++a) {
            int y = sa.act[x][a];
            int img = sb.act[r.semigroup_map[x]][bl[a]];
            if (r.semigroup_map[y] != img) {
                r.witness = "induced map on transition semigroups is not well defined";
                return r;
            }
        }
    r.covering = true;
    return r;
}

bool isomorphic_pointed(const Automaton& a, const Automaton& b, bool check_terminals) {
    if (a.g.nv() != b.g.nv() || a.g.ne() != b.g.ne()) return false;
    DTable ta = dtable(a.g), tb = dtable(b.g);
    std::vector<int> bl(a.g.alphabet.size(), -1);
    for (size_t x = 0; x < a.g.alphabet.size(); ++x) {
        bl[x] = b.g.letter(a.g.alphabet[x]);
        if (bl[x] < 0) {
            for (const Edge& e : a.g.edges)
                if (e.label == static_cast<int>(x)) return false;
        }
    }
    std::vector<int> m(a.g.nv(), -1), inv(b.g.nv(), -1);
    std::deque<int> q{a.root};
    m[a.root] = b.root;
    inv[b.root] = a.root;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int x = 0; x < ta.k; ++x) {
            int w = ta(v, x);
            int y = bl[x] < 0 ? -1 : tb(m[v], bl[x]);
            if ((w < 0) != (y < 0)) return false;
            if (w < 0) continue;
            if (m[w] < 0 && inv[y] < 0) {
                m[w] = y;
                inv[y] = w;
                q.push_back(w);
            } else if (m[w] != y) {
                return false;
            }
        }
    }
    for (int v = 0; v < a.g.nv(); ++v)
        if (m[v] < 0) return false;
    if (check_terminals) {
        std::vector<int> ta2, tb2;
        for (int t : a.terminals) ta2.push_back(m[t]);
        tb2 = b.terminals;
        std::sort(ta2.begin(), ta2.end());
        std::sort(tb2.begin(), tb2.end());
        if (ta2 != tb2) return false;
    }
    return true;
}

}  // namespace gst
