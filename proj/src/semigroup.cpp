#include "gst/semigroup.hpp"

#include "gst/congruence.hpp"
#include "gst/hash.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace gst {

int Semigroup::eval(const Word& w) const {
    if (w.empty()) fail("cannot evaluate the empty word in a semigroup");
    int x = gen.at(w[0]);
    for (size_t i = 1; i < w.size(); ++i) x = mul(x, gen.at(w[i]));
    return x;
}

bool is_associative(int n, const std::vector<int>& tab) {
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int xy = tab[x * n + y];
            for (int z = 0; z < n; ++z)
                if (tab[xy * n + z] != tab[x * n + tab[y * n + z]]) return false;
        }
    return true;
}

std::vector<Word> representatives(const Semigroup& s) {
    std::vector<Word> rep(s.n);
    std::vector<char> seen(s.n, 0);
    std::deque<int> q;
    for (int a = 0; a < s.k(); ++a) {
        int g = s.gen[a];
        if (!seen[g]) {
            seen[g] = 1;
            rep[g] = {a};
            q.push_back(g);
        }
    }
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int a = 0; a < s.k(); ++a) {
            int y = s.mul(x, s.gen[a]);
            if (seen[y]) continue;
            seen[y] = 1;
            rep[y] = rep[x];
            rep[y].push_back(a);
            q.push_back(y);
        }
    }
    for (int x = 0; x < s.n; ++x)
        if (!seen[x]) fail("generators do not generate element " + std::to_string(x));
    return rep;
}

Semigroup from_table(const std::vector<std::vector<int>>& table, const std::vector<int>& gens,
                     const std::vector<std::string>& alphabet, std::vector<std::string> names) {
    Semigroup s;
    s.n = static_cast<int>(table.size());
    if (s.n == 0) fail("empty multiplication table");
    if (gens.empty()) fail("no generators");
    if (gens.size() != alphabet.size()) fail("generator list and alphabet differ in length");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != s.n) fail("multiplication table is not square");
        for (int v : row)
            if (v < 0 || v >= s.n) fail("table entry out of range");
        s.tab.insert(s.tab.end(), row.begin(), row.end());
    }
    for (int g : gens)
        if (g < 0 || g >= s.n) fail("generator out of range");
    if (!is_associative(s.n, s.tab)) fail("multiplication table is not associative");
    s.alphabet = alphabet;
    s.gen = gens;
    auto rep = representatives(s);
    if (names.empty())
        for (int x = 0; x < s.n; ++x) names.push_back(word_to_string(alphabet, rep[x]));
    if (static_cast<int>(names.size()) != s.n) fail("element name list has the wrong length");
    s.names = std::move(names);
    return s;
}

Semigroup from_transition_semigroup(const TransitionSemigroup& ts, const std::vector<std::string>& alphabet) {
    if (ts.monoid) fail("expected a transition semigroup without identity");
    Semigroup s;
    s.n = ts.size();
    s.alphabet = alphabet;
    s.gen = ts.gen;
    s.tab.resize(static_cast<size_t>(s.n) * s.n);
    for (int x = 0; x < s.n; ++x)
        for (int y = 0; y < s.n; ++y) {
            int z = x;
            for (int a : ts.rep[y]) z = ts.act[z][a];
            s.tab[static_cast<size_t>(x) * s.n + y] = z;
        }
    for (int x = 0; x < s.n; ++x) s.names.push_back(word_to_string(alphabet, ts.rep[x]));
    return s;
}

Semigroup semigroup_of(const Graph& g) { return from_transition_semigroup(transition_semigroup(g), g.alphabet); }

PresentedSemigroup from_presentation(const std::vector<std::string>& alphabet, const std::vector<Relation>& rels,
                                     int bound) {
    const int k = static_cast<int>(alphabet.size());
    if (k == 0) fail("empty alphabet");
    for (const auto& r : rels) {
        if (r.dead) fail("dead-end relations are not semigroup relations");
        if (r.lhs.empty() || r.rhs.empty()) fail("semigroup relations need non-empty sides");
        if (static_cast<int>(std::max(r.lhs.size(), r.rhs.size())) > bound) fail("bound smaller than the longest relation");
    }
    WordSpace ws(k, bound);
    BoundedCongruence c(ws, true, bound);
    for (const auto& r : rels) c.unite(ws.id(r.lhs), ws.id(r.rhs));
    PresentedSemigroup p;
    p.bound = bound;
    p.closed = c.closed();
    if (!p.closed) return p;
    // right action on classes of non-empty words, then its transition semigroup
    Graph g;
    g.alphabet = alphabet;
    std::unordered_map<std::int64_t, int> state;
    std::deque<std::int64_t> q;
    auto get = [&](std::int64_t w) {
        std::int64_t r = c.find(w);
        auto it = state.find(r);
        if (it != state.end()) return it->second;
        int id = g.add_vertex(word_to_string(alphabet, ws.word(c.shortest(r))));
        state.emplace(r, id);
        q.push_back(r);
        return id;
    };
    int root = get(0);
    while (!q.empty()) {
        std::int64_t r = q.front();
        q.pop_front();
        int v = state[r];
        std::int64_t s = c.shortest(r);
        for (int a = 0; a < k; ++a) g.add_edge(v, get(ws.right(s, a)), a);
    }
    (void)root;
    p.s = semigroup_of(g);
    return p;
}

Semigroup dual(const Semigroup& s) {
    Semigroup d = s;
    for (int x = 0; x < s.n; ++x)
        for (int y = 0; y < s.n; ++y) d.tab[static_cast<size_t>(x) * s.n + y] = s.mul(y, x);
    return d;
}

bool is_monoid(const Semigroup& s, int* identity) {
    for (int e = 0; e < s.n; ++e) {
        bool ok = true;
        for (int x = 0; x < s.n && ok; ++x) ok = s.mul(e, x) == x && s.mul(x, e) == x;
        if (ok) {
            if (identity) *identity = e;
            return true;
        }
    }
    return false;
}

bool is_group(const Semigroup& s) {
    int e;
    if (!is_monoid(s, &e)) return false;
    for (int x = 0; x < s.n; ++x) {
        bool inv = false;
        for (int y = 0; y < s.n && !inv; ++y) inv = s.mul(x, y) == e;
        if (!inv) return false;
    }
    return true;
}

bool is_band(const Semigroup& s) {
    for (int x = 0; x < s.n; ++x)
        if (s.mul(x, x) != x) return false;
    return true;
}

static Automaton cayley(const Semigroup& s, bool right) {
    Automaton a;
    a.g.alphabet = s.alphabet;
    for (int x = 0; x < s.n; ++x) a.g.add_vertex(s.names.empty() ? std::to_string(x) : s.names[x]);
    a.root = a.g.add_vertex("I");
    for (int x = 0; x <= s.n; ++x)
        for (int l = 0; l < s.k(); ++l) {
            int y = x == s.n ? s.gen[l] : right ? s.mul(x, s.gen[l]) : s.mul(s.gen[l], x);
            a.g.add_edge(x, y, l);
        }
    return a;
}

Automaton cayley_right(const Semigroup& s) { return cayley(s, true); }
Automaton cayley_left(const Semigroup& s) { return cayley(s, false); }

BitMatrix::BitMatrix(int n_) : n(n_), words((n_ + 63) / 64), bits(static_cast<size_t>(n_) * ((n_ + 63) / 64), 0) {}

static BitMatrix reach(const Semigroup& s, bool right, bool left) {
    BitMatrix m(s.n);
    std::vector<int> stack;
    for (int x = 0; x < s.n; ++x) {
        m.set(x, x);
        stack.assign(1, x);
        while (!stack.empty()) {
            int y = stack.back();
            stack.pop_back();
            for (int a = 0; a < s.k(); ++a) {
                int g = s.gen[a];
                for (int z : {right ? s.mul(y, g) : -1, left ? s.mul(g, y) : -1}) {
                    if (z < 0 || m.get(x, z)) continue;
                    m.set(x, z);
                    stack.push_back(z);
                }
            }
        }
    }
    return m;
}

static int classes(const BitMatrix& m, std::vector<int>& cls) {
    cls.assign(m.n, -1);
    int c = 0;
    for (int x = 0; x < m.n; ++x) {
        if (cls[x] >= 0) continue;
        for (int y = x; y < m.n; ++y)
            if (cls[y] < 0 && m.get(x, y) && m.get(y, x)) cls[y] = c;
        ++c;
    }
    return c;
}

GreenData green(const Semigroup& s) {
    GreenData g;
    g.ge_r = reach(s, true, false);
    g.ge_l = reach(s, false, true);
    g.ge_j = reach(s, true, true);
    g.r_count = classes(g.ge_r, g.r_class);
    g.l_count = classes(g.ge_l, g.l_class);
    g.j_count = classes(g.ge_j, g.j_class);
    std::map<std::pair<int, int>, int> h;
    g.h_class.resize(s.n);
    for (int x = 0; x < s.n; ++x) {
        auto key = std::make_pair(g.r_class[x], g.l_class[x]);
        auto it = h.emplace(key, static_cast<int>(h.size())).first;
        g.h_class[x] = it->second;
    }
    g.h_count = static_cast<int>(h.size());
    return g;
}

bool is_regular(const Semigroup& s, int x) {
    for (int t = 0; t < s.n; ++t)
        if (s.mul(s.mul(x, t), x) == x) return true;
    return false;
}

bool is_idempotent(const Semigroup& s, int x) { return s.mul(x, x) == x; }

std::vector<int> idempotents(const Semigroup& s) {
    std::vector<int> e;
    for (int x = 0; x < s.n; ++x)
        if (is_idempotent(s, x)) e.push_back(x);
    return e;
}

int omega(const Semigroup& s, int x) {
    int p = x;
    for (int i = 0; i <= s.n; ++i) {
        if (s.mul(p, p) == p) return p;
        p = s.mul(p, x);
    }
    throw Error(Error::Violation, "no idempotent power found");
}

std::vector<int> ranks(const Semigroup& s, const GreenData& g) {
    auto es = idempotents(s);
    std::vector<int> h(s.n, -1);
    std::function<int(int)> height = [&](int e) {
        if (h[e] >= 0) return h[e];
        int best = 0;
        for (int f : es)
            if (g.ge_j.get(f, e) && !g.J(f, e)) best = std::max(best, 1 + height(f));
        return h[e] = best;
    };
    std::vector<int> r(s.n);
    for (int x = 0; x < s.n; ++x) r[x] = height(omega(s, x));
    return r;
}

// R-preorder on S^I with I = n above everything
static bool r_above(const GreenData& g, int n, int x, int y) {
    if (x == n) return true;
    if (y == n) return false;
    return g.ge_r.get(x, y);
}

static SubAutomaton full_sub(const Automaton& cay, const std::vector<char>& vkeep, const std::vector<char>& ekeep,
                             int root, int term) {
    Sub sub = subgraph(cay.g, vkeep, ekeep);
    SubAutomaton r;
    r.aut.g = std::move(sub.g);
    r.aut.root = sub.vnew[root];
    r.aut.terminals = {sub.vnew[term]};
    r.vorig = sub.vorig;
    return r;
}

Automaton schutzenberger(const Semigroup& s, int x) {
    Automaton cay = cayley_right(s);
    GreenData g = green(s);
    std::vector<char> keep(s.n + 1, 0);
    if (x == s.n)
        keep[x] = 1;
    else
        for (int y = 0; y < s.n; ++y) keep[y] = g.R(x, y);
    return full_sub(cay, keep, std::vector<char>(cay.g.ne(), 1), x, x).aut;
}

SubAutomaton str_automaton(const Semigroup& s, const Word& w) {
    if (w.empty()) fail("straightline automaton needs a non-empty word");
    Automaton cay = cayley_right(s);
    GreenData g = green(s);
    std::vector<char> vkeep(s.n + 1, 0), ekeep(cay.g.ne(), 0);
    DTable t = dtable(cay.g);
    int v = s.n;
    vkeep[v] = 1;
    for (int a : w) {
        int e = t.edge_of(cay.g, v, a);
        ekeep[e] = 1;
        v = cay.g.edges[e].dst;
        vkeep[v] = 1;
    }
    for (int y = 0; y < s.n; ++y)
        if (!vkeep[y])
            for (int z = 0; z < s.n; ++z)
                if (vkeep[z] && g.R(y, z)) vkeep[y] = 1;
    for (int e = 0; e < cay.g.ne(); ++e) {
        int a = cay.g.edges[e].src, b = cay.g.edges[e].dst;
        if (a != s.n && vkeep[a] && vkeep[b] && g.R(a, b)) ekeep[e] = 1;
    }
    return full_sub(cay, vkeep, ekeep, s.n, v);
}

SubAutomaton cay_automaton(const Semigroup& s, const Word& w) {
    Automaton cay = cayley_right(s);
    GreenData g = green(s);
    int x = s.eval(w);
    std::vector<char> vkeep(s.n + 1, 0);
    for (int y = 0; y <= s.n; ++y) vkeep[y] = r_above(g, s.n, y, x);
    return full_sub(cay, vkeep, std::vector<char>(cay.g.ne(), 1), s.n, x);
}

bool str_equals_cay(const Semigroup& s, const Word& w) {
    auto a = str_automaton(s, w), b = cay_automaton(s, w);
    return a.vorig == b.vorig && a.aut.g.ne() == b.aut.g.ne();
}

std::optional<Word> str_cay_counterexample(const Semigroup& s, int maxlen) {
    Automaton cay = cayley_right(s);
    Frame f = strong_components(cay.g);
    GreenData g = green(s);
    const int n = s.n, k = s.k();
    // Cay(x): vertex and edge counts of the full subgraph on vertices R-above x
    std::vector<int> cay_v(n, 0), cay_e(n, 0);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y <= n; ++y) cay_v[x] += r_above(g, n, y, x);
        for (const Edge& e : cay.g.edges) cay_e[x] += r_above(g, n, e.src, x) && r_above(g, n, e.dst, x);
    }
    std::vector<int> internal(f.size(), 0);
    for (const Edge& e : cay.g.edges)
        if (f.comp[e.src] == f.comp[e.dst]) ++internal[f.comp[e.src]];
    using St = std::vector<int>;  // vertex, then sorted transition edges used
    std::set<St> seen;
    std::deque<std::pair<St, Word>> q;
    q.push_back({St{n}, Word{}});
    seen.insert(St{n});
    while (!q.empty()) {
        auto [st, w] = q.front();
        q.pop_front();
        if (!w.empty()) {
            std::vector<char> comps(f.size(), 0);
            comps[f.comp[n]] = 1;
            for (size_t i = 1; i < st.size(); ++i) comps[f.comp[cay.g.edges[st[i]].dst]] = 1;
            int nv = 0, ne = static_cast<int>(st.size()) - 1;
            for (int c = 0; c < f.size(); ++c)
                if (comps[c]) {
                    nv += static_cast<int>(f.members[c].size());
                    ne += internal[c];
                }
            // str is always contained in Cay, so equal counts mean equal automata
            if (nv != cay_v[st[0]] || ne != cay_e[st[0]]) return w;
        }
        if (static_cast<int>(w.size()) >= maxlen) continue;
        for (int a = 0; a < k; ++a) {
            int e = st[0] * k + a;  // cayley() adds edges vertex-major, letter-minor
            St nx = st;
            nx[0] = cay.g.edges[e].dst;
            if (f.comp[cay.g.edges[e].src] != f.comp[cay.g.edges[e].dst]) {
                auto it = std::lower_bound(nx.begin() + 1, nx.end(), e);
                if (it == nx.end() || *it != e) nx.insert(it, e);
            }
            if (!seen.insert(nx).second) continue;
            Word w2 = w;
            w2.push_back(a);
            q.push_back({std::move(nx), std::move(w2)});
        }
    }
    return std::nullopt;
}

Stabilizers stabilizers(const Semigroup& s, int x) {
    Stabilizers st;
    for (int t = 0; t < s.n; ++t) {
        bool r = s.mul(x, t) == x, l = s.mul(t, x) == x;
        if (r) st.right.push_back(t);
        if (l) st.left.push_back(t);
        if (r && l) st.twosided.push_back(t);
    }
    return st;
}

std::optional<Word> hamiltonian_word_search(const Semigroup& s, std::size_t cap) {
    int e;
    if (!is_group(s)) fail("hamiltonian search needs a group");
    is_monoid(s, &e);
    if (s.n < 3) fail("hamiltonian search needs at least three elements");
    std::vector<char> used(s.n, 0);
    used[e] = 1;
    Word w;
    std::size_t nodes = 0;
    std::function<bool(int)> dfs = [&](int x) {
        if (static_cast<int>(w.size()) == s.n - 1) return true;
        if (++nodes > cap) throw Error(Error::Precondition, "hamiltonian search exceeded its cap");
        for (int a = 0; a < s.k(); ++a) {
            int y = s.mul(x, s.gen[a]);
            if (used[y]) continue;
            used[y] = 1;
            w.push_back(a);
            if (dfs(y)) return true;
            w.pop_back();
            used[y] = 0;
        }
        return false;
    };
    if (dfs(e)) return w;
    return std::nullopt;
}

std::optional<std::vector<int>> a_morphism(const Semigroup& s, const Semigroup& t) {
    std::vector<int> lm(s.k());
    for (int a = 0; a < s.k(); ++a) {
        auto it = std::find(t.alphabet.begin(), t.alphabet.end(), s.alphabet[a]);
        if (it == t.alphabet.end()) return std::nullopt;
        lm[a] = static_cast<int>(it - t.alphabet.begin());
    }
    auto rep = representatives(s);
    std::vector<int> phi(s.n);
    for (int x = 0; x < s.n; ++x) {
        int y = t.gen[lm[rep[x][0]]];
        for (size_t i = 1; i < rep[x].size(); ++i) y = t.mul(y, t.gen[lm[rep[x][i]]]);
        phi[x] = y;
    }
    for (int a = 0; a < s.k(); ++a)
        if (phi[s.gen[a]] != t.gen[lm[a]]) return std::nullopt;
    for (int x = 0; x < s.n; ++x)
        for (int a = 0; a < s.k(); ++a)
            if (phi[s.mul(x, s.gen[a])] != t.mul(phi[x], t.gen[lm[a]])) return std::nullopt;
    return phi;
}

bool a_isomorphic(const Semigroup& s, const Semigroup& t) {
    if (s.n != t.n || s.k() != t.k()) return false;
    auto phi = a_morphism(s, t);
    if (!phi) return false;
    std::vector<int> v = *phi;
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

std::optional<std::vector<int>> isomorphism(const Semigroup& s, const Semigroup& t) {
    if (s.n != t.n) return std::nullopt;
    const int n = s.n;
    std::vector<int> f(n, -1), used(n, 0);
    std::function<bool(int)> go = [&](int x) {
        if (x == n) return true;
        for (int y = 0; y < n; ++y) {
            if (used[y]) continue;
            f[x] = y;
            bool ok = true;
            for (int a = 0; a <= x && ok; ++a)
                for (int b = 0; b <= x && ok; ++b) {
                    int ab = s.mul(a, b);
                    if (f[ab] >= 0 && f[ab] != t.mul(f[a], f[b])) ok = false;
                }
            if (ok) {
                used[y] = 1;
                if (go(x + 1)) return true;
                used[y] = 0;
            }
            f[x] = -1;
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (f[s.mul(a, b)] != t.mul(f[a], f[b])) return std::nullopt;
    return f;
}

static std::vector<int> canonical(int n, const std::vector<int>& tab) {
    std::vector<int> p(n), inv(n), best;
    std::iota(p.begin(), p.end(), 0);
    std::vector<int> cur(static_cast<size_t>(n) * n);
    do {
        for (int i = 0; i < n; ++i) inv[p[i]] = i;
        // relabelled table: new(i,j) = p^-1(tab(p(i), p(j)))
        bool smaller = best.empty(), decided = best.empty();
        for (int i = 0; i < n * n; ++i) {
            int v = inv[tab[p[i / n] * n + p[i % n]]];
            cur[i] = v;
            if (!decided) {
                if (v < best[i]) {
                    smaller = true;
                    decided = true;
                } else if (v > best[i]) {
                    decided = true;
                    break;
                }
            }
        }
        if (smaller) best = cur;
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

std::vector<std::vector<int>> all_semigroup_tables(int n) {
    if (n < 1 || n > 6) fail("semigroup enumeration supports orders 1..6");
    std::vector<int> tab(n * n, -1);
    std::set<std::vector<int>> out;
    auto consistent = [&]() {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                int xy = tab[x * n + y];
                if (xy < 0) continue;
                for (int z = 0; z < n; ++z) {
                    int l = tab[xy * n + z], yz = tab[y * n + z];
                    if (l < 0 || yz < 0) continue;
                    int r = tab[x * n + yz];
                    if (r >= 0 && r != l) return false;
                }
            }
        return true;
    };
    std::function<void(int)> fill = [&](int cell) {
        if (cell == n * n) {
            out.insert(canonical(n, tab));
            return;
        }
        for (int v = 0; v < n; ++v) {
            tab[cell] = v;
            if (consistent()) fill(cell + 1);
        }
        tab[cell] = -1;
    };
    fill(0);
    return {out.begin(), out.end()};
}

Semigroup all_generated(int n, const std::vector<int>& tab) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    std::vector<int> gens(n);
    std::vector<std::string> alpha(n), names(n);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) t[x][y] = tab[x * n + y];
        gens[x] = x;
        alpha[x] = std::string(1, static_cast<char>('a' + x));
        names[x] = alpha[x];
    }
    return from_table(t, gens, alpha, names);
}

namespace {

// Closure of the generator list under right multiplication by generators; elements are opaque keys.
template <class Key, class Mul>
std::pair<std::vector<Key>, std::vector<std::vector<int>>> close_under(const std::vector<Key>& gens, Mul mul) {
    std::map<Key, int> id;
    std::vector<Key> el;
    auto intern = [&](const Key& x) {
        auto [it, fresh] = id.emplace(x, static_cast<int>(el.size()));
        if (fresh) el.push_back(x);
        return it->second;
    };
    for (const Key& g : gens) intern(g);
    for (size_t i = 0; i < el.size(); ++i)
        for (const Key& g : gens) intern(mul(el[i], g));
    std::vector<std::vector<int>> t(el.size(), std::vector<int>(el.size()));
    for (size_t x = 0; x < el.size(); ++x)
        for (size_t y = 0; y < el.size(); ++y) t[x][y] = id.at(mul(el[x], el[y]));
    return {el, t};
}

}  // namespace

Product generated_product(const Semigroup& a, const Semigroup& b) {
    if (a.k() != b.k()) fail("product needs equal alphabets");
    using P = std::pair<int, int>;
    std::vector<P> gens;
    for (int l = 0; l < a.k(); ++l) gens.emplace_back(a.gen[l], b.gen[l]);
    auto [el, t] = close_under(gens, [&](const P& x, const P& y) {
        return P{a.mul(x.first, y.first), b.mul(x.second, y.second)};
    });
    std::map<P, int> id;
    for (size_t i = 0; i < el.size(); ++i) id[el[i]] = static_cast<int>(i);
    std::vector<int> g;
    for (const P& x : gens) g.push_back(id[x]);
    Product r;
    r.s = from_table(t, g, a.alphabet);
    for (const P& x : el) {
        r.left.push_back(x.first);
        r.right.push_back(x.second);
    }
    return r;
}

Subsemigroup generated_subsemigroup(const Semigroup& s, const std::vector<int>& gens) {
    if (gens.empty()) fail("empty generating set");
    auto [el, t] = close_under(gens, [&](int x, int y) { return s.mul(x, y); });
    std::vector<std::string> al;
    std::vector<int> g;
    for (size_t i = 0; i < gens.size(); ++i) {
        al.push_back("x" + std::to_string(i));
        g.push_back(static_cast<int>(std::find(el.begin(), el.end(), gens[i]) - el.begin()));
    }
    return {from_table(t, g, al), el};
}

}  // namespace gst
