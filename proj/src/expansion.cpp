#include "gst/expansion.hpp"

#include "gst/congruence.hpp"
#include "gst/hash.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_map>

namespace gst {

namespace {

using State = std::vector<int>;

// Elements are the states reached from start by non-empty words; the product runs a representative
// word of the right factor from the state of the left one.
template <class Step, class Value>
Expansion state_expansion(const Semigroup& s, const std::string& name, const State& start, Step step, Value value,
                          std::size_t cap) {
    const int k = s.k();
    std::unordered_map<State, int, VecHash> index;
    std::vector<State> states;
    std::vector<Word> rep;
    std::vector<std::vector<int>> act;
    auto add = [&](State st, const Word& w) {
        auto it = index.find(st);
        if (it != index.end()) return it->second;
        if (states.size() >= cap) throw Error(Error::Precondition, name + " expansion exceeds " + std::to_string(cap) + " elements");
        int id = static_cast<int>(states.size());
        index.emplace(st, id);
        states.push_back(std::move(st));
        rep.push_back(w);
        return id;
    };
    Expansion e;
    e.name = name;
    e.t.alphabet = s.alphabet;
    e.t.gen.resize(k);
    for (int a = 0; a < k; ++a) e.t.gen[a] = add(step(start, a), Word{a});
    for (size_t x = 0; x < states.size(); ++x) {
        std::vector<int> row(k);
        for (int a = 0; a < k; ++a) {
            Word w = rep[x];
            w.push_back(a);
            row[a] = add(step(states[x], a), w);
        }
        act.push_back(std::move(row));
    }
    const int n = static_cast<int>(states.size());
    e.t.n = n;
    e.t.tab.resize(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int z = x;
            for (int a : rep[y]) z = act[z][a];
            e.t.tab[static_cast<size_t>(x) * n + y] = z;
        }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int a = 0; a < k; ++a)
                if (e.t.mul(x, act[y][a]) != act[e.t.mul(x, y)][a])
                    throw Error(Error::Violation, name + ": state equivalence is not a congruence");
    for (int x = 0; x < n; ++x) {
        e.t.names.push_back(word_to_string(s.alphabet, rep[x]));
        e.proj.push_back(value(states[x]));
    }
    return e;
}

struct CayleyInfo {
    Automaton cay;
    DTable t;
    Frame f;
    std::vector<int> edge;  // v*k + a -> edge id
};

CayleyInfo cayley_info(const Semigroup& s) {
    CayleyInfo c;
    c.cay = cayley_right(s);
    c.t = dtable(c.cay.g);
    c.f = strong_components(c.cay.g);
    c.edge.assign(static_cast<size_t>(s.n + 1) * s.k(), -1);
    for (int e = 0; e < c.cay.g.ne(); ++e) {
        const Edge& ed = c.cay.g.edges[e];
        c.edge[static_cast<size_t>(ed.src) * s.k() + ed.label] = e;
    }
    return c;
}

}  // namespace

Expansion rkr(const Semigroup& s, std::size_t cap) {
    CayleyInfo c = cayley_info(s);
    const int k = s.k();
    auto step = [&](const State& st, int a) {
        int e = c.edge[static_cast<size_t>(st[0]) * k + a];
        State r = st;
        r[0] = c.cay.g.edges[e].dst;
        if (c.f.is_transition(c.cay.g, e)) {
            auto it = std::lower_bound(r.begin() + 1, r.end(), e);
            if (it == r.end() || *it != e) r.insert(it, e);
        }
        return r;
    };
    return state_expansion(s, "rkr", State{s.n}, step, [](const State& st) { return st[0]; }, cap);
}

Expansion kr(const Semigroup& s, std::size_t cap) {
    Expansion e = dual_expansion(s, [&](const Semigroup& d) { return rkr(d, cap); });
    e.name = "kr";
    return e;
}

Expansion rrh(const Semigroup& s, std::size_t cap) {
    CayleyInfo c = cayley_info(s);
    auto step = [&](const State& st, int a) {
        int v = st.back();
        int w = c.t(v, a);
        State r = st;
        if (c.f.comp[v] == c.f.comp[w])
            r.back() = w;
        else
            r.push_back(w);
        return r;
    };
    return state_expansion(s, "rrh", State{s.n}, step, [](const State& st) { return st.back(); }, cap);
}

Expansion rh(const Semigroup& s, std::size_t cap) {
    Expansion e = dual_expansion(s, [&](const Semigroup& d) { return rrh(d, cap); });
    e.name = "rh";
    return e;
}

Expansion br(const Semigroup& s, int max_iter, std::size_t cap) {
    Expansion cur;
    cur.name = "br";
    cur.t = s;
    cur.proj.resize(s.n);
    for (int x = 0; x < s.n; ++x) cur.proj[x] = x;
    for (int i = 0; i < max_iter; ++i) {
        Expansion a = rrh(cur.t, cap);
        Expansion b = rh(a.t, cap);
        std::vector<int> proj(b.t.n);
        for (int x = 0; x < b.t.n; ++x) proj[x] = cur.proj[a.proj[b.proj[x]]];
        bool same = a_isomorphic(b.t, cur.t);
        cur.t = std::move(b.t);
        cur.proj = std::move(proj);
        cur.bound = i + 1;
        if (same) {
            cur.stable = true;
            return cur;
        }
    }
    cur.stable = false;
    return cur;
}

IdentityBasis parse_basis(const std::string& text, const std::string& name) {
    IdentityBasis b;
    b.name = name;
    std::map<std::string, int> var;
    auto side = [&](const std::string& s) {
        Word w;
        size_t i = 0;
        while (i < s.size()) {
            if (std::isspace(static_cast<unsigned char>(s[i]))) {
                ++i;
                continue;
            }
            if (!std::isalpha(static_cast<unsigned char>(s[i]))) fail("bad character in identity: " + s);
            std::string tok(1, s[i++]);
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) tok += s[i++];
            int p = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                bool brace = i < s.size() && s[i] == '{';
                if (brace) ++i;
                size_t st = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                if (st == i) fail("missing exponent in identity: " + s);
                p = std::stoi(s.substr(st, i - st));
                if (brace) {
                    if (i >= s.size() || s[i] != '}') fail("missing } in identity: " + s);
                    ++i;
                }
                if (p < 1) fail("exponents must be positive");
            }
            auto it = var.emplace(tok, static_cast<int>(var.size())).first;
            for (int j = 0; j < p; ++j) w.push_back(it->second);
        }
        if (w.empty()) fail("identity sides must be non-empty");
        return w;
    };
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto c = line.find("--");
        if (c != std::string::npos) line.erase(c);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) fail("identity without '=': " + line);
        Word u = side(line.substr(0, eq)), v = side(line.substr(eq + 1));
        b.ids.push_back({u, v});
    }
    b.vars = static_cast<int>(var.size());
    if (b.ids.empty()) fail("empty identity basis");
    return b;
}

std::string to_string(const IdentityBasis& b) {
    std::string out;
    auto side = [](const Word& w) {
        std::string s;
        for (int x : w) s += "x" + std::to_string(x + 1);
        return s;
    };
    for (const auto& [u, v] : b.ids) out += side(u) + " = " + side(v) + "\n";
    return out;
}

IdentityBasis basis_rb() { return parse_basis("xx = x\nxzy = xwy", "rb"); }
IdentityBasis basis_lz() { return parse_basis("xy = x", "lz"); }
IdentityBasis basis_rz() { return parse_basis("xy = y", "rz"); }
IdentityBasis basis_triv() { return parse_basis("x = y", "triv"); }
IdentityBasis basis_zp(int p) {
    if (p < 1) fail("zp needs p >= 1");
    std::string t = "xy = yx\nx^" + std::to_string(p + 1) + " = x\nx^" + std::to_string(p) + "y = y";
    return parse_basis(t, "zp:" + std::to_string(p));
}

int default_max_bound(int k) {
    if (k <= 1) return 24;
    std::int64_t total = 1, pw = 1;
    int L = 0;
    while (L < 24) {
        pw *= k;
        if (total + pw > 4'000'000) break;
        total += pw;
        ++L;
    }
    return L;
}

namespace {

class MalcevEngine {
public:
    MalcevEngine(const Semigroup& s, const IdentityBasis& b, int lmax)
        : s_(s), b_(b), ws_(s.k(), lmax), c_(ws_, true, 0) {
        idem_.assign(s.n, 0);
        for (int e : idempotents(s)) idem_[e] = 1;
        for (const auto& [u, v] : b.ids) {
            std::vector<int> cu(b.vars, 0), cv(b.vars, 0);
            for (int x : u) ++cu[x];
            for (int x : v) ++cv[x];
            cnt_u_.push_back(cu);
            cnt_v_.push_back(cv);
        }
    }

    void advance(int L) {
        c_.raise_bound(L);
        saturate();
    }

    bool closed() { return c_.closed(); }

    // Right Cayley graph of the quotient (I included), then its transition semigroup.
    Expansion build() {
        Expansion e;
        e.bound = c_.bound();
        e.closed = c_.closed();
        if (!e.closed) return e;
        Graph g;
        g.alphabet = s_.alphabet;
        std::unordered_map<std::int64_t, int> state;
        std::deque<std::int64_t> q;
        auto get = [&](std::int64_t w) {
            std::int64_t r = c_.find(w);
            auto it = state.find(r);
            if (it != state.end()) return it->second;
            int id = g.add_vertex(std::to_string(r));
            state.emplace(r, id);
            q.push_back(r);
            return id;
        };
        get(0);
        while (!q.empty()) {
            std::int64_t r = q.front();
            q.pop_front();
            int v = state[r];
            std::int64_t sh = c_.shortest(r);
            for (int a = 0; a < s_.k(); ++a) g.add_edge(v, get(ws_.right(sh, a)), a);
        }
        TransitionSemigroup ts = transition_semigroup(g);
        e.t = from_transition_semigroup(ts, s_.alphabet);
        for (int x = 0; x < e.t.n; ++x) e.proj.push_back(s_.eval(ts.rep[x]));
        return e;
    }

private:
    void saturate() {
        const int L = c_.bound();
        for (;;) {
            c_.reset_changed();
            std::map<int, std::vector<std::pair<int, std::int64_t>>> fiber;  // idempotent -> (length, short id)
            const std::int64_t n = ws_.count_upto(L);
            for (std::int64_t w = 1; w < n; ++w) {
                if (c_.find(w) != w) continue;
                std::int64_t sh = c_.shortest(w);
                int val = s_.eval(ws_.word(sh));
                if (idem_[val]) fiber[val].push_back({ws_.len(sh), sh});
            }
            for (auto& [e, f] : fiber) {
                std::sort(f.begin(), f.end());
                for (size_t i = 0; i < b_.ids.size(); ++i) instantiate(i, f, L);
            }
            if (!c_.changed()) break;
        }
    }

    void instantiate(size_t idx, const std::vector<std::pair<int, std::int64_t>>& f, int L) {
        const auto& cu = cnt_u_[idx];
        const auto& cv = cnt_v_[idx];
        const int m = b_.vars;
        std::vector<int> rest_u(m + 1, 0), rest_v(m + 1, 0);
        for (int i = m - 1; i >= 0; --i) {
            rest_u[i] = rest_u[i + 1] + cu[i];
            rest_v[i] = rest_v[i + 1] + cv[i];
        }
        std::vector<std::int64_t> val(m, -1);
        auto side = [&](const Word& w) {
            std::int64_t id = 0;
            for (int x : w) {
                id = ws_.concat(id, val[x]);
                if (id < 0) return id;
            }
            return id;
        };
        std::function<void(int, int, int)> go = [&](int i, int lu, int lv) {
            if (i == m) {
                std::int64_t a = side(b_.ids[idx].first), b = side(b_.ids[idx].second);
                if (a >= 0 && b >= 0) c_.unite(a, b);
                return;
            }
            for (const auto& [len, sh] : f) {
                int nu = lu + cu[i] * len, nv = lv + cv[i] * len;
                if (nu + rest_u[i + 1] > L || nv + rest_v[i + 1] > L) break;
                val[i] = sh;
                go(i + 1, nu, nv);
            }
        };
        go(0, 0, 0);
    }

    const Semigroup& s_;
    const IdentityBasis& b_;
    WordSpace ws_;
    BoundedCongruence c_;
    std::vector<char> idem_;
    std::vector<std::vector<int>> cnt_u_, cnt_v_;
};

}  // namespace

Expansion malcev(const Semigroup& s, const IdentityBasis& b, int L) {
    if (L < 1) fail("bound must be positive");
    MalcevEngine eng(s, b, L + 2);
    eng.advance(L);
    Expansion e = eng.build();
    eng.advance(L + 2);
    Expansion f = eng.build();
    e.name = b.name;
    e.stable = e.closed && f.closed && a_isomorphic(e.t, f.t);
    return e;
}

Expansion malcev_auto(const Semigroup& s, const IdentityBasis& b, int lmin, int lmax) {
    if (lmax <= 0) lmax = default_max_bound(s.k());
    lmin = std::max(lmin, 1);
    if (lmin + 2 > lmax) fail("bound range too small");
    MalcevEngine eng(s, b, lmax);
    std::map<int, Expansion> got;
    Expansion last;
    last.closed = false;
    for (int L = lmin; L <= lmax; ++L) {
        eng.advance(L);
        if (!eng.closed()) continue;
        Expansion e = eng.build();
        e.name = b.name;
        auto prev = got.find(L - 2);
        if (prev != got.end() && a_isomorphic(prev->second.t, e.t)) {
            prev->second.stable = true;
            return prev->second;
        }
        e.stable = false;
        last = e;
        got.emplace(L, std::move(e));
    }
    if (got.empty())
        throw Error(Error::NotClosed, b.name + " expansion did not close by bound " + std::to_string(lmax));
    last.name = b.name;
    last.stable = false;
    return last;
}

static Expansion named(Expansion e, const std::string& n) {
    e.name = n;
    return e;
}

Expansion rb(const Semigroup& s, int lmax) { return named(malcev_auto(s, basis_rb(), 1, lmax), "rb"); }
Expansion lz(const Semigroup& s, int lmax) { return named(malcev_auto(s, basis_lz(), 1, lmax), "lz"); }
Expansion rz(const Semigroup& s, int lmax) { return named(malcev_auto(s, basis_rz(), 1, lmax), "rz"); }
Expansion zp(const Semigroup& s, int p, int lmax) {
    return named(malcev_auto(s, basis_zp(p), 1, lmax), "zp:" + std::to_string(p));
}

KernelCheck verify_malcev_kernel(const Semigroup& t, const Semigroup& s, const std::vector<int>& proj,
                                 const IdentityBasis& b) {
    KernelCheck r;
    if (static_cast<int>(proj.size()) != t.n) fail("projection has the wrong length");
    for (int e : idempotents(s)) {
        std::vector<int> f;
        for (int x = 0; x < t.n; ++x)
            if (proj[x] == e) f.push_back(x);
        if (f.empty()) continue;
        std::vector<int> val(b.vars);
        auto ev = [&](const Word& w) {
            int x = val[w[0]];
            for (size_t i = 1; i < w.size(); ++i) x = t.mul(x, val[w[i]]);
            return x;
        };
        std::vector<size_t> idx(b.vars, 0);
        for (;;) {
            for (int i = 0; i < b.vars; ++i) val[i] = f[idx[i]];
            for (const auto& [u, v] : b.ids)
                if (ev(u) != ev(v)) {
                    r.ok = false;
                    std::string w = "fiber over " + s.names[e] + ":";
                    for (int i = 0; i < b.vars; ++i) w += " x" + std::to_string(i + 1) + "=" + t.names[val[i]];
                    r.witness = w;
                    return r;
                }
            int i = 0;
            while (i < b.vars && ++idx[i] == f.size()) idx[i++] = 0;
            if (i == b.vars) break;
        }
    }
    return r;
}

std::vector<Relation> loop_presentation_rb(const Semigroup& t, int L) {
    if (L < 1) fail("bound must be positive");
    std::map<int, std::vector<Word>> by;
    Word w;
    std::function<void()> gen = [&]() {
        if (!w.empty()) by[t.eval(w)].push_back(w);
        if (static_cast<int>(w.size()) == L) return;
        for (int a = 0; a < t.k(); ++a) {
            w.push_back(a);
            gen();
            w.pop_back();
        }
    };
    gen();
    std::vector<Relation> rels;
    for (auto& [x, ws] : by) {
        if (!is_idempotent(t, x)) continue;
        std::sort(ws.begin(), ws.end(), shortlex_less);
        for (const auto& u : ws)
            for (const auto& v : ws) {
                Relation r;
                r.lhs = u;
                r.lhs.insert(r.lhs.end(), v.begin(), v.end());
                r.rhs = u;
                rels.push_back(std::move(r));
            }
    }
    return rels;
}

}  // namespace gst
