#include "gst/kleene.hpp"

#include "gst/automaton.hpp"
#include "gst/hash.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace gst {

KExpr k_empty() {
    static const KExpr e = std::make_shared<KNode>();
    return e;
}

KExpr k_letter(int a) {
    auto n = std::make_shared<KNode>();
    n->kind = KNode::Letter;
    n->letter = a;
    return n;
}

KExpr k_concat(const std::vector<KExpr>& parts) {
    std::vector<KExpr> flat;
    for (const auto& p : parts) {
        if (p->kind == KNode::Empty) continue;
        if (p->kind == KNode::Concat)
            flat.insert(flat.end(), p->kids.begin(), p->kids.end());
        else
            flat.push_back(p);
    }
    if (flat.empty()) return k_empty();
    if (flat.size() == 1) return flat[0];
    auto n = std::make_shared<KNode>();
    n->kind = KNode::Concat;
    n->kids = std::move(flat);
    return n;
}

KExpr k_star(const KExpr& x) {
    if (x->kind == KNode::Empty) return x;
    auto n = std::make_shared<KNode>();
    n->kind = KNode::Star;
    n->kids = {x};
    return n;
}

static void print(const KExpr& e, const std::vector<std::string>& alphabet, std::string& out) {
    switch (e->kind) {
        case KNode::Empty:
            out += "ε";
            break;
        case KNode::Letter:
            out += alphabet.at(e->letter);
            break;
        case KNode::Concat:
            for (const auto& k : e->kids) print(k, alphabet, out);
            break;
        case KNode::Star: {
            const KExpr& c = e->kids[0];
            if (c->kind == KNode::Letter) {
                print(c, alphabet, out);
            } else {
                out += "(";
                print(c, alphabet, out);
                out += ")";
            }
            out += "*";
            break;
        }
    }
}

std::string to_string(const KExpr& e, const std::vector<std::string>& alphabet) {
    std::string s;
    print(e, alphabet, s);
    return s;
}

namespace {

struct Parser {
    const std::string& s;
    const std::vector<std::string>& alphabet;
    size_t i = 0;

    bool at(const char* t) const { return s.compare(i, std::char_traits<char>::length(t), t) == 0; }
    void skip_ws() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }

    KExpr seq(char close) {
        std::vector<KExpr> parts;
        for (;;) {
            skip_ws();
            if (i >= s.size()) break;
            if (s[i] == ')' || s[i] == ']') {
                if (close == 0 || s[i] != close) fail("unbalanced bracket at offset " + std::to_string(i));
                break;
            }
            KExpr a = atom();
            skip_ws();
            while (i < s.size() && s[i] == '*') {
                a = k_star(a);
                ++i;
                skip_ws();
            }
            parts.push_back(a);
        }
        if (close != 0) {
            if (i >= s.size()) fail("missing closing bracket");
            ++i;
        }
        return k_concat(parts);
    }

    KExpr atom() {
        if (s[i] == '(' || s[i] == '[') {
            char close = s[i] == '(' ? ')' : ']';
            ++i;
            return seq(close);
        }
        if (at("ε")) {
            i += std::char_traits<char>::length("ε");
            return k_empty();
        }
        int best = -1;
        size_t blen = 0;
        for (size_t a = 0; a < alphabet.size(); ++a) {
            const auto& l = alphabet[a];
            if (!l.empty() && l.size() > blen && s.compare(i, l.size(), l) == 0) {
                best = static_cast<int>(a);
                blen = l.size();
            }
        }
        if (best < 0) fail("unknown letter in expression at offset " + std::to_string(i));
        i += blen;
        return k_letter(best);
    }
};

}  // namespace

KExpr parse_kleene(const std::string& s, const std::vector<std::string>& alphabet) {
    Parser p{s, alphabet};
    KExpr e = p.seq(0);
    if (p.i != s.size()) fail("trailing input in expression at offset " + std::to_string(p.i));
    return e;
}

bool structurally_equal(const KExpr& a, const KExpr& b) {
    if (a->kind != b->kind || a->letter != b->letter || a->kids.size() != b->kids.size()) return false;
    for (size_t i = 0; i < a->kids.size(); ++i)
        if (!structurally_equal(a->kids[i], b->kids[i])) return false;
    return true;
}

std::set<Word> expr_language_upto(const KExpr& e, int n) {
    switch (e->kind) {
        case KNode::Empty:
            return {Word{}};
        case KNode::Letter:
            if (n < 1) return {};
            return {Word{e->letter}};
        case KNode::Concat: {
            std::set<Word> acc{Word{}};
            for (const auto& k : e->kids) {
                auto part = expr_language_upto(k, n);
                std::set<Word> next;
                for (const auto& u : acc)
                    for (const auto& v : part) {
                        if (static_cast<int>(u.size() + v.size()) > n) continue;
                        Word w = u;
                        w.insert(w.end(), v.begin(), v.end());
                        next.insert(std::move(w));
                    }
                acc = std::move(next);
            }
            return acc;
        }
        case KNode::Star: {
            auto base = expr_language_upto(e->kids[0], n);
            std::set<Word> acc{Word{}};
            std::vector<Word> frontier{Word{}};
            while (!frontier.empty()) {
                std::vector<Word> next;
                for (const auto& u : frontier)
                    for (const auto& v : base) {
                        if (v.empty() || static_cast<int>(u.size() + v.size()) > n) continue;
                        Word w = u;
                        w.insert(w.end(), v.begin(), v.end());
                        if (acc.insert(w).second) next.push_back(std::move(w));
                    }
                frontier = std::move(next);
            }
            return acc;
        }
    }
    return {};
}

int star_height(const KExpr& e) {
    int h = 0;
    for (const auto& k : e->kids) h = std::max(h, star_height(k));
    return e->kind == KNode::Star ? h + 1 : h;
}

bool nullable(const KExpr& e) {
    switch (e->kind) {
        case KNode::Empty:
        case KNode::Star:
            return true;
        case KNode::Letter:
            return false;
        case KNode::Concat:
            return std::all_of(e->kids.begin(), e->kids.end(), [](const KExpr& k) { return nullable(k); });
    }
    return false;
}

namespace {

struct SubAcc {
    Graph g;
    int root = 0, term = 0;
    std::vector<int> eorig;  // edge -> edge of the top-level acceptor
};

SubAcc restrict(const SubAcc& a, const std::vector<char>& vkeep, const std::vector<char>& ekeep, int root, int term) {
    Sub s = subgraph(a.g, vkeep, ekeep);
    SubAcc r;
    r.g = std::move(s.g);
    r.root = s.vnew[root];
    r.term = s.vnew[term];
    for (int e : s.eorig) r.eorig.push_back(a.eorig[e]);
    return r;
}

KExpr path_expr(const Graph& g, const Path& p) {
    std::vector<KExpr> parts;
    for (int e : p.edges) parts.push_back(k_letter(g.edges[e].label));
    return k_concat(parts);
}

KExpr build(const SubAcc& a, const Rank& rank) {
    UsppData d = uspp_data(a.g, a.root);
    if (d.bold.empty()) return path_expr(a.g, d.geodesic(a.term));
    const Frame& f = d.frame;
    if (f.size() > 1) {
        if (!is_linear(a.g, f)) fail("acceptor is not linear; it cannot be trim with the unique simple path property");
        EntryExit ee = entry_exit_points(a.g, f, a.root, a.term);
        int n = f.size() - 1;
        int en = ee.e[n], qn1 = ee.q[n - 1], pn = ee.p[n];
        auto up = reaching(a.g, qn1);
        SubAcc top = restrict(a, up, std::vector<char>(a.g.ne(), 1), a.root, qn1);
        std::vector<char> bottom(a.g.nv(), 0);
        for (int v : f.members[n]) bottom[v] = 1;
        SubAcc low = restrict(a, bottom, std::vector<char>(a.g.ne(), 1), pn, a.term);
        return k_concat({build(top, rank), k_letter(a.g.edges[en].label), build(low, rank)});
    }
    int e = -1;
    for (int x : a.g.in[a.root])
        if (d.is_bold[x] && (e < 0 || rank[a.eorig[x]] > rank[a.eorig[e]])) e = x;
    if (e < 0) fail("strongly connected acceptor without a bold arrow into its root");

    std::vector<char> keep(a.g.ne(), 1);
    keep[e] = 0;
    auto fw = reachable_from(a.g, a.root, &keep), bw = reaching(a.g, a.root, &keep);
    std::vector<char> comp(a.g.nv(), 0);
    for (int v = 0; v < a.g.nv(); ++v) comp[v] = fw[v] && bw[v];
    SubAcc B = restrict(a, comp, keep, a.root, a.root);

    CutSloop cs = cut_sloop(d, e);
    SubAcc C;
    C.g = cs.cut.g;
    C.root = cs.cut.root;
    C.term = cs.u_prime;
    for (int x : cs.cut.eorig) C.eorig.push_back(a.eorig[x]);

    Mask m = closure(d, path_mask(a.g, d.geodesic(a.term)), a.root);
    SubAcc Q = restrict(a, m.v, m.e, a.root, a.term);

    KExpr kb = build(B, rank);
    return k_concat({kb, k_star(k_concat({build(C, rank), kb})), build(Q, rank)});
}

}  // namespace

KExpr kleene(const Automaton& acc, const Rank* rank) {
    const Graph& g = acc.g;
    std::string why;
    if (!is_partial_deterministic(g, &why)) fail("acceptor is not partial deterministic: " + why);
    if (acc.terminals.size() != 1) fail("acceptor must have exactly one terminal, found " + std::to_string(acc.terminals.size()));
    int q = acc.terminals[0];
    auto fw = reachable_from(g, acc.root), bw = reaching(g, q);
    for (int v = 0; v < g.nv(); ++v)
        if (!fw[v] || !bw[v]) fail("acceptor is not trim: vertex " + g.vname[v] + " is not on a path from the root to the terminal");
    UsppResult u = has_uspp(g, acc.root);
    if (!u.ok)
        fail("acceptor lacks the unique simple path property: " + g.word_str(path_label(g, u.witness1)) + " and " +
             g.word_str(path_label(g, u.witness2)) + " reach the same vertex");
    Rank r = rank ? *rank : default_rank(u.data);
    if (!validate_rank(u.data, r, &why)) fail(why);
    SubAcc a;
    a.g = g;
    a.root = acc.root;
    a.term = q;
    a.eorig.resize(g.ne());
    for (int e = 0; e < g.ne(); ++e) a.eorig[e] = e;
    return build(a, r);
}

namespace {

// Position automaton of an expression.
struct Glushkov {
    std::vector<int> letter;
    std::vector<std::vector<int>> follow;
    std::vector<int> first;
    std::vector<char> last;
    bool null = false;

    struct Info {
        bool null;
        std::vector<int> first, last;
    };

    static void merge(std::vector<int>& a, const std::vector<int>& b) { a.insert(a.end(), b.begin(), b.end()); }

    Info walk(const KExpr& e) {
        switch (e->kind) {
            case KNode::Empty:
                return {true, {}, {}};
            case KNode::Letter: {
                int p = static_cast<int>(letter.size());
                letter.push_back(e->letter);
                follow.emplace_back();
                return {false, {p}, {p}};
            }
            case KNode::Concat: {
                Info acc{true, {}, {}};
                for (const auto& k : e->kids) {
                    Info x = walk(k);
                    for (int p : acc.last) merge(follow[p], x.first);
                    if (acc.null) merge(acc.first, x.first);
                    if (x.null)
                        merge(acc.last, x.last);
                    else
                        acc.last = x.last;
                    acc.null = acc.null && x.null;
                }
                return acc;
            }
            case KNode::Star: {
                Info x = walk(e->kids[0]);
                for (int p : x.last) merge(follow[p], x.first);
                x.null = true;
                return x;
            }
        }
        return {};
    }

    explicit Glushkov(const KExpr& e) {
        Info i = walk(e);
        null = i.null;
        first = i.first;
        last.assign(letter.size(), 0);
        for (int p : i.last) last[p] = 1;
        auto norm = [](std::vector<int>& v) {
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
        };
        norm(first);
        for (auto& f : follow) norm(f);
    }
};

}  // namespace

bool same_language_upto(const KExpr& e, const Automaton& acc, int n, Word* witness) {
    Glushkov G(e);
    DTable t = dtable(acc.g);
    const int k = t.k;
    std::vector<char> term(acc.g.nv(), 0);
    for (int v : acc.terminals) term[v] = 1;

    // state: dfa vertex, then the position set; -1 in the set marks the initial position
    using Key = std::vector<int>;
    std::unordered_map<Key, int, VecHash> seen;
    std::vector<Key> keys;
    std::vector<std::pair<int, int>> parent;  // (state, letter)
    std::vector<int> depth;
    auto accepts = [&](const Key& key) {
        bool a = key[0] >= 0 && term[key[0]];
        bool b = false;
        for (size_t i = 1; i < key.size(); ++i)
            if (key[i] < 0 ? G.null : G.last[key[i]]) b = true;
        return a != b;
    };
    auto report = [&](int s) {
        if (witness) {
            Word w;
            for (int x = s; parent[x].first >= 0; x = parent[x].first) w.push_back(parent[x].second);
            std::reverse(w.begin(), w.end());
            *witness = w;
        }
        return false;
    };
    Key start{acc.root, -1};
    seen[start] = 0;
    keys.push_back(start);
    parent.push_back({-1, -1});
    depth.push_back(0);
    if (accepts(start)) return report(0);
    for (size_t s = 0; s < keys.size(); ++s) {
        if (depth[s] >= n) continue;
        for (int a = 0; a < k; ++a) {
            const Key cur = keys[s];
            Key next{cur[0] < 0 ? -1 : t(cur[0], a)};
            for (size_t i = 1; i < cur.size(); ++i) {
                const auto& succ = cur[i] < 0 ? G.first : G.follow[cur[i]];
                for (int p : succ)
                    if (G.letter[p] == a) next.push_back(p);
            }
            std::sort(next.begin() + 1, next.end());
            next.erase(std::unique(next.begin() + 1, next.end()), next.end());
            if (next[0] < 0 && next.size() == 1) continue;
            if (seen.count(next)) continue;
            int id = static_cast<int>(keys.size());
            seen.emplace(next, id);
            keys.push_back(next);
            parent.push_back({static_cast<int>(s), a});
            depth.push_back(depth[s] + 1);
            if (accepts(keys[id])) return report(id);
        }
    }
    return true;
}

}  // namespace gst
