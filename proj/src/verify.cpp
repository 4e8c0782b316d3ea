#include "gst/verify.hpp"

#include "gst/examples.hpp"
#include "gst/expansion.hpp"
#include "gst/io.hpp"
#include "gst/kleene.hpp"
#include "gst/mccammond.hpp"
#include "gst/random.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace gst {

namespace {

struct Ctx {
    SuiteReport r;
    void check(bool ok, const std::string& what) {
        ++r.cases;
        if (!ok) {
            ++r.failures;
            r.log += "FAIL " + what + "\n";
        }
    }
    template <class F>
    void guarded(const std::string& what, F&& f) {
        try {
            f();
        } catch (const std::exception& e) {
            ++r.cases;
            ++r.failures;
            r.log += "FAIL " + what + ": " + e.what() + "\n";
        }
    }
};

void suite_uspp(Ctx& c, Rng& rng, int size) {
    int n = size > 0 ? size : 1000;
    for (int i = 0; i < n; ++i) {
        Automaton a = random_rooted_graph(rng, std::uniform_int_distribution<int>(1, 8)(rng),
                                          std::uniform_int_distribution<int>(0, 6)(rng));
        c.guarded("random graph " + std::to_string(i), [&] {
            UsppEquivalence q = check_uspp_equivalence(a.g, a.root);
            c.check(q.unique_simple_paths == has_uspp(a.g, a.root).ok,
                    "has_uspp disagrees on\n" + automaton_to_json(a));
        });
    }
    for (int i = 0; i < n / 2; ++i) {
        Automaton a = random_rooted_automaton(rng, std::uniform_int_distribution<int>(1, 8)(rng), 3,
                                              std::uniform_int_distribution<int>(0, 6)(rng));
        c.guarded("random automaton " + std::to_string(i), [&] {
            c.check(elementary_loop_certificate(a) == has_uspp(a.g, a.root).ok,
                    "elementary loop certificate disagrees on\n" + automaton_to_json(a));
        });
    }
    Automaton k33 = oriented_k33();
    c.check(check_uspp_equivalence(k33.g, k33.root).unique_simple_paths, "oriented K33 from p1");
    Automaton w = two_root_graph(true), v = two_root_graph(false);
    c.check(!check_uspp_equivalence(w.g, w.root).unique_spanning_tree, "two-root graph from w");
    c.check(check_uspp_equivalence(v.g, v.root).unique_spanning_tree, "two-root graph from v");
}

void suite_kleene_fixtures(Ctx& c) {
    for (const auto& x : kleene_examples()) {
        c.guarded(x.name, [&] {
            KExpr e = kleene(x.acc, x.rank.empty() ? nullptr : &x.rank);
            std::string got = to_string(e, x.acc.g.alphabet);
            std::string want = to_string(parse_kleene(x.expected, x.acc.g.alphabet), x.acc.g.alphabet);
            c.check(got == want, x.name + ": got " + got + ", expected " + x.expected);
            Word w;
            c.check(same_language_upto(e, x.acc, 12, &w), x.name + ": language differs at " + x.acc.g.word_str(w));
        });
    }
}

void suite_kleene(Ctx& c, Rng& rng, int size) {
    suite_kleene_fixtures(c);
    int n = size > 0 ? size : 500;
    for (int i = 0; i < n; ++i) {
        Automaton a = random_trim_uspp_acceptor(rng, 8, 4, 6);
        c.guarded("random acceptor " + std::to_string(i), [&] {
            KExpr e = kleene(a);
            Word w;
            c.check(same_language_upto(e, a, 12, &w),
                    "expression " + to_string(e, a.g.alphabet) + " differs at " + a.g.word_str(w) + " on\n" +
                        automaton_to_json(a));
            c.check(structurally_equal(e, kleene(a)), "construction is not deterministic");
            // reverse the rank at every vertex: the language must not change
            UsppData d = uspp_data(a.g, a.root);
            Rank r = default_rank(d);
            std::map<int, int> count;
            for (int x : d.bold) ++count[d.g.edges[x].dst];
            for (int x : d.bold) r[x] = count[d.g.edges[x].dst] - 1 - r[x];
            KExpr f = kleene(a, &r);
            c.check(same_language_upto(f, a, 12, &w), "reversed rank changes the language on\n" + automaton_to_json(a));
        });
    }
}

void suite_red(Ctx& c, Rng& rng, int size) {
    std::vector<std::string> al;
    for (char x = 'a'; x <= 'z'; ++x) al.emplace_back(1, x);
    auto R = [&](const std::string& s) { return word_to_string(al, red(parse_word(al, s))); };
    c.check(R("aba") == "a", "red(aba)");
    c.check(R("abc") == "abc", "red(abc)");
    c.check(R("abcdce") == "abce", "red(abcdce)");
    c.check(R("abacdabdbccebgfdf") == "abgf", "red(abacdabdbccebgfdf)");
    int n = size > 0 ? size : 10000;
    for (int i = 0; i < n; ++i) {
        int k = std::uniform_int_distribution<int>(1, 6)(rng);
        Word w = random_word(rng, k, std::uniform_int_distribution<int>(1, 20)(rng));
        int a = w[0];
        Word v(w.begin() + 1, w.end());
        auto last = std::find(v.rbegin(), v.rend(), a);
        if (last != v.rend()) {
            Word tail(last.base(), v.end());
            tail.insert(tail.begin(), a);
            c.check(red(w) == red(tail), "recurrence lemma on " + word_to_string(al, w));
        } else {
            Word expect = red(v);
            expect.insert(expect.begin(), a);
            c.check(red(w) == expect, "no-recurrence lemma on " + word_to_string(al, w));
        }
        c.check(red(red(w)) == red(w), "idempotence on " + word_to_string(al, w));
    }
    // band property: red(wu) = red(wuu) for all w, u over three letters with |w|, |u| <= 5
    std::vector<Word> words;
    for (int len = 1; len <= 5; ++len) {
        Word x(len, 0);
        for (;;) {
            words.push_back(x);
            int j = len - 1;
            while (j >= 0 && x[j] == 2) x[j--] = 0;
            if (j < 0) break;
            ++x[j];
        }
    }
    int bad = 0;
    for (const Word& w : words)
        for (const Word& u : words) {
            Word wu = w;
            wu.insert(wu.end(), u.begin(), u.end());
            Word wuu = wu;
            wuu.insert(wuu.end(), u.begin(), u.end());
            if (red(wu) != red(wuu) && bad++ < 5)
                c.r.log += "FAIL band property at w=" + word_to_string(al, w) + " u=" + word_to_string(al, u) + "\n";
        }
    ++c.r.cases;
    if (bad) ++c.r.failures;
}

void suite_mccammond(Ctx& c, Rng& rng, int size) {
    Automaton kg = klein_group_graph();
    MacCover km = mac_cover(kg);
    std::set<std::string> names(km.cover.g.vname.begin(), km.cover.g.vname.end());
    c.check(names == std::set<std::string>{"1", "a", "b", "ab", "ba", "aba", "bab"}, "Klein cover vertices");
    c.check(has_uspp(km.cover.g, 0).ok, "Klein cover has USPP from 1");
    int aba = km.find(parse_word(kg.g.alphabet, "aba"));
    UsppResult fromaba = has_uspp(km.cover.g, aba);
    c.check(!fromaba.ok && path_end(km.cover.g, fromaba.witness1) == path_end(km.cover.g, fromaba.witness2),
            "Klein cover fails USPP from aba with two paths");
    for (int k = 2; k <= 4; ++k) {
        MacCover m = mac_cover(right_zero_automaton(k));
        c.check(is_band(semigroup_of(m.cover.g)), "Mac expansion of A^r is not a band for |A| = " + std::to_string(k));
    }
    Automaton nb = not_band_automaton();
    Semigroup down = semigroup_of(nb.g);
    Semigroup up = semigroup_of(mac_cover(nb).cover.g);
    Word abc = parse_word(nb.g.alphabet, "abc");
    c.check(is_idempotent(down, down.eval(abc)), "abc idempotent downstairs");
    c.check(!is_idempotent(up, up.eval(abc)), "abc not idempotent upstairs");
    int n = size > 0 ? size : 100;
    for (int i = 0; i < n; ++i) {
        // label every edge by its target so the division check applies
        Automaton g = random_rooted_graph(rng, std::uniform_int_distribution<int>(1, 5)(rng),
                                          std::uniform_int_distribution<int>(0, 5)(rng));
        Automaton a;
        for (const auto& v : g.g.vname) a.g.alphabet.push_back("x" + v);
        for (const auto& v : g.g.vname) a.g.add_vertex(v);
        std::set<std::pair<int, int>> seen;
        for (const Edge& e : g.g.edges)
            if (seen.emplace(e.src, e.dst).second) a.g.add_edge(e.src, e.dst, e.dst);
        c.guarded("cover instance " + std::to_string(i), [&] {
            MacCover m = mac_cover(a);
            c.check(has_uspp(m.cover.g, 0).ok, "cover lacks USPP on\n" + automaton_to_json(a));
            c.check(is_simple_covering(m.cover, a, m.proj_v), "projection is not a simple covering");
            DivisionCheck d = mc_divides_check(a);
            if (d.applicable) c.check(d.injective && d.equivariant, "division check: " + d.witness);
        });
    }
}

void suite_cut(Ctx& c, Rng& rng, int size) {
    int n = size > 0 ? size : 300;
    for (int i = 0; i < n; ++i) {
        Automaton a = random_uspp_automaton(rng, std::uniform_int_distribution<int>(1, 8)(rng),
                                            std::uniform_int_distribution<int>(1, 5)(rng), 4);
        c.guarded("cut instance " + std::to_string(i), [&] {
            UsppData d = uspp_data(a.g, a.root);
            for (int e : d.bold) {
                CutSloop cs = cut_sloop(d, e);
                std::string where = " for edge " + std::to_string(e) + " of\n" + automaton_to_json(a);
                int kept = static_cast<int>(std::count(cs.closed.v.begin(), cs.closed.v.end(), 1));
                c.check(is_linear(cs.cut.g), "cut sloop not linear" + where);
                c.check(has_uspp(cs.cut.g, cs.cut.root).ok, "cut sloop lacks USPP" + where);
                c.check(static_cast<int>(cs.cut.g.vname.size()) == kept + 1, "cut adds more than one vertex" + where);
                c.check(cs.closed == k_component(d, e), "closure differs from K_u" + where);
            }
        });
    }
}

GreenData internal_green(const Semigroup& t, const std::vector<int>& elems, Subsemigroup& sub) {
    sub = generated_subsemigroup(t, elems);
    return green(sub.s);
}

void suite_stabilizers(Ctx& c, Rng& rng, int size) {
    int n = size > 0 ? size : 50;
    for (int i = 0; i < n; ++i) {
        Semigroup s = random_semigroup(rng, 3, 2, 5);
        c.guarded("right-stab instance " + std::to_string(i), [&] {
            Expansion e = rz(s);
            c.check(e.closed && e.stable, "rz did not stabilize\n" + semigroup_to_json(s));
            GreenData gt = green(e.t);
            for (int t = 0; t < e.t.n; ++t) {
                auto st = stabilizers(e.t, t).right;
                if (st.empty()) continue;
                Subsemigroup sub;
                GreenData g = internal_green(e.t, st, sub);
                bool rtriv = g.r_count == sub.s.n, chain = true;
                for (int x : st)
                    for (int y : st)
                        if (!gt.ge_l.get(x, y) && !gt.ge_l.get(y, x)) chain = false;
                c.check(rtriv, "right stabilizer not R-trivial\n" + semigroup_to_json(s));
                c.check(chain, "right stabilizer not an L-chain\n" + semigroup_to_json(s));
            }
        });
    }
    for (int i = 0; i < std::max(1, n / 5); ++i) {
        Semigroup s = random_semigroup(rng, 3, 2, 3);
        c.guarded("double-stab instance " + std::to_string(i), [&] {
            Expansion e = rb(s);
            GreenData gt = green(e.t);
            for (int t = 0; t < e.t.n; ++t) {
                auto st = stabilizers(e.t, t).twosided;
                if (st.empty()) continue;
                Subsemigroup sub;
                GreenData g = internal_green(e.t, st, sub);
                bool chain = true;
                for (int x : st)
                    for (int y : st) {
                        bool xy = gt.ge_r.get(x, y) && gt.ge_l.get(x, y), yx = gt.ge_r.get(y, x) && gt.ge_l.get(y, x);
                        if (!xy && !yx) chain = false;
                    }
                c.check(g.j_count == sub.s.n, "double stabilizer not J-trivial\n" + semigroup_to_json(s));
                c.check(chain, "double stabilizer not an H-chain\n" + semigroup_to_json(s));
            }
        });
    }
    // improved stabilizers on rb(zp(rb(1))) over two letters, smallest passing p
    Semigroup triv = from_table({{0}}, {0, 0}, {"a", "b"});
    int passing = 0;
    for (int p : {2, 3, 5, 7}) {
        bool ok = true;
        try {
            Expansion t = rb(zp(rb(triv).t, p).t);
            for (int x = 0; x < t.t.n && ok; ++x) {
                auto st = stabilizers(t.t, x).right;
                for (int u : st) {
                    if (t.t.mul(u, u) != u) ok = false;
                    for (int v : st) {
                        int uv = t.t.mul(u, v), vu = t.t.mul(v, u);
                        if (t.t.mul(uv, u) != uv) ok = false;
                        if (uv != u && vu != v) ok = false;  // L-chain inside the stabilizer
                    }
                }
            }
        } catch (const Error& e) {
            c.r.log += "improved-stab p=" + std::to_string(p) + ": " + e.what() + "\n";
            ok = false;
        }
        if (ok) {
            passing = p;
            break;
        }
    }
    c.check(passing > 0, "improved-stab identities fail for every p in {2,3,5,7}");
    c.r.log += "improved-stab smallest passing p = " + std::to_string(passing) + "\n";
}

// longest chain e0 < e1 < ... under the natural order, starting from any idempotent J-equivalent to t^omega
int alternate_rank(const Semigroup& s, const GreenData& g, int t) {
    auto ids = idempotents(s);
    int w = omega(s, t);
    std::map<int, int> memo;
    std::function<int(int)> up = [&](int e) {
        auto it = memo.find(e);
        if (it != memo.end()) return it->second;
        int best = 0;
        for (int f : ids)
            if (f != e && s.mul(e, f) == e && s.mul(f, e) == e) best = std::max(best, 1 + up(f));
        return memo[e] = best;
    };
    int r = 0;
    for (int e : ids)
        if (g.J(e, w)) r = std::max(r, up(e));
    return r;
}

bool is_j_prime_map(const Semigroup& s, const GreenData& g, const std::vector<int>& phi) {
    for (int x = 0; x < s.n; ++x)
        for (int y = x + 1; y < s.n; ++y)
            if (phi[x] == phi[y] && is_regular(s, x) && is_regular(s, y) && !g.J(x, y)) return false;
    return true;
}

void suite_rank(Ctx& c, Rng& rng, int size) {
    for (int k = 0; k <= 6; ++k) {
        std::vector<std::vector<int>> t(k + 1, std::vector<int>(k + 1));
        std::vector<int> gens;
        std::vector<std::string> al;
        for (int x = 0; x <= k; ++x) {
            for (int y = 0; y <= k; ++y) t[x][y] = std::max(x, y);
            gens.push_back(x);
            al.push_back("s" + std::to_string(x));
        }
        Semigroup s = from_table(t, gens, al);
        auto r = ranks(s);
        for (int x = 0; x <= k; ++x) c.check(r[x] == x, "semilattice rank(" + std::to_string(x) + ")");
        // inflate k to {k, k'}
        for (auto& row : t) row.push_back(k);
        t.push_back(std::vector<int>(k + 2, k));
        t[k + 1][k + 1] = k + 1;
        gens.push_back(k + 1);
        al.push_back("s" + std::to_string(k) + "'");
        Semigroup inf = from_table(t, gens, al);
        c.check(ranks(inf)[k + 1] == 0, "inflated semilattice rank(n') for n = " + std::to_string(k));
    }
    int nmax = size > 0 ? std::min(size, 6) : 5;
    for (int n = 1; n <= nmax; ++n)
        for (const auto& tab : all_semigroup_tables(n)) {
            Semigroup s = all_generated(n, tab);
            GreenData g = green(s);
            auto r = ranks(s, g);
            std::string where = " on\n" + semigroup_to_json(s);
            bool ok = true;
            for (int x = 0; x < n; ++x) {
                int p = x;
                for (int j = 1; j <= n; ++j, p = s.mul(p, x)) ok &= r[p] == r[x];
                for (int y = 0; y < n; ++y) ok &= r[s.mul(x, y)] == r[s.mul(y, x)];
            }
            c.check(ok, "rank(s^k) = rank(s) or rank(st) = rank(ts)" + where);
            ok = true;
            for (int e : idempotents(s))
                for (int f : idempotents(s)) {
                    if (g.ge_j.get(e, f)) ok &= r[e] <= r[f];
                    if (g.J(e, f)) ok &= r[e] == r[f];
                    if (r[e] == r[f] && g.ge_j.get(e, f)) ok &= g.J(e, f);
                }
            c.check(ok, "rank lemma on idempotents" + where);
            ok = true;
            for (int x = 0; x < n; ++x) ok &= alternate_rank(s, g, x) == r[x];
            c.check(ok, "alternate definition" + where);
        }
    int m = size > 0 ? size : 100;
    for (int i = 0; i < m; ++i) {
        Semigroup a = random_semigroup(rng, 3, 2, 6), b = random_semigroup(rng, 3, 2, 6);
        Product pr = generated_product(a, b);
        GreenData gs = green(pr.s), ga = green(a);
        auto rs = ranks(pr.s, gs), ra = ranks(a, ga);
        std::string where = " for\n" + semigroup_to_json(a) + semigroup_to_json(b);
        for (int t = 0; t < a.n; ++t) {
            bool found = false;
            for (int x = 0; x < pr.s.n && !found; ++x)
                found = pr.left[omega(pr.s, x)] == omega(a, t) && rs[x] >= ra[t];
            c.check(found, "lifting lemma at " + a.names[t] + where);
        }
        if (is_j_prime_map(pr.s, gs, pr.left)) {
            bool ok = true;
            for (int x = 0; x < pr.s.n; ++x) ok &= rs[x] == ra[pr.left[x]];
            c.check(ok, "rank preserved by a J'-map" + where);
        }
        std::vector<int> gens;
        for (int x = 0; x < pr.s.n; ++x)
            if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) gens.push_back(x);
        if (gens.empty()) gens.push_back(0);
        Subsemigroup sub = generated_subsemigroup(pr.s, gens);
        auto rt = ranks(sub.s);
        bool ok = true;
        for (int x = 0; x < sub.s.n; ++x) ok &= rt[x] <= rs[sub.incl[x]];
        c.check(ok, "subsemigroup rank bound" + where);
    }
}

// first/last letter semigroup on k letters, built directly
Semigroup first_last(int k) {
    std::vector<std::vector<int>> t(k * k, std::vector<int>(k * k));
    for (int x = 0; x < k * k; ++x)
        for (int y = 0; y < k * k; ++y) t[x][y] = (x / k) * k + y % k;
    std::vector<int> gens;
    std::vector<std::string> al;
    for (int a = 0; a < k; ++a) {
        gens.push_back(a * k + a);
        al.emplace_back(1, static_cast<char>('a' + a));
    }
    return from_table(t, gens, al);
}

void suite_expansions(Ctx& c, int size) {
    int nmax = size > 0 ? std::min(size, 4) : 4;
    for (int n = 1; n <= nmax; ++n)
        for (const auto& tab : all_semigroup_tables(n)) {
            Semigroup s = all_generated(n, tab);
            c.guarded("rkr of order " + std::to_string(n), [&] {
                Expansion e = rkr(s);
                auto w = str_cay_counterexample(e.t, 8);
                c.check(!w, "str != Cay in rkr\n" + semigroup_to_json(s));
                c.check(verify_malcev_kernel(e.t, s, e.proj, basis_lz()).ok, "rkr kernel not left zero\n" +
                                                                                     semigroup_to_json(s));
            });
        }
    for (int k = 2; k <= 3; ++k) {
        std::vector<std::string> al;
        for (int a = 0; a < k; ++a) al.emplace_back(1, static_cast<char>('a' + a));
        Semigroup triv = from_table({{0}}, std::vector<int>(k, 0), al);
        Expansion e = rb(triv);
        c.check(e.closed && e.stable, "rb of the trivial semigroup did not stabilize");
        c.check(a_isomorphic(e.t, first_last(k)), "rb of the trivial semigroup is not A x A for |A| = " +
                                                      std::to_string(k));
        c.check(verify_malcev_kernel(e.t, triv, e.proj, basis_rb()).ok, "rb kernel");
        Expansion again = malcev(triv, basis_rb(), e.bound + 2);
        c.check(a_isomorphic(again.t, e.t), "rb result changes at L+2");
    }
    // morphisms along the expansion diagram on small inputs
    for (int n = 1; n <= std::min(nmax, 2); ++n)
        for (const auto& tab : all_semigroup_tables(n)) {
            Semigroup s = all_generated(n, tab);
            c.guarded("diagram of order " + std::to_string(n), [&] {
                Semigroup b = rb(s).t, l = lz(s).t, r = rz(s).t, x = rkr(s).t, y = kr(s).t;
                c.check(a_morphism(b, l).has_value(), "rb -> lz");
                c.check(a_morphism(b, r).has_value(), "rb -> rz");
                c.check(a_morphism(l, x).has_value(), "lz -> rkr");
                c.check(a_morphism(r, y).has_value(), "rz -> kr");
                c.check(a_morphism(x, rrh(s).t).has_value(), "rkr -> rrh");
                c.check(a_morphism(y, rh(s).t).has_value(), "kr -> rh");
                c.check(a_morphism(b, br(s).t).has_value(), "rb -> br");
            });
        }
}

void suite_path_lifting(Ctx& c, Rng& rng, int size) {
    int n = size > 0 ? size : 100;
    for (int i = 0; i < n; ++i) {
        Automaton h = random_rooted_graph(rng, std::uniform_int_distribution<int>(1, 4)(rng),
                                          std::uniform_int_distribution<int>(0, 4)(rng));
        int m = std::uniform_int_distribution<int>(1, 2)(rng);
        int nv = static_cast<int>(h.g.vname.size());
        // cyclic m-fold covering: vertex (v, j), edge e shifts j by a random amount
        Graph g;
        std::vector<int> vmap, emap;
        for (int v = 0; v < nv; ++v)
            for (int j = 0; j < m; ++j) {
                g.add_vertex();
                vmap.push_back(v);
            }
        for (size_t e = 0; e < h.g.edges.size(); ++e) {
            int shift = std::uniform_int_distribution<int>(0, m - 1)(rng);
            for (int j = 0; j < m; ++j) {
                g.add_edge(h.g.edges[e].src * m + j, h.g.edges[e].dst * m + (j + shift) % m);
                emap.push_back(static_cast<int>(e));
            }
        }
        // a random subgraph of the covering is an immersion
        std::vector<char> keep(g.edges.size());
        for (auto& x : keep) x = std::uniform_int_distribution<int>(0, 1)(rng);
        Graph sub;
        std::vector<int> semap;
        for (size_t v = 0; v < g.vname.size(); ++v) sub.add_vertex();
        for (size_t e = 0; e < g.edges.size(); ++e)
            if (keep[e]) {
                sub.add_edge(g.edges[e].src, g.edges[e].dst);
                semap.push_back(emap[e]);
            }
        auto kc = classify_morphism(g, h.g, vmap, emap).kind;
        auto ks = classify_morphism(sub, h.g, vmap, semap).kind;
        c.check(kc == MorphismKind::Covering, "cyclic cover not classified as a covering");
        c.check(ks == MorphismKind::Immersion || ks == MorphismKind::Covering, "subgraph not an immersion");
        // every path of length <= 6 in h
        std::vector<Path> paths;
        for (int v = 0; v < nv; ++v) paths.push_back(Path{v, {}});
        for (size_t i2 = 0; i2 < paths.size(); ++i2) {
            if (paths[i2].edges.size() >= 6) continue;
            for (int e : h.g.out[path_end(h.g, paths[i2])]) {
                Path q = paths[i2];
                q.edges.push_back(e);
                paths.push_back(q);
            }
            if (paths.size() > 20000) break;
        }
        bool ok = true;
        for (const Path& p : paths)
            for (int v = 0; v < static_cast<int>(g.vname.size()); ++v) {
                if (vmap[v] != p.start) continue;
                ok &= count_lifts(g, vmap, emap, v, p) == 1;
                ok &= count_lifts(sub, vmap, semap, v, p) <= 1;
            }
        c.check(ok, "path lifting counts on\n" + automaton_to_json(h));
    }
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"uspp-equivalence", "kleene-fixtures", "kleene-correctness", "mccammond",   "red",
            "cut-closure",      "stabilizers",     "rank",               "expansions", "path-lifting"};
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, int size) {
    Ctx c;
    c.r.name = name;
    Rng rng(seed);
    if (name == "uspp-equivalence")
        suite_uspp(c, rng, size);
    else if (name == "kleene-fixtures")
        suite_kleene_fixtures(c);
    else if (name == "kleene-correctness")
        suite_kleene(c, rng, size);
    else if (name == "red")
        suite_red(c, rng, size);
    else if (name == "mccammond")
        suite_mccammond(c, rng, size);
    else if (name == "cut-closure")
        suite_cut(c, rng, size);
    else if (name == "stabilizers")
        suite_stabilizers(c, rng, size);
    else if (name == "rank")
        suite_rank(c, rng, size);
    else if (name == "expansions")
        suite_expansions(c, size);
    else if (name == "path-lifting")
        suite_path_lifting(c, rng, size);
    else
        fail("unknown suite: " + name);
    c.r.log += name + ": " + std::to_string(c.r.cases) + " checks, " + std::to_string(c.r.failures) + " failures\n";
    return c.r;
}

}  // namespace gst
