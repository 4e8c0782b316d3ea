#include <doctest.h>

#include "gst/automaton.hpp"
#include "gst/examples.hpp"
#include "gst/random.hpp"
#include "gst/semigroup.hpp"
#include "gst/uspp.hpp"
#include "oracles.hpp"

#include <set>

using namespace gst;

static PT simulate(const Graph& g, const Word& w) {
    PT f(g.nv());
    for (int v = 0; v < g.nv(); ++v) {
        int x = v;
        for (int a : w) {
            int nx = -1;
            if (x >= 0)
                for (int e : g.out[x])
                    if (g.edges[e].label == a) nx = g.edges[e].dst;
            x = nx;
        }
        f[v] = x;
    }
    return f;
}

TEST_CASE("transition semigroup matches direct simulation") {
    Rng rng(4);
    for (int i = 0; i < 60; ++i) {
        Automaton a = random_rooted_automaton(rng, std::uniform_int_distribution<int>(1, 4)(rng), 2, 4);
        TransitionSemigroup ts = transition_semigroup(a.g);
        std::set<PT> seen(ts.elems.begin(), ts.elems.end());
        CHECK(seen.size() == ts.elems.size());
        for (int x = 0; x < ts.size(); ++x) {
            CHECK(simulate(a.g, ts.rep[x]) == ts.elems[x]);
            for (int l = 0; l < 2; ++l) CHECK(ts.elems[ts.act[x][l]] == compose(ts.elems[x], ts.elems[ts.gen[l]]));
        }
        // every word of length <= 6 lands in the semigroup
        for (int len = 1; len <= 6; ++len)
            for (int code = 0; code < (1 << len); ++code) {
                Word w(len);
                for (int j = 0; j < len; ++j) w[j] = (code >> j) & 1;
                CHECK(ts.find(simulate(a.g, w)) >= 0);
            }
    }
}

TEST_CASE("bounded language agrees with walk enumeration") {
    Rng rng(9);
    for (int i = 0; i < 100; ++i) {
        Automaton a = random_rooted_automaton(rng, std::uniform_int_distribution<int>(1, 5)(rng), 2, 5);
        a.terminals = {std::uniform_int_distribution<int>(0, a.g.nv() - 1)(rng)};
        auto want = oracle::walk_language(a, 7);
        want.erase(Word{});
        CHECK(language_upto(a, 7) == want);
    }
}

TEST_CASE("determinism checks") {
    Automaton a = not_band_automaton();
    CHECK(is_partial_deterministic(a.g));
    CHECK_FALSE(is_deterministic(a.g));
    a.g.add_edge(0, 0, "a");
    std::string why;
    CHECK_FALSE(is_partial_deterministic(a.g, &why));
    CHECK_FALSE(why.empty());
}

TEST_CASE("Klein four-group presentation") {
    std::vector<std::string> al{"a", "b"};
    auto rels = parse_presentation(klein_presentation(), al);
    CHECK(rels.size() == 6);
    Presented p = automaton_from_presentation(al, rels, 8);
    CHECK(p.closed);
    CHECK(p.aut.g.nv() == 5);  // the empty word and the four group elements
    Semigroup s = semigroup_of(p.aut.g);
    CHECK(s.n == 4);
    CHECK(is_group(s));
    // every element squares to the identity
    int id = -1;
    REQUIRE(is_monoid(s, &id));
    for (int x = 0; x < s.n; ++x) CHECK(s.mul(x, x) == id);
}

TEST_CASE("presentation parsing errors and dead relations") {
    std::vector<std::string> al{"a"};
    CHECK_THROWS_AS(parse_presentation("aa", al), Error);
    auto rels = parse_presentation("aa = □", al);
    REQUIRE(rels.size() == 1);
    CHECK(rels[0].dead);
    Presented p = automaton_from_presentation(al, rels, 4);
    CHECK(p.closed);
    CHECK(p.aut.g.nv() == 2);  // ε and a
}

TEST_CASE("prefix rewriting reduces readable words to geodesic labels") {
    Rng rng(12);
    for (int i = 0; i < 100; ++i) {
        Automaton a = random_uspp_automaton(rng, std::uniform_int_distribution<int>(1, 6)(rng), 3, 3);
        RewritingSystem rs = derived_rewriting_system(a);
        UsppData d = uspp_data(a.g, a.root);
        DTable t = dtable(a.g);
        for (int j = 0; j < 50; ++j) {
            Word w = random_word(rng, 3, std::uniform_int_distribution<int>(0, 9)(rng));
            auto r = reduce_word(rs, w);
            int end = delta(t, a.root, w);
            if (end < 0) {
                CHECK_FALSE(r.has_value());
            } else {
                REQUIRE(r.has_value());
                CHECK(*r == path_label(a.g, d.geodesic(end)));
            }
        }
        CHECK(elementary_loop_certificate(a));
    }
}

TEST_CASE("covering of automata and pointed isomorphism") {
    // Z4 on one letter covers Z2
    auto cyc = [](int n) {
        Automaton a;
        a.g.alphabet = {"a"};
        for (int i = 0; i < n; ++i) a.g.add_vertex(std::to_string(i));
        for (int i = 0; i < n; ++i) a.g.add_edge(i, (i + 1) % n, 0);
        return a;
    };
    Automaton z4 = cyc(4), z2 = cyc(2), z3 = cyc(3);
    CoveringCheck c = is_covering_of_automata(z4, z2, {0, 1, 0, 1});
    CHECK(c.covering);
    CHECK_FALSE(is_covering_of_automata(z4, z3, {0, 1, 2, 0}).covering);

    Rng rng(2);
    Automaton a = random_rooted_automaton(rng, 6, 3, 5);
    std::vector<int> perm{0, 1, 2, 3, 4, 5};
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    Automaton b;
    b.g.alphabet = a.g.alphabet;
    for (int v = 0; v < 6; ++v) b.g.add_vertex();
    for (const auto& e : a.g.edges) b.g.add_edge(perm[e.src], perm[e.dst], e.label);
    b.root = perm[a.root];
    CHECK(isomorphic_pointed(a, b, false));
    b.g.add_edge(b.root, b.root, static_cast<int>(b.g.alphabet.size()) - 1);
    CHECK_FALSE(isomorphic_pointed(a, b, false));
}
