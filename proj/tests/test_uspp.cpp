#include <doctest.h>

#include "gst/examples.hpp"
#include "gst/random.hpp"
#include "gst/uspp.hpp"
#include "oracles.hpp"

#include <set>

using namespace gst;

static bool uspp_oracle(const Graph& g, int root) {
    auto c = oracle::simple_path_counts(g, root);
    for (long x : c)
        if (x != 1) return false;
    return true;
}

TEST_CASE("USPP agrees with exhaustive simple path counting") {
    Rng rng(21);
    for (int i = 0; i < 500; ++i) {
        Automaton a = random_rooted_graph(rng, std::uniform_int_distribution<int>(1, 8)(rng),
                                          std::uniform_int_distribution<int>(0, 6)(rng));
        bool expect = uspp_oracle(a.g, a.root);
        UsppResult r = has_uspp(a.g, a.root);
        REQUIRE(r.ok == expect);
        if (r.ok) {
            // every non-tree edge is a bold arrow and there are |E| - |V| + 1 of them
            CHECK(static_cast<int>(r.data.bold.size()) == a.g.ne() - a.g.nv() + 1);
            for (int e : r.data.bold) CHECK(r.data.tree_below(a.g.edges[e].src, a.g.edges[e].dst));
        } else {
            CHECK(path_is_simple(a.g, r.witness1));
            CHECK(path_is_simple(a.g, r.witness2));
            CHECK(path_end(a.g, r.witness1) == path_end(a.g, r.witness2));
            CHECK(r.witness1.edges != r.witness2.edges);
        }
    }
}

TEST_CASE("oriented K33 and the two-root graph") {
    Automaton k = oriented_k33();
    CHECK(uspp_oracle(k.g, k.root));
    auto eq = check_uspp_equivalence(k.g, k.root);
    CHECK(eq.unique_simple_paths);
    CHECK(eq.unique_spanning_tree);
    CHECK(eq.tree_condition);
    CHECK(eq.spanning_trees == 1);

    Automaton v = two_root_graph(false), w = two_root_graph(true);
    CHECK(has_uspp(v.g, v.root).ok);
    CHECK_FALSE(has_uspp(w.g, w.root).ok);
    CHECK(check_uspp_equivalence(w.g, w.root).spanning_trees == 2);
}

TEST_CASE("sloops and loops") {
    Automaton k = oriented_k33();
    UsppData d = uspp_data(k.g, k.root);
    for (int e : d.bold) {
        Path lp = loop_of(d, e), slp = sloop(d, e);
        int tip = k.g.edges[e].dst;
        CHECK(lp.start == tip);
        CHECK(path_end(k.g, lp) == tip);
        CHECK(lp.edges.back() == e);
        auto vs = path_vertices(k.g, lp);
        CHECK(std::set<int>(vs.begin(), vs.end()).size() == vs.size() - 1);
        CHECK(slp.start == k.root);
        CHECK(slp.edges.back() == e);
        CHECK(slp.edges.size() == d.geodesic(tip).edges.size() + lp.edges.size());
    }
}

TEST_CASE("bold arrow order on the worked graph") {
    Automaton a = bold_order_graph();
    UsppData d = uspp_data(a.g, a.root);
    Rank r = default_rank(d);
    auto arrow = [&](const char* name) {
        int l = a.g.letter(name);
        for (int e = 0; e < a.g.ne(); ++e)
            if (a.g.edges[e].label == l) return e;
        return -1;
    };
    int e1 = arrow("e1"), e2 = arrow("e2"), e3 = arrow("e3"), e4 = arrow("e4");
    REQUIRE(d.bold.size() == 4);
    CHECK(bold_order(d, r, e1, e4) == BoldOrder::Less);
    CHECK(bold_order(d, r, e4, e3) == BoldOrder::Less);
    CHECK(bold_order(d, r, e1, e3) == BoldOrder::Less);
    CHECK(bold_order(d, r, e3, e1) == BoldOrder::Greater);
    for (int f : {e1, e3, e4}) {
        CHECK(bold_order(d, r, e2, f) == BoldOrder::Incomparable);
        CHECK(bold_order(d, r, f, e2) == BoldOrder::Incomparable);
    }
    CHECK(bold_order(d, r, e2, e2) == BoldOrder::Equal);
}

TEST_CASE("rank validation") {
    Automaton a = kleene_examples()[4].acc;  // two loops at q
    UsppData d = uspp_data(a.g, a.root);
    Rank r = default_rank(d);
    CHECK(validate_rank(d, r));
    Rank dup = r;
    for (int e : d.bold) dup[e] = 0;
    std::string why;
    CHECK_FALSE(validate_rank(d, dup, &why));
    CHECK(why.find("q") != std::string::npos);
    Rank gap = r;
    for (int e : d.bold) gap[e] = 2 * gap[e];
    CHECK_FALSE(validate_rank(d, gap));
}

TEST_CASE("cutting the worked graph") {
    Automaton a = cut_example_graph();
    CutGraph c = cut_graph(a.g, a.root);
    int into = 0;
    for (const auto& e : a.g.edges) into += e.dst == a.root;
    CHECK(into == 3);
    CHECK(c.g.nv() == a.g.nv() + 3);
    CHECK(c.g.ne() == a.g.ne());
    for (int e = 0; e < c.g.ne(); ++e) {
        bool moved = a.g.edges[e].dst == a.root;
        CHECK((c.new_vertex[e] >= 0) == moved);
        if (moved) CHECK(c.g.out[c.g.edges[e].dst].empty());
    }
    auto reach = reachable_from(c.g, c.root);
    for (char x : reach) CHECK(x);
}

TEST_CASE("cutting preserves USPP and drops the arrows into the cut vertex") {
    Rng rng(3);
    for (int i = 0; i < 300; ++i) {
        Automaton a = random_rooted_graph(rng, std::uniform_int_distribution<int>(1, 7)(rng),
                                          std::uniform_int_distribution<int>(0, 5)(rng));
        CutGraph c = cut_graph(a.g, a.root);
        UsppResult before = has_uspp(a.g, a.root), after = has_uspp(c.g, c.root);
        REQUIRE(before.ok == after.ok);
        if (!before.ok) continue;
        std::set<int> expect;
        for (int e : before.data.bold)
            if (a.g.edges[e].dst != a.root) expect.insert(e);
        std::set<int> got;
        for (int e : after.data.bold) got.insert(c.eorig[e]);
        CHECK(got == expect);
    }
}

TEST_CASE("closure axioms and lattice") {
    Rng rng(8);
    for (int i = 0; i < 200; ++i) {
        Automaton a = random_uspp_automaton(rng, std::uniform_int_distribution<int>(1, 8)(rng), 4, 4);
        UsppData d = uspp_data(a.g, a.root);
        for (int u = 0; u < a.g.nv(); ++u) {
            Mask top = downset(d, u);
            CHECK(is_closed(d, top, u));
            Mask bottom = empty_mask(a.g);
            bottom.v[u] = 1;
            CHECK(closure(d, bottom, u) == bottom);
            for (int e : d.bold) {
                if (a.g.edges[e].dst != u) continue;
                Mask m = closure(d, path_mask(a.g, loop_of(d, e)), u);
                CHECK(is_closed(d, m, u));
                CHECK(closure(d, m, u) == m);
                for (int v = 0; v < a.g.nv(); ++v) {
                    if (m.v[v]) CHECK(top.v[v]);
                }
                for (int x = 0; x < a.g.ne(); ++x) {
                    if (m.e[x]) CHECK(top.e[x]);
                    // axiom: arrows into interior vertices are present
                    if (a.g.edges[x].dst != u && m.v[a.g.edges[x].dst]) CHECK(m.e[x]);
                }
            }
        }
    }
}

TEST_CASE("cut sloops are linear with one new vertex") {
    Automaton a = kleene_examples()[6].acc;
    UsppData d = uspp_data(a.g, a.root);
    for (int e : d.bold) {
        CutSloop cs = cut_sloop(d, e);
        CHECK(is_linear(cs.cut.g));
        CHECK(has_uspp(cs.cut.g, cs.cut.root).ok);
        int kept = static_cast<int>(std::count(cs.closed.v.begin(), cs.closed.v.end(), 1));
        CHECK(cs.cut.g.nv() == kept + 1);
        CHECK(cs.closed == k_component(d, e));
    }
}
