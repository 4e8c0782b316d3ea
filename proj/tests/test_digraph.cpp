#include <doctest.h>

#include "gst/digraph.hpp"
#include "gst/examples.hpp"
#include "gst/random.hpp"
#include "oracles.hpp"

#include <map>

using namespace gst;

TEST_CASE("strong components agree with mutual reachability") {
    Rng rng(11);
    for (int i = 0; i < 300; ++i) {
        Automaton a = random_rooted_graph(rng, std::uniform_int_distribution<int>(1, 9)(rng),
                                          std::uniform_int_distribution<int>(0, 10)(rng));
        const Graph& g = a.g;
        Frame f = strong_components(g);
        auto r = oracle::reachability(g);
        for (int u = 0; u < g.nv(); ++u)
            for (int v = 0; v < g.nv(); ++v) {
                CHECK((f.comp[u] == f.comp[v]) == (r[u][v] && r[v][u]));
                CHECK(static_cast<bool>(f.below[f.comp[u]][f.comp[v]]) == static_cast<bool>(r[u][v]));
            }
        // numbering is topological: edges never climb
        for (const auto& e : g.edges) CHECK(f.comp[e.src] <= f.comp[e.dst]);
        for (int c = 0; c < f.size(); ++c) {
            bool loop = f.members[c].size() > 1;
            for (const auto& e : g.edges)
                if (e.src == e.dst && f.comp[e.src] == c) loop = true;
            CHECK(static_cast<bool>(f.nontrivial[c]) == loop);
        }
    }
}

TEST_CASE("linearity of rooted graphs") {
    Graph chain;
    for (int i = 0; i < 3; ++i) chain.add_vertex();
    chain.add_edge(0, 1);
    chain.add_edge(1, 2);
    CHECK(is_linear(chain));
    chain.add_edge(0, 2);  // a second transition edge between distinct components
    CHECK(is_quasilinear(chain));
    CHECK_FALSE(is_linear(chain));

    Graph fork;
    for (int i = 0; i < 3; ++i) fork.add_vertex();
    fork.add_edge(0, 1);
    fork.add_edge(0, 2);
    CHECK_FALSE(is_quasilinear(fork));
}

TEST_CASE("entry and exit points of a linear graph") {
    Automaton a = kleene_examples()[3].acc;  // Δ(a(bd)*bc)*a(bd)*b
    Frame f = strong_components(a.g);
    REQUIRE(is_linear(a.g, f));
    EntryExit ee = entry_exit_points(a.g, f, a.root, a.terminals[0]);
    CHECK(ee.p[0] == a.root);
    CHECK(ee.q.back() == a.terminals[0]);
    for (int i = 1; i < f.size(); ++i) {
        CHECK(a.g.edges[ee.e[i]].src == ee.q[i - 1]);
        CHECK(a.g.edges[ee.e[i]].dst == ee.p[i]);
    }
}

TEST_CASE("spanning tree geodesics are shortest and tree edges form a tree") {
    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        Automaton a = random_rooted_graph(rng, std::uniform_int_distribution<int>(1, 8)(rng), 6);
        SpanningTree t = spanning_tree(a.g, a.root);
        int tree_edges = 0;
        for (int e = 0; e < a.g.ne(); ++e) tree_edges += t.tree_edge[e];
        CHECK(tree_edges == a.g.nv() - 1);
        // BFS distance oracle
        std::vector<int> dist(a.g.nv(), -1);
        std::vector<int> q{a.root};
        dist[a.root] = 0;
        for (size_t h = 0; h < q.size(); ++h)
            for (int e : a.g.out[q[h]])
                if (dist[a.g.edges[e].dst] < 0) {
                    dist[a.g.edges[e].dst] = dist[q[h]] + 1;
                    q.push_back(a.g.edges[e].dst);
                }
        for (int v = 0; v < a.g.nv(); ++v) {
            Path p = t.geodesic(a.g, v);
            CHECK(path_end(a.g, p) == v);
            CHECK(static_cast<int>(p.edges.size()) == dist[v]);
            CHECK(path_is_simple(a.g, p));
        }
    }
}

TEST_CASE("simple paths and quasi-bases") {
    Automaton k = oriented_k33();
    auto counts = oracle::simple_path_counts(k.g, k.root);
    for (int v = 0; v < k.g.nv(); ++v) {
        auto ps = simple_paths(k.g, k.root, v, 1000);
        CHECK(static_cast<long>(ps.size()) == counts[v]);
    }
    CHECK_THROWS_AS(simple_paths(k.g, k.root, k.root, 0), Error);
}

TEST_CASE("truncated universal cover has one vertex per path") {
    Automaton a = free_basis_graph(false);
    PathCover c = universal_cover_truncated(a.g, a.root, 6);
    // paths of length <= d from v in v -e-> w -f-> v with loop g at w: count by dynamic programming
    long total = 0;
    std::vector<long> cur(a.g.nv(), 0);
    cur[a.root] = 1;
    for (int d = 0; d <= 6; ++d) {
        for (long x : cur) total += x;
        std::vector<long> nxt(a.g.nv(), 0);
        for (const auto& e : a.g.edges) nxt[e.dst] += cur[e.src];
        cur = nxt;
    }
    CHECK(static_cast<long>(c.g.nv()) == total);
    CHECK(c.g.ne() == c.g.nv() - 1);
    for (int e = 0; e < c.g.ne(); ++e) {
        CHECK(c.proj_v[c.g.edges[e].src] == a.g.edges[c.proj_e[e]].src);
        CHECK(c.proj_v[c.g.edges[e].dst] == a.g.edges[c.proj_e[e]].dst);
    }
}

TEST_CASE("first-return loops generate the loops at a vertex") {
    Automaton a = free_basis_graph(false);
    auto gens = first_return_generators(a.g, a.root, 6);
    // at v the first-return loops are e g^k f
    CHECK(gens.size() == 5);  // k = 0..4 within length 6
    for (const auto& p : gens) {
        CHECK(p.start == a.root);
        CHECK(path_end(a.g, p) == a.root);
        auto vs = path_vertices(a.g, p);
        CHECK(std::count(vs.begin(), vs.end(), a.root) == 2);
    }
}

TEST_CASE("morphism classification and path lifting") {
    // two-fold cover of a single loop
    Graph h;
    h.add_vertex();
    h.add_edge(0, 0);
    Graph g;
    g.add_vertex();
    g.add_vertex();
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    std::vector<int> vmap{0, 0}, emap{0, 0};
    CHECK(classify_morphism(g, h, vmap, emap).kind == MorphismKind::Covering);
    Path p{0, {0, 0, 0}};
    CHECK(count_lifts(g, vmap, emap, 0, p) == 1);

    Graph line;
    line.add_vertex();
    line.add_vertex();
    line.add_edge(0, 1);
    std::vector<int> lv{0, 0}, le{0};
    CHECK(classify_morphism(line, h, lv, le).kind == MorphismKind::Immersion);
    CHECK(count_lifts(line, lv, le, 0, Path{0, {0, 0}}) == 0);

    // two edges over one: not an immersion
    Graph two;
    two.add_vertex();
    two.add_edge(0, 0);
    two.add_edge(0, 0);
    std::vector<int> tv{0}, te{0, 0};
    CHECK(classify_morphism(two, h, tv, te).kind == MorphismKind::Morphism);
    CHECK(classify_morphism(two, h, tv, {0, 5}).kind == MorphismKind::NotMorphism);
}

TEST_CASE("dot output clusters components and marks bold arrows") {
    Automaton a = not_band_automaton();
    std::vector<char> bold(a.g.ne(), 0);
    bold[3] = 1;
    std::string d = to_dot(a.g, &bold, a.root);
    CHECK(d.find("subgraph cluster_0") != std::string::npos);
    CHECK(d.find("subgraph cluster_1") != std::string::npos);
    CHECK(d.find("black:invis:black") != std::string::npos);
    CHECK(d.find("style=dashed") != std::string::npos);
}
