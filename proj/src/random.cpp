#include "gst/random.hpp"

#include "gst/uspp.hpp"

#include <algorithm>

namespace gst {

static int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

static std::vector<std::string> letters(int k) {
    std::vector<std::string> a;
    for (int i = 0; i < k; ++i) a.emplace_back(1, static_cast<char>('a' + i));
    return a;
}

Automaton random_rooted_graph(Rng& rng, int n, int extra) {
    Automaton a;
    for (int v = 0; v < n; ++v) a.g.add_vertex(std::to_string(v));
    for (int v = 1; v < n; ++v) a.g.add_edge(uniform(rng, 0, v - 1), v);
    for (int i = 0; i < extra; ++i) a.g.add_edge(uniform(rng, 0, n - 1), uniform(rng, 0, n - 1));
    // shuffle edge order so the BFS tree is not always the generating tree
    std::vector<Edge> es = a.g.edges;
    std::shuffle(es.begin(), es.end(), rng);
    Automaton b;
    b.g.vname = a.g.vname;
    b.g.out.assign(n, {});
    b.g.in.assign(n, {});
    for (const Edge& e : es) b.g.add_edge(e.src, e.dst);
    return b;
}

Automaton random_rooted_automaton(Rng& rng, int n, int k, int extra) {
    Automaton a;
    a.g.alphabet = letters(k);
    for (int v = 0; v < n; ++v) a.g.add_vertex(std::to_string(v));
    std::vector<std::vector<char>> used(n, std::vector<char>(k, 0));
    auto free_label = [&](int v) {
        std::vector<int> f;
        for (int l = 0; l < k; ++l)
            if (!used[v][l]) f.push_back(l);
        if (f.empty()) return -1;
        return f[uniform(rng, 0, static_cast<int>(f.size()) - 1)];
    };
    for (int v = 1; v < n; ++v) {
        int p = -1, l = -1;
        for (int tries = 0; tries < 100 && l < 0; ++tries) {
            p = uniform(rng, 0, v - 1);
            l = free_label(p);
        }
        if (l < 0) fail("alphabet too small for a rooted automaton");
        used[p][l] = 1;
        a.g.add_edge(p, v, l);
    }
    for (int i = 0; i < extra; ++i) {
        int s = uniform(rng, 0, n - 1);
        int l = free_label(s);
        if (l < 0) continue;
        used[s][l] = 1;
        a.g.add_edge(s, uniform(rng, 0, n - 1), l);
    }
    return a;
}

Automaton random_uspp_automaton(Rng& rng, int n, int bold, int k) {
    Automaton a;
    a.g.alphabet = letters(k);
    for (int v = 0; v < n; ++v) a.g.add_vertex(std::to_string(v));
    std::vector<std::vector<char>> used(n, std::vector<char>(k, 0));
    std::vector<int> parent(n, -1);
    for (int v = 1; v < n; ++v) {
        int p, l = -1;
        for (int tries = 0; tries < 100 && l < 0; ++tries) {
            p = uniform(rng, 0, v - 1);
            std::vector<int> f;
            for (int x = 0; x < k; ++x)
                if (!used[p][x]) f.push_back(x);
            if (!f.empty()) l = f[uniform(rng, 0, static_cast<int>(f.size()) - 1)];
            if (l >= 0) {
                used[p][l] = 1;
                parent[v] = p;
                a.g.add_edge(p, v, l);
            }
        }
        if (l < 0) fail("alphabet too small for a random tree");
    }
    for (int i = 0; i < bold; ++i) {
        int s = uniform(rng, 0, n - 1);
        std::vector<int> anc;
        for (int x = s; x >= 0; x = parent[x]) anc.push_back(x);
        int t = anc[uniform(rng, 0, static_cast<int>(anc.size()) - 1)];
        std::vector<int> f;
        for (int x = 0; x < k; ++x)
            if (!used[s][x]) f.push_back(x);
        if (f.empty()) continue;
        int l = f[uniform(rng, 0, static_cast<int>(f.size()) - 1)];
        used[s][l] = 1;
        a.g.add_edge(s, t, l);
    }
    a.root = 0;
    return a;
}

Automaton random_trim_uspp_acceptor(Rng& rng, int max_states, int max_bold, int k) {
    int n = uniform(rng, std::min(2, max_states), max_states);
    Automaton a = random_uspp_automaton(rng, n, uniform(rng, 0, max_bold), k);
    int q = uniform(rng, 0, n - 1);
    auto keep = reaching(a.g, q);
    Sub s = induced(a.g, keep);
    Automaton r;
    r.g = std::move(s.g);
    r.root = s.vnew[a.root];
    r.terminals = {s.vnew[q]};
    return r;
}

Semigroup random_semigroup(Rng& rng, int points, int k, int max_size) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Graph g;
        g.alphabet = letters(k);
        for (int v = 0; v < points; ++v) g.add_vertex(std::to_string(v));
        for (int l = 0; l < k; ++l)
            for (int v = 0; v < points; ++v) {
                int t = uniform(rng, -1, points - 1);
                if (t >= 0) g.add_edge(v, t, l);
            }
        TransitionSemigroup ts;
        try {
            ts = transition_semigroup(g, false, static_cast<std::size_t>(max_size));
        } catch (const Error&) {
            continue;
        }
        if (ts.size() <= max_size) return from_transition_semigroup(ts, g.alphabet);
    }
    fail("could not generate a small random semigroup");
}

Word random_word(Rng& rng, int k, int len) {
    Word w(len);
    for (auto& x : w) x = uniform(rng, 0, k - 1);
    return w;
}

}  // namespace gst
