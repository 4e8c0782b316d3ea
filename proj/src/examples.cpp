#include "gst/examples.hpp"

namespace gst {

Automaton make_automaton(const std::vector<std::string>& vertices, const std::vector<Edge3>& edges,
                         const std::string& root, const std::vector<std::string>& terminals) {
    Automaton a;
    for (const auto& v : vertices) a.g.add_vertex(v);
    for (const auto& e : edges) {
        int s = a.g.find_vertex(e.from), d = a.g.find_vertex(e.to);
        if (s < 0 || d < 0) fail("example edge refers to an unknown vertex");
        if (e.label)
            a.g.add_edge(s, d, std::string(e.label));
        else
            a.g.add_edge(s, d);
    }
    a.root = a.g.find_vertex(root);
    for (const auto& t : terminals) a.terminals.push_back(a.g.find_vertex(t));
    return a;
}

std::vector<KleeneExample> kleene_examples() {
    std::vector<KleeneExample> x;
    x.push_back({"example1", make_automaton({"I", "q"}, {{"I", "q", "Δ"}, {"q", "q", "α"}}, "I", {"q"}), {}, "Δα*"});
    x.push_back({"example2",
                 make_automaton({"I", "p", "q"}, {{"I", "p", "Δ"}, {"p", "q", "α₁"}, {"q", "p", "α₂"}}, "I", {"q"}), {},
                 "Δ(α₁α₂)*α₁"});
    x.push_back({"example3",
                 make_automaton({"I", "q", "s", "t"},
                                {{"I", "q", "Δ"}, {"q", "s", "a"}, {"s", "t", "b"}, {"t", "s", "d"}, {"t", "q", "c"}}, "I",
                                {"q"}),
                 {}, "Δ(a(bd)*bc)*"});
    x.push_back({"example4",
                 make_automaton({"I", "p", "s", "q"},
                                {{"I", "p", "Δ"}, {"p", "s", "a"}, {"s", "q", "b"}, {"q", "s", "d"}, {"q", "p", "c"}}, "I",
                                {"q"}),
                 {}, "Δ(a(bd)*bc)*a(bd)*b"});
    x.push_back({"example5", make_automaton({"I", "q"}, {{"I", "q", "Δ"}, {"q", "q", "α"}, {"q", "q", "β"}}, "I", {"q"}),
                 {-1, 0, 1}, "Δα*(βα*)*"});
    x.push_back({"example6",
                 make_automaton({"I", "q", "s"},
                                {{"I", "q", "Δ"}, {"q", "s", "α₁"}, {"s", "s", "γ"}, {"s", "q", "α₂"}, {"q", "q", "β"}}, "I",
                                {"q"}),
                 {-1, -1, 0, 0, 1}, "Δ(α₁γ*α₂)*[β(α₁γ*α₂)*]*"});
    x.push_back({"example7",
                 make_automaton({"I", "p", "s", "q"},
                                {{"I", "p", "Δ"},
                                 {"p", "s", "α₁"},
                                 {"s", "s", "γ"},
                                 {"s", "q", "α₂"},
                                 {"q", "p", "α₃"},
                                 {"p", "p", "β"}},
                                "I", {"q"}),
                 {-1, -1, 0, -1, 1, 0}, "Δβ*[(α₁γ*α₂α₃)β*]*α₁γ*α₂"});
    return x;
}

Automaton klein_group_graph() {
    return make_automaton({"1", "a", "b", "ab"},
                          {{"1", "a", "a"},
                           {"1", "b", "b"},
                           {"a", "1", "a"},
                           {"a", "ab", "b"},
                           {"b", "ab", "a"},
                           {"b", "1", "b"},
                           {"ab", "b", "a"},
                           {"ab", "a", "b"}},
                          "1");
}

Automaton not_band_automaton() {
    return make_automaton(
        {"1", "p", "q", "r"},
        {{"1", "p", "a"}, {"p", "q", "b"}, {"p", "r", "c"}, {"q", "p", "b"}, {"q", "r", "c"}, {"r", "q", "a"}}, "1");
}

Automaton right_zero_automaton(int k) {
    Automaton a;
    a.g.add_vertex("I");
    for (int i = 0; i < k; ++i) {
        std::string l(1, static_cast<char>('a' + i));
        a.g.intern(l);
        a.g.add_vertex(l);
    }
    for (int v = 0; v <= k; ++v)
        for (int i = 0; i < k; ++i) a.g.add_edge(v, i + 1, i);
    a.root = 0;
    return a;
}

Automaton oriented_k33() {
    return make_automaton({"p1", "p2", "p3", "q1", "q2", "q3"},
                          {{"q1", "p1", nullptr},
                           {"p1", "q2", nullptr},
                           {"q3", "p1", nullptr},
                           {"q1", "p2", nullptr},
                           {"p2", "q2", nullptr},
                           {"p2", "q3", nullptr},
                           {"p3", "q1", nullptr},
                           {"q2", "p3", nullptr},
                           {"q3", "p3", nullptr}},
                          "p1");
}

Automaton two_root_graph(bool at_w) {
    return make_automaton({"v", "w"}, {{"v", "w", nullptr}, {"w", "v", nullptr}, {"w", "v", nullptr}}, at_w ? "w" : "v");
}

Automaton free_basis_graph(bool at_w) {
    return make_automaton({"v", "w"}, {{"v", "w", "e"}, {"w", "v", "f"}, {"w", "w", "g"}}, at_w ? "w" : "v");
}

Automaton bold_order_graph() {
    return make_automaton({"I", "A", "B", "C", "D", "X", "Y", "Z"},
                          {{"I", "A", nullptr},
                           {"A", "C", nullptr},
                           {"A", "B", nullptr},
                           {"B", "X", nullptr},
                           {"X", "B", "e1"},
                           {"X", "Y", nullptr},
                           {"Y", "Z", nullptr},
                           {"Z", "Y", "e3"},
                           {"Z", "Z", "e4"},
                           {"C", "D", nullptr},
                           {"D", "C", "e2"}},
                          "I");
}

Automaton cut_example_graph() {
    return make_automaton({"v", "b", "x", "y", "z", "w", "u"},
                          {{"v", "v", nullptr},
                           {"v", "b", nullptr},
                           {"b", "x", nullptr},
                           {"x", "v", nullptr},
                           {"x", "y", nullptr},
                           {"y", "z", nullptr},
                           {"y", "w", nullptr},
                           {"w", "y", nullptr},
                           {"w", "w", nullptr},
                           {"z", "u", nullptr},
                           {"u", "z", nullptr},
                           {"u", "v", nullptr}},
                          "v");
}

std::string klein_presentation() { return "aaa = a\naab = b\nbb = aa\nba = ab\naba = b\nabb = a\n"; }

}  // namespace gst
