#include <doctest.h>

#include "gst/examples.hpp"
#include "gst/kleene.hpp"
#include "gst/random.hpp"
#include "oracles.hpp"

#include <map>

using namespace gst;

// language of an expression up to length n, by set recursion
static std::set<Word> expr_words(const KExpr& e, int n) {
    switch (e->kind) {
        case KNode::Empty:
            return {Word{}};
        case KNode::Letter:
            return n >= 1 ? std::set<Word>{Word{e->letter}} : std::set<Word>{};
        case KNode::Concat: {
            std::set<Word> cur{Word{}};
            for (const auto& k : e->kids) {
                std::set<Word> part = expr_words(k, n), nxt;
                for (const auto& u : cur)
                    for (const auto& v : part)
                        if (u.size() + v.size() <= static_cast<size_t>(n)) {
                            Word w = u;
                            w.insert(w.end(), v.begin(), v.end());
                            nxt.insert(w);
                        }
                cur = std::move(nxt);
            }
            return cur;
        }
        case KNode::Star: {
            std::set<Word> base = expr_words(e->kids[0], n), all{Word{}}, frontier{Word{}};
            while (!frontier.empty()) {
                std::set<Word> nxt;
                for (const auto& u : frontier)
                    for (const auto& v : base)
                        if (!v.empty() && u.size() + v.size() <= static_cast<size_t>(n)) {
                            Word w = u;
                            w.insert(w.end(), v.begin(), v.end());
                            if (all.insert(w).second) nxt.insert(w);
                        }
                frontier = std::move(nxt);
            }
            return all;
        }
    }
    return {};
}

TEST_CASE("worked examples are reproduced exactly") {
    const std::map<std::string, std::string> printed{
        {"example1", "Δα*"},
        {"example2", "Δ(α₁α₂)*α₁"},
        {"example3", "Δ(a(bd)*bc)*"},
        {"example4", "Δ(a(bd)*bc)*a(bd)*b"},
        {"example5", "Δα*(βα*)*"},
        {"example6", "Δ(α₁γ*α₂)*(β(α₁γ*α₂)*)*"},
        {"example7", "Δβ*(α₁γ*α₂α₃β*)*α₁γ*α₂"},
    };
    for (const auto& x : kleene_examples()) {
        CAPTURE(x.name);
        KExpr e = kleene(x.acc, x.rank.empty() ? nullptr : &x.rank);
        CHECK(to_string(e, x.acc.g.alphabet) == printed.at(x.name));
        CHECK(structurally_equal(e, parse_kleene(x.expected, x.acc.g.alphabet)));
        CHECK(expr_words(e, 9) == oracle::walk_language(x.acc, 9));
        CHECK(same_language_upto(e, x.acc, 12));
    }
}

TEST_CASE("star height is the nesting depth") {
    auto ex = kleene_examples();
    auto sh = [&](int i) {
        const auto& x = ex[i];
        return star_height(kleene(x.acc, x.rank.empty() ? nullptr : &x.rank));
    };
    CHECK(sh(0) == 1);
    CHECK(sh(2) == 2);
    CHECK(sh(5) == 3);
}

TEST_CASE("parser and printer") {
    std::vector<std::string> al{"Δ", "α", "β", "a", "b"};
    for (const char* s : {"Δα*", "Δα*(βα*)*", "(ab)*a", "ε", "a", "((a)*)*"}) {
        KExpr e = parse_kleene(s, al);
        CHECK(structurally_equal(parse_kleene(to_string(e, al), al), e));
    }
    CHECK(to_string(parse_kleene("[ab]*", al), al) == "(ab)*");
    CHECK(to_string(parse_kleene("aεb", al), al) == "ab");
    CHECK(to_string(parse_kleene("ε*", al), al) == "ε");
    CHECK_THROWS_AS(parse_kleene("(ab", al), Error);
    CHECK_THROWS_AS(parse_kleene("x", al), Error);
    CHECK(nullable(parse_kleene("a*b*", al)));
    CHECK_FALSE(nullable(parse_kleene("a*b", al)));
}

TEST_CASE("random acceptors: expression language equals acceptor language") {
    Rng rng(77);
    for (int i = 0; i < 150; ++i) {
        Automaton a = random_trim_uspp_acceptor(rng, 7, 3, 4);
        KExpr e = kleene(a);
        CHECK(expr_words(e, 7) == oracle::walk_language(a, 7));
        CHECK(expr_language_upto(e, 7) == expr_words(e, 7));
        Word w;
        CHECK(same_language_upto(e, a, 10, &w));
    }
}

TEST_CASE("rank changes the tree but not the language") {
    auto x = kleene_examples()[4];  // two loops at q
    UsppData d = uspp_data(x.acc.g, x.acc.root);
    Rank r = x.rank, swapped = x.rank;
    for (int e : d.bold) swapped[e] = 1 - r[e];
    KExpr a = kleene(x.acc, &r), b = kleene(x.acc, &swapped);
    CHECK_FALSE(structurally_equal(a, b));
    CHECK(to_string(b, x.acc.g.alphabet) == "Δβ*(αβ*)*");
    CHECK(expr_words(a, 8) == expr_words(b, 8));
}

TEST_CASE("preconditions") {
    Automaton two = kleene_examples()[0].acc;
    two.terminals.push_back(two.root);
    CHECK_THROWS_AS(kleene(two), Error);

    Automaton nonuspp = make_automaton({"I", "p", "q"},
                                       {{"I", "p", "a"}, {"I", "q", "b"}, {"p", "q", "c"}}, "I", {"q"});
    try {
        kleene(nonuspp);
        FAIL("expected a precondition error");
    } catch (const Error& e) {
        CHECK(e.kind == Error::Precondition);
        CHECK(std::string(e.what()).find("simple path") != std::string::npos);
    }

    Automaton untrim = make_automaton({"I", "q", "z"}, {{"I", "q", "a"}, {"I", "z", "b"}}, "I", {"q"});
    CHECK_THROWS_AS(kleene(untrim), Error);

    Automaton nondet = make_automaton({"I", "q"}, {{"I", "q", "a"}, {"I", "I", "a"}}, "I", {"q"});
    CHECK_THROWS_AS(kleene(nondet), Error);

    auto x = kleene_examples()[4];
    Rank bad = x.rank;
    for (auto& v : bad)
        if (v >= 0) v = 0;
    CHECK_THROWS_AS(kleene(x.acc, &bad), Error);
}
