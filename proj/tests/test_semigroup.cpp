#include <doctest.h>

#include "gst/expansion.hpp"
#include "gst/random.hpp"
#include "gst/semigroup.hpp"

#include <set>

using namespace gst;

namespace {

// s S^1, S^1 s, S^1 s S^1 as explicit sets
std::set<int> right_ideal(const Semigroup& s, int x) {
    std::set<int> r{x};
    for (int y = 0; y < s.n; ++y) r.insert(s.mul(x, y));
    return r;
}
std::set<int> left_ideal(const Semigroup& s, int x) {
    std::set<int> r{x};
    for (int y = 0; y < s.n; ++y) r.insert(s.mul(y, x));
    return r;
}
std::set<int> ideal(const Semigroup& s, int x) {
    std::set<int> r;
    for (int y : left_ideal(s, x))
        for (int z : right_ideal(s, y)) r.insert(z);
    return r;
}
bool subset(const std::set<int>& a, const std::set<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Semigroup cyclic_group(int n, int letters) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[x][y] = (x + y) % n;
    std::vector<std::string> al;
    for (int a = 0; a < letters; ++a) al.emplace_back(1, static_cast<char>('a' + a));
    return from_table(t, std::vector<int>(letters, 1 % n), al);
}

}  // namespace

TEST_CASE("semigroups of small order up to isomorphism") {
    CHECK(all_semigroup_tables(1).size() == 1);
    CHECK(all_semigroup_tables(2).size() == 5);
    CHECK(all_semigroup_tables(3).size() == 24);
    CHECK(all_semigroup_tables(4).size() == 188);
    for (const auto& t : all_semigroup_tables(3)) CHECK(is_associative(3, t));
}

TEST_CASE("table validation") {
    CHECK_THROWS_AS(from_table({{0, 1}, {1, 1}, {0, 0}}, {0}, {"a"}), Error);
    CHECK_THROWS_AS(from_table({{1, 0}, {0, 0}}, {0}, {"a"}), Error);      // not associative
    CHECK_THROWS_AS(from_table({{0, 0}, {0, 1}}, {0}, {"a"}), Error);      // not generated
    CHECK_NOTHROW(from_table({{0, 0}, {0, 1}}, {0, 1}, {"a", "b"}));
}

TEST_CASE("Green's relations against explicit ideals") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& tab : all_semigroup_tables(n)) {
            Semigroup s = all_generated(n, tab);
            GreenData g = green(s);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    CHECK(static_cast<bool>(g.ge_r.get(x, y)) == subset(right_ideal(s, y), right_ideal(s, x)));
                    CHECK(static_cast<bool>(g.ge_l.get(x, y)) == subset(left_ideal(s, y), left_ideal(s, x)));
                    CHECK(static_cast<bool>(g.ge_j.get(x, y)) == subset(ideal(s, y), ideal(s, x)));
                    CHECK(g.H(x, y) == (g.R(x, y) && g.L(x, y)));
                }
        }
}

TEST_CASE("omega and idempotents") {
    Semigroup z = cyclic_group(6, 1);
    for (int x = 0; x < 6; ++x) CHECK(omega(z, x) == 0);
    CHECK(idempotents(z) == std::vector<int>{0});
    CHECK(is_group(z));
    Rng rng(1);
    for (int i = 0; i < 50; ++i) {
        Semigroup s = random_semigroup(rng, 3, 2, 12);
        for (int x = 0; x < s.n; ++x) {
            int w = omega(s, x);
            CHECK(is_idempotent(s, w));
            int p = x;
            bool seen = false;
            for (int j = 0; j <= s.n; ++j, p = s.mul(p, x)) seen = seen || p == w;
            CHECK(seen);
        }
    }
}

TEST_CASE("semilattice and inflated semilattice ranks") {
    for (int k = 0; k <= 6; ++k) {
        std::vector<std::vector<int>> t(k + 2, std::vector<int>(k + 2));
        for (int x = 0; x <= k; ++x)
            for (int y = 0; y <= k; ++y) t[x][y] = std::max(x, y);
        for (int x = 0; x <= k; ++x) t[x][k + 1] = t[k + 1][x] = k;
        t[k + 1][k + 1] = k + 1;
        std::vector<int> gens;
        std::vector<std::string> al;
        for (int x = 0; x <= k + 1; ++x) {
            gens.push_back(x);
            al.push_back("s" + std::to_string(x));
        }
        Semigroup s = from_table(t, gens, al);
        CHECK(ranks(s)[k + 1] == 0);
        Semigroup plain = generated_subsemigroup(s, std::vector<int>(gens.begin(), gens.end() - 1)).s;
        auto r = ranks(plain);
        for (int x = 0; x <= k; ++x) CHECK(r[x] == x);
    }
}

TEST_CASE("stabilizers by definition") {
    Rng rng(2);
    for (int i = 0; i < 40; ++i) {
        Semigroup s = random_semigroup(rng, 3, 2, 10);
        for (int x = 0; x < s.n; ++x) {
            Stabilizers st = stabilizers(s, x);
            std::vector<int> r, l, d;
            for (int t = 0; t < s.n; ++t) {
                if (s.mul(x, t) == x) r.push_back(t);
                if (s.mul(t, x) == x) l.push_back(t);
                if (s.mul(x, t) == x && s.mul(t, x) == x) d.push_back(t);
            }
            CHECK(st.right == r);
            CHECK(st.left == l);
            CHECK(st.twosided == d);
        }
    }
}

TEST_CASE("Schutzenberger automaton accepts exactly the right stabilizer") {
    Rng rng(3);
    for (int i = 0; i < 30; ++i) {
        Semigroup s = random_semigroup(rng, 3, 2, 8);
        for (int x = 0; x < s.n; ++x) {
            Automaton a = schutzenberger(s, x);
            auto stab = stabilizers(s, x).right;
            std::set<int> want(stab.begin(), stab.end()), got;
            for (const Word& w : language_upto(a, 8)) got.insert(s.eval(w));
            CHECK(got == want);
        }
    }
}

TEST_CASE("str is contained in Cay, with equality on rkr") {
    Rng rng(4);
    for (int i = 0; i < 20; ++i) {
        Semigroup s = random_semigroup(rng, 3, 2, 6);
        for (int j = 0; j < 10; ++j) {
            Word w = random_word(rng, 2, std::uniform_int_distribution<int>(1, 6)(rng));
            SubAutomaton a = str_automaton(s, w), c = cay_automaton(s, w);
            std::set<int> av(a.vorig.begin(), a.vorig.end()), cv(c.vorig.begin(), c.vorig.end());
            CHECK(subset(av, cv));
        }
        Semigroup t = rkr(s).t;
        CHECK_FALSE(str_cay_counterexample(t, 6).has_value());
        for (int j = 0; j < 10; ++j) CHECK(str_equals_cay(t, random_word(rng, 2, 6)));
    }
    // semilattice {a, b, 0}: Cay(ab) contains the vertex b which the path of ab never reaches
    Semigroup sl = from_table({{0, 2, 2}, {2, 1, 2}, {2, 2, 2}}, {0, 1}, {"a", "b"});
    auto w = str_cay_counterexample(sl, 4);
    REQUIRE(w.has_value());
    CHECK(w->size() == 2);
    CHECK_FALSE(str_equals_cay(sl, *w));
    CHECK(str_equals_cay(cyclic_group(2, 1), Word{0}));
}

TEST_CASE("A-morphisms, isomorphisms and duals") {
    Semigroup z4 = cyclic_group(4, 1), z2 = cyclic_group(2, 1);
    CHECK(a_morphism(z4, z2).has_value());
    CHECK_FALSE(a_morphism(z2, z4).has_value());
    CHECK_FALSE(a_isomorphic(z4, z2));
    Rng rng(5);
    for (int i = 0; i < 30; ++i) {
        Semigroup s = random_semigroup(rng, 3, 2, 8);
        Semigroup d = dual(dual(s));
        CHECK(a_isomorphic(s, d));
        auto iso = isomorphism(s, d);
        REQUIRE(iso.has_value());
        for (int x = 0; x < s.n; ++x)
            for (int y = 0; y < s.n; ++y) CHECK((*iso)[s.mul(x, y)] == d.mul((*iso)[x], (*iso)[y]));
    }
}

TEST_CASE("generated products and subsemigroups") {
    Rng rng(6);
    for (int i = 0; i < 30; ++i) {
        Semigroup a = random_semigroup(rng, 3, 2, 6), b = random_semigroup(rng, 3, 2, 6);
        Product p = generated_product(a, b);
        std::set<int> img(p.left.begin(), p.left.end());
        CHECK(static_cast<int>(img.size()) == a.n);
        for (int x = 0; x < p.s.n; ++x)
            for (int y = 0; y < p.s.n; ++y) {
                CHECK(p.left[p.s.mul(x, y)] == a.mul(p.left[x], p.left[y]));
                CHECK(p.right[p.s.mul(x, y)] == b.mul(p.right[x], p.right[y]));
            }
        Subsemigroup sub = generated_subsemigroup(a, {a.gen[0]});
        for (int x = 0; x < sub.s.n; ++x)
            for (int y = 0; y < sub.s.n; ++y) CHECK(sub.incl[sub.s.mul(x, y)] == a.mul(sub.incl[x], sub.incl[y]));
    }
}

TEST_CASE("Hamiltonian word search on small groups") {
    Semigroup z5 = cyclic_group(5, 2);
    auto w = hamiltonian_word_search(z5);
    REQUIRE(w.has_value());
    CHECK(w->size() == 4);
    std::set<int> seen;
    Word prefix;
    for (int a : *w) {
        prefix.push_back(a);
        seen.insert(z5.eval(prefix));
    }
    CHECK(seen.size() == 4);
    CHECK_FALSE(seen.count(0));
    CHECK_THROWS_AS(hamiltonian_word_search(cyclic_group(2, 1)), Error);
}
