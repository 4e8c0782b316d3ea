#include <doctest.h>

#include "gst/examples.hpp"
#include "gst/io.hpp"
#include "gst/mccammond.hpp"
#include "gst/random.hpp"

#include <set>

using namespace gst;

static std::vector<std::string> letters26() {
    std::vector<std::string> al;
    for (char x = 'a'; x <= 'z'; ++x) al.emplace_back(1, x);
    return al;
}

static long falling_sum(int k) {  // number of non-empty repetition-free words over k letters
    long total = 0, term = 1;
    for (int j = 1; j <= k; ++j) {
        term *= k - j + 1;
        total += term;
    }
    return total;
}

TEST_CASE("Klein cover") {
    Automaton k = klein_group_graph();
    MacCover m = mac_cover(k);
    std::set<std::string> names(m.cover.g.vname.begin(), m.cover.g.vname.end());
    CHECK(names == std::set<std::string>{"1", "a", "b", "ab", "ba", "aba", "bab"});
    CHECK(m.cover.g.ne() == 14);
    UsppResult u = has_uspp(m.cover.g, 0);
    REQUIRE(u.ok);
    CHECK(u.data.bold.size() == 8);
    int aba = m.find(parse_word(k.g.alphabet, "aba"));
    UsppResult v = has_uspp(m.cover.g, aba);
    CHECK_FALSE(v.ok);
    CHECK(path_end(m.cover.g, v.witness1) == path_end(m.cover.g, v.witness2));
    std::string why;
    CHECK(is_simple_covering(m.cover, k, m.proj_v, &why));
}

TEST_CASE("red on the worked words") {
    auto al = letters26();
    auto R = [&](const char* s) { return word_to_string(al, red(parse_word(al, s))); };
    CHECK(R("aba") == "a");
    CHECK(R("abc") == "abc");
    CHECK(R("abcdce") == "abce");
    CHECK(R("abacdabdbccebgfdf") == "abgf");
}

TEST_CASE("red yields repetition-free words with the same ends") {
    Rng rng(31);
    for (int i = 0; i < 3000; ++i) {
        Word w = random_word(rng, std::uniform_int_distribution<int>(1, 6)(rng),
                             std::uniform_int_distribution<int>(1, 20)(rng));
        Word r = red(w);
        CHECK(std::set<int>(r.begin(), r.end()).size() == r.size());
        CHECK(r.front() == w.front());
        CHECK(r.back() == w.back());
        Word wa = w;
        wa.push_back(w.back());
        CHECK(red(wa) == r);  // a right-zero step stays put
    }
}

TEST_CASE("Mac expansion of A^r is the free band-like cover of size sum k!/(k-j)!") {
    for (int k = 2; k <= 4; ++k) {
        MacCover m = mac_cover(right_zero_automaton(k));
        CHECK(m.cover.g.nv() == falling_sum(k) + 1);
        Semigroup t = semigroup_of(m.cover.g);
        CHECK(is_band(t));
    }
}

TEST_CASE("not-band example") {
    Automaton a = not_band_automaton();
    Semigroup down = semigroup_of(a.g);
    MacCover m = mac_cover(a);
    Semigroup up = semigroup_of(m.cover.g);
    Word abc = parse_word(a.g.alphabet, "abc");
    Word abcabc = abc;
    abcabc.insert(abcabc.end(), abc.begin(), abc.end());
    CHECK(is_idempotent(down, down.eval(abc)));
    CHECK_FALSE(is_idempotent(up, up.eval(abc)));
    // reading from the root: abc and (abc)^2 land on different cover vertices above r
    int end1 = delta(m.cover.g, 0, abc), end2 = delta(m.cover.g, 0, abcabc);
    CHECK(end1 != end2);
    CHECK(m.proj_v[end1] == m.proj_v[end2]);
    CHECK(m.cover.g.vname[end1] == "abc");
    CHECK(m.cover.g.vname[end2] == "ac");
}

TEST_CASE("universal factorization through simple coverings") {
    Automaton k = klein_group_graph();
    MacCover m = mac_cover(k);
    std::vector<int> id(k.g.nv());
    for (int v = 0; v < k.g.nv(); ++v) id[v] = v;
    auto psi = universal_factorization(k, k, id);
    CHECK(psi == m.proj_v);
    // the cover factors through itself bijectively
    auto self = universal_factorization(m.cover, k, m.proj_v);
    CHECK(std::set<int>(self.begin(), self.end()).size() == self.size());
}

TEST_CASE("geometric rank from algebraic rank") {
    Rng rng(41);
    for (int i = 0; i < 30; ++i) {
        Semigroup s = random_semigroup(rng, 3, 2, 6);
        MacSemigroup ms = mac_semigroup(s);
        UsppData d = uspp_data(ms.cover.cover.g, 0);
        Rank r = geometric_rank_from_algebraic(s, ms.cover);
        CHECK(validate_rank(d, r));
        auto rk = ranks(s);
        for (int e : d.bold)
            for (int f : d.bold) {
                if (e == f || ms.cover.cover.g.edges[e].dst != ms.cover.cover.g.edges[f].dst) continue;
                int ye = s.eval(path_label(d.g, loop_of(d, e))), yf = s.eval(path_label(d.g, loop_of(d, f)));
                if (rk[ye] < rk[yf]) CHECK(r[e] < r[f]);
            }
        // the projection onto S is an A-morphism
        CHECK(a_morphism(ms.t, s).has_value());
    }
}

TEST_CASE("division check on target-labelled graphs") {
    Rng rng(43);
    int applicable = 0;
    for (int i = 0; i < 60; ++i) {
        Automaton g = random_rooted_graph(rng, std::uniform_int_distribution<int>(1, 5)(rng), 4);
        Automaton a;
        for (const auto& v : g.g.vname) a.g.alphabet.push_back("x" + v);
        for (const auto& v : g.g.vname) a.g.add_vertex(v);
        std::set<std::pair<int, int>> seen;
        for (const Edge& e : g.g.edges)
            if (seen.emplace(e.src, e.dst).second) a.g.add_edge(e.src, e.dst, e.dst);
        DivisionCheck d = mc_divides_check(a);
        if (!d.applicable) continue;
        ++applicable;
        CHECK(d.injective);
        CHECK(d.equivariant);
    }
    CHECK(applicable > 30);
}

TEST_CASE("frozen witness: the expansion is not functorial") {
    Semigroup s = semigroup_from_json(read_file(GST_FIXTURES "/nonfunctorial_source.json"));
    Semigroup t = semigroup_from_json(read_file(GST_FIXTURES "/nonfunctorial_target.json"));
    REQUIRE(a_morphism(s, t).has_value());
    Semigroup ms = mac_semigroup(s).t, mt = mac_semigroup(t).t;
    CHECK_FALSE(a_morphism(ms, mt).has_value());
    // independent evidence: two words equal upstairs over s but distinct upstairs over t
    bool found = false;
    std::vector<Word> words;
    for (int len = 1; len <= 5; ++len)
        for (int code = 0; code < (1 << len); ++code) {
            Word w(len);
            for (int j = 0; j < len; ++j) w[j] = (code >> j) & 1;
            words.push_back(w);
        }
    for (size_t i = 0; i < words.size() && !found; ++i)
        for (size_t j = i + 1; j < words.size() && !found; ++j)
            found = ms.eval(words[i]) == ms.eval(words[j]) && mt.eval(words[i]) != mt.eval(words[j]);
    CHECK(found);
    std::vector<Semigroup> pool{s, t};
    auto w = find_nonfunctorial_witness(pool);
    REQUIRE(w.has_value());
    CHECK(w->s == 0);
    CHECK(w->t == 1);
}

TEST_CASE("frozen witness: Cayley graph of the expansion differs from the cover") {
    Semigroup s = semigroup_from_json(read_file(GST_FIXTURES "/cayley_mac_witness.json"));
    MacSemigroup m = mac_semigroup(s);
    Automaton upstairs = cayley_right(m.t);
    CHECK_FALSE(isomorphic_pointed(upstairs, m.cover.cover, false));
    MESSAGE("Cay(S^Mac) has " << upstairs.g.nv() << " vertices, the cover has " << m.cover.cover.g.nv());
    CHECK(find_cayley_mac_witness({s}) == std::optional<int>(0));
}
