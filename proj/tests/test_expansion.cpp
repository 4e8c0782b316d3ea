#include <doctest.h>

#include "gst/examples.hpp"
#include "gst/expansion.hpp"
#include "gst/io.hpp"

#include <set>

using namespace gst;

static Semigroup trivial(int k) {
    std::vector<std::string> al;
    for (int a = 0; a < k; ++a) al.emplace_back(1, static_cast<char>('a' + a));
    return from_table({{0}}, std::vector<int>(k, 0), al);
}

static std::vector<Word> all_words(int k, int maxlen) {
    std::vector<Word> out, layer{Word{}};
    for (int len = 1; len <= maxlen; ++len) {
        std::vector<Word> next;
        for (const Word& w : layer)
            for (int a = 0; a < k; ++a) {
                Word x = w;
                x.push_back(a);
                next.push_back(x);
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

// Two words are identified iff the oracle key agrees, checked on all words up to length maxlen.
template <class Key>
static void check_word_problem(const Semigroup& t, int k, int maxlen, Key key) {
    auto ws = all_words(k, maxlen);
    for (size_t i = 0; i < ws.size(); ++i)
        for (size_t j = i + 1; j < ws.size(); ++j)
            CHECK((t.eval(ws[i]) == t.eval(ws[j])) == (key(ws[i]) == key(ws[j])));
}

TEST_CASE("rb of the trivial semigroup keeps first and last letter") {
    for (int k = 2; k <= 3; ++k) {
        Expansion e = rb(trivial(k));
        REQUIRE(e.closed);
        CHECK(e.stable);
        CHECK(e.t.n == k * k);
        check_word_problem(e.t, k, 5, [](const Word& w) { return std::make_pair(w.front(), w.back()); });
    }
}

TEST_CASE("lz and rz of the trivial semigroup") {
    Expansion l = lz(trivial(3)), r = rz(trivial(3));
    CHECK(l.t.n == 3);
    CHECK(r.t.n == 3);
    check_word_problem(l.t, 3, 4, [](const Word& w) { return w.front(); });
    check_word_problem(r.t, 3, 4, [](const Word& w) { return w.back(); });
}

TEST_CASE("zp of the trivial semigroup counts letters mod p") {
    Expansion e = zp(trivial(2), 3);
    REQUIRE(e.closed);
    CHECK(e.t.n == 9);
    check_word_problem(e.t, 2, 7, [](const Word& w) {
        int c[2] = {0, 0};
        for (int x : w) ++c[x];
        return std::make_pair(c[0] % 3, c[1] % 3);
    });
    CHECK(verify_malcev_kernel(e.t, trivial(2), e.proj, basis_zp(3)).ok);
}

TEST_CASE("rkr of the Klein group") {
    Semigroup k = semigroup_from_json(read_file(GST_FIXTURES "/klein_semigroup.json"));
    Expansion e = rkr(k);
    CHECK(e.t.n == 8);
    CHECK_FALSE(str_cay_counterexample(e.t, 8).has_value());
    CHECK(verify_malcev_kernel(e.t, k, e.proj, basis_lz()).ok);
    for (int x = 0; x < e.t.n; ++x)
        for (int y = 0; y < e.t.n; ++y) CHECK(e.proj[e.t.mul(x, y)] == k.mul(e.proj[x], e.proj[y]));
}

TEST_CASE("identity bases parse and print") {
    IdentityBasis b = parse_basis("x1 x2 x1 = x1\nx1^2 = x1\n", "mine");
    CHECK(b.vars == 2);
    REQUIRE(b.ids.size() == 2);
    CHECK(b.ids[1].first == Word{0, 0});
    IdentityBasis again = parse_basis(to_string(b));
    CHECK(again.ids == b.ids);
    CHECK_THROWS(parse_basis("x = "));
    CHECK_THROWS(parse_basis("x y"));
    CHECK(basis_zp(2).ids.size() == 3);
}

TEST_CASE("kernel check rejects a wrong basis") {
    Expansion e = rb(trivial(2));
    CHECK(verify_malcev_kernel(e.t, trivial(2), e.proj, basis_rb()).ok);
    KernelCheck bad = verify_malcev_kernel(e.t, trivial(2), e.proj, basis_rz());
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.witness.empty());
}

TEST_CASE("Mal'cev expansion without a closing bound throws") {
    Semigroup s = semigroup_from_json(read_file(GST_FIXTURES "/band2.json"));
    CHECK_THROWS_AS(malcev_auto(s, basis_zp(3), 1, 1), Error);
}

TEST_CASE("rb is rebuilt from its loop presentation") {
    Expansion e = rb(trivial(2));
    auto rel = loop_presentation_rb(e.t, 3);
    CHECK_FALSE(rel.empty());
    for (const Relation& r : rel) {
        CHECK_FALSE(r.dead);
        CHECK(e.t.eval(r.lhs) == e.t.eval(r.rhs));
    }
}

TEST_CASE("br stabilizes on small inputs and sits above rb") {
    Semigroup s = semigroup_from_json(read_file(GST_FIXTURES "/band2.json"));
    Expansion b = br(s);
    CHECK(b.stable);
    CHECK(a_morphism(rb(s).t, b.t).has_value());
    CHECK(a_morphism(b.t, s).has_value());
}
