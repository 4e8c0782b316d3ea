// Links only the shared library and its C header.
#include <doctest.h>

#include <gst.h>

#include <fstream>
#include <sstream>
#include <string>

static std::string slurp(const std::string& name) {
    std::ifstream in(std::string(GST_FIXTURES) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

static std::string take(char* s) {
    std::string r = s ? s : "";
    gst_string_free(s);
    return r;
}

TEST_CASE("analyze the Klein cover through the C API") {
    gst_automaton* a = nullptr;
    REQUIRE(gst_automaton_from_json(slurp("klein_cover.json").c_str(), &a) == GST_OK);
    char* out = nullptr;
    REQUIRE(gst_analyze(a, "text", &out) == GST_OK);
    CHECK(take(out).rfind("uspp: yes, bold_arrows: 8", 0) == 0);
    char* j1 = nullptr;
    REQUIRE(gst_automaton_to_json(a, &j1) == GST_OK);
    std::string first = take(j1);
    gst_automaton* b = nullptr;
    REQUIRE(gst_automaton_from_json(first.c_str(), &b) == GST_OK);
    char* j2 = nullptr;
    REQUIRE(gst_automaton_to_json(b, &j2) == GST_OK);
    CHECK(take(j2) == first);
    gst_automaton_free(a);
    gst_automaton_free(b);
}

TEST_CASE("status codes and last error") {
    gst_automaton* a = nullptr;
    CHECK(gst_automaton_from_json("{", &a) == GST_ERR_PRECONDITION);
    CHECK(a == nullptr);
    CHECK(std::string(gst_last_error()).size() > 0);

    gst_semigroup* s = nullptr;
    REQUIRE(gst_semigroup_from_json(slurp("trivial2.json").c_str(), &s) == GST_OK);
    char* rep = nullptr;
    CHECK(gst_expand(s, "nosuch", 0, 0, nullptr, "json", &rep, nullptr) == GST_ERR_PRECONDITION);
    gst_string_free(rep);
    rep = nullptr;
    CHECK(gst_expand(s, "rb", 1, 0, nullptr, "json", &rep, nullptr) == GST_ERR_NOT_CLOSED);
    CHECK_FALSE(take(rep).empty());
    gst_semigroup* t = nullptr;
    rep = nullptr;
    REQUIRE(gst_expand(s, "rb", 0, 0, nullptr, "json", &rep, &t) == GST_OK);
    gst_string_free(rep);
    CHECK(gst_semigroup_size(t) == 4);
    gst_semigroup_free(t);
    gst_semigroup_free(s);
}

TEST_CASE("kleene, red, presentations and verify through the C API") {
    gst_automaton* a = nullptr;
    REQUIRE(gst_automaton_from_json(slurp("kleene_example7.json").c_str(), &a) == GST_OK);
    char* out = nullptr;
    CHECK(gst_kleene(a, 12, "text", &out) == GST_OK);
    CHECK(take(out).find("verdict: OK") != std::string::npos);
    gst_automaton_free(a);

    CHECK(gst_red("abacdabdbccebgfdf", &out) == GST_OK);
    CHECK(take(out) == "abgf");

    gst_semigroup* s = nullptr;
    REQUIRE(gst_semigroup_from_presentation("a b", "aa = a\nbb = b\nab = ba", 6, &s) == GST_OK);
    CHECK(gst_semigroup_size(s) == 3);
    gst_semigroup_free(s);

    CHECK(gst_verify_suites(&out) == GST_OK);
    CHECK(take(out).find("uspp-equivalence") != std::string::npos);
    CHECK(gst_verify("red", 1, 50, &out) == GST_OK);
    gst_string_free(out);
    CHECK(gst_verify("nosuch", 1, 0, &out) == GST_ERR_PRECONDITION);
    gst_string_free(out);

    gst_set_max_states(3);
    gst_automaton* k = nullptr;
    REQUIRE(gst_automaton_from_json(slurp("klein_group.json").c_str(), &k) == GST_OK);
    CHECK(gst_mac_cover(k, "json", &out) != GST_OK);
    gst_string_free(out);
    gst_set_max_states(5000);
    CHECK(gst_mac_cover(k, "json", &out) == GST_OK);
    gst_string_free(out);
    gst_automaton_free(k);
}
