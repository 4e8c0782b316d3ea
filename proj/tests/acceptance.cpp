// One PASS/FAIL line per acceptance criterion; exit status 1 if any criterion fails.
#include "gst/examples.hpp"
#include "gst/mccammond.hpp"
#include "gst/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

using namespace gst;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
    bool ok = false;
    std::string detail;
};

Outcome suite(const std::string& name, int size = 0) {
    SuiteReport r = run_suite(name, kSeed, size);
    Outcome o{r.ok(), std::to_string(r.cases) + " cases, " + std::to_string(r.failures) + " failures"};
    if (!r.ok()) o.detail += "\n" + r.log;
    return o;
}

Outcome klein() {
    Automaton k = klein_group_graph();
    MacCover m = mac_cover(k);
    std::set<std::string> names(m.cover.g.vname.begin(), m.cover.g.vname.end());
    bool ok = names == std::set<std::string>{"1", "a", "b", "ab", "ba", "aba", "bab"};
    ok = ok && has_uspp(m.cover.g, 0).ok;
    UsppResult r = has_uspp(m.cover.g, m.find(parse_word(k.g.alphabet, "aba")));
    ok = ok && !r.ok && r.witness1.edges != r.witness2.edges &&
         path_end(m.cover.g, r.witness1) == path_end(m.cover.g, r.witness2);
    return {ok, std::to_string(m.cover.g.nv()) + " vertices, witness from aba " +
                    (r.ok ? std::string("missing") : m.cover.g.word_str(path_label(m.cover.g, r.witness1)) + " / " +
                                                         m.cover.g.word_str(path_label(m.cover.g, r.witness2)))};
}

Outcome bands() {
    bool ok = true;
    for (int k = 2; k <= 4; ++k) ok = ok && is_band(semigroup_of(mac_cover(right_zero_automaton(k)).cover.g));
    Automaton nb = not_band_automaton();
    Semigroup down = semigroup_of(nb.g), up = semigroup_of(mac_cover(nb).cover.g);
    Word abc = parse_word(nb.g.alphabet, "abc");
    ok = ok && is_idempotent(down, down.eval(abc)) && !is_idempotent(up, up.eval(abc));
    return {ok, "|A| = 2, 3, 4 and the not-band example"};
}

Outcome stabilizer_checks() {
    SuiteReport r = run_suite("stabilizers", kSeed, 0);
    std::string p = "unreported";
    auto at = r.log.find("smallest passing p = ");
    if (at != std::string::npos) p = r.log.substr(at + 21, r.log.find('\n', at) - at - 21);
    Outcome o{r.ok(), std::to_string(r.cases) + " cases, smallest passing p = " + p};
    if (!r.ok()) o.detail += "\n" + r.log;
    return o;
}

struct Criterion {
    int id;
    const char* what;
    double limit_s;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const Criterion all[] = {
        {1, "Kleene fixtures at n = 12", 5, [] { return suite("kleene-fixtures"); }},
        {2, "500 random trim USPP acceptors at n = 12", 60, [] { return suite("kleene-correctness", 500); }},
        {3, "Klein cover vertices and USPP", 1, klein},
        {4, "red values, recurrence lemmas, band property", 30, [] { return suite("red", 10000); }},
        {5, "(A^r)^Mac is a band, not-band example", 30, bands},
        {6, "USPP equivalence on 1000 graphs and K33", 60, [] { return suite("uspp-equivalence", 1000); }},
        {7, "cut and closure on 300 instances", 60, [] { return suite("cut-closure", 300); }},
        {8, "rkr str = Cay, rb(triv), Mal'cev L vs L+2", 300, [] { return suite("expansions"); }},
        {9, "right stabilizers on rz(S), improved stabilizers on rb(zp(rb(1)))", 300, stabilizer_checks},
        {10, "rank bullets, semilattices, lifting lemma", 60, [] { return suite("rank"); }},
    };
    int failed = 0;
    for (const Criterion& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool pass = o.ok && s < c.limit_s;
        if (!pass) ++failed;
        std::printf("criterion %2d: %s  %.2fs / %.0fs  %s: %s\n", c.id, pass ? "PASS" : "FAIL", s, c.limit_s, c.what,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
