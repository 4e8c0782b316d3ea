#include "gst.h"

#include "gst/io.hpp"
#include "gst/mccammond.hpp"
#include "gst/report.hpp"
#include "gst/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>

struct gst_automaton {
    gst::LoadedAutomaton in;
};

struct gst_semigroup {
    gst::Semigroup s;
};

namespace {

thread_local std::string last_error;
std::atomic<size_t> max_states{5000};

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

template <class F>
gst_status guard(F&& f) {
    try {
        last_error.clear();
        return f();
    } catch (const gst::Error& e) {
        last_error = e.what();
        return static_cast<gst_status>(e.kind);
    } catch (const std::exception& e) {
        // json parse errors and the like are input problems
        last_error = e.what();
        return GST_ERR_PRECONDITION;
    } catch (...) {
        last_error = "unknown error";
        return GST_ERR_INTERNAL;
    }
}

gst_status null_arg(const char* what) {
    last_error = std::string("null argument: ") + what;
    return GST_ERR_PRECONDITION;
}

std::string fmt(const char* f) { return f ? f : "json"; }

gst_status with_status(int st, const std::string& msg) {
    if (st != 0) last_error = msg;
    return static_cast<gst_status>(st);
}

}  // namespace

extern "C" {

const char* gst_last_error(void) { return last_error.c_str(); }
void gst_string_free(char* s) { std::free(s); }
const char* gst_version(void) { return "0.1.0"; }

void gst_set_max_states(size_t cap) { max_states = cap > 0 ? cap : 5000; }
size_t gst_max_states(void) { return max_states; }

gst_status gst_automaton_from_json(const char* json, gst_automaton** out) {
    if (!json || !out) return null_arg("json/out");
    *out = nullptr;
    return guard([&] {
        *out = new gst_automaton{gst::automaton_from_json(json)};
        return GST_OK;
    });
}

gst_status gst_automaton_to_json(const gst_automaton* a, char** out) {
    if (!a || !out) return null_arg("automaton/out");
    *out = nullptr;
    return guard([&] {
        *out = dup(gst::automaton_to_json(a->in.a, a->in.rank ? &*a->in.rank : nullptr));
        return GST_OK;
    });
}

void gst_automaton_free(gst_automaton* a) { delete a; }

gst_status gst_automaton_set_rank(gst_automaton* a, const char* rank_json) {
    if (!a || !rank_json) return null_arg("automaton/rank");
    return guard([&] {
        a->in.rank = gst::rank_from_json(rank_json, a->in.a.g);
        return GST_OK;
    });
}

gst_status gst_analyze(const gst_automaton* a, const char* format, char** out) {
    if (!a || !out) return null_arg("automaton/out");
    *out = nullptr;
    return guard([&] {
        *out = dup(gst::analyze_automaton(a->in, fmt(format)));
        return GST_OK;
    });
}

gst_status gst_analyze_json(const char* json, const char* format, char** out) {
    if (!json || !out) return null_arg("json/out");
    *out = nullptr;
    return guard([&] {
        if (gst::is_semigroup_json(json))
            *out = dup(gst::analyze_semigroup(gst::semigroup_from_json(json), fmt(format)));
        else
            *out = dup(gst::analyze_automaton(gst::automaton_from_json(json), fmt(format)));
        return GST_OK;
    });
}

gst_status gst_kleene(const gst_automaton* a, int depth, const char* format, char** out) {
    if (!a || !out) return null_arg("automaton/out");
    *out = nullptr;
    return guard([&] {
        gst::Report r = gst::kleene_report(a->in, a->in.rank ? &*a->in.rank : nullptr, depth, fmt(format));
        *out = dup(r.out);
        return with_status(r.status, "expression and acceptor languages differ");
    });
}

gst_status gst_mac_cover(const gst_automaton* a, const char* format, char** out) {
    if (!a || !out) return null_arg("automaton/out");
    *out = nullptr;
    return guard([&] {
        *out = dup(gst::cover_report(a->in.a, max_states, fmt(format)));
        return GST_OK;
    });
}

gst_status gst_semigroup_from_json(const char* json, gst_semigroup** out) {
    if (!json || !out) return null_arg("json/out");
    *out = nullptr;
    return guard([&] {
        *out = new gst_semigroup{gst::semigroup_from_json(json)};
        return GST_OK;
    });
}

gst_status gst_semigroup_from_presentation(const char* alphabet, const char* relations, int bound,
                                           gst_semigroup** out) {
    if (!alphabet || !relations || !out) return null_arg("alphabet/relations/out");
    *out = nullptr;
    return guard([&] {
        std::vector<std::string> al;
        std::string tok;
        std::istringstream is(alphabet);
        while (is >> tok) {
            std::istringstream parts(tok);
            std::string p;
            while (std::getline(parts, p, ','))
                if (!p.empty()) al.push_back(p);
        }
        auto rels = gst::parse_presentation(relations, al);
        gst::PresentedSemigroup p = gst::from_presentation(al, rels, bound);
        if (!p.closed) {
            last_error = "presentation did not close at bound " + std::to_string(p.bound);
            return GST_ERR_NOT_CLOSED;
        }
        *out = new gst_semigroup{std::move(p.s)};
        return GST_OK;
    });
}

gst_status gst_semigroup_to_json(const gst_semigroup* s, char** out) {
    if (!s || !out) return null_arg("semigroup/out");
    *out = nullptr;
    return guard([&] {
        *out = dup(gst::semigroup_to_json(s->s));
        return GST_OK;
    });
}

gst_status gst_semigroup_analyze(const gst_semigroup* s, const char* format, char** out) {
    if (!s || !out) return null_arg("semigroup/out");
    *out = nullptr;
    return guard([&] {
        *out = dup(gst::analyze_semigroup(s->s, fmt(format)));
        return GST_OK;
    });
}

size_t gst_semigroup_size(const gst_semigroup* s) { return s ? static_cast<size_t>(s->s.n) : 0; }
void gst_semigroup_free(gst_semigroup* s) { delete s; }

gst_status gst_expand(const gst_semigroup* s, const char* name, int bound, int prime, const char* basis,
                      const char* format, char** report, gst_semigroup** out_semigroup) {
    if (!s || !name || !report) return null_arg("semigroup/name/report");
    *report = nullptr;
    if (out_semigroup) *out_semigroup = nullptr;
    return guard([&] {
        gst::Expansion e;
        gst::Report r = gst::expand_report(s->s, name, bound, prime, basis ? basis : "", fmt(format), &e);
        *report = dup(r.out);
        if (out_semigroup) *out_semigroup = new gst_semigroup{std::move(e.t)};
        return with_status(r.status, r.status == GST_ERR_NOT_CLOSED ? "expansion certificate not closed"
                                                                    : "expansion check failed");
    });
}

gst_status gst_verify_suites(char** out) {
    if (!out) return null_arg("out");
    *out = nullptr;
    return guard([&] {
        std::string s;
        for (const auto& n : gst::suite_names()) s += n + "\n";
        *out = dup(s);
        return GST_OK;
    });
}

gst_status gst_verify(const char* suite, uint64_t seed, int size, char** log) {
    if (!suite || !log) return null_arg("suite/log");
    *log = nullptr;
    return guard([&] {
        gst::SuiteReport r = gst::run_suite(suite, seed, size);
        *log = dup(r.log);
        return with_status(r.ok() ? 0 : GST_ERR_VIOLATION, std::to_string(r.failures) + " failures in " + suite);
    });
}

gst_status gst_red(const char* word, char** out) {
    if (!word || !out) return null_arg("word/out");
    *out = nullptr;
    return guard([&] {
        std::vector<std::string> al;
        std::string w(word);
        for (char c : w) {
            std::string l(1, c);
            if (std::find(al.begin(), al.end(), l) == al.end()) al.push_back(l);
        }
        if (w.empty()) gst::fail("red needs a non-empty word");
        *out = dup(gst::word_to_string(al, gst::red(gst::parse_word(al, w))));
        return GST_OK;
    });
}

}  // extern "C"
