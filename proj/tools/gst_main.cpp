#include "gst.h"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

struct Opts {
    std::string input, format, out, rank_file, name;
    int bound = 0, depth = 12, prime = 0, size = 0;
    std::uint64_t seed = 1;
};

[[noreturn]] void die(int code, const std::string& msg) {
    std::cerr << "gst: " << msg << "\n";
    std::exit(code);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) die(GST_ERR_PRECONDITION, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Takes ownership of a library string, emits it, and exits with the status.
[[noreturn]] void finish(gst_status st, char* text, const Opts& o) {
    if (text) {
        if (o.out.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(o.out, std::ios::binary);
            if (!f) die(GST_ERR_PRECONDITION, "cannot write " + o.out);
            f << text;
        }
        gst_string_free(text);
    }
    if (st != GST_OK) std::cerr << "gst: " << gst_last_error() << "\n";
    std::cout.flush();
    std::exit(st);
}

void check(gst_status st) {
    if (st != GST_OK) die(st, gst_last_error());
}

using Automaton = std::unique_ptr<gst_automaton, decltype(&gst_automaton_free)>;
using Semigroup = std::unique_ptr<gst_semigroup, decltype(&gst_semigroup_free)>;

Automaton load_automaton(const Opts& o) {
    gst_automaton* a = nullptr;
    check(gst_automaton_from_json(slurp(o.input).c_str(), &a));
    Automaton h(a, gst_automaton_free);
    if (!o.rank_file.empty()) check(gst_automaton_set_rank(a, slurp(o.rank_file).c_str()));
    return h;
}

Semigroup load_semigroup(const Opts& o) {
    gst_semigroup* s = nullptr;
    check(gst_semigroup_from_json(slurp(o.input).c_str(), &s));
    return Semigroup(s, gst_semigroup_free);
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* env = std::getenv("GST_MAX_STATES")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (!*env || *end || v == 0) die(GST_ERR_PRECONDITION, "GST_MAX_STATES must be a positive integer");
        gst_set_max_states(static_cast<size_t>(v));
    }

    Opts o;
    CLI::App app{"geometric semigroup toolkit"};
    app.require_subcommand(1);
    auto formats = CLI::IsMember({"json", "dot", "text"});

    auto* analyze = app.add_subcommand("analyze", "frame, linearity, USPP and bold arrows of a graph or automaton; "
                                                  "Green structure and rank of a semigroup");
    analyze->add_option("input", o.input, "JSON file")->required();
    analyze->add_option("--format", o.format, "json, dot or text")->check(formats);

    auto* kleene = app.add_subcommand("kleene", "unionless Kleene expression of a trim USPP acceptor");
    kleene->add_option("input", o.input, "acceptor JSON")->required();
    kleene->add_option("--rank-file", o.rank_file, "geometric rank JSON");
    kleene->add_option("--depth", o.depth, "word length for the language check")->check(CLI::NonNegativeNumber);
    kleene->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));

    auto* cover = app.add_subcommand("cover", "McCammond cover of a rooted automaton");
    cover->add_option("input", o.input, "automaton JSON")->required();
    cover->add_option("--format", o.format, "json, dot or text")->check(formats);

    auto* expand = app.add_subcommand("expand", "expansion of a finite A-semigroup");
    expand->add_option("input", o.input, "semigroup JSON")->required();
    expand->add_option("expansion", o.name, "rkr kr rrh rh br rb lz rz zp:<p> malcev:<basis-file>")->required();
    expand->add_option("--bound,-L", o.bound, "word length bound for Mal'cev expansions")->check(CLI::PositiveNumber);
    expand->add_option("--prime", o.prime, "p for zp")->check(CLI::PositiveNumber);
    expand->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));

    auto* verify = app.add_subcommand("verify", "run a property suite (or all)");
    verify->add_option("suite", o.name, "suite name or all")->required();
    verify->add_option("--seed", o.seed, "random seed");
    verify->add_option("--size", o.size, "number of random cases, 0 for the default")->check(CLI::NonNegativeNumber);

    auto* red = app.add_subcommand("red", "simple-path reduction of a word");
    red->add_option("word", o.name, "word over single-character letters")->required();

    for (auto* c : {analyze, kleene, cover, expand, verify, red}) c->add_option("--out", o.out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : GST_ERR_PRECONDITION;
    }

    char* text = nullptr;
    if (app.got_subcommand(analyze)) {
        gst_status st = gst_analyze_json(slurp(o.input).c_str(), o.format.empty() ? "text" : o.format.c_str(), &text);
        finish(st, text, o);
    } else if (app.got_subcommand(kleene)) {
        Automaton a = load_automaton(o);
        gst_status st = gst_kleene(a.get(), o.depth, o.format.empty() ? "text" : o.format.c_str(), &text);
        finish(st, text, o);
    } else if (app.got_subcommand(cover)) {
        Automaton a = load_automaton(o);
        gst_status st = gst_mac_cover(a.get(), o.format.empty() ? "json" : o.format.c_str(), &text);
        finish(st, text, o);
    } else if (app.got_subcommand(expand)) {
        Semigroup s = load_semigroup(o);
        std::string name = o.name, basis;
        if (name.rfind("malcev:", 0) == 0) {
            basis = slurp(name.substr(7));
            name = "malcev";
        }
        gst_status st = gst_expand(s.get(), name.c_str(), o.bound, o.prime, basis.c_str(),
                                   o.format.empty() ? "json" : o.format.c_str(), &text, nullptr);
        finish(st, text, o);
    } else if (app.got_subcommand(verify)) {
        std::string log;
        gst_status worst = GST_OK;
        std::vector<std::string> suites;
        if (o.name == "all") {
            char* names = nullptr;
            check(gst_verify_suites(&names));
            std::istringstream is(names);
            gst_string_free(names);
            for (std::string s; std::getline(is, s);) suites.push_back(s);
        } else {
            suites.push_back(o.name);
        }
        for (const auto& s : suites) {
            char* l = nullptr;
            gst_status st = gst_verify(s.c_str(), o.seed, o.size, &l);
            if (!l) die(st, gst_last_error());
            log += l;
            gst_string_free(l);
            if (st != GST_OK && worst == GST_OK) worst = st;
        }
        char* copy = static_cast<char*>(std::malloc(log.size() + 1));
        std::copy(log.c_str(), log.c_str() + log.size() + 1, copy);
        finish(worst, copy, o);
    } else if (app.got_subcommand(red)) {
        gst_status st = gst_red(o.name.c_str(), &text);
        if (st == GST_OK) {
            std::string line = std::string(text) + "\n";
            gst_string_free(text);
            text = static_cast<char*>(std::malloc(line.size() + 1));
            std::copy(line.c_str(), line.c_str() + line.size() + 1, text);
        }
        finish(st, text, o);
    }
    return 0;
}
