#include "gst/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace gst {

using json = nlohmann::ordered_json;

static json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("JSON parse error: ") + e.what());
    }
}

static int vertex_ref(const Graph& g, const json& j) {
    if (j.is_number_integer()) {
        int v = j.get<int>();
        if (v < 0 || v >= g.nv()) fail("vertex index out of range: " + std::to_string(v));
        return v;
    }
    if (!j.is_string()) fail("vertex reference must be a name or an index");
    int v = g.find_vertex(j.get<std::string>());
    if (v < 0) fail("unknown vertex: " + j.get<std::string>());
    return v;
}

LoadedAutomaton automaton_from_json(const std::string& text) {
    json j = parse(text);
    LoadedAutomaton r;
    Graph& g = r.a.g;
    try {
        if (j.contains("alphabet"))
            for (const auto& l : j["alphabet"]) g.intern(l.get<std::string>());
        if (!j.contains("vertices")) fail("missing \"vertices\"");
        if (j["vertices"].is_number_integer()) {
            for (int i = 0; i < j["vertices"].get<int>(); ++i) g.add_vertex(std::to_string(i));
        } else {
            for (const auto& v : j["vertices"]) {
                std::string n = v.get<std::string>();
                if (g.find_vertex(n) >= 0) fail("duplicate vertex name: " + n);
                g.add_vertex(n);
            }
        }
        if (j.contains("edges"))
            for (const auto& e : j["edges"]) {
                if (e.contains("id") && e["id"].get<int>() != g.ne())
                    fail("edge ids must be 0, 1, 2, ... in order; found " + e["id"].dump());
                int s = vertex_ref(g, e.at("from")), d = vertex_ref(g, e.at("to"));
                if (e.contains("label") && !e["label"].is_null())
                    g.add_edge(s, d, e["label"].get<std::string>());
                else
                    g.add_edge(s, d);
            }
        if (j.contains("root")) {
            r.a.root = vertex_ref(g, j["root"]);
            r.has_root = true;
        }
        if (j.contains("terminals"))
            for (const auto& t : j["terminals"]) r.a.terminals.push_back(vertex_ref(g, t));
        if (j.contains("rank")) r.rank = rank_from_json(j["rank"].dump(), g);
    } catch (const json::exception& e) {
        fail(std::string("malformed automaton JSON: ") + e.what());
    }
    return r;
}

Rank rank_from_json(const std::string& text, const Graph& g) {
    json j = parse(text);
    if (j.contains("rank")) j = j["rank"];
    Rank r(g.ne(), -1);
    try {
        for (auto it = j.begin(); it != j.end(); ++it) {
            int e = std::stoi(it.key());
            if (e < 0 || e >= g.ne()) fail("rank refers to unknown edge " + it.key());
            r[e] = it.value().get<int>();
        }
    } catch (const std::invalid_argument&) {
        fail("rank keys must be edge ids");
    } catch (const json::exception& e) {
        fail(std::string("malformed rank JSON: ") + e.what());
    }
    return r;
}

std::string automaton_to_json(const Automaton& a, const Rank* rank) {
    json j;
    j["alphabet"] = a.g.alphabet;
    j["vertices"] = a.g.vname;
    json es = json::array();
    for (int e = 0; e < a.g.ne(); ++e) {
        const Edge& ed = a.g.edges[e];
        json x{{"id", e}, {"from", a.g.vname[ed.src]}, {"to", a.g.vname[ed.dst]}};
        if (ed.label >= 0) x["label"] = a.g.alphabet[ed.label];
        es.push_back(x);
    }
    j["edges"] = es;
    if (a.g.nv() > 0) j["root"] = a.g.vname[a.root];
    json ts = json::array();
    for (int t : a.terminals) ts.push_back(a.g.vname[t]);
    j["terminals"] = ts;
    if (rank) {
        json r = json::object();
        for (int e = 0; e < a.g.ne(); ++e)
            if ((*rank)[e] >= 0) r[std::to_string(e)] = (*rank)[e];
        j["rank"] = r;
    }
    return j.dump(2) + "\n";
}

bool is_semigroup_json(const std::string& text) {
    json j = parse(text);
    return j.is_object() && j.contains("table");
}

Semigroup semigroup_from_json(const std::string& text) {
    json j = parse(text);
    try {
        std::vector<std::vector<int>> table = j.at("table").get<std::vector<std::vector<int>>>();
        std::vector<std::string> names;
        if (j.contains("elements")) names = j["elements"].get<std::vector<std::string>>();
        std::vector<std::string> alphabet;
        std::vector<int> gens;
        for (auto it = j.at("generators").begin(); it != j.at("generators").end(); ++it) {
            alphabet.push_back(it.key());
            if (it.value().is_string()) {
                auto pos = std::find(names.begin(), names.end(), it.value().get<std::string>());
                if (pos == names.end()) fail("generator refers to unknown element " + it.value().dump());
                gens.push_back(static_cast<int>(pos - names.begin()));
            } else {
                gens.push_back(it.value().get<int>());
            }
        }
        return from_table(table, gens, alphabet, names);
    } catch (const json::exception& e) {
        fail(std::string("malformed semigroup JSON: ") + e.what());
    }
}

std::string semigroup_to_json(const Semigroup& s) {
    json j;
    j["elements"] = s.names;
    json t = json::array();
    for (int x = 0; x < s.n; ++x) {
        json row = json::array();
        for (int y = 0; y < s.n; ++y) row.push_back(s.mul(x, y));
        t.push_back(row);
    }
    j["table"] = t;
    json g = json::object();
    for (int a = 0; a < s.k(); ++a) g[s.alphabet[a]] = s.gen[a];
    j["generators"] = g;
    return j.dump(2) + "\n";
}

std::string cover_to_json(const MacCover& m) {
    json j = json::parse(automaton_to_json(m.cover));
    json vs = json::array();
    for (int v = 0; v < m.cover.g.nv(); ++v)
        vs.push_back({{"name", m.cover.g.vname[v]},
                      {"word", word_to_string(m.cover.g.alphabet, m.word[v])},
                      {"projects_to", m.proj_v[v]}});
    j["cover_vertices"] = vs;
    return j.dump(2) + "\n";
}

std::string expansion_to_json(const Expansion& e, const Semigroup& source) {
    json j;
    j["expansion"] = e.name;
    j["closed"] = e.closed;
    j["stable"] = e.stable;
    j["bound"] = e.bound;
    j["semigroup"] = json::parse(semigroup_to_json(e.t));
    json p = json::object();
    for (int x = 0; x < e.t.n; ++x) p[e.t.names[x]] = source.names[e.proj[x]];
    j["projection"] = p;
    return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("cannot write " + path);
    out << text;
}

}  // namespace gst
