#include "gst/graph.hpp"

#include <algorithm>
#include <deque>

namespace gst {

void fail(const std::string& msg) { throw Error(Error::Precondition, msg); }

int Graph::add_vertex(const std::string& name) {
    vname.push_back(name.empty() ? "v" + std::to_string(vname.size()) : name);
    out.emplace_back();
    in.emplace_back();
    return nv() - 1;
}

int Graph::add_edge(int s, int d, int label) {
    if (s < 0 || s >= nv() || d < 0 || d >= nv()) fail("edge endpoint out of range");
    edges.push_back({s, d, label});
    int id = ne() - 1;
    out[s].push_back(id);
    in[d].push_back(id);
    return id;
}

int Graph::add_edge(int s, int d, const std::string& letter) { return add_edge(s, d, intern(letter)); }

int Graph::letter(const std::string& name) const {
    for (size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == name) return static_cast<int>(i);
    return -1;
}

int Graph::intern(const std::string& name) {
    int a = letter(name);
    if (a >= 0) return a;
    alphabet.push_back(name);
    return static_cast<int>(alphabet.size()) - 1;
}

int Graph::find_vertex(const std::string& name) const {
    for (int v = 0; v < nv(); ++v)
        if (vname[v] == name) return v;
    return -1;
}

std::string Graph::word_str(const Word& w) const { return word_to_string(alphabet, w); }

int path_end(const Graph& g, const Path& p) { return p.edges.empty() ? p.start : g.edges[p.edges.back()].dst; }

Word path_label(const Graph& g, const Path& p) {
    Word w;
    for (int e : p.edges) w.push_back(g.edges[e].label);
    return w;
}

std::vector<int> path_vertices(const Graph& g, const Path& p) {
    std::vector<int> vs{p.start};
    for (int e : p.edges) vs.push_back(g.edges[e].dst);
    return vs;
}

bool path_is_simple(const Graph& g, const Path& p) {
    auto vs = path_vertices(g, p);
    std::sort(vs.begin(), vs.end());
    return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

Sub subgraph(const Graph& g, const std::vector<char>& vkeep, const std::vector<char>& ekeep) {
    Sub s;
    s.g.alphabet = g.alphabet;
    s.vnew.assign(g.nv(), -1);
    for (int v = 0; v < g.nv(); ++v)
        if (vkeep[v]) {
            s.vnew[v] = s.g.add_vertex(g.vname[v]);
            s.vorig.push_back(v);
        }
    for (int e = 0; e < g.ne(); ++e) {
        const Edge& ed = g.edges[e];
        if (!ekeep[e] || s.vnew[ed.src] < 0 || s.vnew[ed.dst] < 0) continue;
        s.g.add_edge(s.vnew[ed.src], s.vnew[ed.dst], ed.label);
        s.eorig.push_back(e);
    }
    return s;
}

Sub induced(const Graph& g, const std::vector<char>& vkeep) {
    return subgraph(g, vkeep, std::vector<char>(g.ne(), 1));
}

static std::vector<char> bfs(const Graph& g, int v, const std::vector<char>* emask, bool forward) {
    std::vector<char> seen(g.nv(), 0);
    std::deque<int> q{v};
    seen[v] = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int e : forward ? g.out[x] : g.in[x]) {
            if (emask && !(*emask)[e]) continue;
            int y = forward ? g.edges[e].dst : g.edges[e].src;
            if (!seen[y]) {
                seen[y] = 1;
                q.push_back(y);
            }
        }
    }
    return seen;
}

std::vector<char> reachable_from(const Graph& g, int v, const std::vector<char>* emask) {
    return bfs(g, v, emask, true);
}

std::vector<char> reaching(const Graph& g, int v, const std::vector<char>* emask) {
    return bfs(g, v, emask, false);
}

std::string word_to_string(const std::vector<std::string>& alphabet, const Word& w) {
    std::string s;
    for (int a : w) s += (a >= 0 && a < static_cast<int>(alphabet.size())) ? alphabet[a] : "?";
    return s;
}

Word parse_word(const std::vector<std::string>& alphabet, const std::string& s) {
    Word w;
    size_t i = 0;
    while (i < s.size()) {
        int best = -1;
        size_t blen = 0;
        for (size_t a = 0; a < alphabet.size(); ++a) {
            const std::string& l = alphabet[a];
            if (!l.empty() && l.size() > blen && s.compare(i, l.size(), l) == 0) {
                best = static_cast<int>(a);
                blen = l.size();
            }
        }
        if (best < 0) fail("cannot tokenize '" + s + "' at offset " + std::to_string(i));
        w.push_back(best);
        i += blen;
    }
    return w;
}

bool shortlex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace gst
