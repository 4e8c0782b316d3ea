#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gst {

using Word = std::vector<int>;

struct Edge {
    int src = -1;
    int dst = -1;
    int label = -1;  // letter id, -1 when unlabeled
};

class Error : public std::runtime_error {
public:
    enum Kind { Precondition = 2, NotClosed = 3, Violation = 4 };
    Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
    Kind kind;
};

[[noreturn]] void fail(const std::string& msg);

class Graph {
public:
    std::vector<std::string> vname;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> out, in;
    std::vector<std::string> alphabet;

    int nv() const { return static_cast<int>(vname.size()); }
    int ne() const { return static_cast<int>(edges.size()); }
    int add_vertex(const std::string& name = {});
    int add_edge(int s, int d, int label = -1);
    int add_edge(int s, int d, const std::string& letter);
    int letter(const std::string& name) const;  // -1 if absent
    int intern(const std::string& name);
    int find_vertex(const std::string& name) const;
    std::string word_str(const Word& w) const;
};

// Rooted graph / pointed automaton / acceptor, depending on which fields are used.
struct Automaton {
    Graph g;
    int root = 0;
    std::vector<int> terminals;
};

struct Path {
    int start = -1;
    std::vector<int> edges;
};

int path_end(const Graph& g, const Path& p);
Word path_label(const Graph& g, const Path& p);
std::vector<int> path_vertices(const Graph& g, const Path& p);
bool path_is_simple(const Graph& g, const Path& p);

// A subgraph copied out of a parent graph; vorig/eorig map back to parent ids.
struct Sub {
    Graph g;
    std::vector<int> vorig, eorig;
    std::vector<int> vnew;  // parent vertex -> sub vertex or -1
};

Sub subgraph(const Graph& g, const std::vector<char>& vkeep, const std::vector<char>& ekeep);
Sub induced(const Graph& g, const std::vector<char>& vkeep);

std::vector<char> reachable_from(const Graph& g, int v, const std::vector<char>* emask = nullptr);
std::vector<char> reaching(const Graph& g, int v, const std::vector<char>* emask = nullptr);

std::string word_to_string(const std::vector<std::string>& alphabet, const Word& w);
// Greedy longest-match tokenization against the alphabet.
Word parse_word(const std::vector<std::string>& alphabet, const std::string& s);

bool shortlex_less(const Word& a, const Word& b);

}  // namespace gst
