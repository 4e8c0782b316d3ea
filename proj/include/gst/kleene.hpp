#pragma once

#include "gst/graph.hpp"
#include "gst/uspp.hpp"

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace gst {

struct KNode;
using KExpr = std::shared_ptr<const KNode>;

// Unionless expression tree. Builders keep it canonical: no empty factors, flat concatenations,
// and the star of the empty expression is the empty expression.
struct KNode {
    enum Kind { Empty, Letter, Concat, Star };
    Kind kind = Empty;
    int letter = -1;
    std::vector<KExpr> kids;
};

KExpr k_empty();
KExpr k_letter(int a);
KExpr k_concat(const std::vector<KExpr>& parts);
KExpr k_star(const KExpr& x);

std::string to_string(const KExpr& e, const std::vector<std::string>& alphabet);
// Accepts ( ) and [ ] as grouping, * as star, ε for the empty expression.
KExpr parse_kleene(const std::string& s, const std::vector<std::string>& alphabet);
bool structurally_equal(const KExpr& a, const KExpr& b);

std::set<Word> expr_language_upto(const KExpr& e, int n);
int star_height(const KExpr& e);
bool nullable(const KExpr& e);

// Standard expression of a trim acceptor with the unique simple path property and one terminal.
// rank is indexed by edge id of acc.g; when null the shortlex default is used.
KExpr kleene(const Automaton& acc, const Rank* rank = nullptr);

// Exact comparison of the languages up to length n (A* semantics) through a position automaton
// of the expression run in lockstep with the acceptor. On mismatch a witness word is stored.
bool same_language_upto(const KExpr& e, const Automaton& acc, int n, Word* witness = nullptr);

}  // namespace gst
