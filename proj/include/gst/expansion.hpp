#pragma once

#include "gst/automaton.hpp"
#include "gst/semigroup.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gst {

struct Expansion {
    std::string name;
    Semigroup t;
    std::vector<int> proj;  // element of t -> element of the source
    bool closed = true;     // certificate of the bounded computation, always true for exact constructions
    bool stable = true;     // bound L+2 (or the next iterate) reproduced the result
    int bound = 0;
};

Expansion rkr(const Semigroup& s, std::size_t cap = 200000);
Expansion kr(const Semigroup& s, std::size_t cap = 200000);
Expansion rrh(const Semigroup& s, std::size_t cap = 200000);
Expansion rh(const Semigroup& s, std::size_t cap = 200000);
// Iterates rh after rrh until two consecutive results are A-isomorphic; stable = false at the cap.
Expansion br(const Semigroup& s, int max_iter = 6, std::size_t cap = 200000);

// Left-handed version of a right-handed expansion through the dual semigroup.
template <class F>
Expansion dual_expansion(const Semigroup& s, F&& right) {
    Expansion e = right(dual(s));
    e.t = dual(e.t);
    auto rep = representatives(e.t);
    for (int x = 0; x < e.t.n; ++x) e.t.names[x] = word_to_string(e.t.alphabet, rep[x]);
    return e;
}

struct IdentityBasis {
    std::string name;
    int vars = 0;
    std::vector<std::pair<Word, Word>> ids;  // words over variables 0..vars-1
};

// One identity per line, `u = v`; variables are x1, x2, ... or single letters; x^n abbreviates a power.
IdentityBasis parse_basis(const std::string& text, const std::string& name = "custom");
std::string to_string(const IdentityBasis& b);
IdentityBasis basis_rb();
IdentityBasis basis_lz();
IdentityBasis basis_rz();
IdentityBasis basis_triv();
IdentityBasis basis_zp(int p);

// Quotient of A+ by the congruence generated by instances of the identities over words mapping to one
// idempotent of S, saturated up to bound L. closed/stable describe the certificate at L and L+2.
Expansion malcev(const Semigroup& s, const IdentityBasis& b, int L);
// Smallest L in [lmin, lmax] whose result is closed and reproduced at L+2; stable = false if none.
Expansion malcev_auto(const Semigroup& s, const IdentityBasis& b, int lmin = 1, int lmax = 0);
int default_max_bound(int k);

Expansion rb(const Semigroup& s, int lmax = 0);
Expansion lz(const Semigroup& s, int lmax = 0);
Expansion rz(const Semigroup& s, int lmax = 0);
Expansion zp(const Semigroup& s, int p, int lmax = 0);

struct KernelCheck {
    bool ok = true;
    std::string witness;
};
// Every preimage of an idempotent satisfies the identities, checked on all assignments.
KernelCheck verify_malcev_kernel(const Semigroup& t, const Semigroup& s, const std::vector<int>& proj,
                                 const IdentityBasis& b);

// Relations uv = u for words u, v of length <= L representing one idempotent of T.
std::vector<Relation> loop_presentation_rb(const Semigroup& t, int L);

}  // namespace gst
