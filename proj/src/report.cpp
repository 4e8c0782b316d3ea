#include "gst/report.hpp"

#include "gst/digraph.hpp"
#include "gst/kleene.hpp"

#include <json.hpp>

#include <sstream>

namespace gst {

using json = nlohmann::ordered_json;

namespace {

void check_format(const std::string& f, bool dot_ok) {
    if (f == "json" || f == "text" || (dot_ok && f == "dot")) return;
    fail("unsupported format: " + f);
}

void require_rooted(const Automaton& a) {
    if (a.root < 0 || a.root >= a.g.nv()) fail("automaton has no root");
    auto r = reachable_from(a.g, a.root);
    for (int v = 0; v < a.g.nv(); ++v)
        if (!r[v]) fail("vertex " + a.g.vname[v] + " is not reachable from the root " + a.g.vname[a.root]);
}

json path_json(const Graph& g, const Path& p) {
    json j = json::array();
    j.push_back(g.vname[p.start]);
    for (int e : p.edges) j.push_back(g.vname[g.edges[e].dst]);
    return j;
}

std::string names_of(const Graph& g, const std::vector<int>& vs) {
    std::string s;
    for (int v : vs) s += (s.empty() ? "" : " ") + g.vname[v];
    return s;
}

}  // namespace

std::string analyze_automaton(const LoadedAutomaton& in, const std::string& format) {
    check_format(format, true);
    const Automaton& a = in.a;
    const Graph& g = a.g;
    require_rooted(a);
    Frame f = strong_components(g);
    UsppResult u = has_uspp(g, a.root);
    std::vector<char> bold(g.ne(), 0);
    if (u.ok)
        for (int e : u.data.bold) bold[e] = 1;
    if (format == "dot") return to_dot(g, &bold, a.root);

    bool lin = is_linear(g, f);
    json j;
    j["vertices"] = g.nv();
    j["edges"] = g.ne();
    j["root"] = g.vname[a.root];
    json comps = json::array();
    for (int c = 0; c < f.size(); ++c) {
        json m = json::array();
        for (int v : f.members[c]) m.push_back(g.vname[v]);
        comps.push_back({{"vertices", m}, {"nontrivial", static_cast<bool>(f.nontrivial[c])}});
    }
    j["components"] = comps;
    json tr = json::array();
    for (int e : f.transition) tr.push_back(e);
    j["transition_edges"] = tr;
    j["quasilinear"] = is_quasilinear(g, f);
    j["linear"] = lin;
    if (!g.alphabet.empty()) j["deterministic"] = is_partial_deterministic(g);
    j["uspp"] = u.ok;
    if (u.ok) {
        json b = json::array();
        for (int e : u.data.bold) b.push_back(e);
        j["bold_arrows"] = b;
    } else {
        j["witness"] = {path_json(g, u.witness1), path_json(g, u.witness2)};
    }
    if (lin) {
        EntryExit ee = entry_exit_points(g, f, a.root);
        json pts = json::array();
        for (int c = 0; c < f.size(); ++c) pts.push_back({{"entry", g.vname[ee.p[c]]}, {"exit", g.vname[ee.q[c]]}});
        j["entry_exit"] = pts;
    }
    if (format == "json") return j.dump(2) + "\n";

    std::ostringstream os;
    os << "uspp: " << (u.ok ? "yes" : "no") << ", bold_arrows: " << (u.ok ? u.data.bold.size() : 0) << "\n";
    os << "vertices: " << g.nv() << ", edges: " << g.ne() << ", root: " << g.vname[a.root] << "\n";
    os << "components: " << f.size() << (lin ? " (linear)" : is_quasilinear(g, f) ? " (quasilinear)" : "") << "\n";
    for (int c = 0; c < f.size(); ++c)
        os << "  C" << c << (f.nontrivial[c] ? "* " : "  ") << names_of(g, f.members[c]) << "\n";
    if (!u.ok)
        os << "witness: " << path_json(g, u.witness1).dump() << " and " << path_json(g, u.witness2).dump() << "\n";
    if (lin) {
        EntryExit ee = entry_exit_points(g, f, a.root);
        for (int c = 0; c < f.size(); ++c)
            os << "  C" << c << " entry " << g.vname[ee.p[c]] << " exit " << g.vname[ee.q[c]] << "\n";
    }
    return os.str();
}

std::string analyze_semigroup(const Semigroup& s, const std::string& format) {
    check_format(format, false);
    GreenData g = green(s);
    auto r = ranks(s, g);
    auto ids = idempotents(s);
    int id = -1;
    bool mono = is_monoid(s, &id);
    json j;
    j["size"] = s.n;
    j["generators"] = s.k();
    j["monoid"] = mono;
    j["group"] = is_group(s);
    j["band"] = is_band(s);
    json e = json::array();
    for (int x : ids) e.push_back(s.names[x]);
    j["idempotents"] = e;
    j["R_classes"] = g.r_count;
    j["L_classes"] = g.l_count;
    j["J_classes"] = g.j_count;
    j["H_classes"] = g.h_count;
    json cls = json::array();
    for (int c = 0; c < g.j_count; ++c) {
        json m = json::array();
        bool regular = false;
        for (int x = 0; x < s.n; ++x)
            if (g.j_class[x] == c) {
                m.push_back(s.names[x]);
                regular = regular || is_regular(s, x);
            }
        cls.push_back({{"elements", m}, {"regular", regular}});
    }
    j["J"] = cls;
    json rk = json::object();
    for (int x = 0; x < s.n; ++x) rk[s.names[x]] = r[x];
    j["rank"] = rk;
    if (format == "json") return j.dump(2) + "\n";
    std::ostringstream os;
    os << "size: " << s.n << ", idempotents: " << ids.size() << (mono ? ", monoid" : "")
       << (is_group(s) ? ", group" : "") << (is_band(s) ? ", band" : "") << "\n";
    os << "classes: R " << g.r_count << ", L " << g.l_count << ", J " << g.j_count << ", H " << g.h_count << "\n";
    for (const auto& c : cls) {
        os << "  J:";
        for (const auto& x : c["elements"]) os << " " << x.get<std::string>();
        os << (c["regular"].get<bool>() ? " (regular)" : "") << "\n";
    }
    os << "rank:";
    for (int x = 0; x < s.n; ++x) os << " " << s.names[x] << "=" << r[x];
    os << "\n";
    return os.str();
}

Report kleene_report(const LoadedAutomaton& in, const Rank* rank, int depth, const std::string& format) {
    check_format(format, false);
    if (depth < 0) fail("depth must be non-negative");
    const Automaton& a = in.a;
    require_rooted(a);
    KExpr e = kleene(a, rank);
    Word w;
    bool same = same_language_upto(e, a, depth, &w);
    Report r;
    r.status = same ? 0 : Error::Violation;
    std::string ex = to_string(e, a.g.alphabet);
    if (format == "json") {
        json j;
        j["expression"] = ex;
        j["star_height"] = star_height(e);
        j["depth"] = depth;
        j["language_equal"] = same;
        if (!same) j["witness"] = a.g.word_str(w);
        r.out = j.dump(2) + "\n";
    } else {
        r.out = ex + "\n" + (same ? "verdict: OK (n = " + std::to_string(depth) + ")\n"
                                  : "verdict: MISMATCH at " + a.g.word_str(w) + "\n");
    }
    return r;
}

std::string cover_report(const Automaton& a, std::size_t cap, const std::string& format) {
    check_format(format, true);
    require_rooted(a);
    MacCover m = mac_cover(a, cap);
    if (format == "json") return cover_to_json(m);
    UsppResult u = has_uspp(m.cover.g, 0);
    std::vector<char> bold(m.cover.g.ne(), 0);
    if (u.ok)
        for (int e : u.data.bold) bold[e] = 1;
    if (format == "dot") return to_dot(m.cover.g, &bold, 0);
    std::ostringstream os;
    os << "cover vertices: " << m.cover.g.nv() << ", edges: " << m.cover.g.ne()
       << ", bold_arrows: " << (u.ok ? u.data.bold.size() : 0) << "\n";
    for (int v = 0; v < m.cover.g.nv(); ++v)
        os << "  " << m.cover.g.vname[v] << " -> " << a.g.vname[m.proj_v[v]] << "\n";
    return os.str();
}

Report expand_report(const Semigroup& s, const std::string& name, int bound, int prime, const std::string& basis_text,
                     const std::string& format, Expansion* result) {
    check_format(format, false);
    Expansion e;
    std::optional<IdentityBasis> basis;
    std::string kind = name;
    if (name.rfind("zp:", 0) == 0) {
        prime = std::stoi(name.substr(3));
        kind = "zp";
    }
    if (name.rfind("malcev", 0) == 0) kind = "malcev";
    if (kind == "rkr")
        e = rkr(s);
    else if (kind == "kr")
        e = kr(s);
    else if (kind == "rrh")
        e = rrh(s);
    else if (kind == "rh")
        e = rh(s);
    else if (kind == "br")
        e = br(s);
    else if (kind == "rb")
        basis = basis_rb();
    else if (kind == "lz")
        basis = basis_lz();
    else if (kind == "rz")
        basis = basis_rz();
    else if (kind == "zp") {
        if (prime < 2) fail("zp needs a prime p >= 2");
        basis = basis_zp(prime);
    } else if (kind == "malcev") {
        if (basis_text.empty()) fail("malcev expansion needs a basis");
        basis = parse_basis(basis_text, "malcev");
    } else {
        fail("unknown expansion: " + name);
    }
    if (basis) {
        e = bound > 0 ? malcev(s, *basis, bound) : malcev_auto(s, *basis);
        e.name = kind == "zp" ? "zp:" + std::to_string(prime) : kind;
    }

    json cert;
    cert["closed"] = e.closed;
    cert["stable"] = e.stable;
    bool ok = true;
    if (basis) {
        KernelCheck k = verify_malcev_kernel(e.t, s, e.proj, *basis);
        cert["kernel"] = to_string(*basis);
        cert["kernel_ok"] = k.ok;
        if (!k.ok) cert["kernel_witness"] = k.witness;
        ok = k.ok;
    }
    if (kind == "rkr" || kind == "kr") {
        Semigroup t = kind == "rkr" ? e.t : dual(e.t);
        auto w = str_cay_counterexample(t, 8);
        cert["str_equals_cay"] = !w.has_value();
        if (w) cert["str_cay_witness"] = word_to_string(t.alphabet, *w);
        ok = ok && !w;
    }
    Report r;
    r.status = !ok ? Error::Violation : (!e.closed || !e.stable) ? Error::NotClosed : 0;
    if (format == "json") {
        json j = json::parse(expansion_to_json(e, s));
        j["certificate"] = cert;
        r.out = j.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << e.name << ": " << e.t.n << " elements over " << s.n << ", bound " << e.bound
           << (e.closed ? ", closed" : ", not closed") << (e.stable ? ", stable" : ", not stable") << "\n";
        if (cert.contains("kernel_ok")) os << "kernel in " << kind << ": " << (cert["kernel_ok"].get<bool>() ? "yes" : "no") << "\n";
        if (cert.contains("str_equals_cay"))
            os << "str = Cay up to length 8: " << (cert["str_equals_cay"].get<bool>() ? "yes" : "no") << "\n";
        r.out = os.str();
    }
    if (result) *result = std::move(e);
    return r;
}

}  // namespace gst
