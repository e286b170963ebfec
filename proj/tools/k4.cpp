#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "k4/braid3.hpp"
#include "k4/certificate.hpp"
#include "k4/coloring.hpp"
#include "k4/corpus.hpp"
#include "k4/polynomials.hpp"
#include "k4/search.hpp"
#include "k4/skein.hpp"
#include "k4/tangle.hpp"

using namespace k4;

namespace {

enum Exit { ok = 0, negative = 1, bad_input = 2 };

// Real values of Z[zeta_8] print as integers or multiples of sqrt2.
std::string pretty(const CycloInt& v) {
    if (v.m == 4 && v.c[1] == 0 && v.c[2] == 0 && v.c[3] == 0) return std::to_string(v.c[0]);
    if (v.m == 4 && v.c[0] == 0 && v.c[2] == 0 && v.c[1] == -v.c[3]) {
        long long k = v.c[1];
        std::string s = k == 1 ? "sqrt2" : k == -1 ? "-sqrt2" : std::to_string(k) + "*sqrt2";
        return s + " " + v.str();
    }
    return v.str();
}

std::vector<int> parse_k_list(const std::string& s) {
    std::vector<int> ks;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto dash = item.find('-');
        if (dash != std::string::npos) {
            int lo = std::stoi(item.substr(0, dash)), hi = std::stoi(item.substr(dash + 1));
            for (int k = lo; k <= hi; ++k) ks.push_back(k);
        } else if (!item.empty()) {
            ks.push_back(std::stoi(item));
        }
    }
    return ks;
}

struct BudgetFlags {
    SearchBudget budget;
    SearchOptions opt;
    bool stats = false;

    void attach(CLI::App* c) {
        c->add_option("--max-crossings", budget.max_crossings, "crossing cap (0: start + 6)");
        c->add_option("--max-depth", budget.max_depth, "move depth cap");
        c->add_option("--max-states", budget.max_states, "visited-state cap");
        c->add_option("--jobs", opt.jobs, "worker threads for the search");
        c->add_option("--n", opt.n, "n-move order (0: Reidemeister moves only)");
        c->add_flag("--stats", stats, "print visited/frontier counts per depth");
    }
};

void print_stats(const SearchResult& r) {
    for (const auto& l : r.layers)
        std::cout << (l.side ? "backward" : "forward") << " depth " << l.depth << ": frontier " << l.frontier
                  << ", visited " << l.visited << "\n";
}

int report_search(const SearchResult& r, const std::string& out, const std::string& label, bool stats) {
    if (stats) print_stats(r);
    switch (r.outcome) {
        case SearchResult::Outcome::Reduced: {
            Certificate c = *r.certificate;
            if (!label.empty()) c.label = label;
            std::cout << "reduced to " << r.target << " in " << c.steps.size() << " moves (" << r.visited
                      << " states)\n";
            for (const auto& m : c.steps) std::cout << "  " << describe(m) << "\n";
            if (!out.empty()) {
                save_certificate(c, out);
                std::cout << "certificate written to " << out << "\n";
            }
            return ok;
        }
        case SearchResult::Outcome::Obstruction:
            std::cout << "obstruction: " << r.obstruction << "\n";
            return negative;
        case SearchResult::Outcome::Exhausted:
            std::cout << "exhausted: " << r.exhausted << " (" << r.visited << " states)\n";
            return negative;
    }
    return negative;
}

int cmd_invariants(const std::string& path, const std::string& klist, bool oriented, int cap) {
    CorpusEntry e = load_corpus_entry(path);
    const LinkDiagram& d = e.diagram;
    Orientation o = oriented ? e.orient() : Orientation::reference(d);
    int comps = components(d).count;
    std::cout << "name: " << e.name << "\n";
    std::cout << "crossings: " << d.size() << "\n";
    std::cout << "components: " << comps << "\n";
    LinkingData ld = linking_matrix(d, o);
    std::cout << "linking matrix:";
    for (const auto& row : ld.m) {
        std::cout << " [";
        for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << row[j];
        std::cout << "]";
    }
    std::cout << "\n";
    if (comps >= 2) {
        std::cout << "lk mod 2:";
        for (int i = 0; i < comps; ++i)
            for (int j = i + 1; j < comps; ++j) std::cout << " " << ((ld.lk(i, j) % 2 + 2) % 2);
        std::cout << "\n";
    }
    for (int k : parse_k_list(klist)) std::cout << "Col_" << k << ": " << col_group(d, k).str() << "\n";
    try {
        LaurentPoly v = jones(d, o, cap);
        std::cout << "Jones: " << jones_str(v) << "\n";
        CycloInt vi = eval_jones_at_i(v);
        std::cout << "V(i): " << pretty(vi) << "\n";
        ArfValue a = arf_from_value(vi, comps);
        std::cout << "Arf: " << (a.defined ? std::to_string(a.value) : "undefined") << "\n";
    } catch (const std::exception& ex) {
        std::cout << "Jones: not computed (" << ex.what() << ")\n";
    }
    return ok;
}

int cmd_cert_verify(const std::string& path, bool no_jones, int cap) {
    Certificate c = load_certificate(path);
    ReplayOptions ro;
    ro.jones = !no_jones;
    ro.cap = cap;
    ReplayReport r;
    try {
        r = replay(c, ro);
    } catch (const ReplayError& ex) {
        std::cout << "FAILED: " << ex.what() << "\n";
        return negative;
    }
    std::cout << "certificate: " << c.label << "\n" << audit_table(r);
    Orientation o = c.orientation ? *c.orientation : Orientation::reference(c.start);
    ArfValue a0 = no_jones ? ArfValue{} : arf_from_value(eval_jones_at_i(c.start, o, cap), components(c.start).count);
    ArfValue a1 = no_jones ? ArfValue{} : arf_from_value(eval_jones_at_i(r.end, r.end_orientation, cap),
                                                        components(r.end).count);
    if (!no_jones && !(a0.defined && a1.defined)) {
        std::cout << "Arf audit: not applicable, Arf undefined at the " << (a0.defined ? "end" : "start") << "\n";
    } else if (!no_jones) {
        ArfAudit a = arf_parity_audit(c, o, cap);
        std::cout << "Arf audit: start " << (a.start.defined ? std::to_string(a.start.value) : "undefined") << ", end "
                  << (a.end.defined ? std::to_string(a.end.value) : "undefined") << ", parallel 4-moves "
                  << a.parallel_moves << ", antiparallel " << a.antiparallel_moves << ": "
                  << (a.ok() ? "consistent" : "INCONSISTENT") << "\n";
        for (const auto& n : a.notes) std::cout << "  " << n << "\n";
        if (!a.ok()) return negative;
    }
    std::cout << "VERIFIED\n";
    return ok;
}

int cmd_braid3(const std::string& word) {
    BraidWord w = BraidWord::parse(word);
    Classification c = classify_closure(w);
    std::cout << label_name(c.label) << "\n";
    std::cout << "class " << c.class_index << ", representative " << c.representative << ", components "
              << closure_components(w) << "\n";
    return ok;
}

int cmd_braid3_classes() {
    QuotientGroup g = coset_enumeration();
    auto cls = conjugacy_classes(g);
    std::cout << "order " << g.order << ", conjugacy classes " << cls.size() << "\n";
    for (const auto& e : classification_table()) {
        BraidWord w = BraidWord::parse(e.word);
        std::cout << e.word << " -> " << label_name(e.label) << " (" << closure_components(w) << " components, Col_4 "
                  << col_group(braid_closure_diagram(w), 4).str() << ")\n";
    }
    return ok;
}

std::string table_path(const std::string& dir) { return (std::filesystem::path(dir) / "fig32.table").string(); }
std::string scripts_path(const std::string& dir) {
    return (std::filesystem::path(dir) / "fig32_scripts.json").string();
}

int cmd_tangle_table(const std::string& dir, bool write, BudgetFlags& bf) {
    if (write) {
        TangleTable t = build_table(bf.budget, bf.opt);
        std::filesystem::create_directories(dir);
        std::ofstream(table_path(dir)) << table_text(t);
        std::ofstream(scripts_path(dir)) << table_scripts_json(t);
        std::cout << "wrote " << table_path(dir) << " and " << scripts_path(dir) << "\n";
    }
    TangleTable t = load_table(table_path(dir), scripts_path(dir));
    int bad = 0, closed = 0;
    for (const auto& e : t.entries) {
        std::string why;
        if (e.closed) ++closed;
        if (!verify_entry(e, &why)) {
            ++bad;
            std::cout << e.i << " " << e.j << " " << e.a << " " << e.b << ": " << why << "\n";
        }
    }
    std::cout << t.entries.size() << " entries, " << closed << " with a closed component, " << bad << " failing\n";
    return bad ? negative : ok;
}

int cmd_tangle(const std::string& action, const std::string& text, BudgetFlags& bf) {
    ClosedTangleExpr e = parse_tangle(text);
    if (action == "parse") {
        std::cout << to_string(e) << "\n";
        if (auto f = fraction_of(e.expr)) std::cout << "fraction: " << f->str() << "\n";
        return ok;
    }
    if (action == "diagram") {
        LinkDiagram d = e.closure == Closure::None ? to_tangle(e.expr).framed : to_diagram(e);
        std::cout << to_pd(d) << "\n";
        if (e.closure != Closure::None) std::cout << "components: " << components(d).count << "\n";
        return ok;
    }
    if (action == "reduce") {
        AlgebraicReduction r = reduce_algebraic(e.expr);
        for (const auto& s : r.script)
            std::cout << "node '" << s.node << "': r^" << s.a << "(e" << s.i << ") * r^" << s.b << "(e" << s.j
                      << ") -> e" << s.result << "\n";
        if (r.closed_component) {
            std::cout << "closed component at node '" << r.closed_at << "'\n";
            return negative;
        }
        std::cout << "e" << r.basic << "\n";
        return ok;
    }
    if (action == "classify") {
        TwoLinkResult r = classify_algebraic_2link(e, bf.budget, bf.opt);
        std::cout << class_name(r.cls) << "\nlk: " << r.lk << "\n" << r.note << "\n";
        if (r.certificate) std::cout << "certificate: " << r.certificate->steps.size() << " moves\n";
        return ok;
    }
    throw Error("unknown tangle action " + action);
}

int cmd_skein(const std::string& action, const std::string& text) {
    if (action == "hopf-identity") {
        HopfIdentity h = hopf_identity_check();
        std::cout << "lhs:\n" << h.lhs.str() << "derived rhs:\n" << h.derived.str() << "stated rhs:\n"
                  << h.expected.str() << (h.ok ? "VERIFIED" : "MISMATCH") << "\n";
        return h.ok ? ok : negative;
    }
    ClosedTangleExpr e = parse_tangle(text);
    if (action == "reduce") {
        if (e.closure == Closure::None) {
            std::cout << reduce_tangle_skein(e.expr).str();
        } else {
            SkeinVector v = reduce_knot_skein(e);
            std::cout << v.str();
            HopfFree h = eliminate_hopf(v);
            std::cout << "with H eliminated, times (x0 + x4):\nT1: " << h.t1.str() << "\nT2: " << h.t2.str() << "\n";
        }
        return ok;
    }
    if (action == "resolve") {
        auto f = fraction_of(e.expr);
        if (!f) throw Error("resolve needs a rational tangle");
        Resolution r = resolve_rational(*f);
        std::cout << "solved for " << var_name(r.solved) << "\n";
        for (const auto& t : r.terms)
            std::cout << var_name(t.x) << ": a^" << t.a_power << " * [" << t.value.str() << "]\n";
        return ok;
    }
    throw Error("unknown skein action " + action);
}

int cmd_corpus_check(const std::string& dir) {
    int bad = 0;
    for (const auto& e : load_corpus(dir)) {
        std::string status = "ok";
        try {
            validate(e.diagram);
            if (e.tangle) {
                LinkDiagram t = to_diagram(parse_tangle(*e.tangle));
                if (jones(t, Orientation::reference(t)) != jones(e.diagram, Orientation::reference(e.diagram)))
                    status = "tangle expression has a different Jones polynomial";
            }
        } catch (const std::exception& ex) {
            status = ex.what();
        }
        if (status != "ok") ++bad;
        std::cout << e.name << ": " << e.diagram.size() << " crossings, " << components(e.diagram).count
                  << " components: " << status << "\n";
    }
    return bad ? negative : ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k4: links up to 4-moves"};
    app.require_subcommand(1);
    int cap = default_bracket_cap;
    app.add_option("--cap", cap, "crossing cap for bracket computations");

    std::string pd, pd2, klist = "2-8", out, label, cert, word, expr, dir = "tables", corpus_dir = "corpus";
    bool oriented = false, no_jones = false, write = false;
    BudgetFlags bf;

    auto* inv = app.add_subcommand("invariants", "print the invariants of a PD file");
    inv->add_option("--pd", pd, "PD file")->required();
    inv->add_option("--k", klist, "coloring moduli, e.g. 3,4 or 2-8");
    inv->add_flag("--oriented", oriented, "use the orientation stored in the file");

    auto* red = app.add_subcommand("reduce", "search for a 4-move reduction to a trivial link or the Hopf link");
    red->add_option("--pd", pd, "PD file")->required();
    red->add_option("--out", out, "certificate file to write");
    red->add_option("--label", label, "certificate label");
    bf.attach(red);

    auto* eq = app.add_subcommand("equiv", "search for a 4-move equivalence between two diagrams");
    eq->add_option("--pd", pd, "first PD file")->required();
    eq->add_option("--to", pd2, "second PD file")->required();
    eq->add_option("--out", out, "certificate file to write");
    eq->add_option("--label", label, "certificate label");
    bf.attach(eq);

    auto* cv = app.add_subcommand("cert-verify", "replay a certificate with invariant audits");
    cv->add_option("cert", cert, "certificate file")->required();
    cv->add_flag("--no-jones", no_jones, "skip Jones and Arf audits");

    auto* br = app.add_subcommand("braid3", "3-braids modulo the Coxeter quotient");
    br->require_subcommand(1);
    auto* brc = br->add_subcommand("classify", "classify the closure of a 3-braid word");
    brc->add_option("word", word, "word such as \"s1 s1 s2^-1\"")->required();
    auto* brt = br->add_subcommand("classes", "the quotient group and its class table");

    auto* tg = app.add_subcommand("tangle", "2-algebraic tangles");
    tg->require_subcommand(1);
    std::string tangle_action;
    for (const char* a : {"parse", "diagram", "reduce", "classify"}) {
        auto* s = tg->add_subcommand(a, std::string(a) + " a tangle expression");
        s->add_option("expr", expr, "expression such as N(r(e3*e3)*e4)")->required();
        if (std::string(a) == "classify") bf.attach(s);
        s->callback([&tangle_action, a] { tangle_action = a; });
    }
    auto* tt = tg->add_subcommand("table", "check (or regenerate) the multiplication table");
    tt->add_option("--dir", dir, "table directory");
    tt->add_flag("--write", write, "rebuild the table and its scripts by search first");
    bf.attach(tt);

    auto* sk = app.add_subcommand("skein", "quartic skein module");
    sk->require_subcommand(1);
    std::string skein_action;
    sk->add_subcommand("hopf-identity", "derive and check the Hopf link identity")->callback([&] {
        skein_action = "hopf-identity";
    });
    for (const char* a : {"reduce", "resolve"}) {
        auto* s = sk->add_subcommand(a, std::string(a) + " a tangle or knot expression");
        s->add_option("expr", expr, "expression")->required();
        s->callback([&skein_action, a] { skein_action = a; });
    }

    auto* cc = app.add_subcommand("corpus", "validate every corpus entry");
    cc->add_option("--dir", corpus_dir, "corpus directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : bad_input;
    }

    try {
        if (inv->parsed()) return cmd_invariants(pd, klist, oriented, cap);
        if (red->parsed()) {
            LinkDiagram d = load_corpus_entry(pd).diagram;
            return report_search(reduce_to_trivial(d, bf.budget, bf.opt), out, label, bf.stats);
        }
        if (eq->parsed()) {
            LinkDiagram a = load_corpus_entry(pd).diagram, b = load_corpus_entry(pd2).diagram;
            return report_search(bidirectional_check(a, b, bf.budget, bf.opt), out, label, bf.stats);
        }
        if (cv->parsed()) return cmd_cert_verify(cert, no_jones, cap);
        if (brc->parsed()) return cmd_braid3(word);
        if (brt->parsed()) return cmd_braid3_classes();
        if (tt->parsed()) return cmd_tangle_table(dir, write, bf);
        if (tg->parsed()) return cmd_tangle(tangle_action, expr, bf);
        if (sk->parsed()) return cmd_skein(skein_action, expr);
        if (cc->parsed()) return cmd_corpus_check(corpus_dir);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return bad_input;
    }
    return bad_input;
}
