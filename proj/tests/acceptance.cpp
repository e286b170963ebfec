// One pass/fail line per acceptance criterion; exit status 1 when any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "k4/braid3.hpp"
#include "k4/certificate.hpp"
#include "k4/coloring.hpp"
#include "k4/corpus.hpp"
#include "k4/moves.hpp"
#include "k4/polynomials.hpp"
#include "k4/search.hpp"
#include "k4/skein.hpp"
#include "k4/tangle.hpp"

using namespace k4;

namespace {

std::string src(const std::string& rel) { return std::string(K4_SOURCE_DIR) + "/" + rel; }

struct Outcome {
    bool ok = true;
    std::ostringstream why;  // first failures, then a summary
    int failures = 0;

    void check(bool cond, const std::string& what) {
        if (cond) return;
        if (failures++ < 3) why << (ok ? "" : "; ") << what;
        ok = false;
    }
};

// Backtracking over over-arcs (free loops count as arcs); a crossing is checked as soon
// as its three arcs are set.
long long brute_colorings(const LinkDiagram& d, int k) {
    Arcs a = arcs(d);
    std::vector<std::array<int, 3>> rel;  // under, under, over
    for (const auto& c : d.crossings)
        rel.push_back({a.of_label[c.slots[0]], a.of_label[c.slots[2]], a.of_label[c.slots[1]]});
    std::vector<std::vector<int>> ready(a.count);
    for (int i = 0; i < static_cast<int>(rel.size()); ++i)
        ready[std::max({rel[i][0], rel[i][1], rel[i][2]})].push_back(i);
    std::vector<int> col(a.count, 0);
    long long count = 0;
    std::function<void(int)> rec = [&](int i) {
        if (i == a.count) {
            ++count;
            return;
        }
        for (int v = 0; v < k; ++v) {
            col[i] = v;
            bool good = true;
            for (int r : ready[i]) {
                auto [x, y, o] = rel[r];
                if (((col[x] + col[y] - 2 * col[o]) % k + k) % k != 0) {
                    good = false;
                    break;
                }
            }
            if (good) rec(i + 1);
        }
    };
    rec(0);
    return count;
}

std::vector<CorpusEntry> corpus() { return load_corpus(src("corpus")); }

Move random_move(const LinkDiagram& d, const MoveSet& set, std::mt19937& rng, int grow_until) {
    auto moves = enumerate_moves(d, set);
    std::vector<Move> pick;
    for (auto& m : moves)
        if (d.size() < grow_until || !is_addition(m.kind)) pick.push_back(m);
    if (pick.empty()) pick = moves;
    return pick[rng() % pick.size()];
}

bool is_nmove(const Move& m) { return m.kind == MoveKind::NAdd || m.kind == MoveKind::NRemove; }

Outcome coxeter() {
    Outcome r;
    QuotientGroup g = coset_enumeration();
    auto cl = conjugacy_classes(g);
    r.check(g.order == 96, "order " + std::to_string(g.order));
    r.check(cl.size() == 16, std::to_string(cl.size()) + " classes");
    r.why << (r.ok ? "" : "; ") << "order " << g.order << ", " << cl.size() << " classes";
    return r;
}

Outcome colorings() {
    Outcome r;
    int checked = 0, links = 0;
    for (const auto& e : corpus()) {
        if (arcs(e.diagram).count <= 9) {
            for (int k = 2; k <= 8; ++k) {
                long long want = brute_colorings(e.diagram, k);
                r.check(col_group(e.diagram, k).order() == want, e.name + " Col_" + std::to_string(k));
                ++checked;
            }
        }
        if (components(e.diagram).count == 2) {
            auto ld = linking_matrix(e.diagram, e.orient());
            AbelianGroup g = col_group(e.diagram, 4);
            r.check(g == col4_from_linking(ld), e.name + " Col_4 against the linking matrix");
            r.check(g.str() == (ld.lk(0, 1) % 2 ? "Z4 + Z2" : "Z4 + Z4"), e.name + " Col_4 parity");
            ++links;
        }
    }
    r.why << (r.ok ? "" : "; ") << checked << " counts, " << links << " two-component links";
    return r;
}

Outcome move_invariance() {
    Outcome r;
    std::mt19937 rng(2024);
    int kmoves = 0, fours = 0;
    for (const char* name : {"trefoil", "figure_eight", "hopf", "borromean", "9_34"}) {
        LinkDiagram d = load_corpus_entry(src(std::string("corpus/") + name + ".pd")).diagram;
        for (int step = 0; step < 40; ++step) {
            MoveSet set;
            set.n = 3 + step % 3;
            Move m = random_move(d, set, rng, 10);
            LinkDiagram e = apply(d, m);
            for (int k : {3, 4, 5}) {
                if (is_nmove(m) && m.n != k) continue;
                r.check(col_group(e, k) == col_group(d, k), std::string(name) + ": " + describe(m));
            }
            d = e;
            ++kmoves;
        }
    }
    for (const char* name : {"trefoil", "hopf", "borromean", "figure_eight", "w_link"}) {
        LinkDiagram d = load_corpus_entry(src(std::string("corpus/") + name + ".pd")).diagram;
        Orientation o = Orientation::reference(d);
        for (int step = 0; step < 40; ++step) {
            auto moves = enumerate_moves(d, MoveSet{});
            std::vector<Move> four;
            for (auto& m : moves)
                if (is_nmove(m) && (d.size() < 14 || m.kind == MoveKind::NRemove)) four.push_back(m);
            if (four.empty()) {
                for (auto& m : moves)
                    if (is_nmove(m)) four.push_back(m);
            }
            if (four.empty()) {
                // bring in a crossing pair so that a 4-move site exists
                d = apply(d, random_move(d, MoveSet{true, true, true, 0, true}, rng, 100));
                o = Orientation::reference(d);
                continue;
            }
            Move m = four[rng() % four.size()];
            auto [e, oe] = apply(d, o, m);
            r.check(components(e).count == components(d).count, std::string(name) + " components");
            r.check(same_lk_mod2(lk_mod2(e, oe), lk_mod2(d, o)), std::string(name) + " lk mod 2");
            d = e;
            o = oe;
            ++fours;
        }
    }
    r.check(kmoves >= 200 && fours >= 200, "too few applications");
    r.why << (r.ok ? "" : "; ") << kmoves << " R/k-moves, " << fours << " 4-moves";
    return r;
}

Outcome bracket_jones() {
    Outcome r;
    std::mt19937 rng(99);
    int steps = 0;
    for (const char* name : {"trefoil", "figure_eight", "hopf", "borromean", "unknot"}) {
        LinkDiagram d = load_corpus_entry(src(std::string("corpus/") + name + ".pd")).diagram;
        Orientation o = Orientation::reference(d);
        LaurentPoly v0 = jones(d, o);
        for (int step = 0; step < 30; ++step) {
            MoveSet set;
            set.n = 0;
            Move m = random_move(d, set, rng, 9);
            auto [e, oe] = apply(d, o, m);
            bool r1 = m.kind == MoveKind::R1Add || m.kind == MoveKind::R1Remove;
            if (!r1) r.check(bracket(e) == bracket(d), std::string(name) + " bracket: " + describe(m));
            r.check(jones(e, oe) == v0, std::string(name) + " Jones: " + describe(m));
            d = e;
            o = oe;
            ++steps;
        }
    }
    CycloInt A = CycloInt::zeta(8, -1);
    TwistVector v0 = twist_bracket_vector(0, A), v4 = twist_bracket_vector(4, A);
    CycloInt minus_i = -CycloInt::zeta(8, 4);
    r.check(v4.v.size() == v0.v.size(), "twist vector shapes");
    for (std::size_t k = 0; k < v0.v.size() && k < v4.v.size(); ++k)
        r.check(v4.v[k] == minus_i * v0.v[k], "<L4> = -i <L0>");
    int lm = 0;
    for (const auto& e : corpus()) {
        Orientation o = e.orient();
        CycloInt v = eval_jones_at_i(e.diagram, o);
        int com = components(e.diagram).count;
        auto ld = linking_matrix(e.diagram, o);
        bool odd = false;
        for (int j = 0; j < ld.size(); ++j) {
            long long s = 0;
            for (int k = 0; k < ld.size(); ++k)
                if (k != j) s += ld.lk(j, k);
            odd |= s % 2 != 0;
        }
        r.check(v.zero() == odd, e.name + " V(i) zero law");
        if (!v.zero()) r.check(v * v.conj() == CycloInt(4, 1LL << (com - 1)), e.name + " |V(i)|^2");
        ++lm;
    }
    CycloInt want(4, 1);
    for (int n = 1; n <= 4; ++n) {
        LinkDiagram t = trivial_link(n);
        r.check(eval_jones_at_i(t, Orientation::reference(t)) == want, "V(i) of " + std::to_string(n) + " circles");
        want = want * -CycloInt::sqrt2();
    }
    r.why << (r.ok ? "" : "; ") << steps << " moves, " << lm << " corpus links";
    return r;
}

Outcome kauffman() {
    Outcome r;
    CycloInt p = CycloInt::zeta(4, 1), a = -CycloInt::zeta(4, 1);
    TwistVector v0 = twist_kauffman_vector(0, p, a), v4 = twist_kauffman_vector(4, p, a);
    r.check(v0.v.size() == v4.v.size(), "shapes");
    for (std::size_t k = 0; k < v0.v.size() && k < v4.v.size(); ++k) r.check(v4.v[k] == -v0.v[k], "entry differs");
    return r;
}

int four_moves(const Certificate& c) {
    int n = 0;
    for (const auto& m : c.steps) n += is_nmove(m) && m.n == 4;
    return n;
}

Outcome certificates() {
    Outcome r;
    for (const char* f : {"certs/trefoil_to_unknot.cert", "certs/figure_eight_to_unknot.cert"}) {
        try {
            Certificate c = load_certificate(src(f));
            ReplayReport rep = replay(c);
            r.check(rep.end.size() == 0 && rep.end.free_loops == 1, std::string(f) + " does not end at the unknot");
        } catch (const std::exception& ex) {
            r.check(false, std::string(f) + ": " + ex.what());
        }
    }
    SearchBudget b;
    b.max_crossings = 8;
    b.max_depth = 12;
    for (const char* name : {"trefoil", "figure_eight"}) {
        LinkDiagram d = load_corpus_entry(src(std::string("corpus/") + name + ".pd")).diagram;
        SearchResult s = reduce_to_trivial(d, b);
        r.check(s.outcome == SearchResult::Outcome::Reduced && s.target == "unknot",
                std::string(name) + " not rediscovered (" + s.exhausted + ")");
        if (s.certificate) replay(*s.certificate);
    }
    try {
        Certificate c = load_certificate(src("certs/12jab_to_2cable.cert"));
        r.check(four_moves(c) == 3, "12jab certificate uses " + std::to_string(four_moves(c)) + " 4-moves");
        ReplayReport rep = replay(c);
        CorpusEntry cable = load_corpus_entry(src("corpus/trefoil_2cable.pd"));
        r.check(jones(rep.end, rep.end_orientation) == jones(cable.diagram, cable.orient()),
                "12jab end Jones differs from the 2-cable");
    } catch (const std::exception& ex) {
        r.check(false, std::string("12jab: ") + ex.what());
    }
    return r;
}

Outcome arf_audits() {
    Outcome r;
    int audited = 0, skipped = 0;
    for (const char* f : {"certs/trefoil_to_unknot.cert", "certs/figure_eight_to_unknot.cert", "certs/12jab_to_2cable.cert"}) {
        Certificate c = load_certificate(src(f));
        Orientation o = c.orientation ? *c.orientation : Orientation::reference(c.start);
        ArfValue s0 = arf(c.start, o);
        ArfValue s1 = arf(c.claimed_end, Orientation::reference(c.claimed_end));
        if (!s0.defined || !s1.defined) {
            ++skipped;
            continue;
        }
        ArfAudit a = arf_parity_audit(c, o);
        r.check(a.ok(), std::string(f) + " audit fails");
        ++audited;
    }
    r.check(audited >= 2, "too few audits");
    r.why << (r.ok ? "" : "; ") << audited << " audited, " << skipped << " with undefined Arf";
    return r;
}

Outcome tangles() {
    Outcome r;
    TangleTable t = load_table(src("tables/fig32.table"), src("tables/fig32_scripts.json"));
    r.check(t.entries.size() == 144, "table size");
    int closed = 0;
    for (const auto& e : t.entries) {
        std::string why;
        r.check(verify_entry(e, &why), "entry " + std::to_string(e.i) + std::to_string(e.j) + std::to_string(e.a) +
                                           std::to_string(e.b) + ": " + why);
        r.check(e.closed || (e.result >= 1 && e.result <= 6), "unresolved entry");
        closed += e.closed;
    }
    std::vector<std::string> exprs = {"N(c+*c+)", "N(e1)", "D(e2)", "N(e3*e3*e3*e3)", "N(e4*e4*e4*e4*e4*e4)",
                                      "D(r(e3*e3*e3*e3))", "N(r(e5)*e5*e5)", "N(r(e5*e3)*e5)", "D(e5*e5)",
                                      "N(e5*r(e6)*e3)", "D(r(e3*e4)*e5)", "N(r(r(e3*e3)*e4)*e4*e4)", "N(e6*e6)",
                                      "D(e3*e3*r(e3*e3))"};
    for (const auto& e : corpus())
        if (e.tangle && components(e.diagram).count == 2) exprs.push_back(*e.tangle);
    int classified = 0;
    for (const auto& s : exprs) {
        ClosedTangleExpr e = parse_tangle(s);
        if (components(to_diagram(e)).count != 2) continue;
        SearchBudget b;
        b.max_crossings = 10;
        b.max_states = 400000;
        try {
            TwoLinkResult res = classify_algebraic_2link(e, b);
            r.check((res.lk % 2 == 0) == (res.cls == TwoLinkClass::Trivial2), s + " against lk parity");
            if (res.certificate) {
                ReplayReport rep = replay(*res.certificate);
                LinkDiagram goal = res.cls == TwoLinkClass::Hopf ? standard_hopf() : trivial_link(2);
                r.check(canonical_code(rep.end) == canonical_code(goal), s + " certificate ends elsewhere");
            }
            ++classified;
        } catch (const std::exception& ex) {
            r.check(false, s + ": " + ex.what());
        }
    }
    r.check(classified >= 10, "only " + std::to_string(classified) + " expressions classified");
    r.why << (r.ok ? "" : "; ") << t.entries.size() << " entries (" << closed << " closed), " << classified
          << " 2-links classified";
    return r;
}

Outcome skein() {
    Outcome r;
    r.check(hopf_identity_check().ok, "Hopf identity");
    using M = MultiLaurent;
    M lead = -M(1).divide(M::var(Var::X0));
    SkeinVector want;
    want.add(Basis::E3, lead * M::var(Var::X1));
    want.add(Basis::E2, lead * M::var(Var::X2));
    want.add(Basis::E4, lead * M::var(Var::X3));
    want.add(Basis::E6, lead * M::var(Var::X4));
    want.add(Basis::E1, lead * M::var(Var::XInf) * M::var(Var::A, 2));
    r.check(reduce_tangle_skein(parse_tangle("r(e3*e3)").expr) == want, "r(e3*e3) vector");
    std::array<long long, var_count> at{1, 0, 0, 0, -1, 0, 1};
    int cells = 0;
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    TangleExpr l = TangleExpr::basic(i), rr = TangleExpr::basic(j);
                    if (a) l = TangleExpr::rot(l);
                    if (b) rr = TangleExpr::rot(rr);
                    TangleExpr e = TangleExpr::star(l, rr);
                    if (has_closed_component(e)) continue;
                    SkeinVector v = reduce_tangle_skein(e);
                    int k = reduce_algebraic(e).basic;
                    for (int m = 1; m <= 6; ++m)
                        r.check(v.at(basic_basis(m)).eval(at) == (m == k ? 1 : 0), "specialization of " + to_string(e));
                    ++cells;
                }
    r.why << (r.ok ? "" : "; ") << cells << " open cells specialized";
    return r;
}

LinkDiagram class_target(ClassLabel l) {
    switch (l) {
        case ClassLabel::Trivial1: return trivial_link(1);
        case ClassLabel::Trivial2: return trivial_link(2);
        case ClassLabel::Trivial3: return trivial_link(3);
        case ClassLabel::Hopf: return standard_hopf();
        case ClassLabel::HopfPlusTrivial: return parse_pd("loops=1; X(2,1,3,0); X(0,3,1,2)");
        case ClassLabel::ConnectedSumTwoHopf: return braid_closure_diagram(BraidWord::parse("s1^-2 s2^2"));
        case ClassLabel::Torus33: return braid_closure_diagram(BraidWord::parse("s1 s2 s1 s2 s1 s2"));
        case ClassLabel::Borromean: return load_corpus_entry(src("corpus/borromean.pd")).diagram;
    }
    throw Error("unknown class label");
}

Outcome braid_classes() {
    Outcome r;
    const auto& table = classification_table();
    r.check(table.size() == 16, "table size");
    std::set<int> classes;
    for (const auto& e : table) {
        BraidWord w = BraidWord::parse(e.word);
        LinkDiagram d = braid_closure_diagram(w);
        Classification c = classify_closure(w);
        classes.insert(c.class_index);
        r.check(c.label == e.label, e.word + " label");
        r.check(components(d).count == label_components(c.label), e.word + " components");
        r.check(col_group(d, 4) == col_group(class_target(c.label), 4), e.word + " Col_4");
    }
    r.check(classes.size() == 16, "representatives share a class");
    return r;
}

struct Criterion {
    int id;
    const char* name;
    double limit;  // seconds, 0 when the criterion has none
    Outcome (*run)();
};

}  // namespace

int main() {
    const Criterion all[] = {
        {1, "Coxeter quotient", 1, coxeter},
        {2, "Fox colorings", 10, colorings},
        {3, "move invariance", 0, move_invariance},
        {4, "bracket and Jones", 30, bracket_jones},
        {5, "Kauffman twist vector", 1, kauffman},
        {6, "certificates", 60, certificates},
        {7, "Arf parity audit", 0, arf_audits},
        {8, "tangle calculus", 0, tangles},
        {9, "skein module", 5, skein},
        {10, "3-braid classification", 0, braid_classes},
    };
    int failed = 0;
    for (const auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& ex) {
            o.check(false, std::string("exception: ") + ex.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = c.limit == 0 || secs < c.limit;
        bool pass = o.ok && in_time;
        failed += !pass;
        std::cout << "criterion " << c.id << " (" << c.name << "): " << (pass ? "PASS" : "FAIL") << " in "
                  << static_cast<long long>(secs * 1000) << " ms";
        if (c.limit > 0) std::cout << " (limit " << c.limit << " s)";
        std::string why = o.why.str();
        if (!why.empty()) std::cout << " - " << why;
        if (!in_time) std::cout << " - over the time limit";
        std::cout << "\n";
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
    return failed ? 1 : 0;
}
