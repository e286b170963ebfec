#include <fstream>
#include <sstream>

#include "json.hpp"
#include "k4/coloring.hpp"
#include "k4/tangle.hpp"

namespace k4 {

namespace {

TangleDiagram rotated(int i, int a) {
    TangleDiagram t = basic_tangle(i);
    return a ? rotate(t) : t;
}

TangleExpr product_expr(int i, int j, int a, int b) {
    TangleExpr l = TangleExpr::basic(i), r = TangleExpr::basic(j);
    if (a) l = TangleExpr::rot(l);
    if (b) r = TangleExpr::rot(r);
    return TangleExpr::star(l, r);
}

std::size_t entry_index(int i, int j, int a, int b) {
    if (i < 1 || i > 6 || j < 1 || j > 6 || a < 0 || a > 1 || b < 0 || b > 1) throw Error("no such table entry");
    return static_cast<std::size_t>((((i - 1) * 6 + (j - 1)) * 2 + a) * 2 + b);
}

std::string entry_key(const TableEntry& e) {
    return std::to_string(e.i) + " " + std::to_string(e.j) + " " + std::to_string(e.a) + " " + std::to_string(e.b);
}

std::string rooted(const TangleDiagram& t) { return canonical_code(t.framed, 0); }

}  // namespace

TangleDiagram table_product(int i, int j, int a, int b) { return star(rotated(i, a), rotated(j, b)); }

Certificate rational_script(const TangleDiagram& start, const Fraction& f, const SearchBudget& leg_budget,
                            const SearchOptions& opt) {
    SearchOptions o = opt;
    o.frozen = 0;
    o.n = 4;
    Certificate cert;
    cert.start = start.framed;
    LinkDiagram cur = start.framed;
    // right-form waypoints first; the left form suits products that start with a twist
    std::vector<TangleDiagram> ways;
    std::size_t from = 0;
    std::string code = canonical_code(cur, 0), why;
    for (bool left : {false, true}) {
        ways = rational_waypoints(f, left);
        if (code == rooted(ways[0])) {
            from = 1;
            why.clear();
            break;
        }
        SearchResult r = bidirectional_check(cur, ways[0].framed, leg_budget, o);
        if (r.outcome == SearchResult::Outcome::Reduced) {
            cert.steps = r.certificate->steps;
            cur = r.certificate->claimed_end;
            from = 1;
            why.clear();
            break;
        }
        why = r.obstruction.empty() ? r.exhausted : r.obstruction;
    }
    if (!why.empty()) throw Error("no script from the given diagram to a regular diagram of " + f.str() + " (" + why + ")");
    for (std::size_t k = from; k < ways.size(); ++k) {
        const auto& w = ways[k];
        if (canonical_code(cur, 0) == rooted(w)) continue;
        SearchResult r = bidirectional_check(cur, w.framed, leg_budget, o);
        if (r.outcome != SearchResult::Outcome::Reduced)
            throw Error("no script leg towards a diagram of " + f.str() + " (" +
                        (r.obstruction.empty() ? r.exhausted : r.obstruction) + ")");
        for (auto& m : r.certificate->steps) cert.steps.push_back(m);
        cur = r.certificate->claimed_end;
    }
    cert.claimed_end = cur;
    return cert;
}

const TableEntry& TangleTable::at(int i, int j, int a, int b) const {
    std::size_t k = entry_index(i, j, a, b);
    if (k >= entries.size()) throw Error("tangle table is incomplete");
    const TableEntry& e = entries[k];
    if (e.i != i || e.j != j || e.a != a || e.b != b) throw Error("tangle table is out of order");
    return e;
}

TangleTable build_table(const SearchBudget& budget, const SearchOptions& opt) {
    SearchOptions o = opt;
    o.frozen = 0;
    o.n = 4;
    TangleTable t;
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    TableEntry e;
                    e.i = i, e.j = j, e.a = a, e.b = b;
                    TangleDiagram d = table_product(i, j, a, b);
                    if (closed_components(d) > 0) {
                        e.closed = true;
                        t.entries.push_back(e);
                        continue;
                    }
                    auto f = fraction_of(product_expr(i, j, a, b));
                    if (!f) throw Error("internal error: open table product is not rational");
                    e.result = basic_class(*f);
                    e.script = rational_script(d, *f, budget, o);
                    e.script->label = to_string(product_expr(i, j, a, b));
                    t.entries.push_back(e);
                }
    return t;
}

std::string table_text(const TangleTable& t) {
    std::ostringstream os;
    os << "# r^a(ei) * r^b(ej): i j a b -> result origin\n";
    for (const auto& e : t.entries) {
        os << entry_key(e) << " -> " << (e.closed ? "CLOSED" : "e" + std::to_string(e.result)) << " " << e.origin
           << "\n";
    }
    return os.str();
}

std::string table_scripts_json(const TangleTable& t) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : t.entries) {
        if (!e.script) continue;
        arr.push_back({{"entry", entry_key(e)}, {"certificate", nlohmann::json::parse(to_json(*e.script))}});
    }
    return arr.dump(1) + "\n";
}

TangleTable parse_table(const std::string& text, const std::string& scripts_json) {
    TangleTable t;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        TableEntry e;
        std::string arrow, res;
        if (!(ls >> e.i >> e.j >> e.a >> e.b >> arrow >> res) || arrow != "->")
            throw Error("tangle table line " + std::to_string(lineno) + " is malformed");
        ls >> e.origin;
        if (res == "CLOSED") e.closed = true;
        else if (res.size() == 2 && res[0] == 'e' && res[1] >= '1' && res[1] <= '6') e.result = res[1] - '0';
        else throw Error("tangle table line " + std::to_string(lineno) + ": bad result " + res);
        if (entry_index(e.i, e.j, e.a, e.b) != t.entries.size())
            throw Error("tangle table line " + std::to_string(lineno) + " is out of order");
        t.entries.push_back(e);
    }
    if (t.entries.size() != 144) throw Error("tangle table has " + std::to_string(t.entries.size()) + " of 144 entries");
    auto arr = nlohmann::json::parse(scripts_json);
    for (const auto& item : arr) {
        std::istringstream ks(item.at("entry").get<std::string>());
        int i, j, a, b;
        if (!(ks >> i >> j >> a >> b)) throw Error("bad script entry key");
        t.entries[entry_index(i, j, a, b)].script = parse_certificate(item.at("certificate").dump());
    }
    return t;
}

TangleTable load_table(const std::string& table_path, const std::string& scripts_path) {
    auto slurp = [](const std::string& p) {
        std::ifstream in(p);
        if (!in) throw Error("cannot read " + p);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    return parse_table(slurp(table_path), slurp(scripts_path));
}

bool verify_entry(const TableEntry& e, std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    TangleDiagram d = table_product(e.i, e.j, e.a, e.b);
    bool closed = closed_components(d) > 0;
    if (closed != e.closed) return fail("closed-component flag is wrong");
    if (closed) return true;
    if (!e.script) return fail("missing script");
    const Certificate& c = *e.script;
    if (canonical_code(c.start, 0) != rooted(d)) return fail("script does not start at the product");
    for (const auto& m : c.steps)
        for (int x : m.site.crossings)
            if (x == 0) return fail("script moves the frame crossing");
    ReplayReport r;
    try {
        r = replay(c);
    } catch (const std::exception& ex) {
        return fail(std::string("replay failed: ") + ex.what());
    }
    for (const auto& m : c.steps) {
        if ((m.kind == MoveKind::NAdd || m.kind == MoveKind::NRemove) && m.n != 4) return fail("non-4-move in script");
    }
    TangleDiagram goal = basic_tangle(e.result);
    if (canonical_code(r.end, 0) != rooted(goal)) return fail("script does not end at e" + std::to_string(e.result));
    return true;
}

// --- reduction ---------------------------------------------------------------

namespace {

struct Reduced {
    bool closed = false;
    int basic = 0;
    int rot = 0;
};

Reduced reduce_node(const TangleExpr& e, const std::string& path, AlgebraicReduction& out) {
    auto child = [&](int k) { return path.empty() ? std::to_string(k) : path + "." + std::to_string(k); };
    switch (e.kind) {
        case TangleExpr::Kind::Basic: return {false, e.value, 0};
        case TangleExpr::Kind::Crossing: return {false, e.value > 0 ? 3 : 4, 0};
        case TangleExpr::Kind::Rot: {
            Reduced r = reduce_node(e.kids[0], child(0), out);
            if (!r.closed) r.rot ^= 1;  // basics are symmetric under the half turn
            return r;
        }
        case TangleExpr::Kind::Star: {
            Reduced l = reduce_node(e.kids[0], child(0), out);
            if (l.closed) return l;
            Reduced r = reduce_node(e.kids[1], child(1), out);
            if (r.closed) return r;
            TangleExpr prod = product_expr(l.basic, r.basic, l.rot, r.rot);
            if (closed_components(to_tangle(prod)) > 0) {
                out.closed_at = path;
                return {true, 0, 0};
            }
            auto f = fraction_of(prod);
            if (!f) throw Error("internal error: open product of basics is not rational");
            int k = basic_class(*f);
            out.script.push_back({path, l.basic, r.basic, l.rot, r.rot, k});
            return {false, k, 0};
        }
    }
    throw Error("bad tangle expression");
}

}  // namespace

AlgebraicReduction reduce_algebraic(const TangleExpr& e) {
    AlgebraicReduction out;
    Reduced r = reduce_node(e, "", out);
    if (r.closed) {
        out.closed_component = true;
        return out;
    }
    if (r.rot) {
        // r(ei) = r(ei) * e1, a table cell
        int k = basic_class(reciprocal(basic_fraction(r.basic)));
        out.script.push_back({"", r.basic, 1, 1, 0, k});
        r.basic = k;
    }
    out.basic = r.basic;
    return out;
}

std::string class_name(TwoLinkClass c) { return c == TwoLinkClass::Hopf ? "Hopf" : "Trivial2"; }

TwoLinkResult classify_algebraic_2link(const ClosedTangleExpr& e, const SearchBudget& budget,
                                       const SearchOptions& opt) {
    LinkDiagram d = to_diagram(e);
    int comps = components(d).count;
    if (comps != 2) throw Error("expected a 2-component link, got " + std::to_string(comps) + " components");
    TwoLinkResult out;
    out.lk = linking_matrix(d, Orientation::reference(d)).lk(0, 1);
    out.cls = out.lk % 2 == 0 ? TwoLinkClass::Trivial2 : TwoLinkClass::Hopf;
    out.reduction = reduce_algebraic(e.expr);
    if (!out.reduction.closed_component) {
        LinkDiagram b = closure(basic_tangle(out.reduction.basic), e.closure);
        if (components(b).count != 2)
            throw Error("internal error: closure of the reduced basic tangle has the wrong component count");
        long long blk = linking_matrix(b, Orientation::reference(b)).lk(0, 1);
        if ((blk - out.lk) % 2 != 0) throw Error("internal error: reduction changed linking mod 2");
        out.note = "tangle reduces to e" + std::to_string(out.reduction.basic);
    } else {
        out.note = "closed component first appears at node '" + out.reduction.closed_at + "'";
    }
    SearchResult r = reduce_to_trivial(d, budget, opt);
    if (r.outcome == SearchResult::Outcome::Reduced) {
        bool hopf = r.target == "Hopf link";
        if (hopf != (out.cls == TwoLinkClass::Hopf))
            throw Error("internal error: search reached " + r.target + " against linking parity");
        out.certificate = r.certificate;
        out.certificate->label = to_string(e);
    } else {
        out.note += "; no certificate within budget (" + r.exhausted + ")";
    }
    return out;
}

}  // namespace k4
