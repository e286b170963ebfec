#include <numeric>

#include "doctest.h"
#include "k4/coloring.hpp"
#include "k4/polynomials.hpp"
#include "k4/tangle.hpp"
#include "test_util.hpp"

using namespace k4;

namespace {

const char* w_text = "N(r(r(e_3*e_3)*r(e_4*e_4))*r(r(e_3*e_3)*r(e_4*e_4))*r(e_3*e_3))";
const char* br_text = "N(r(r(e3*e3)*r(e4*e4))*r(e3*e3)*r(e4*e4))";

// At A = e^(i pi/4) the bracket of a rational tangle T = p/q satisfies
// p <D(T)> = -i q <N(T)>; independent of how the diagram was drawn.
bool fraction_oracle(const TangleDiagram& t, const Fraction& f) {
    CycloInt A = CycloInt::zeta(4, 1);
    CycloInt n = evaluate(bracket(closure(t, Closure::N)), A);
    CycloInt d = evaluate(bracket(closure(t, Closure::D)), A);
    return f.p * d == f.q * (CycloInt::zeta(4, -2) * n);
}

std::vector<Fraction> sample_fractions() {
    std::vector<Fraction> out{Fraction::infinity()};
    for (long long q = 1; q <= 7; ++q)
        for (long long p = -9; p <= 9; ++p)
            if (std::gcd(p < 0 ? -p : p, q) == 1) out.push_back(Fraction(p, q));
    return out;
}

std::vector<std::vector<int>> lk_pairs(const LinkDiagram& d) {
    LinkingData ld = linking_matrix(d, Orientation::reference(d));
    std::vector<std::vector<int>> out;
    for (int i = 0; i < ld.size(); ++i)
        for (int j = i + 1; j < ld.size(); ++j) out.push_back({i, j, static_cast<int>(ld.lk(i, j))});
    return out;
}

}  // namespace

TEST_CASE("tangle grammar") {
    auto e = parse_tangle("r(e3*e3)");
    CHECK(e.closure == Closure::None);
    CHECK(e.expr ==
          TangleExpr::rot(TangleExpr::star(TangleExpr::basic(3), TangleExpr::basic(3))));

    auto w = parse_tangle(w_text);
    CHECK(w.closure == Closure::N);
    REQUIRE(w.expr.kind == TangleExpr::Kind::Star);
    CHECK(w.expr.kids[1] == TangleExpr::rot(TangleExpr::star(TangleExpr::basic(3), TangleExpr::basic(3))));
    CHECK(to_string(parse_tangle(to_string(w))) == to_string(w));

    auto chain = parse_tangle("e1*e2*e3").expr;  // left-associative
    CHECK(chain.kids[0].kind == TangleExpr::Kind::Star);
    CHECK(chain.kids[1] == TangleExpr::basic(3));

    CHECK(parse_tangle("c+*c-").expr.kids[1] == TangleExpr::crossing(-1));
    CHECK(parse_tangle("D((e5))").closure == Closure::D);

    for (const char* bad : {"", "N(e3", "e7", "r(e3))", "e3**e4", "N(e3)*e4", "q"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_tangle(bad), ParseError);
    }
    try {
        parse_tangle("e3*x");
    } catch (const ParseError& ex) {
        CHECK(ex.pos == 3);
    }
}

TEST_CASE("closures of small expressions") {
    LinkDiagram hopf = to_diagram(parse_tangle("N(c+*c+)"));
    CHECK(components(hopf).count == 2);
    CHECK(hopf.size() == 2);
    CHECK(canonical_code(hopf) == canonical_code(test::load("hopf")));
    CHECK(components(to_diagram(parse_tangle("N(e1)"))).count == 2);
    CHECK(components(to_diagram(parse_tangle("D(e1)"))).count == 1);
    CHECK_THROWS(to_diagram(parse_tangle("e3")));
}

TEST_CASE("Borromean and W expressions") {
    LinkDiagram br = to_diagram(parse_tangle(br_text));
    CHECK(components(br).count == 3);
    for (auto& p : lk_pairs(br)) CHECK(p[2] == 0);
    auto ref = test::load("borromean");
    CHECK(jones(br, Orientation::reference(br)) == jones(ref, Orientation::reference(ref)));

    LinkDiagram w = to_diagram(parse_tangle(w_text));
    CHECK(components(w).count == 3);
    CHECK(w.size() == 10);
    for (auto& p : lk_pairs(w)) CHECK(p[2] == 0);
    CHECK(col_group(w, 4) == AbelianGroup::from_cyclic({4, 4, 4}));
}

TEST_CASE("rational tangles carry their fraction") {
    for (const auto& f : sample_fractions()) {
        CAPTURE(f.str());
        TangleDiagram t = rational_tangle(f);
        CHECK(is_planar(t.framed));
        CHECK(closed_components(t) == 0);
        CHECK(connectivity(t) == connectivity_of(f));
        CHECK(fraction_oracle(t, f));
        CHECK(fraction_oracle(rotate(t), reciprocal(f)));
        CHECK(fraction_oracle(mirror(t), Fraction(-f.p, f.q)));
        CHECK(cf_value(continued_fraction(f)) == f);
    }
}

TEST_CASE("fraction_of follows the diagrams") {
    std::vector<std::string> exprs = {"e5*r(e5)", "r(e3*e5)*e4", "r(r(e6)*e3)*e5*e5", "e6*e3*e3", "r(e6)",
                                      "r(r(e3*e3)*e4)*c+", "e2*e3", "r(e5)*e1"};
    for (const auto& s : exprs) {
        CAPTURE(s);
        auto e = parse_tangle(s).expr;
        auto f = fraction_of(e);
        REQUIRE(f);
        CHECK(fraction_oracle(to_tangle(e), *f));
    }
    CHECK(*fraction_of(parse_tangle("e5*r(e5)").expr) == Fraction(5, 2));
    CHECK(!fraction_of(parse_tangle("r(e5)*r(e5)").expr));
    CHECK(has_closed_component(parse_tangle("e2*e2").expr));
    CHECK(has_closed_component(parse_tangle("e6*e6").expr));
    CHECK(has_closed_component(parse_tangle("r(e5)*r(e5)").expr));
    CHECK(!has_closed_component(parse_tangle("r(e5)*r(e5*e3)").expr));
}

TEST_CASE("rotation and closures") {
    for (const auto& f : sample_fractions()) {
        TangleDiagram t = rational_tangle(f);
        CAPTURE(f.str());
        // a quarter turn with the mirror swaps the closures up to the mirror
        CHECK(canonical_code(closure(rotate(t), Closure::N)) == canonical_code(closure(mirror(t), Closure::D)));
        CHECK(canonical_code(closure(rotate(t), Closure::D)) == canonical_code(closure(mirror(t), Closure::N)));
    }
}

TEST_CASE("basic tangles and their classes") {
    std::vector<Fraction> want = {Fraction(0), Fraction::infinity(), Fraction(1), Fraction(-1), Fraction(2),
                                  Fraction(-1, 2)};
    for (int i = 1; i <= 6; ++i) {
        CAPTURE(i);
        CHECK(basic_fraction(i) == want[i - 1]);
        CHECK(basic_index(want[i - 1]) == i);
        CHECK(basic_class(want[i - 1]) == i);
        CHECK(fraction_oracle(basic_tangle(i), want[i - 1]));
        // r permutes the classes: the class of 1/x
        CHECK(rotate_basic(i) == basic_class(reciprocal(want[i - 1])));
        CHECK(rotate_basic(rotate_basic(i)) == i);
    }
    // framings measured on the templates
    CHECK(framing(basic_tangle(3)) == -1);
    CHECK(framing(basic_tangle(4)) == 1);
    CHECK(framing(basic_tangle(5)) == 0);
    CHECK(framing(basic_tangle(6)) == 2);
    // classes are points of P^1(Z/4): changing a numerator or denominator by 4 keeps the class
    for (const auto& f : sample_fractions()) {
        if (f.is_infinity()) continue;
        CHECK(basic_class(f) == basic_class(Fraction(f.p + 4 * f.q, f.q)));
        if (f.p != 0) CHECK(basic_class(f) == basic_class(reciprocal(reciprocal(f) + 4)));
    }
}

TEST_CASE("waypoints shrink to the basic tangle") {
    for (const auto& f : sample_fractions()) {
        CAPTURE(f.str());
        for (bool left : {false, true}) {
            auto ways = rational_waypoints(f, left);
            REQUIRE(!ways.empty());
            CHECK(canonical_code(ways.back().framed, 0) == canonical_code(basic_tangle(basic_class(f)).framed, 0));
            for (const auto& w : ways) CHECK(closed_components(w) == 0);
            // every other waypoint is a regular diagram; a 4-move never adds crossings
            for (std::size_t k = 1; k < ways.size(); ++k) CHECK(ways[k].crossings() <= ways[k - 1].crossings());
            CHECK(ways.size() <= static_cast<std::size_t>(2 * ways[0].crossings() + 2));
        }
    }
}

TEST_CASE("multiplication table") {
    TangleTable t = load_table(test::source_path("tables/fig32.table"), test::source_path("tables/fig32_scripts.json"));
    REQUIRE(t.entries.size() == 144);
    int closed = 0;
    for (const auto& e : t.entries) {
        CAPTURE(e.i);
        CAPTURE(e.j);
        CAPTURE(e.a);
        CAPTURE(e.b);
        std::string why;
        CHECK_MESSAGE(verify_entry(e, &why), why);
        TangleDiagram d = table_product(e.i, e.j, e.a, e.b);
        if (e.closed) {
            ++closed;
            CHECK(closed_components(d) > 0);
            continue;
        }
        TangleDiagram b = basic_tangle(e.result);
        CHECK(connectivity(d) == connectivity(b));
        for (Closure c : {Closure::N, Closure::D})
            CHECK(col_group(closure(d, c), 4) == col_group(closure(b, c), 4));
    }
    CHECK(closed == 16);
    // the hardest cell: e3 * r(e5) = 3/2 lands on e6
    CHECK(t.at(3, 5, 0, 1).result == 6);
}

TEST_CASE("table scripts are checked, not trusted") {
    TangleTable t = load_table(test::source_path("tables/fig32.table"), test::source_path("tables/fig32_scripts.json"));
    TableEntry e = t.at(3, 5, 0, 1);
    REQUIRE(e.script);
    REQUIRE(!e.script->steps.empty());
    TableEntry wrong = e;
    wrong.result = 5;
    CHECK(!verify_entry(wrong));
    TableEntry cut = e;
    cut.script->steps.pop_back();
    CHECK(!verify_entry(cut));
    TableEntry flag = e;
    flag.closed = true;
    CHECK(!verify_entry(flag));
    CHECK_THROWS(parse_table("1 1 0 0 -> e1 derived\n", "[]"));
}

TEST_CASE("algebraic reduction") {
    auto single = reduce_algebraic(TangleExpr::basic(4));
    CHECK(single.basic == 4);
    CHECK(single.script.empty());

    auto fig = reduce_algebraic(parse_tangle("e3*r(e5)").expr);
    CHECK(fig.basic == 6);
    REQUIRE(fig.script.size() == 1);
    CHECK(fig.script[0].node == "");

    // the reduction agrees with the 4-move class of the fraction
    for (const char* s : {"r(r(e3*e3)*e4)*e5", "e6*e3*e3*e3", "r(e5*e5*e5)*r(e6)", "r(r(r(e3*e3*e3)*e4)*e5)"}) {
        CAPTURE(s);
        auto e = parse_tangle(s).expr;
        CHECK(reduce_algebraic(e).basic == basic_class(*fraction_of(e)));
    }

    auto closed = reduce_algebraic(parse_tangle("e3*(e2*e2)").expr);
    CHECK(closed.closed_component);
    CHECK(closed.closed_at == "1");
}

TEST_CASE("e6*e6 compositions close to trivial 2-links") {
    int two = 0;
    for (int i = 1; i <= 6; ++i)
        for (Closure c : {Closure::N, Closure::D}) {
            ClosedTangleExpr e{TangleExpr::star(parse_tangle("r(e6*e6)").expr, TangleExpr::basic(i)), c};
            LinkDiagram d = to_diagram(e);
            if (components(d).count != 2) continue;
            ++two;
            CAPTURE(to_string(e));
            SearchBudget b;
            b.max_crossings = 10;
            TwoLinkResult r = classify_algebraic_2link(e, b);
            CHECK((r.lk % 2 == 0) == (r.cls == TwoLinkClass::Trivial2));
        }
    CHECK(two > 0);
}

TEST_CASE("2-algebraic 2-links classify by linking parity") {
    std::vector<std::string> exprs = {
        "N(c+*c+)", "N(e1)", "D(e2)", "N(e3*e3*e3*e3)", "N(e4*e4*e4*e4*e4*e4)", "D(r(e3*e3*e3*e3))",
        "N(r(e5)*e5*e5)", "N(r(e5*e3)*e5)", "D(e5*e5)", "N(e5*r(e6)*e3)", "N(r(e5)*r(e5))", "D(r(e3*e4)*e5)",
        "N(r(r(e3*e3)*e4)*e4*e4)", "N(e6*e6)", "D(e3*e3*r(e3*e3))"};
    int classified = 0;
    for (const auto& s : exprs) {
        ClosedTangleExpr e = parse_tangle(s);
        LinkDiagram d = to_diagram(e);
        if (components(d).count != 2) continue;
        CAPTURE(s);
        SearchBudget b;
        b.max_crossings = 10;
        b.max_states = 400000;
        TwoLinkResult r = classify_algebraic_2link(e, b);
        CHECK((r.lk % 2 == 0) == (r.cls == TwoLinkClass::Trivial2));
        if (r.certificate) {
            ReplayReport rep = replay(*r.certificate);
            LinkDiagram goal = r.cls == TwoLinkClass::Hopf ? standard_hopf() : trivial_link(2);
            CHECK(canonical_code(rep.end) == canonical_code(goal));
        }
        ++classified;
    }
    CHECK(classified >= 10);
    CHECK_THROWS(classify_algebraic_2link(parse_tangle("N(e3*e3*e3)"), SearchBudget{}));
}
