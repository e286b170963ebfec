#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "k4/certificate.hpp"
#include "k4/diagram.hpp"
#include "k4/search.hpp"

namespace k4 {

// p/q in lowest terms with q >= 0; infinity is 1/0.
struct Fraction {
    long long p = 0, q = 1;

    Fraction() = default;
    Fraction(long long p_, long long q_ = 1);
    static Fraction infinity() { return Fraction(1, 0); }
    bool is_infinity() const { return q == 0; }
    bool is_integer() const { return q == 1; }
    std::string str() const;
    bool operator==(const Fraction&) const = default;
};

Fraction reciprocal(const Fraction& f);
Fraction operator+(const Fraction& a, long long n);

// Which end NW is joined to.
enum class Connectivity { Zero, Infinity, One };  // NE, SW, SE
Connectivity connectivity_of(const Fraction& f);

// A 2-tangle diagram kept inside a closed diagram: crossing 0 is a frame crossing
// outside the tangle whose slots 0..3 hold the NW, NE, SE, SW ends. The four
// boundary regions then stay distinct faces, so moves that avoid crossing 0 are
// exactly the moves inside the tangle ball.
struct TangleDiagram {
    LinkDiagram framed;
    int crossings() const { return framed.size() - 1; }
};

enum class Closure { None, N, D };

TangleDiagram tangle_zero();
TangleDiagram tangle_infinity();
// +1 is the crossing whose SW-NE strand is over.
TangleDiagram tangle_crossing(int sign);
TangleDiagram tangle_twist(long long k);  // k horizontal half-twists
TangleDiagram star(const TangleDiagram& a, const TangleDiagram& b);
// Quarter turn NW->NE->SE->SW composed with the mirror, so the fraction goes to 1/x.
TangleDiagram rotate(const TangleDiagram& t);
TangleDiagram mirror(const TangleDiagram& t);

// N joins NW-NE and SW-SE; D joins NW-SW and NE-SE.
LinkDiagram closure(const TangleDiagram& t, Closure c);
Connectivity connectivity(const TangleDiagram& t);
int closed_components(const TangleDiagram& t);
// Framing of the tangle: total self-writhe of its N closure.
int framing(const TangleDiagram& t);

// Diagram from the regular continued fraction: [a1], then r(.)*[a2], and so on.
std::vector<long long> continued_fraction(const Fraction& f);
TangleDiagram rational_tangle(const Fraction& f);
// Diagram and value of an arbitrary integer sequence read as above (innermost first).
// The left form stars each new twist on the other side: [a2]*r([a1]), and so on.
TangleDiagram cf_tangle(const std::vector<long long>& a, bool left = false);
Fraction cf_value(const std::vector<long long>& a);

// Rational tangles met on the way from f to its basic tangle: each is one 4-move at
// the innermost twist region of the previous regular diagram, then that diagram
// redrawn regularly. Crossing numbers never grow. Ends with the basic tangle.
std::vector<TangleDiagram> rational_waypoints(const Fraction& f, bool left = false);
// Script from `start` (a diagram of f) to basic_tangle(basic_class(f)), found leg by
// leg between waypoints; moves avoid the frame crossing.
Certificate rational_script(const TangleDiagram& start, const Fraction& f, const SearchBudget& leg_budget,
                            const SearchOptions& opt);

// Basic tangles e1..e6: 0, infinity, 1, -1, 2, -1/2.
Fraction basic_fraction(int i);
TangleDiagram basic_tangle(int i);
std::optional<int> basic_index(const Fraction& f);
// Basic tangle in the 4-move class of f (the class is f's point of P^1(Z/4)).
int basic_class(const Fraction& f);
// r permutes the basic classes.
int rotate_basic(int i);

struct TangleExpr {
    enum class Kind { Basic, Crossing, Rot, Star } kind = Kind::Basic;
    int value = 1;  // basic index, or crossing sign
    std::vector<TangleExpr> kids;

    static TangleExpr basic(int i);
    static TangleExpr crossing(int sign);
    static TangleExpr rot(TangleExpr a);
    static TangleExpr star(TangleExpr a, TangleExpr b);
    bool operator==(const TangleExpr&) const = default;
};

struct ClosedTangleExpr {
    TangleExpr expr;
    Closure closure = Closure::None;
};

// top := 'N(' expr ')' | 'D(' expr ')' | expr;  expr := term ('*' term)*;
// term := 'r(' expr ')' | '(' expr ')' | e1..e6 | c+ | c-.  "e_3" is accepted for "e3".
ClosedTangleExpr parse_tangle(std::string_view text);
std::string to_string(const TangleExpr& e);
std::string to_string(const ClosedTangleExpr& e);

TangleDiagram to_tangle(const TangleExpr& e);
// Requires a closure.
LinkDiagram to_diagram(const ClosedTangleExpr& e);
// Fraction of the expression when it is a rational tangle.
std::optional<Fraction> fraction_of(const TangleExpr& e);
bool has_closed_component(const TangleExpr& e);

// One cell of the multiplication table: r^a(ei) * r^b(ej).
struct TableEntry {
    int i = 1, j = 1, a = 0, b = 0;
    bool closed = false;  // the product has a closed component
    int result = 0;       // basic index when not closed
    std::optional<Certificate> script;  // framed fragment -> framed basic, moves avoid the frame
    std::string origin = "derived";
};

TangleDiagram table_product(int i, int j, int a, int b);

struct TangleTable {
    std::vector<TableEntry> entries;  // (i, j, a, b) in lexicographic order
    const TableEntry& at(int i, int j, int a, int b) const;
};

// Classifies every cell and searches a 4-move script for each open one.
TangleTable build_table(const SearchBudget& budget, const SearchOptions& opt);
// Lines `i j a b -> ek | CLOSED`, then the scripts as a JSON array.
std::string table_text(const TangleTable& t);
std::string table_scripts_json(const TangleTable& t);
TangleTable parse_table(const std::string& text, const std::string& scripts_json);
TangleTable load_table(const std::string& table_path, const std::string& scripts_path);

// Replays an entry's script; checks the end against the framed basic tangle.
bool verify_entry(const TableEntry& e, std::string* why = nullptr);

struct ReductionStep {
    std::string node;  // path from the root, "" for the root, then child indices
    int i = 0, j = 0, a = 0, b = 0;
    int result = 0;
};

struct AlgebraicReduction {
    bool closed_component = false;
    int basic = 0;
    std::string closed_at;  // node where the first closed component appears
    std::vector<ReductionStep> script;
};

AlgebraicReduction reduce_algebraic(const TangleExpr& e);

enum class TwoLinkClass { Trivial2, Hopf };
std::string class_name(TwoLinkClass c);

struct TwoLinkResult {
    TwoLinkClass cls = TwoLinkClass::Trivial2;
    long long lk = 0;
    AlgebraicReduction reduction;
    std::optional<Certificate> certificate;
    std::string note;
};

TwoLinkResult classify_algebraic_2link(const ClosedTangleExpr& e, const SearchBudget& budget,
                                       const SearchOptions& opt = {});

}  // namespace k4
