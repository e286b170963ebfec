#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "k4/tangle.hpp"

namespace k4 {

// Variables of the coefficient ring, in term order.
enum class Var { X0, X1, X2, X3, X4, XInf, A };
constexpr int var_count = 7;
std::string var_name(Var v);
bool invertible(Var v);  // x0, x4 and a

// Integer polynomial in x0..x4, xinf, a; negative exponents only on x0, x4, a.
struct MultiLaurent {
    using Exps = std::array<int, var_count>;
    std::map<Exps, long long, std::greater<Exps>> terms;  // no zero coefficients

    MultiLaurent() = default;
    MultiLaurent(long long k);
    static MultiLaurent var(Var v, int e = 1);
    static MultiLaurent monomial(const Exps& e, long long k = 1);

    bool zero() const { return terms.empty(); }
    bool is_monomial() const { return terms.size() == 1; }
    // Exact division by a monomial in the invertible variables.
    MultiLaurent divide(const MultiLaurent& m) const;
    // Value with x0, x4, a set to units (+-1) and the rest to integers.
    long long eval(const std::array<long long, var_count>& at) const;
    std::string str() const;
    bool operator==(const MultiLaurent&) const = default;

    MultiLaurent& operator+=(const MultiLaurent& o);
    MultiLaurent& operator-=(const MultiLaurent& o);
};

MultiLaurent operator+(MultiLaurent a, const MultiLaurent& b);
MultiLaurent operator-(MultiLaurent a, const MultiLaurent& b);
MultiLaurent operator-(const MultiLaurent& a);
MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b);

// e1..e6 for tangles; T1 (unknot), T2 (trivial 2-link), H (Hopf link) for links.
enum class Basis { E1, E2, E3, E4, E5, E6, T1, T2, H };
std::string basis_name(Basis b);
Basis basic_basis(int i);

struct SkeinVector {
    std::map<Basis, MultiLaurent> c;  // no zero coefficients

    static SkeinVector unit(Basis b, const MultiLaurent& k = 1);
    SkeinVector& add(Basis b, const MultiLaurent& k);
    SkeinVector& operator+=(const SkeinVector& o);
    SkeinVector scaled(const MultiLaurent& k) const;
    MultiLaurent at(Basis b) const;
    // `basis: polynomial` lines in basis order.
    std::string str() const;
    bool operator==(const SkeinVector&) const = default;
};

// Sign s in L^(1) = aL: a kink of self-writhe w contributes a^(s*w).
extern const int framing_sign;

// One use of the quartic relation at the innermost twist region of the regular diagram
// of a non-basic rational tangle: L0 (j0 < 0) or L4 (j0 > 0) is the given tangle, the
// other five terms are rational tangles with fewer crossings.
struct SkeinTerm {
    Var x;                 // coefficient variable of the term
    int a_power = 0;       // framing correction against the regular diagram of `value`
    Fraction value;        // the term's tangle, up to framing
    TangleDiagram diagram; // as produced by the relation
};
struct Resolution {
    Var solved;  // X0 or X4
    std::vector<SkeinTerm> terms;
    // The given tangle equals -x_solved^-1 * sum x * a^a_power * regular(value).
};
Resolution resolve_rational(const Fraction& f);

// Skein vector of the regular diagram of a rational tangle.
SkeinVector reduce_rational(const Fraction& f);
// Same for any diagram of f, with the framing correction applied.
SkeinVector reduce_rational_diagram(const TangleDiagram& d, const Fraction& f);

// Over e1..e6. Throws on closed components, including ones created by a basis product.
SkeinVector reduce_tangle_skein(const TangleExpr& e);

// Closure of e_i as a multiple of T1, T2 or H.
SkeinVector close_basic(int i, Closure c);
// Over T1, T2, H; requires a knot.
SkeinVector reduce_knot_skein(const ClosedTangleExpr& e);

struct HopfIdentity {
    SkeinVector lhs;       // -(x0 + x4) H
    SkeinVector derived;   // right side obtained from the relation on the clasp
    SkeinVector expected;  // (a^-1 x1 + a x3 + a^2 xinf) T1 + x2 T2
    bool ok = false;
};
HopfIdentity hopf_identity_check();

// v = (x0 + x4)^-1 (t1 T1 + t2 T2) after eliminating H with the Hopf identity.
struct HopfFree {
    MultiLaurent t1, t2;
};
HopfFree eliminate_hopf(const SkeinVector& v);

}  // namespace k4
