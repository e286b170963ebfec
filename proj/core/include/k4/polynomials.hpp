#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "k4/diagram.hpp"

namespace k4 {

struct LaurentPoly {
    std::map<int, long long> c;  // exponent -> nonzero coefficient

    LaurentPoly() = default;
    LaurentPoly(long long k) { if (k) c[0] = k; }
    static LaurentPoly mono(int e, long long k = 1);

    bool zero() const { return c.empty(); }
    int min_exp() const { return c.begin()->first; }
    int max_exp() const { return c.rbegin()->first; }
    long long coeff(int e) const;
    LaurentPoly shift(int e) const;
    // Exact division; throws when the divisor does not divide.
    LaurentPoly divide(const LaurentPoly& by) const;
    std::string str(const std::string& var = "A") const;
    bool operator==(const LaurentPoly&) const = default;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

// Z[zeta] with zeta^m = -1, so zeta is a primitive 2m-th root of unity.
struct CycloInt {
    int m = 4;
    std::vector<long long> c;

    explicit CycloInt(int m_ = 4, long long k = 0) : m(m_), c(m_, 0) { c[0] = k; }
    static CycloInt zeta(int m, int k = 1);  // zeta^k for any integer k
    static CycloInt sqrt2();                 // zeta - zeta^3 in Z[zeta_8]

    bool zero() const;
    // Inverse of a unit of the form +-zeta^k.
    CycloInt unit_inverse() const;
    CycloInt pow(int e) const;
    CycloInt conj() const;
    std::string str() const;
    bool operator==(const CycloInt&) const = default;
};

CycloInt operator+(const CycloInt& a, const CycloInt& b);
CycloInt operator-(const CycloInt& a, const CycloInt& b);
CycloInt operator-(const CycloInt& a);
CycloInt operator*(const CycloInt& a, const CycloInt& b);
CycloInt operator*(long long k, const CycloInt& a);

// Substitutes A -> value (a unit +-zeta^k).
CycloInt evaluate(const LaurentPoly& p, const CycloInt& value);

constexpr int default_bracket_cap = 22;

LaurentPoly bracket(const LinkDiagram& d, int cap = default_bracket_cap);
// Exponents are in units of t^(1/2).
LaurentPoly jones(const LinkDiagram& d, const Orientation& o, int cap = default_bracket_cap);
std::string jones_str(const LaurentPoly& v);
// V at sqrt(t) = e^(i pi/4), in Z[zeta_8].
CycloInt eval_jones_at_i(const LinkDiagram& d, const Orientation& o, int cap = default_bracket_cap);
CycloInt eval_jones_at_i(const LaurentPoly& v);

struct ArfValue {
    bool defined = false;
    int value = 0;
    bool operator==(const ArfValue&) const = default;
};

ArfValue arf(const LinkDiagram& d, const Orientation& o, int cap = default_bracket_cap);
// Arf read off a value of V(i) for a link with the given number of components.
ArfValue arf_from_value(const CycloInt& v, int components);

// Coefficients of a twist tangle in a fixed basis of tangles:
// bracket (L0, Linf); Kauffman polynomial (L0, Linf, L1).
struct TwistVector {
    std::vector<CycloInt> v;
    bool operator==(const TwistVector&) const = default;
};

TwistVector twist_bracket_vector(int n, const CycloInt& a_value);
std::array<LaurentPoly, 2> twist_bracket_symbolic(int n);
TwistVector twist_kauffman_vector(int n, const CycloInt& p, const CycloInt& a);

}  // namespace k4
