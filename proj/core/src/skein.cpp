#include "k4/skein.hpp"

#include <mutex>
#include <sstream>

namespace k4 {

// Fixed by the r(e3*e3) expansion, whose infinity term carries a^2.
const int framing_sign = -1;

std::string var_name(Var v) {
    static const char* names[] = {"x0", "x1", "x2", "x3", "x4", "xinf", "a"};
    return names[static_cast<int>(v)];
}

bool invertible(Var v) { return v == Var::X0 || v == Var::X4 || v == Var::A; }

MultiLaurent::MultiLaurent(long long k) {
    if (k) terms[Exps{}] = k;
}

MultiLaurent MultiLaurent::var(Var v, int e) {
    Exps x{};
    x[static_cast<int>(v)] = e;
    return monomial(x);
}

MultiLaurent MultiLaurent::monomial(const Exps& e, long long k) {
    for (int i = 0; i < var_count; ++i)
        if (e[i] < 0 && !invertible(static_cast<Var>(i)))
            throw Error("negative power of " + var_name(static_cast<Var>(i)) + ", which is not invertible");
    MultiLaurent m;
    if (k) m.terms[e] = k;
    return m;
}

MultiLaurent& MultiLaurent::operator+=(const MultiLaurent& o) {
    for (const auto& [e, k] : o.terms) {
        long long& s = terms[e];
        s += k;
        if (s == 0) terms.erase(e);
    }
    return *this;
}

MultiLaurent& MultiLaurent::operator-=(const MultiLaurent& o) { return *this += -o; }

MultiLaurent operator+(MultiLaurent a, const MultiLaurent& b) { return a += b; }
MultiLaurent operator-(MultiLaurent a, const MultiLaurent& b) { return a -= b; }

MultiLaurent operator-(const MultiLaurent& a) {
    MultiLaurent r = a;
    for (auto& [e, k] : r.terms) k = -k;
    return r;
}

MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b) {
    MultiLaurent r;
    for (const auto& [ea, ka] : a.terms)
        for (const auto& [eb, kb] : b.terms) {
            MultiLaurent::Exps e;
            for (int i = 0; i < var_count; ++i) e[i] = ea[i] + eb[i];
            r += MultiLaurent::monomial(e, ka * kb);
        }
    return r;
}

MultiLaurent MultiLaurent::divide(const MultiLaurent& m) const {
    if (!m.is_monomial()) throw Error("division by a non-monomial");
    const auto& [e, k] = *m.terms.begin();
    if (k != 1 && k != -1) throw Error("division by a non-unit coefficient");
    Exps inv;
    for (int i = 0; i < var_count; ++i) {
        if (e[i] != 0 && !invertible(static_cast<Var>(i)))
            throw Error("division by " + var_name(static_cast<Var>(i)) + ", which is not invertible");
        inv[i] = -e[i];
    }
    return *this * monomial(inv, k);
}

long long MultiLaurent::eval(const std::array<long long, var_count>& at) const {
    long long sum = 0;
    for (const auto& [e, k] : terms) {
        long long t = k;
        for (int i = 0; i < var_count; ++i) {
            int p = e[i];
            if (p < 0) {
                if (at[i] != 1 && at[i] != -1) throw Error("negative power evaluated at a non-unit");
                p = -p;
            }
            for (int j = 0; j < p; ++j) t *= at[i];
        }
        sum += t;
    }
    return sum;
}

std::string MultiLaurent::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, k] : terms) {
        std::vector<std::string> f;
        for (int i = 0; i < var_count; ++i) {
            if (e[i] == 0) continue;
            std::string s = var_name(static_cast<Var>(i));
            if (e[i] != 1) s += "^" + std::to_string(e[i]);
            f.push_back(s);
        }
        long long mag = k < 0 ? -k : k;
        if (first) os << (k < 0 ? "-" : "");
        else os << (k < 0 ? " - " : " + ");
        first = false;
        if (f.empty() || mag != 1) {
            os << mag;
            if (!f.empty()) os << "*";
        }
        for (std::size_t j = 0; j < f.size(); ++j) os << (j ? "*" : "") << f[j];
    }
    return os.str();
}

std::string basis_name(Basis b) {
    static const char* names[] = {"e1", "e2", "e3", "e4", "e5", "e6", "T1", "T2", "H"};
    return names[static_cast<int>(b)];
}

Basis basic_basis(int i) {
    if (i < 1 || i > 6) throw Error("no basic tangle e" + std::to_string(i));
    return static_cast<Basis>(i - 1);
}

SkeinVector SkeinVector::unit(Basis b, const MultiLaurent& k) {
    SkeinVector v;
    return v.add(b, k);
}

SkeinVector& SkeinVector::add(Basis b, const MultiLaurent& k) {
    MultiLaurent& s = c[b];
    s += k;
    if (s.zero()) c.erase(b);
    return *this;
}

SkeinVector& SkeinVector::operator+=(const SkeinVector& o) {
    for (const auto& [b, k] : o.c) add(b, k);
    return *this;
}

SkeinVector SkeinVector::scaled(const MultiLaurent& k) const {
    SkeinVector v;
    for (const auto& [b, x] : c) v.add(b, x * k);
    return v;
}

MultiLaurent SkeinVector::at(Basis b) const {
    auto it = c.find(b);
    return it == c.end() ? MultiLaurent() : it->second;
}

std::string SkeinVector::str() const {
    std::ostringstream os;
    for (const auto& [b, k] : c) os << basis_name(b) << ": " << k.str() << "\n";
    if (c.empty()) os << "0\n";
    return os.str();
}

namespace {

MultiLaurent a_pow(int e) { return MultiLaurent::var(Var::A, e); }

// Innermost leaf given as a tangle, then r(.)*[a_i] for the rest of the sequence.
TangleDiagram cf_from(TangleDiagram t, const std::vector<long long>& a) {
    for (std::size_t i = 1; i < a.size(); ++i) {
        t = rotate(t);
        if (a[i] != 0) t = star(t, tangle_twist(a[i]));
    }
    return t;
}

Fraction cf_value_from(Fraction v, const std::vector<long long>& a) {
    for (std::size_t i = 1; i < a.size(); ++i) v = reciprocal(v) + a[i];
    return v;
}

TangleDiagram regular(const Fraction& f) {
    if (auto i = basic_index(f)) return basic_tangle(*i);
    return rational_tangle(f);
}

int framing_gap(const TangleDiagram& d, const Fraction& f) {
    return framing_sign * (framing(d) - framing(regular(f)));
}

// T1, T2 or H times the framing factor, for closures with at most two crossings.
SkeinVector small_link(const LinkDiagram& d) {
    if (d.size() > 2) throw Error("internal error: closure of a basis tangle has more than two crossings");
    int comps = components(d).count;
    MultiLaurent k = a_pow(framing_sign * self_writhe(d));
    if (comps == 1) return SkeinVector::unit(Basis::T1, k);
    if (comps != 2) throw Error("internal error: closure of a basis tangle has " + std::to_string(comps) + " components");
    long long lk = linking_matrix(d, Orientation::reference(d)).lk(0, 1);
    if (lk == 0) return SkeinVector::unit(Basis::T2, k);
    if (lk == 1 || lk == -1) return SkeinVector::unit(Basis::H, k);
    throw Error("internal error: unexpected linking number in a basis closure");
}

}  // namespace

Resolution resolve_rational(const Fraction& f) {
    if (basic_index(f)) throw Error("no twist region to resolve: " + f.str() + " is basic");
    auto a = continued_fraction(f);
    long long par = (a.size() - 1) % 2 ? -1 : 1;  // rotations mirror the innermost region
    long long j0 = par * a[0];
    long long w = j0 > 0 ? j0 - 4 : j0;
    int solved = j0 > 0 ? 4 : 0;
    static const Var xs[] = {Var::X0, Var::X1, Var::X2, Var::X3, Var::X4};
    Resolution r;
    r.solved = xs[solved];
    for (int k = 0; k <= 4; ++k) {
        if (k == solved) continue;
        long long leaf = par * (w + k);
        TangleDiagram d = cf_from(tangle_twist(leaf), a);
        Fraction v = cf_value_from(Fraction(leaf), a);
        r.terms.push_back({xs[k], framing_gap(d, v), v, d});
    }
    TangleDiagram d = cf_from(star(tangle_twist(par * w), tangle_infinity()), a);
    Fraction v = cf_value_from(Fraction::infinity(), a);
    r.terms.push_back({Var::XInf, framing_gap(d, v), v, d});
    return r;
}

SkeinVector reduce_rational(const Fraction& f) {
    static std::mutex mu;
    static std::map<std::pair<long long, long long>, SkeinVector> memo;
    std::pair<long long, long long> key{f.p, f.q};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    SkeinVector v;
    if (auto i = basic_index(f)) {
        v = SkeinVector::unit(basic_basis(*i));
    } else {
        Resolution r = resolve_rational(f);
        MultiLaurent lead = -MultiLaurent(1).divide(MultiLaurent::var(r.solved));
        for (const auto& t : r.terms)
            v += reduce_rational(t.value).scaled(lead * MultiLaurent::var(t.x) * a_pow(t.a_power));
    }
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(key, v);
    return v;
}

SkeinVector reduce_rational_diagram(const TangleDiagram& d, const Fraction& f) {
    return reduce_rational(f).scaled(a_pow(framing_gap(d, f)));
}

namespace {

SkeinVector product(const SkeinVector& l, const SkeinVector& r) {
    SkeinVector out;
    for (const auto& [bl, kl] : l.c)
        for (const auto& [br, kr] : r.c) {
            int i = static_cast<int>(bl) + 1, j = static_cast<int>(br) + 1;
            TangleDiagram d = star(basic_tangle(i), basic_tangle(j));
            if (closed_components(d) > 0)
                throw Error("e" + std::to_string(i) + "*e" + std::to_string(j) +
                            " has a closed component; it is outside span(e1..e6)");
            auto f = fraction_of(TangleExpr::star(TangleExpr::basic(i), TangleExpr::basic(j)));
            out += reduce_rational_diagram(d, *f).scaled(kl * kr);
        }
    return out;
}

SkeinVector reduce_node(const TangleExpr& e) {
    if (auto f = fraction_of(e)) return reduce_rational_diagram(to_tangle(e), *f);
    if (e.kind == TangleExpr::Kind::Rot) {
        SkeinVector out;
        for (const auto& [b, k] : reduce_node(e.kids[0]).c) {
            int i = static_cast<int>(b) + 1;
            out += reduce_rational_diagram(rotate(basic_tangle(i)), reciprocal(basic_fraction(i))).scaled(k);
        }
        return out;
    }
    if (e.kind == TangleExpr::Kind::Star) return product(reduce_node(e.kids[0]), reduce_node(e.kids[1]));
    throw Error("internal error: leaf without a fraction");
}

}  // namespace

SkeinVector reduce_tangle_skein(const TangleExpr& e) {
    if (has_closed_component(e)) throw Error("tangle has a closed component");
    return reduce_node(e);
}

SkeinVector close_basic(int i, Closure c) { return small_link(closure(basic_tangle(i), c)); }

SkeinVector reduce_knot_skein(const ClosedTangleExpr& e) {
    if (e.closure == Closure::None) throw Error("knot expression needs an N or D closure");
    int comps = components(to_diagram(e)).count;
    if (comps != 1) throw Error("expected a knot, got " + std::to_string(comps) + " components");
    SkeinVector out;
    for (const auto& [b, k] : reduce_tangle_skein(e.expr).c)
        out += close_basic(static_cast<int>(b) + 1, e.closure).scaled(k);
    return out;
}

HopfIdentity hopf_identity_check() {
    using M = MultiLaurent;
    // N closures of the clasp family [-2+k]; [-2] and [2] are the two Hopf clasps.
    static const Var xs[] = {Var::X0, Var::X1, Var::X2, Var::X3, Var::X4};
    SkeinVector all;
    for (int k = 0; k <= 4; ++k)
        all += small_link(closure(tangle_twist(-2 + k), Closure::N)).scaled(M::var(xs[k]));
    all += small_link(closure(star(tangle_twist(-2), tangle_infinity()), Closure::N)).scaled(M::var(Var::XInf));
    HopfIdentity h;
    M hopf = all.at(Basis::H);
    h.lhs = SkeinVector::unit(Basis::H, -(M::var(Var::X0) + M::var(Var::X4)));
    h.derived = all;  // (x0 + x4) H + rest = 0
    h.derived.add(Basis::H, -hopf);
    h.expected.add(Basis::T1, a_pow(-1) * M::var(Var::X1) + a_pow(1) * M::var(Var::X3) +
                                  a_pow(2) * M::var(Var::XInf));
    h.expected.add(Basis::T2, M::var(Var::X2));
    h.ok = hopf == M::var(Var::X0) + M::var(Var::X4) && h.derived == h.expected;
    return h;
}

HopfFree eliminate_hopf(const SkeinVector& v) {
    using M = MultiLaurent;
    for (const auto& [b, k] : v.c)
        if (b != Basis::T1 && b != Basis::T2 && b != Basis::H) throw Error("vector is not over T1, T2, H");
    M s = M::var(Var::X0) + M::var(Var::X4);
    M p = a_pow(-1) * M::var(Var::X1) + a_pow(1) * M::var(Var::X3) + a_pow(2) * M::var(Var::XInf);
    M h = v.at(Basis::H);
    return {s * v.at(Basis::T1) - h * p, s * v.at(Basis::T2) - h * M::var(Var::X2)};
}

}  // namespace k4
