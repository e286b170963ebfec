#include "k4/polynomials.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

namespace k4 {

LaurentPoly LaurentPoly::mono(int e, long long k) {
    LaurentPoly p;
    if (k) p.c[e] = k;
    return p;
}

long long LaurentPoly::coeff(int e) const {
    auto it = c.find(e);
    return it == c.end() ? 0 : it->second;
}

LaurentPoly LaurentPoly::shift(int e) const {
    LaurentPoly p;
    for (auto [k, v] : c) p.c[k + e] = v;
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (auto [k, v] : o.c)
        if ((c[k] += v) == 0) c.erase(k);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (auto [k, v] : o.c)
        if ((c[k] -= v) == 0) c.erase(k);
    return *this;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly{} - a; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (auto [i, x] : a.c)
        for (auto [j, y] : b.c) r.c[i + j] += x * y;
    std::erase_if(r.c, [](const auto& kv) { return kv.second == 0; });
    return r;
}

LaurentPoly LaurentPoly::divide(const LaurentPoly& by) const {
    if (by.zero()) throw Error("division by zero polynomial");
    LaurentPoly rem = *this, q;
    int lead = by.max_exp();
    long long lc = by.c.at(lead);
    while (!rem.zero()) {
        int e = rem.max_exp();
        if (e - lead < rem.min_exp() - by.min_exp()) throw Error("polynomial division is not exact");
        long long k = rem.c.at(e);
        if (k % lc) throw Error("polynomial division is not exact");
        auto t = mono(e - lead, k / lc);
        q += t;
        rem -= t * by;
    }
    return q;
}

std::string LaurentPoly::str(const std::string& var) const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        auto [e, k] = *it;
        if (!first) os << (k < 0 ? " - " : " + ");
        else if (k < 0) os << "-";
        first = false;
        os << (k < 0 ? -k : k) << "*" << var << "^" << e;
    }
    return os.str();
}

CycloInt CycloInt::zeta(int m, int k) {
    int r = ((k % (2 * m)) + 2 * m) % (2 * m);
    CycloInt z(m);
    if (r < m) z.c[r] = 1;
    else z.c[r - m] = -1;
    return z;
}

CycloInt CycloInt::sqrt2() { return zeta(4, 1) - zeta(4, 3); }

bool CycloInt::zero() const {
    return std::all_of(c.begin(), c.end(), [](long long x) { return x == 0; });
}

CycloInt CycloInt::unit_inverse() const {
    int nz = -1;
    for (int i = 0; i < m; ++i)
        if (c[i]) {
            if (nz >= 0 || (c[i] != 1 && c[i] != -1)) throw Error("not a unit of the form +-zeta^k");
            nz = i;
        }
    if (nz < 0) throw Error("zero has no inverse");
    return c[nz] * zeta(m, -nz);
}

CycloInt CycloInt::pow(int e) const {
    if (e < 0) return unit_inverse().pow(-e);
    CycloInt r(m, 1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

CycloInt CycloInt::conj() const {
    CycloInt r(m);
    for (int i = 0; i < m; ++i)
        if (c[i]) r = r + c[i] * zeta(m, -i);
    return r;
}

std::string CycloInt::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m; ++i) os << (i ? "," : "") << c[i];
    os << "]";
    return os.str();
}

CycloInt operator+(const CycloInt& a, const CycloInt& b) {
    if (a.m != b.m) throw Error("cyclotomic ring mismatch");
    CycloInt r(a.m);
    for (int i = 0; i < a.m; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

CycloInt operator-(const CycloInt& a) { return -1 * a; }
CycloInt operator-(const CycloInt& a, const CycloInt& b) { return a + (-b); }

CycloInt operator*(long long k, const CycloInt& a) {
    CycloInt r = a;
    for (auto& x : r.c) x *= k;
    return r;
}

CycloInt operator*(const CycloInt& a, const CycloInt& b) {
    if (a.m != b.m) throw Error("cyclotomic ring mismatch");
    int m = a.m;
    CycloInt r(m);
    for (int i = 0; i < m; ++i) {
        if (!a.c[i]) continue;
        for (int j = 0; j < m; ++j) {
            int k = i + j;
            if (k < m) r.c[k] += a.c[i] * b.c[j];
            else r.c[k - m] -= a.c[i] * b.c[j];
        }
    }
    return r;
}

CycloInt evaluate(const LaurentPoly& p, const CycloInt& value) {
    CycloInt r(value.m);
    for (auto [e, k] : p.c) r = r + k * value.pow(e);
    return r;
}

namespace {

// counts[(a - b) + n][loops] over all states
using StateCounts = std::vector<std::vector<long long>>;

void count_states(const LinkDiagram& d, unsigned long long lo, unsigned long long hi, StateCounts& out) {
    int n = d.size(), E = d.arc_count;
    std::vector<int> parent(E);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (unsigned long long state = lo; state < hi; ++state) {
        std::iota(parent.begin(), parent.end(), 0);
        int comps = E, a = 0;
        auto join = [&](int x, int y) {
            x = find(x), y = find(y);
            if (x != y) parent[x] = y, --comps;
        };
        for (int c = 0; c < n; ++c) {
            const auto& s = d.crossings[c].slots;
            if (state >> c & 1) {
                join(s[0], s[3]);
                join(s[1], s[2]);
            } else {
                ++a;
                join(s[0], s[1]);
                join(s[2], s[3]);
            }
        }
        out[2 * a][comps] += 1;
    }
}

}  // namespace

LaurentPoly bracket(const LinkDiagram& d, int cap) {
    int n = d.size();
    if (n > cap) throw Error("bracket: " + std::to_string(n) + " crossings exceeds the cap of " + std::to_string(cap));
    LaurentPoly loop = LaurentPoly::mono(2, -1) + LaurentPoly::mono(-2, -1);
    if (n == 0) {
        LaurentPoly r = 1;
        for (int i = 1; i < d.free_loops; ++i) r = r * loop;
        return r;
    }
    unsigned long long total = 1ULL << n;
    int workers = n >= 14 ? std::max(1u, std::min(8u, std::thread::hardware_concurrency())) : 1;
    std::vector<StateCounts> parts(workers, StateCounts(2 * n + 1, std::vector<long long>(d.arc_count + 1, 0)));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        unsigned long long lo = total * w / workers, hi = total * (w + 1) / workers;
        if (workers == 1) count_states(d, lo, hi, parts[0]);
        else pool.emplace_back(count_states, std::cref(d), lo, hi, std::ref(parts[w]));
    }
    for (auto& t : pool) t.join();
    std::vector<LaurentPoly> loop_pow{1};
    LaurentPoly r;
    for (int a2 = 0; a2 <= 2 * n; a2 += 2)
        for (int l = 0; l <= d.arc_count; ++l) {
            long long k = 0;
            for (auto& p : parts) k += p[a2][l];
            if (!k) continue;
            int loops = l + d.free_loops;
            while (static_cast<int>(loop_pow.size()) < loops) loop_pow.push_back(loop_pow.back() * loop);
            int a = a2 / 2, b = n - a;
            r += LaurentPoly::mono(a - b, k) * loop_pow[loops - 1];
        }
    return r;
}

LaurentPoly jones(const LinkDiagram& d, const Orientation& o, int cap) {
    LaurentPoly b = bracket(d, cap);
    int w = writhe(d, o);
    // (-A^3)^(-w) <D>, then t^(1/2) = A^(-2)
    LaurentPoly f = b.shift(-3 * w);
    if (w % 2) f = -f;
    LaurentPoly v;
    for (auto [e, k] : f.c) {
        if (e % 2) throw Error("Jones normalization left an odd power of A");
        v.c[-e / 2] = k;
    }
    return v;
}

std::string jones_str(const LaurentPoly& v) {
    if (v.zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = v.c.rbegin(); it != v.c.rend(); ++it) {
        auto [e, k] = *it;
        if (!first) os << (k < 0 ? " - " : " + ");
        else if (k < 0) os << "-";
        first = false;
        os << (k < 0 ? -k : k);
        if (e % 2 == 0) os << "*t^" << e / 2;
        else os << "*t^(" << e << "/2)";
    }
    return os.str();
}

CycloInt eval_jones_at_i(const LaurentPoly& v) { return evaluate(v, CycloInt::zeta(4, 1)); }

CycloInt eval_jones_at_i(const LinkDiagram& d, const Orientation& o, int cap) {
    return eval_jones_at_i(jones(d, o, cap));
}

ArfValue arf_from_value(const CycloInt& v, int components) {
    if (v.zero()) return {false, 0};
    CycloInt ref = (-CycloInt::sqrt2()).pow(components - 1);
    if (v == ref) return {true, 0};
    if (v == -ref) return {true, 1};
    throw Error("V(i) = " + v.str() + " violates the Lickorish-Millett value law");
}

ArfValue arf(const LinkDiagram& d, const Orientation& o, int cap) {
    return arf_from_value(eval_jones_at_i(d, o, cap), components(d).count);
}

namespace {

template <class R>
std::array<R, 2> bracket_recursion(int n, const R& A, const R& A_inv, const R& one, const R& zero) {
    // <L_k> = A <L_(k-1)> + A^(-1) (-A^3)^(-k+1) <L_inf>
    std::array<R, 2> v{one, zero};
    R minus_a3_inv = zero - A_inv * A_inv * A_inv;  // (-A^3)^(-1)
    R factor = A_inv;                               // A^(-1) (-A^3)^(-(k-1)) for k = 1
    for (int k = 1; k <= n; ++k) {
        v = {A * v[0], A * v[1] + factor};
        factor = factor * minus_a3_inv;
    }
    return v;
}

}  // namespace

TwistVector twist_bracket_vector(int n, const CycloInt& a_value) {
    if (n < 0) throw Error("twist length must be non-negative");
    CycloInt one(a_value.m, 1), zero(a_value.m);
    auto v = bracket_recursion(n, a_value, a_value.unit_inverse(), one, zero);
    return TwistVector{{v[0], v[1]}};
}

std::array<LaurentPoly, 2> twist_bracket_symbolic(int n) {
    if (n < 0) throw Error("twist length must be non-negative");
    return bracket_recursion<LaurentPoly>(n, LaurentPoly::mono(1), LaurentPoly::mono(-1), 1, 0);
}

TwistVector twist_kauffman_vector(int n, const CycloInt& p, const CycloInt& a) {
    if (n < 0) throw Error("twist length must be non-negative");
    int m = p.m;
    CycloInt one(m, 1);
    if (!(p.pow(4) == -one)) throw Error("twist_kauffman_vector: p^4 must be -1");
    CycloInt p_inv = p.unit_inverse();
    if (a == p || a == p_inv) throw Error("twist_kauffman_vector: a must differ from p and 1/p");
    CycloInt x = p + p_inv;
    auto basis = [&](int i) {
        TwistVector t{{CycloInt(m), CycloInt(m), CycloInt(m)}};
        t.v[i] = one;
        return t;
    };
    TwistVector prev = basis(0), cur = basis(2), inf = basis(1);
    if (n == 0) return prev;
    CycloInt a_pow = one;  // a^(k-1) for the step producing v_k
    for (int k = 2; k <= n; ++k) {
        a_pow = a_pow * a;
        TwistVector next{{CycloInt(m), CycloInt(m), CycloInt(m)}};
        for (int i = 0; i < 3; ++i) next.v[i] = x * cur.v[i] + x * a_pow * inf.v[i] - prev.v[i];
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace k4
