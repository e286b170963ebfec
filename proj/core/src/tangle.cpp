#include "k4/tangle.hpp"

#include <algorithm>
#include <numeric>

namespace k4 {

Fraction::Fraction(long long p_, long long q_) : p(p_), q(q_) {
    if (q == 0) {
        if (p == 0) throw Error("0/0 is not a fraction");
        p = 1;
        return;
    }
    if (q < 0) p = -p, q = -q;
    long long g = std::gcd(p < 0 ? -p : p, q);
    p /= g;
    q /= g;
}

std::string Fraction::str() const {
    if (is_infinity()) return "inf";
    if (is_integer()) return std::to_string(p);
    return std::to_string(p) + "/" + std::to_string(q);
}

Fraction reciprocal(const Fraction& f) {
    if (f.is_infinity()) return Fraction(0);
    return Fraction(f.q, f.p);
}

Fraction operator+(const Fraction& a, long long n) {
    if (a.is_infinity()) return a;
    return Fraction(a.p + n * a.q, a.q);
}

Connectivity connectivity_of(const Fraction& f) {
    bool p_odd = f.p % 2 != 0, q_odd = f.q % 2 != 0;
    if (p_odd && q_odd) return Connectivity::One;
    return p_odd ? Connectivity::Infinity : Connectivity::Zero;
}

namespace {

enum { NW = 0, NE = 1, SE = 2, SW = 3 };

// Tangle without its frame: labels appear twice among crossing slots and ends.
struct Frag {
    std::vector<std::array<int, 4>> xs;
    std::array<int, 4> ends{};
    int labels = 0;
    int loops = 0;
};

Frag frag_of(const TangleDiagram& t) {
    const LinkDiagram& d = t.framed;
    Frag f;
    f.ends = d.crossings.at(0).slots;
    for (int c = 1; c < d.size(); ++c) f.xs.push_back(d.crossings[c].slots);
    f.labels = d.arc_count;
    f.loops = d.free_loops;
    return f;
}

struct Uf {
    std::vector<int> p;
    explicit Uf(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void join(int a, int b) { p[find(a)] = find(b); }
};

// Merges labels by uf; classes used nowhere become free loops.
LinkDiagram assemble(const std::vector<std::array<int, 4>>& xs, const std::array<int, 4>* frame, int labels,
                     int loops, Uf& uf) {
    LinkDiagram d;
    std::vector<char> used(labels, 0);
    auto put = [&](const std::array<int, 4>& s) {
        Crossing c;
        for (int k = 0; k < 4; ++k) {
            c.slots[k] = uf.find(s[k]);
            used[c.slots[k]] = 1;
        }
        d.crossings.push_back(c);
    };
    if (frame) put(*frame);
    for (auto& x : xs) put(x);
    d.free_loops = loops;
    for (int l = 0; l < labels; ++l)
        if (uf.find(l) == l && !used[l]) ++d.free_loops;
    d.arc_count = labels;
    normalize(d);
    return d;
}

TangleDiagram make(const Frag& f) {
    Uf uf(f.labels);
    return TangleDiagram{assemble(f.xs, &f.ends, f.labels, f.loops, uf)};
}

Frag shifted(const Frag& f, int by) {
    Frag g = f;
    for (auto& x : g.xs)
        for (auto& l : x) l += by;
    for (auto& l : g.ends) l += by;
    return g;
}

std::array<int, 4> mirrored(const std::array<int, 4>& s) { return {s[1], s[2], s[3], s[0]}; }

}  // namespace

TangleDiagram tangle_zero() {
    Frag f;
    f.ends = {0, 0, 1, 1};
    f.labels = 2;
    return make(f);
}

TangleDiagram tangle_infinity() {
    Frag f;
    f.ends = {0, 1, 1, 0};
    f.labels = 2;
    return make(f);
}

TangleDiagram tangle_crossing(int sign) {
    if (sign != 1 && sign != -1) throw Error("crossing sign must be +1 or -1");
    Frag f;
    f.ends = {0, 1, 2, 3};
    f.labels = 4;
    // arms counterclockwise from an under arm
    if (sign > 0) f.xs.push_back({2, 1, 0, 3});
    else f.xs.push_back({3, 2, 1, 0});
    return make(f);
}

TangleDiagram tangle_twist(long long k) {
    if (k == 0) return tangle_zero();
    TangleDiagram one = tangle_crossing(k > 0 ? 1 : -1), t = one;
    for (long long i = 1; i < (k > 0 ? k : -k); ++i) t = star(t, one);
    return t;
}

TangleDiagram star(const TangleDiagram& a, const TangleDiagram& b) {
    Frag fa = frag_of(a), fb = shifted(frag_of(b), a.framed.arc_count);
    int labels = fa.labels + fb.labels;
    Uf uf(labels);
    uf.join(fa.ends[NE], fb.ends[NW]);
    uf.join(fa.ends[SE], fb.ends[SW]);
    std::vector<std::array<int, 4>> xs = fa.xs;
    xs.insert(xs.end(), fb.xs.begin(), fb.xs.end());
    std::array<int, 4> frame{fa.ends[NW], fb.ends[NE], fb.ends[SE], fa.ends[SW]};
    return TangleDiagram{assemble(xs, &frame, labels, fa.loops + fb.loops, uf)};
}

TangleDiagram rotate(const TangleDiagram& t) {
    Frag f = frag_of(t);
    f.ends = {f.ends[SW], f.ends[NW], f.ends[NE], f.ends[SE]};
    for (auto& x : f.xs) x = mirrored(x);
    return make(f);
}

TangleDiagram mirror(const TangleDiagram& t) {
    Frag f = frag_of(t);
    for (auto& x : f.xs) x = mirrored(x);
    return make(f);
}

LinkDiagram closure(const TangleDiagram& t, Closure c) {
    if (c == Closure::None) throw Error("closure requested without N or D");
    Frag f = frag_of(t);
    Uf uf(f.labels);
    if (c == Closure::N) {
        uf.join(f.ends[NW], f.ends[NE]);
        uf.join(f.ends[SW], f.ends[SE]);
    } else {
        uf.join(f.ends[NW], f.ends[SW]);
        uf.join(f.ends[NE], f.ends[SE]);
    }
    return assemble(f.xs, nullptr, f.labels, f.loops, uf);
}

Connectivity connectivity(const TangleDiagram& t) {
    Frag f = frag_of(t);
    std::vector<std::vector<std::pair<int, int>>> at(f.labels);  // (crossing or -1-end, slot)
    for (int c = 0; c < static_cast<int>(f.xs.size()); ++c)
        for (int s = 0; s < 4; ++s) at[f.xs[c][s]].push_back({c, s});
    for (int e = 0; e < 4; ++e) at[f.ends[e]].push_back({-1 - e, 0});
    std::pair<int, int> cur{-1 - NW, 0};
    int l = f.ends[NW];
    while (true) {
        auto nxt = at[l][0] == cur ? at[l][1] : at[l][0];
        if (nxt.first < 0) {
            int e = -1 - nxt.first;
            return e == NE ? Connectivity::Zero : e == SW ? Connectivity::Infinity : Connectivity::One;
        }
        cur = {nxt.first, (nxt.second + 2) & 3};
        l = f.xs[cur.first][cur.second];
    }
}

int closed_components(const TangleDiagram& t) {
    int through = connectivity(t) == Connectivity::One ? 2 : 1;
    return components(t.framed).count - through;
}

int framing(const TangleDiagram& t) { return self_writhe(closure(t, Closure::N)); }

std::vector<long long> continued_fraction(const Fraction& f) {
    if (f.is_infinity()) return {0, 0};
    long long p = f.p < 0 ? -f.p : f.p, q = f.q;
    long long sign = f.p < 0 ? -1 : 1;
    std::vector<long long> b;
    while (q != 0) {
        b.push_back(sign * (p / q));
        long long r = p % q;
        p = q;
        q = r;
    }
    std::reverse(b.begin(), b.end());
    return b;
}

TangleDiagram rational_tangle(const Fraction& f) { return cf_tangle(continued_fraction(f)); }

Fraction cf_value(const std::vector<long long>& a) {
    if (a.empty()) throw Error("empty continued fraction");
    Fraction v(a[0]);
    for (std::size_t i = 1; i < a.size(); ++i) v = reciprocal(v) + a[i];
    return v;
}

std::vector<TangleDiagram> rational_waypoints(const Fraction& f, bool left) {
    std::vector<TangleDiagram> out{cf_tangle(continued_fraction(f), left)};
    Fraction x = f;
    while (!basic_index(x)) {
        auto a = continued_fraction(x);
        long long& a1 = a[0];
        a1 = (a1 >= 3 || a1 <= -3) ? a1 - (a1 > 0 ? 4 : -4) : -a1;
        out.push_back(cf_tangle(a, left));
        x = cf_value(a);
        out.push_back(cf_tangle(continued_fraction(x), left));
    }
    out.push_back(basic_tangle(*basic_index(x)));
    return out;
}

TangleDiagram cf_tangle(const std::vector<long long>& a, bool left) {
    if (a.empty()) throw Error("empty continued fraction");
    TangleDiagram t = tangle_twist(a[0]);
    for (std::size_t i = 1; i < a.size(); ++i) {
        t = rotate(t);
        if (a[i] != 0) t = left ? star(tangle_twist(a[i]), t) : star(t, tangle_twist(a[i]));
    }
    return t;
}

Fraction basic_fraction(int i) {
    switch (i) {
        case 1: return Fraction(0);
        case 2: return Fraction::infinity();
        case 3: return Fraction(1);
        case 4: return Fraction(-1);
        case 5: return Fraction(2);
        case 6: return Fraction(-1, 2);
        default: throw Error("basic tangles are e1..e6");
    }
}

TangleDiagram basic_tangle(int i) { return rational_tangle(basic_fraction(i)); }

std::optional<int> basic_index(const Fraction& f) {
    for (int i = 1; i <= 6; ++i)
        if (basic_fraction(i) == f) return i;
    return std::nullopt;
}

int basic_class(const Fraction& f) {
    auto m4 = [](long long x) { return static_cast<int>(((x % 4) + 4) % 4); };
    int p = m4(f.p), q = m4(f.q);
    for (int i = 1; i <= 6; ++i) {
        Fraction b = basic_fraction(i);
        int bp = m4(b.p), bq = m4(b.q);
        if ((p == bp && q == bq) || (p == (4 - bp) % 4 && q == (4 - bq) % 4)) return i;
    }
    throw Error("internal error: no 4-move class for " + f.str());
}

int rotate_basic(int i) { return basic_class(reciprocal(basic_fraction(i))); }

// --- expressions -----------------------------------------------------------

TangleExpr TangleExpr::basic(int i) {
    if (i < 1 || i > 6) throw Error("basic tangles are e1..e6");
    TangleExpr e;
    e.kind = Kind::Basic;
    e.value = i;
    return e;
}

TangleExpr TangleExpr::crossing(int sign) {
    TangleExpr e;
    e.kind = Kind::Crossing;
    e.value = sign > 0 ? 1 : -1;
    return e;
}

TangleExpr TangleExpr::rot(TangleExpr a) {
    TangleExpr e;
    e.kind = Kind::Rot;
    e.kids.push_back(std::move(a));
    return e;
}

TangleExpr TangleExpr::star(TangleExpr a, TangleExpr b) {
    TangleExpr e;
    e.kind = Kind::Star;
    e.kids.push_back(std::move(a));
    e.kids.push_back(std::move(b));
    return e;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    ClosedTangleExpr top() {
        ClosedTangleExpr out;
        skip();
        std::size_t save = i_;
        if (i_ < s_.size() && (s_[i_] == 'N' || s_[i_] == 'D')) {
            char c = s_[i_++];
            skip();
            if (i_ < s_.size() && s_[i_] == '(') {
                ++i_;
                out.closure = c == 'N' ? Closure::N : Closure::D;
                out.expr = expr();
                expect(')');
            } else {
                i_ = save;
            }
        }
        if (out.closure == Closure::None) out.expr = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected trailing input");
        return out;
    }

private:
    TangleExpr expr() {
        TangleExpr e = term();
        while (true) {
            skip();
            if (i_ < s_.size() && s_[i_] == '*') {
                ++i_;
                e = TangleExpr::star(std::move(e), term());
            } else {
                return e;
            }
        }
    }

    TangleExpr term() {
        skip();
        if (i_ >= s_.size()) fail("expected a tangle");
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            TangleExpr e = expr();
            expect(')');
            return e;
        }
        if (c == 'r') {
            ++i_;
            expect('(');
            TangleExpr e = expr();
            expect(')');
            return TangleExpr::rot(std::move(e));
        }
        if (c == 'e') {
            ++i_;
            if (i_ < s_.size() && s_[i_] == '_') ++i_;
            if (i_ >= s_.size() || s_[i_] < '1' || s_[i_] > '6') fail("expected a basic tangle index 1..6");
            return TangleExpr::basic(s_[i_++] - '0');
        }
        if (c == 'c') {
            ++i_;
            if (i_ < s_.size() && s_[i_] == '+') {
                ++i_;
                return TangleExpr::crossing(1);
            }
            if (i_ < s_.size() && s_[i_] == '-') {
                ++i_;
                return TangleExpr::crossing(-1);
            }
            if (s_.substr(i_, 3) == "\xE2\x88\x92") {  // U+2212 minus sign
                i_ += 3;
                return TangleExpr::crossing(-1);
            }
            fail("expected + or - after c");
        }
        fail("expected e1..e6, c+, c-, r( or (");
    }

    void skip() {
        while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t' || s_[i_] == '\n' || s_[i_] == '\r')) ++i_;
    }
    void expect(char c) {
        skip();
        if (i_ >= s_.size() || s_[i_] != c) fail(std::string("expected '") + c + "'");
        ++i_;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("tangle: " + msg, i_);
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

}  // namespace

ClosedTangleExpr parse_tangle(std::string_view text) { return Parser(text).top(); }

std::string to_string(const TangleExpr& e) {
    switch (e.kind) {
        case TangleExpr::Kind::Basic: return "e" + std::to_string(e.value);
        case TangleExpr::Kind::Crossing: return e.value > 0 ? "c+" : "c-";
        case TangleExpr::Kind::Rot: return "r(" + to_string(e.kids[0]) + ")";
        case TangleExpr::Kind::Star: {
            std::string r = to_string(e.kids[1]);
            if (e.kids[1].kind == TangleExpr::Kind::Star) r = "(" + r + ")";
            return to_string(e.kids[0]) + "*" + r;
        }
    }
    return "";
}

std::string to_string(const ClosedTangleExpr& e) {
    switch (e.closure) {
        case Closure::N: return "N(" + to_string(e.expr) + ")";
        case Closure::D: return "D(" + to_string(e.expr) + ")";
        default: return to_string(e.expr);
    }
}

TangleDiagram to_tangle(const TangleExpr& e) {
    switch (e.kind) {
        case TangleExpr::Kind::Basic: return basic_tangle(e.value);
        case TangleExpr::Kind::Crossing: return tangle_crossing(e.value);
        case TangleExpr::Kind::Rot: return rotate(to_tangle(e.kids[0]));
        case TangleExpr::Kind::Star: return star(to_tangle(e.kids[0]), to_tangle(e.kids[1]));
    }
    throw Error("bad tangle expression");
}

LinkDiagram to_diagram(const ClosedTangleExpr& e) {
    if (e.closure == Closure::None) throw Error("expression has no N or D closure");
    return closure(to_tangle(e.expr), e.closure);
}

std::optional<Fraction> fraction_of(const TangleExpr& e) {
    switch (e.kind) {
        case TangleExpr::Kind::Basic: return basic_fraction(e.value);
        case TangleExpr::Kind::Crossing: return Fraction(e.value);
        case TangleExpr::Kind::Rot: {
            auto x = fraction_of(e.kids[0]);
            if (!x) return std::nullopt;
            return reciprocal(*x);
        }
        case TangleExpr::Kind::Star: {
            auto x = fraction_of(e.kids[0]), y = fraction_of(e.kids[1]);
            if (!x || !y) return std::nullopt;
            // infinity caps the other side: only integer tangles untwist there
            if (x->is_infinity()) return y->is_integer() ? std::optional<Fraction>(*x) : std::nullopt;
            if (y->is_infinity()) return x->is_integer() ? std::optional<Fraction>(*y) : std::nullopt;
            if (y->is_integer()) return *x + y->p;
            if (x->is_integer()) return *y + x->p;
            return std::nullopt;
        }
    }
    return std::nullopt;
}

bool has_closed_component(const TangleExpr& e) { return closed_components(to_tangle(e)) > 0; }

}  // namespace k4
