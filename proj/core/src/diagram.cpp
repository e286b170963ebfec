#include "k4/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace k4 {

ParseError::ParseError(const std::string& msg, std::size_t p)
    : Error(msg + " at position " + std::to_string(p)), pos(p) {}

Occurrences::Occurrences(const LinkDiagram& d) : d_(&d), occ_(d.arc_count) {
    std::vector<int> seen(d.arc_count, 0);
    for (int c = 0; c < d.size(); ++c)
        for (int s = 0; s < 4; ++s) {
            int l = d.label(c, s);
            if (l < 0 || l >= d.arc_count || seen[l] >= 2) throw Error("edge label degree violation");
            occ_[l][seen[l]++] = Dart{c, s};
        }
    for (int l = 0; l < d.arc_count; ++l)
        if (seen[l] != 2) throw Error("edge label " + std::to_string(l) + " used " + std::to_string(seen[l]) + " times");
}

Dart Occurrences::other(Dart x) const {
    const auto& o = occ_[d_->label(x.c, x.s)];
    return o[0] == x ? o[1] : o[0];
}

void validate(const LinkDiagram& d) {
    if (d.free_loops < 0) throw Error("negative free loop count");
    if (d.arc_count != 2 * d.size()) throw Error("edge count must be twice the crossing count");
    Occurrences occ(d);
}

namespace {

struct Lexer {
    std::string_view t;
    std::size_t i = 0;

    void skip() {
        while (i < t.size()) {
            if (std::isspace(static_cast<unsigned char>(t[i]))) {
                ++i;
            } else if (t[i] == '#') {
                while (i < t.size() && t[i] != '\n') ++i;
            } else {
                break;
            }
        }
    }
    bool eof() { skip(); return i >= t.size(); }
    char peek() { skip(); return i < t.size() ? t[i] : '\0'; }
    void expect(char ch) {
        if (peek() != ch) throw ParseError(std::string("expected '") + ch + "'", i);
        ++i;
    }
    bool accept(char ch) {
        if (peek() != ch) return false;
        ++i;
        return true;
    }
    long long number() {
        skip();
        std::size_t start = i;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
        if (start == i) throw ParseError("expected a nonnegative integer", start);
        if (i - start > 9) throw ParseError("integer too large", start);
        return std::stoll(std::string(t.substr(start, i - start)));
    }
    bool keyword(std::string_view w) {
        skip();
        if (t.substr(i, w.size()) != w) return false;
        i += w.size();
        return true;
    }
};

}  // namespace

LinkDiagram parse_pd(std::string_view text) {
    Lexer lx{text};
    LinkDiagram d;
    std::vector<std::array<long long, 4>> raw;
    if (lx.keyword("loops")) {
        lx.expect('=');
        d.free_loops = static_cast<int>(lx.number());
        lx.accept(';');
    }
    while (!lx.eof()) {
        std::size_t at = lx.i;
        if (lx.peek() != 'X') throw ParseError("expected 'X('", at);
        ++lx.i;
        lx.expect('(');
        std::array<long long, 4> x{};
        for (int s = 0; s < 4; ++s) {
            if (s) lx.expect(',');
            x[s] = lx.number();
        }
        lx.expect(')');
        raw.push_back(x);
        if (!lx.accept(';') && !lx.eof()) throw ParseError("expected ';'", lx.i);
    }
    std::map<long long, int> count;
    for (auto& x : raw)
        for (auto l : x) ++count[l];
    std::map<long long, int> dense;
    for (auto& [l, k] : count) {
        if (k != 2) throw Error("edge label " + std::to_string(l) + " used " + std::to_string(k) + " times");
        int next = static_cast<int>(dense.size());
        dense[l] = next;
    }
    for (std::size_t c = 0; c < raw.size(); ++c) {
        Crossing x;
        x.id = static_cast<int>(c);
        for (int s = 0; s < 4; ++s) x.slots[s] = dense[raw[c][s]];
        d.crossings.push_back(x);
    }
    d.arc_count = static_cast<int>(dense.size());
    validate(d);
    return d;
}

std::string to_pd(const LinkDiagram& d) {
    std::ostringstream os;
    if (d.free_loops > 0) os << "loops=" << d.free_loops << (d.crossings.empty() ? "" : "\n");
    for (int c = 0; c < d.size(); ++c) {
        const auto& s = d.crossings[c].slots;
        os << (c ? ";" : "") << "X(" << s[0] << "," << s[1] << "," << s[2] << "," << s[3] << ")";
    }
    return os.str();
}

void normalize(LinkDiagram& d) {
    std::vector<int> map(d.arc_count, -1);
    int next = 0;
    for (int c = 0; c < d.size(); ++c) {
        d.crossings[c].id = c;
        for (auto& l : d.crossings[c].slots) {
            if (map[l] < 0) map[l] = next++;
            l = map[l];
        }
    }
    d.arc_count = next;
}

Components components(const LinkDiagram& d) {
    Occurrences occ(d);
    Components r;
    r.of_label.assign(d.arc_count, -1);
    for (int l0 = 0; l0 < d.arc_count; ++l0) {
        if (r.of_label[l0] >= 0) continue;
        int k = r.strand_count++;
        std::vector<Dart> fwd;
        Dart start = occ.of(l0)[0], a = start;
        do {
            fwd.push_back(a);
            r.of_label[d.label(a.c, a.s)] = k;
            a = occ.other(Dart{a.c, (a.s + 2) & 3});
        } while (a != start);
        std::vector<Dart> rev;
        for (auto it = fwd.rbegin(); it != fwd.rend(); ++it) rev.push_back(Dart{it->c, (it->s + 2) & 3});

        // Reference direction: the under-passage at the lowest crossing enters at slot 0;
        // without under-passages, travel into the first occurrence of the lowest label.
        int best_c = -1, best_s = 0;
        for (auto x : fwd)
            if ((x.s & 1) == 0 && (best_c < 0 || x.c < best_c)) best_c = x.c, best_s = x.s;
        bool use_fwd;
        Dart anchor;
        if (best_c >= 0) {
            use_fwd = best_s == 0;
            anchor = Dart{best_c, 0};
        } else {
            int lmin = d.arc_count;
            for (auto x : fwd) lmin = std::min(lmin, d.label(x.c, x.s));
            anchor = occ.of(lmin)[0];
            use_fwd = std::find(fwd.begin(), fwd.end(), anchor) != fwd.end();
        }
        auto seq = use_fwd ? fwd : rev;
        auto pos = std::find(seq.begin(), seq.end(), anchor);
        std::rotate(seq.begin(), pos, seq.end());
        r.arrivals.push_back(std::move(seq));
    }
    r.count = r.strand_count + d.free_loops;
    return r;
}

Orientation Orientation::reference(const LinkDiagram& d) {
    return Orientation{std::vector<bool>(components(d).count, false)};
}

bool OrientedView::leaves(Dart x) const {
    if (x.is_loop()) return false;  // callers handle loops through the orientation flag
    if (x.s & 1) return over_in[x.c] != x.s;
    return under_in[x.c] != x.s;
}

OrientedView oriented(const LinkDiagram& d, const Orientation& o) {
    OrientedView v;
    v.comps = components(d);
    if (static_cast<int>(o.reversed.size()) != v.comps.count) throw Error("orientation size mismatch");
    int n = d.size();
    v.under_in.assign(n, -1);
    v.over_in.assign(n, -1);
    v.under_comp.assign(n, -1);
    v.over_comp.assign(n, -1);
    for (int k = 0; k < v.comps.strand_count; ++k)
        for (auto a : v.comps.arrivals[k]) {
            int s = o.reversed[k] ? (a.s + 2) & 3 : a.s;
            if (s & 1) v.over_in[a.c] = s, v.over_comp[a.c] = k;
            else v.under_in[a.c] = s, v.under_comp[a.c] = k;
        }
    return v;
}

int crossing_sign(const OrientedView& v, int c) {
    return (v.under_in[c] == 0) == (v.over_in[c] == 3) ? 1 : -1;
}

int self_writhe(const LinkDiagram& d) {
    OrientedView v = oriented(d, Orientation::reference(d));
    int w = 0;
    for (int c = 0; c < d.size(); ++c)
        if (v.under_comp[c] == v.over_comp[c]) w += crossing_sign(v, c);
    return w;
}

LinkDiagram parallel_2cable(const LinkDiagram& d) {
    // Copy k of edge e is 2e + k, read as the copy on the left walking out of the
    // edge's first slot; walking out of the second slot the sides swap.
    std::vector<int> seen(d.arc_count, 0);
    int next = 2 * d.arc_count;
    LinkDiagram out;
    for (const auto& x : d.crossings) {
        std::array<int, 4> left, right;  // outward-left and outward-right copy per slot
        for (int s = 0; s < 4; ++s) {
            int e = x.slots[s];
            int k = seen[e]++;
            left[s] = 2 * e + k;
            right[s] = 2 * e + (1 - k);
        }
        // slot 0 south, 1 east, 2 north, 3 west; the east-west strand is over
        int vp = next++, vm = next++, hp = next++, hm = next++;
        auto put = [&](int s, int e, int n, int w) {
            Crossing c;
            c.slots = {s, e, n, w};
            out.crossings.push_back(c);
        };
        put(left[0], right[1], vp, hm);   // (+1,-1)
        put(vp, left[1], right[2], hp);   // (+1,+1)
        put(right[0], hm, vm, left[3]);   // (-1,-1)
        put(vm, hp, left[2], right[3]);   // (-1,+1)
    }
    out.arc_count = next;
    out.free_loops = 2 * d.free_loops;
    normalize(out);
    validate(out);
    return out;
}

int writhe(const LinkDiagram& d, const Orientation& o) {
    auto v = oriented(d, o);
    int w = 0;
    for (int c = 0; c < d.size(); ++c) w += crossing_sign(v, c);
    return w;
}

LinkingData linking_matrix(const LinkDiagram& d, const Orientation& o) {
    auto v = oriented(d, o);
    int m = v.comps.count;
    LinkingData ld;
    ld.m.assign(m, std::vector<long long>(m, 0));
    for (int c = 0; c < d.size(); ++c) {
        int i = v.under_comp[c], j = v.over_comp[c];
        if (i == j) continue;
        int s = crossing_sign(v, c);
        ld.m[i][j] += s;
        ld.m[j][i] += s;
    }
    for (int i = 0; i < m; ++i) {
        long long row = 0;
        for (int j = 0; j < m; ++j)
            if (i != j) {
                ld.m[i][j] /= 2;
                row += ld.m[i][j];
            }
        ld.m[i][i] = -row;
    }
    return ld;
}

Pieces pieces(const LinkDiagram& d) {
    int n = d.size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    Occurrences occ(d);
    for (int l = 0; l < d.arc_count; ++l) {
        int a = find(occ.of(l)[0].c), b = find(occ.of(l)[1].c);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    Pieces p;
    p.of_crossing.assign(n, -1);
    std::vector<int> id(n, -1);
    for (int c = 0; c < n; ++c) {
        int r = find(c);
        if (id[r] < 0) id[r] = p.count++;
        p.of_crossing[c] = id[r];
    }
    return p;
}

std::vector<Face> faces(const LinkDiagram& d) {
    Occurrences occ(d);
    int n = d.size();
    std::vector<char> seen(4 * n, 0);
    std::vector<Face> out;
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s) {
            if (seen[4 * c + s]) continue;
            Face f;
            Dart x{c, s};
            while (!seen[4 * x.c + x.s]) {
                seen[4 * x.c + x.s] = 1;
                f.sides.push_back(x);
                x = occ.next_in_face(x);
            }
            out.push_back(std::move(f));
        }
    int pc = pieces(d).count;
    long long euler = static_cast<long long>(n) - d.arc_count + static_cast<long long>(out.size());
    if (euler != 2LL * pc) throw Error("diagram is not planar (Euler count " + std::to_string(euler) + ")");
    for (int l = 0; l < d.free_loops; ++l)
        for (int s = 0; s < 2; ++s) out.push_back(Face{{loop_side(l, s)}});
    return out;
}

bool is_planar(const LinkDiagram& d) {
    try {
        faces(d);
        return true;
    } catch (const Error&) {
        return false;
    }
}

namespace {

std::vector<int> piece_code(const LinkDiagram& d, const Occurrences& occ, int c0, int base0,
                            std::vector<int>& idx, std::vector<int>& base, std::vector<int>& lab,
                            std::vector<int>& touched_c, std::vector<int>& touched_l) {
    std::vector<int> out;
    std::vector<int> order{c0};
    idx[c0] = 0;
    base[c0] = base0;
    touched_c.push_back(c0);
    int next = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        int c = order[i];
        for (int k = 0; k < 4; ++k) {
            int s = (base[c] + k) & 3;
            int l = d.label(c, s);
            if (lab[l] < 0) {
                lab[l] = next++;
                touched_l.push_back(l);
                Dart o = occ.other(Dart{c, s});
                if (idx[o.c] < 0) {
                    idx[o.c] = static_cast<int>(order.size());
                    base[o.c] = (o.s & 1) ? o.s - 1 : o.s;
                    order.push_back(o.c);
                    touched_c.push_back(o.c);
                }
            }
            out.push_back(lab[l]);
        }
    }
    return out;
}

}  // namespace

std::string canonical_code(const LinkDiagram& d) { return canonical_code(d, -1); }

std::string canonical_code(const LinkDiagram& d, int root) {
    if (root >= d.size()) throw Error("canonical code root out of range");
    Occurrences occ(d);
    Pieces p = pieces(d);
    int n = d.size();
    std::vector<std::vector<int>> members(p.count);
    for (int c = 0; c < n; ++c) members[p.of_crossing[c]].push_back(c);
    std::vector<int> idx(n, -1), base(n, 0), lab(d.arc_count, -1), tc, tl;
    std::vector<std::vector<int>> codes;
    for (auto& mem : members) {
        std::vector<int> best;
        bool rooted = root >= 0 && p.of_crossing[root] == p.of_crossing[mem[0]];
        for (int c : mem)
            for (int b = 0; b < 4; b += 2) {
                if (rooted && (c != root || b != 0)) continue;
                tc.clear();
                tl.clear();
                auto code = piece_code(d, occ, c, b, idx, base, lab, tc, tl);
                for (int x : tc) idx[x] = -1;
                for (int x : tl) lab[x] = -1;
                if (best.empty() || code < best) best = std::move(code);
            }
        codes.push_back(std::move(best));
    }
    int first = 0;
    if (root >= 0)
        for (std::size_t i = 0; i < members.size(); ++i)
            if (p.of_crossing[root] == static_cast<int>(i)) std::swap(codes[i], codes[0]), first = 1;
    std::sort(codes.begin() + first, codes.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::string s;
    auto put = [&s](int v) {
        s.push_back(static_cast<char>((v >> 8) & 0xff));
        s.push_back(static_cast<char>(v & 0xff));
    };
    put(d.free_loops);
    if (root >= 0) put(0xffff);
    for (auto& code : codes) {
        put(static_cast<int>(code.size() / 4));
        for (int v : code) put(v);
    }
    return s;
}

}  // namespace k4
