#include "k4/moves.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "surgery.hpp"

namespace k4 {

namespace {

const std::map<MoveKind, std::string>& names() {
    static const std::map<MoveKind, std::string> m{
        {MoveKind::R1Add, "R1_add"},   {MoveKind::R1Remove, "R1_remove"}, {MoveKind::R2Add, "R2_add"},
        {MoveKind::R2Remove, "R2_remove"}, {MoveKind::R3, "R3"},           {MoveKind::NAdd, "NMoveAdd"},
        {MoveKind::NRemove, "NMoveRemove"}};
    return m;
}

struct FaceMap {
    std::vector<Face> list;
    std::vector<int> of_dart;
    int graph_faces = 0;

    explicit FaceMap(const LinkDiagram& d) : list(faces(d)), of_dart(4 * d.size(), -1) {
        for (int f = 0; f < static_cast<int>(list.size()); ++f) {
            if (list[f].is_loop()) continue;
            ++graph_faces;
            for (auto x : list[f].sides) of_dart[4 * x.c + x.s] = f;
        }
    }
    int of(Dart x) const { return x.is_loop() ? graph_faces + 2 * x.loop() + x.s : of_dart[4 * x.c + x.s]; }
};

bool same_edge(const LinkDiagram& d, Dart a, Dart b) {
    if (a.is_loop() || b.is_loop()) return a.is_loop() && b.is_loop() && a.loop() == b.loop();
    return d.label(a.c, a.s) == d.label(b.c, b.s);
}

std::vector<Dart> all_sides(const LinkDiagram& d) {
    std::vector<Dart> v;
    for (int c = 0; c < d.size(); ++c)
        for (int s = 0; s < 4; ++s) v.push_back(Dart{c, s});
    for (int l = 0; l < d.free_loops; ++l) {
        v.push_back(loop_side(l, 0));
        v.push_back(loop_side(l, 1));
    }
    return v;
}

bool valid_side(const LinkDiagram& d, Dart x) {
    if (x.is_loop()) return x.loop() < d.free_loops && (x.s == 0 || x.s == 1);
    return x.c < d.size() && x.s >= 0 && x.s < 4;
}

// Two edge-sides may host an insertion when they border one face or float in different pieces.
bool pairable(const LinkDiagram& d, const FaceMap& fm, const Pieces& pc, Dart a, Dart b) {
    if (same_edge(d, a, b)) return false;
    if (pc.of(a) != pc.of(b)) return true;
    return fm.of(a) == fm.of(b);
}

struct Bigon {
    int c0, t0, c1, t1;  // corners (t, t+1) at each crossing
    int la, lb;          // edge labels
    bool twist;          // the strands alternate over/under along the bigon
};

std::vector<Bigon> bigons(const LinkDiagram& d, const FaceMap& fm) {
    std::vector<Bigon> out;
    for (const auto& f : fm.list) {
        if (f.sides.size() != 2 || f.is_loop()) continue;
        Dart a = f.sides[0], b = f.sides[1];
        if (a.c == b.c) continue;
        Bigon g{a.c, (a.s + 3) & 3, b.c, (b.s + 3) & 3, d.label(a.c, a.s), d.label(b.c, b.s), false};
        g.twist = (a.s & 1) != (((b.s + 3) & 3) & 1);
        out.push_back(g);
    }
    return out;
}

struct RunInfo {
    std::vector<int> out_corner;  // corner at c_k facing c_{k+1}
    int first_outer = 0;          // corner at c_1 on the far side of the run
    int last_outer = 0;           // corner at c_n on the far side of the run
    std::vector<int> inner_labels;
};

RunInfo resolve_run(const LinkDiagram& d, const Occurrences& occ, const std::vector<int>& cs,
                    const std::vector<int>& arcs) {
    int n = static_cast<int>(cs.size());
    if (n < 2) throw Error("twist run needs at least two crossings");
    if (arcs.size() != 2) throw Error("twist run needs the two bigon labels");
    for (int c : cs)
        if (c < 0 || c >= d.size()) throw Error("twist run crossing out of range");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (cs[i] == cs[j]) throw Error("twist run repeats a crossing");
    RunInfo r;
    int t = -1;
    for (int u = 0; u < 4; ++u) {
        int a = d.label(cs[0], u), b = d.label(cs[0], u + 1);
        if ((a == arcs[0] && b == arcs[1]) || (a == arcs[1] && b == arcs[0])) {
            Dart x = occ.other(Dart{cs[0], u}), y = occ.other(Dart{cs[0], (u + 1) & 3});
            if (x.c == cs[1] && y.c == cs[1] && x.s == ((y.s + 1) & 3)) t = u;
        }
    }
    if (t < 0) throw Error("named arcs do not bound a bigon between the first two crossings");
    r.first_outer = (t + 2) & 3;
    for (int k = 0; k + 1 < n; ++k) {
        Dart x = occ.other(Dart{cs[k], t}), y = occ.other(Dart{cs[k], (t + 1) & 3});
        if (x.c != cs[k + 1] || y.c != cs[k + 1] || x.s != ((y.s + 1) & 3))
            throw Error("crossings do not form a chain of bigons");
        if ((t & 1) == (x.s & 1)) throw Error("bigon is not a twist (strands do not alternate)");
        r.out_corner.push_back(t);
        r.inner_labels.push_back(d.label(cs[k], t));
        r.inner_labels.push_back(d.label(cs[k], t + 1));
        t = (y.s + 2) & 3;
    }
    r.last_outer = t;
    return r;
}

LinkDiagram checked(LinkDiagram d) {
    if (!is_planar(d)) throw Error("move produced a non-planar diagram");
    return d;
}

detail::SurgeryResult perform_move(const LinkDiagram& d, const Move& m, const Orientation* o) {
    Occurrences occ(d);
    detail::Surgery S(d);
    const auto& site = m.site;
    switch (m.kind) {
        case MoveKind::R1Add: {
            if (site.sides.size() != 1 || !valid_side(d, site.sides[0])) throw Error("R1_add needs one edge-side");
            if (m.sign != 1 && m.sign != -1) throw Error("R1_add sign must be +1 or -1");
            S.added = 1;
            auto [a, b] = S.open_side(site.sides[0], occ);
            if (m.sign < 0) {
                S.link(S.slot(0, 0), a);
                S.link(S.slot(0, 1), S.slot(0, 2));
                S.link(S.slot(0, 3), b);
            } else {
                S.link(S.slot(0, 0), b);
                S.link(S.slot(0, 1), a);
                S.link(S.slot(0, 2), S.slot(0, 3));
            }
            break;
        }
        case MoveKind::R1Remove: {
            if (site.crossings.size() != 1) throw Error("R1_remove needs one crossing");
            int c = site.crossings[0];
            if (c < 0 || c >= d.size()) throw Error("R1_remove crossing out of range");
            bool kink = false;
            for (int s = 0; s < 4; ++s) kink |= d.label(c, s) == d.label(c, s + 1);
            if (!kink) throw Error("R1_remove crossing has no kink");
            S.dissolved.push_back(c);
            break;
        }
        case MoveKind::R2Add:
        case MoveKind::NAdd: {
            if (site.sides.size() != 2) throw Error("insertion needs two edge-sides");
            for (auto x : site.sides)
                if (!valid_side(d, x)) throw Error("invalid edge-side");
            FaceMap fm(d);
            if (!pairable(d, fm, pieces(d), site.sides[0], site.sides[1]))
                throw Error("edge-sides do not share a face");
            if (m.sign != 1 && m.sign != -1) throw Error("insertion sign must be +1 or -1");
            if (m.kind == MoveKind::R2Add) {
                S.added = 2;
                auto [a1, b1] = S.open_side(site.sides[0], occ);
                auto [a2, b2] = S.open_side(site.sides[1], occ);
                const int A = 0, B = 1;
                if (m.sign > 0) {
                    S.link(S.slot(A, 0), b2);
                    S.link(S.slot(A, 1), S.slot(B, 1));
                    S.link(S.slot(A, 2), S.slot(B, 0));
                    S.link(S.slot(A, 3), a1);
                    S.link(S.slot(B, 2), a2);
                    S.link(S.slot(B, 3), b1);
                } else {
                    S.link(S.slot(A, 0), S.slot(B, 0));
                    S.link(S.slot(A, 1), S.slot(B, 3));
                    S.link(S.slot(A, 2), a1);
                    S.link(S.slot(A, 3), b2);
                    S.link(S.slot(B, 1), a2);
                    S.link(S.slot(B, 2), b1);
                }
            } else {
                if (m.n < 1) throw Error("NMoveAdd needs n >= 1");
                S.added = m.n;
                auto [a1, b1] = S.open_side(site.sides[0], occ);
                auto [a2, b2] = S.open_side(site.sides[1], occ);
                // Corner slots of a column crossing: SE, NE, NW, SW.
                auto corner = [&](int k, int which) {
                    static const int pos_pos[4] = {0, 1, 2, 3};
                    static const int pos_neg[4] = {3, 0, 1, 2};
                    return S.slot(k, m.sign > 0 ? pos_pos[which] : pos_neg[which]);
                };
                enum { SE, NE, NW, SW };
                S.link(corner(0, SW), a1);
                S.link(corner(0, SE), b2);
                S.link(corner(m.n - 1, NW), b1);
                S.link(corner(m.n - 1, NE), a2);
                for (int k = 0; k + 1 < m.n; ++k) {
                    S.link(corner(k, NW), corner(k + 1, SW));
                    S.link(corner(k, NE), corner(k + 1, SE));
                }
            }
            break;
        }
        case MoveKind::R2Remove: {
            if (site.crossings.size() != 2) throw Error("R2_remove needs two crossings");
            FaceMap fm(d);
            if (site.face < 0 || site.face >= static_cast<int>(fm.list.size())) throw Error("R2_remove face out of range");
            const auto& f = fm.list[site.face];
            if (f.sides.size() != 2 || f.is_loop()) throw Error("R2_remove face is not a bigon");
            Dart a = f.sides[0], b = f.sides[1];
            if (a.c == b.c) throw Error("R2_remove bigon uses one crossing");
            std::vector<int> cs{a.c, b.c}, want = site.crossings;
            std::sort(cs.begin(), cs.end());
            std::sort(want.begin(), want.end());
            if (cs != want) throw Error("R2_remove crossings do not match the face");
            if ((a.s & 1) != (((b.s + 3) & 3) & 1)) throw Error("R2_remove bigon alternates");
            S.dissolved = {a.c, b.c};
            break;
        }
        case MoveKind::R3: {
            FaceMap fm(d);
            if (site.face < 0 || site.face >= static_cast<int>(fm.list.size())) throw Error("R3 face out of range");
            const auto& f = fm.list[site.face];
            if (f.sides.size() != 3 || f.is_loop()) throw Error("R3 face is not a triangle");
            int c[3], s[3], t[3];
            for (int k = 0; k < 3; ++k) {
                c[k] = f.sides[k].c;
                s[k] = f.sides[k].s;
                t[k] = (s[k] + 3) & 3;
            }
            if (c[0] == c[1] || c[1] == c[2] || c[0] == c[2]) throw Error("R3 triangle repeats a crossing");
            bool alternating = true;
            for (int k = 0; k < 3; ++k) alternating &= (s[k] & 1) != (t[(k + 1) % 3] & 1);
            if (alternating) throw Error("R3 triangle alternates");
            if (!site.crossings.empty()) {
                std::vector<int> have{c[0], c[1], c[2]}, want = site.crossings;
                std::sort(have.begin(), have.end());
                std::sort(want.begin(), want.end());
                if (have != want) throw Error("R3 crossings do not match the face");
            }
            S.removed = {c[0], c[1], c[2]};
            for (int k = 0; k < 3; ++k) S.dropped.push_back(d.label(c[k], s[k]));
            S.added = 3;
            for (int k = 0; k < 3; ++k) {
                int k1 = (k + 1) % 3, k2 = (k + 2) % 3;
                S.link(S.slot(k1, t[k1]), S.slot(k, s[k]));
                S.link(S.slot(k1, t[k1] + 2), S.dart(c[k], t[k] + 3));
                S.link(S.slot(k1, t[k1] + 3), S.dart(c[k2], t[k2] + 2));
            }
            break;
        }
        case MoveKind::NRemove: {
            if (m.n < 2 || static_cast<int>(site.crossings.size()) != m.n)
                throw Error("NMoveRemove needs n >= 2 crossings");
            RunInfo r = resolve_run(d, occ, site.crossings, site.arcs);
            if (m.n % 2 == 0) {
                S.dissolved = site.crossings;
            } else {
                S.removed = site.crossings;
                S.dropped = r.inner_labels;
                int c1 = site.crossings.front(), cn = site.crossings.back();
                Dart p{c1, r.first_outer}, q{c1, (r.first_outer + 1) & 3};
                // follow the strand entering at p through the run
                Dart x{c1, (p.s + 2) & 3};
                for (int k = 1; k < m.n; ++k) {
                    Dart y = occ.other(x);
                    x = Dart{y.c, (y.s + 2) & 3};
                }
                Dart pn = x;
                Dart qn{cn, pn.s == r.last_outer ? (r.last_outer + 1) & 3 : r.last_outer};
                S.link(S.dart(p), S.dart(qn));
                S.link(S.dart(q), S.dart(pn));
            }
            break;
        }
    }
    return detail::perform(S, o);
}

}  // namespace

std::string kind_name(MoveKind k) { return names().at(k); }

MoveKind parse_kind(const std::string& s) {
    for (auto& [k, v] : names())
        if (v == s) return k;
    throw Error("unknown move kind '" + s + "'");
}

bool is_addition(MoveKind k) { return k == MoveKind::R1Add || k == MoveKind::R2Add || k == MoveKind::NAdd; }

std::vector<TwistRegion> twist_regions(const LinkDiagram& d) {
    FaceMap fm(d);
    auto bs = bigons(d, fm);
    int n = d.size();
    // at[c][t]: twist bigon index at corner t of crossing c
    std::vector<std::array<int, 4>> at(n, {-1, -1, -1, -1});
    std::vector<Bigon> tw;
    for (auto& b : bs)
        if (b.twist) {
            at[b.c0][b.t0] = static_cast<int>(tw.size());
            at[b.c1][b.t1] = static_cast<int>(tw.size());
            tw.push_back(b);
        }
    std::vector<char> used(tw.size(), 0);
    std::vector<TwistRegion> out;
    auto far = [&](int bi, int c, int t) {
        const auto& b = tw[bi];
        return (b.c0 == c && b.t0 == t) ? std::pair{b.c1, b.t1} : std::pair{b.c0, b.t0};
    };
    std::vector<std::array<char, 2>> in_chain(n, {0, 0});
    // open chains: start at a node with a bigon on exactly one of its two corners
    for (int c = 0; c < n; ++c)
        for (int ax = 0; ax < 2; ++ax) {
            int a = at[c][ax], b = at[c][ax + 2];
            if ((a >= 0) == (b >= 0)) continue;
            int t = a >= 0 ? ax : ax + 2;
            if (used[at[c][t]]) continue;
            TwistRegion r;
            r.crossings.push_back(c);
            in_chain[c][ax] = 1;
            int cc = c, tt = t;
            while (at[cc][tt] >= 0 && !used[at[cc][tt]]) {
                int bi = at[cc][tt];
                used[bi] = 1;
                r.bigons.push_back({std::min(tw[bi].la, tw[bi].lb), std::max(tw[bi].la, tw[bi].lb)});
                auto [c2, t2] = far(bi, cc, tt);
                r.crossings.push_back(c2);
                in_chain[c2][t2 & 1] = 1;
                cc = c2;
                tt = (t2 + 2) & 3;
            }
            out.push_back(std::move(r));
        }
    // what is left are cycles
    for (int bi0 = 0; bi0 < static_cast<int>(tw.size()); ++bi0) {
        if (used[bi0]) continue;
        TwistRegion r;
        r.cyclic = true;
        int cc = tw[bi0].c0, tt = tw[bi0].t0;
        r.crossings.push_back(cc);
        in_chain[cc][tt & 1] = 1;
        while (!used[at[cc][tt]]) {
            int bi = at[cc][tt];
            used[bi] = 1;
            r.bigons.push_back({std::min(tw[bi].la, tw[bi].lb), std::max(tw[bi].la, tw[bi].lb)});
            auto [c2, t2] = far(bi, cc, tt);
            cc = c2;
            tt = (t2 + 2) & 3;
            in_chain[c2][t2 & 1] = 1;
            if (!used[at[cc][tt]]) r.crossings.push_back(cc);
        }
        out.push_back(std::move(r));
    }
    for (int c = 0; c < n; ++c)
        if (!in_chain[c][0] && !in_chain[c][1]) out.push_back(TwistRegion{{c}, {}, false});
    return out;
}

std::vector<MoveSite> enumerate_sites(const LinkDiagram& d, MoveKind kind, int n) {
    std::vector<MoveSite> out;
    switch (kind) {
        case MoveKind::R1Add: {
            FaceMap fm(d);
            for (auto x : all_sides(d)) out.push_back(MoveSite{fm.of(x), {x}, {}, {}, {}});
            break;
        }
        case MoveKind::R2Add:
        case MoveKind::NAdd: {
            FaceMap fm(d);
            Pieces pc = pieces(d);
            auto sides = all_sides(d);
            for (std::size_t i = 0; i < sides.size(); ++i)
                for (std::size_t j = i + 1; j < sides.size(); ++j)
                    if (pairable(d, fm, pc, sides[i], sides[j]))
                        out.push_back(MoveSite{fm.of(sides[i]), {sides[i], sides[j]}, {}, {}, {}});
            break;
        }
        case MoveKind::R1Remove:
            for (int c = 0; c < d.size(); ++c)
                for (int s = 0; s < 4; ++s)
                    if (d.label(c, s) == d.label(c, s + 1)) {
                        out.push_back(MoveSite{-1, {}, {c}, {}, {}});
                        break;
                    }
            break;
        case MoveKind::R2Remove: {
            FaceMap fm(d);
            for (int f = 0; f < static_cast<int>(fm.list.size()); ++f) {
                const auto& F = fm.list[f];
                if (F.is_loop() || F.sides.size() != 2) continue;
                Dart a = F.sides[0], b = F.sides[1];
                if (a.c == b.c) continue;
                if ((a.s & 1) != (((b.s + 3) & 3) & 1)) continue;
                out.push_back(MoveSite{f, {}, {std::min(a.c, b.c), std::max(a.c, b.c)}, {}, {}});
            }
            break;
        }
        case MoveKind::R3: {
            FaceMap fm(d);
            for (int f = 0; f < static_cast<int>(fm.list.size()); ++f) {
                const auto& F = fm.list[f];
                if (F.is_loop() || F.sides.size() != 3) continue;
                int c[3], s[3];
                for (int k = 0; k < 3; ++k) c[k] = F.sides[k].c, s[k] = F.sides[k].s;
                if (c[0] == c[1] || c[1] == c[2] || c[0] == c[2]) continue;
                bool alternating = true;
                for (int k = 0; k < 3; ++k) alternating &= (s[k] & 1) != (((s[(k + 1) % 3] + 3) & 3) & 1);
                if (alternating) continue;
                std::vector<int> cs{c[0], c[1], c[2]};
                std::sort(cs.begin(), cs.end());
                out.push_back(MoveSite{f, {}, cs, {}, {}});
            }
            break;
        }
        case MoveKind::NRemove: {
            if (n < 2) break;
            for (const auto& r : twist_regions(d)) {
                int m = static_cast<int>(r.crossings.size());
                if (m < n) continue;
                int starts = r.cyclic ? (n == m ? 1 : m) : m - n + 1;
                for (int i = 0; i < starts; ++i) {
                    MoveSite s;
                    for (int k = 0; k < n; ++k) s.crossings.push_back(r.crossings[(i + k) % m]);
                    s.arcs = {r.bigons[i][0], r.bigons[i][1]};
                    out.push_back(std::move(s));
                }
            }
            break;
        }
    }
    return out;
}

std::vector<Move> enumerate_moves(const LinkDiagram& d, const MoveSet& set) {
    std::vector<Move> out;
    auto add = [&](MoveKind k, int n, std::initializer_list<int> signs) {
        for (auto& s : enumerate_sites(d, k, n))
            for (int sg : signs) out.push_back(Move{k, n, sg, s});
    };
    if (set.r1) add(MoveKind::R1Remove, 0, {0});
    if (set.r2) add(MoveKind::R2Remove, 0, {0});
    if (set.n >= 2) add(MoveKind::NRemove, set.n, {0});
    if (set.r3) add(MoveKind::R3, 0, {0});
    if (set.additions) {
        if (set.r1) add(MoveKind::R1Add, 0, {1, -1});
        if (set.r2) add(MoveKind::R2Add, 0, {1, -1});
        if (set.n >= 1) add(MoveKind::NAdd, set.n, {1, -1});
    }
    return out;
}

Move resolve(const LinkDiagram& d, const Move& m) {
    if (!is_addition(m.kind) || !m.site.sides.empty()) return m;
    std::size_t want = m.kind == MoveKind::R1Add ? 1 : 2;
    if (m.site.arcs.size() != want) throw Error("addition site needs " + std::to_string(want) + " edge labels");
    FaceMap fm(d);
    Occurrences occ(d);
    Move r = m;
    for (std::size_t i = 0; i < want; ++i) {
        int l = m.site.arcs[i];
        int f = i < m.site.faces.size() ? m.site.faces[i] : m.site.face;
        std::vector<Dart> cand;
        if (l >= 0 && l < d.arc_count) cand = {occ.of(l)[0], occ.of(l)[1]};
        else if (l >= d.arc_count && l < d.arc_count + d.free_loops)
            cand = {loop_side(l - d.arc_count, 0), loop_side(l - d.arc_count, 1)};
        else throw Error("addition site names unknown edge " + std::to_string(l));
        std::sort(cand.begin(), cand.end(), [](Dart a, Dart b) { return std::pair(a.c < 0, a) < std::pair(b.c < 0, b); });
        bool found = false;
        for (auto x : cand)
            if (fm.of(x) == f) {
                r.site.sides.push_back(x);
                found = true;
                break;
            }
        if (!found) throw Error("edge " + std::to_string(l) + " does not border face " + std::to_string(f));
    }
    return r;
}

Move portable(const LinkDiagram& d, const Move& m) {
    if (!is_addition(m.kind) || m.site.sides.empty()) return m;
    FaceMap fm(d);
    Move r = m;
    r.site.sides.clear();
    r.site.arcs.clear();
    r.site.faces.clear();
    for (auto x : m.site.sides) r.site.arcs.push_back(x.is_loop() ? d.arc_count + x.loop() : d.label(x.c, x.s));
    r.site.face = fm.of(m.site.sides[0]);
    if (m.site.sides.size() == 2 && fm.of(m.site.sides[1]) != r.site.face)
        r.site.faces = {r.site.face, fm.of(m.site.sides[1])};
    if (resolve(d, r).site.sides != m.site.sides) r.site.sides = m.site.sides;
    return r;
}

LinkDiagram apply(const LinkDiagram& d, const Move& m) { return checked(perform_move(d, resolve(d, m), nullptr).d); }

std::pair<LinkDiagram, Orientation> apply(const LinkDiagram& d, const Orientation& o, const Move& m) {
    auto r = perform_move(d, resolve(d, m), &o);
    checked(r.d);
    return {std::move(r.d), std::move(r.o)};
}

NMoveType classify_nmove_orientation(const LinkDiagram& d, const Orientation& o, const Move& move) {
    Move m = resolve(d, move);
    auto v = oriented(d, o);
    auto along = [&](Dart x) {
        if (x.is_loop()) {
            int dir = o.reversed[v.comps.strand_count + x.loop()] ? 1 : 0;
            return dir == x.s;
        }
        return v.leaves(x);
    };
    if (m.kind == MoveKind::NAdd) {
        if (m.site.sides.size() != 2) throw Error("invalid NMoveAdd site");
        return along(m.site.sides[0]) != along(m.site.sides[1]) ? NMoveType::Parallel : NMoveType::Antiparallel;
    }
    if (m.kind == MoveKind::NRemove) {
        Occurrences occ(d);
        RunInfo r = resolve_run(d, occ, m.site.crossings, m.site.arcs);
        int c1 = m.site.crossings.front();
        bool p_in = !v.leaves(Dart{c1, r.first_outer});
        bool q_in = !v.leaves(Dart{c1, (r.first_outer + 1) & 3});
        return p_in == q_in ? NMoveType::Parallel : NMoveType::Antiparallel;
    }
    throw Error("not an n-move");
}

std::string describe(const Move& m) {
    std::ostringstream os;
    os << kind_name(m.kind);
    if (m.kind == MoveKind::NAdd) os << "(" << m.n << "," << (m.sign > 0 ? "+" : "-") << ")";
    else if (m.kind == MoveKind::NRemove) os << "(" << m.n << ")";
    else if (m.sign) os << (m.sign > 0 ? "+" : "-");
    if (m.site.face >= 0) os << " face " << m.site.face;
    for (auto x : m.site.sides) {
        if (x.is_loop()) os << " loop" << x.loop() << "/" << x.s;
        else os << " (" << x.c << "," << x.s << ")";
    }
    if (!m.site.crossings.empty()) {
        os << " crossings";
        for (int c : m.site.crossings) os << " " << c;
    }
    if (!m.site.arcs.empty()) os << " arcs " << m.site.arcs[0] << "," << m.site.arcs[1];
    return os.str();
}

}  // namespace k4
