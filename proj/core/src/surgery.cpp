#include "surgery.hpp"

#include <algorithm>
#include <array>

namespace k4::detail {

std::pair<int, int> Surgery::open_side(Dart side, const Occurrences& occ) {
    if (side.is_loop()) {
        int l = side.loop();
        if (l >= d.free_loops || side.s < 0 || side.s > 1) throw Error("invalid free loop side");
        for (auto& [ol, os] : opened)
            if (ol == l) throw Error("free loop opened twice");
        opened.emplace_back(l, side.s);
        int i = static_cast<int>(opened.size()) - 1;
        return {loop_end(i, 0), loop_end(i, 1)};
    }
    if (side.c >= d.size() || side.s < 0 || side.s > 3) throw Error("invalid edge side");
    int l = d.label(side.c, side.s);
    if (std::find(cut.begin(), cut.end(), l) != cut.end()) throw Error("edge opened twice");
    cut.push_back(l);
    return {dart(side), dart(occ.other(side))};
}

namespace {

struct LinkRec {
    int a, b;
    int old;  // edge label, or -(i+2) for opened loop i, or -1 for a new link
};

}  // namespace

SurgeryResult perform(const Surgery& S, const Orientation* o) {
    const LinkDiagram& d = S.d;
    const int n = d.size();
    const int nslot = 4 * n + 4 * S.added;
    const int nend = nslot + 2 * static_cast<int>(S.opened.size());
    Occurrences occ(d);

    std::vector<char> gone(n, 0), skip_label(d.arc_count, 0);
    for (int c : S.removed) gone.at(c) = 1;
    for (int c : S.dissolved) gone.at(c) = 1;
    for (int l : S.dropped) skip_label.at(l) = 1;
    for (int l : S.cut) skip_label.at(l) = 1;

    std::vector<LinkRec> links;
    for (int l = 0; l < d.arc_count; ++l)
        if (!skip_label[l]) links.push_back({S.dart(occ.of(l)[0]), S.dart(occ.of(l)[1]), l});
    for (std::size_t i = 0; i < S.opened.size(); ++i)
        links.push_back({S.loop_end(static_cast<int>(i), 0), S.loop_end(static_cast<int>(i), 1), -(static_cast<int>(i) + 2)});
    for (int c : S.dissolved) {
        links.push_back({S.dart(c, 0), S.dart(c, 2), -1});
        links.push_back({S.dart(c, 1), S.dart(c, 3), -1});
    }
    for (auto [a, b] : S.links) links.push_back({a, b, -1});

    std::vector<std::array<int, 2>> adj(nend, {-1, -1});
    std::vector<int> deg(nend, 0);
    for (int i = 0; i < static_cast<int>(links.size()); ++i)
        for (int e : {links[i].a, links[i].b}) {
            if (e < 0 || e >= nend) throw Error("surgery link out of range");
            if (deg[e] >= 2) throw Error("surgery end linked too often");
            adj[e][deg[e]++] = i;
        }
    auto terminal = [&](int e) { return e < 4 * n ? !gone[e / 4] : e < nslot; };
    for (int e = 0; e < nend; ++e) {
        bool ok = terminal(e) ? deg[e] == 1 : (deg[e] == 0 || deg[e] == 2);
        if (e >= nslot && deg[e] != 2) ok = false;
        if (!ok) throw Error("surgery degree check failed");
    }

    // Orientation data of the old diagram, if requested.
    OrientedView view;
    int old_strands = 0;
    if (o) {
        view = oriented(d, *o);
        old_strands = view.comps.strand_count;
    }
    auto flows_forward = [&](const LinkRec& r, int from) -> int {
        if (!o || r.old == -1) return 0;
        if (r.old >= 0) return view.leaves(Dart{from / 4, from % 4}) ? 1 : -1;
        int i = -(r.old + 2);
        auto [loop, side] = S.opened[i];
        int dir = o->reversed[old_strands + loop] ? 1 : 0;
        bool fwd = (dir == side) == (from == S.loop_end(i, 0));
        return fwd ? 1 : -1;
    };

    std::vector<int> label_of(nend, -1);
    std::vector<char> used_link(links.size(), 0);
    struct Path { int t1, t2, dir; };
    std::vector<Path> paths;
    for (int t = 0; t < nslot; ++t) {
        if (!terminal(t) || label_of[t] >= 0) continue;
        int lab = static_cast<int>(paths.size());
        int cur = t, dir = 0;
        int li = adj[t][0];
        while (true) {
            used_link[li] = 1;
            const auto& r = links[li];
            int nxt = r.a == cur ? r.b : r.a;
            if (dir == 0) dir = flows_forward(r, cur);
            cur = nxt;
            if (terminal(cur)) break;
            li = adj[cur][0] == li ? adj[cur][1] : adj[cur][0];
        }
        label_of[t] = lab;
        label_of[cur] = lab;
        paths.push_back({t, cur, dir});
    }
    int new_loops = 0;
    for (int i = 0; i < static_cast<int>(links.size()); ++i) {
        if (used_link[i]) continue;
        ++new_loops;
        int cur = links[i].a, li = i;
        while (!used_link[li]) {
            used_link[li] = 1;
            cur = links[li].a == cur ? links[li].b : links[li].a;
            li = adj[cur][0] == li ? adj[cur][1] : adj[cur][0];
        }
    }

    SurgeryResult res;
    std::vector<int> new_index(n, -1);
    int kept = 0;
    for (int c = 0; c < n; ++c)
        if (!gone[c]) new_index[c] = kept++;
    auto new_dart = [&](int e) {
        if (e < 4 * n) return Dart{new_index[e / 4], e % 4};
        return Dart{kept + (e - 4 * n) / 4, (e - 4 * n) % 4};
    };
    res.d.crossings.resize(kept + S.added);
    for (int e = 0; e < nslot; ++e) {
        if (!terminal(e)) continue;
        Dart x = new_dart(e);
        res.d.crossings[x.c].slots[x.s] = label_of[e];
    }
    res.d.arc_count = static_cast<int>(paths.size());
    res.d.free_loops = d.free_loops - static_cast<int>(S.opened.size()) + new_loops;

    // Relabel in order of first appearance and remember where each path now lives.
    std::vector<int> relabel(paths.size(), -1);
    int next = 0;
    for (int c = 0; c < res.d.size(); ++c) {
        res.d.crossings[c].id = c;
        for (auto& l : res.d.crossings[c].slots) {
            if (relabel[l] < 0) relabel[l] = next++;
            l = relabel[l];
        }
    }

    if (o) {
        Components nc = components(res.d);
        std::vector<int> arrival_comp(4 * res.d.size(), -1);
        for (int k = 0; k < nc.strand_count; ++k)
            for (auto a : nc.arrivals[k]) arrival_comp[4 * a.c + a.s] = k;
        res.o.reversed.assign(nc.count, false);
        std::vector<char> fixed(nc.strand_count, 0);
        for (const auto& p : paths) {
            if (p.dir == 0) continue;
            Dart head = new_dart(p.dir > 0 ? p.t2 : p.t1);
            int k = nc.of_label[res.d.label(head.c, head.s)];
            if (fixed[k]) continue;
            fixed[k] = 1;
            res.o.reversed[k] = arrival_comp[4 * head.c + head.s] != k;
        }
        std::vector<char> opened_loop(d.free_loops, 0);
        for (auto& [l, s] : S.opened) opened_loop[l] = 1;
        int slot = nc.strand_count;
        for (int l = 0; l < d.free_loops; ++l)
            if (!opened_loop[l]) res.o.reversed[slot++] = o->reversed[old_strands + l];
    }
    return res;
}

}  // namespace k4::detail
