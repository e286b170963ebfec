#include "k4/certificate.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace k4 {

using nlohmann::json;

namespace {

json move_json(const Move& m) {
    json j;
    j["kind"] = kind_name(m.kind);
    if (m.kind == MoveKind::NAdd || m.kind == MoveKind::NRemove) j["n"] = m.n;
    if (is_addition(m.kind)) j["sign"] = m.sign;
    json s = json::object();
    if (m.site.face >= 0) s["face"] = m.site.face;
    if (!m.site.arcs.empty()) s["arcs"] = m.site.arcs;
    if (!m.site.crossings.empty()) s["crossings"] = m.site.crossings;
    if (!m.site.faces.empty()) s["faces"] = m.site.faces;
    if (!m.site.sides.empty()) {
        json sides = json::array();
        for (auto x : m.site.sides) sides.push_back({x.c, x.s});
        s["sides"] = sides;
    }
    j["site"] = s;
    return j;
}

Move move_from_json(const json& j) {
    Move m;
    m.kind = parse_kind(j.at("kind").get<std::string>());
    m.n = j.value("n", 0);
    m.sign = j.value("sign", 0);
    const json& s = j.at("site");
    m.site.face = s.value("face", -1);
    if (s.contains("arcs")) m.site.arcs = s["arcs"].get<std::vector<int>>();
    if (s.contains("crossings")) m.site.crossings = s["crossings"].get<std::vector<int>>();
    if (s.contains("faces")) m.site.faces = s["faces"].get<std::vector<int>>();
    if (s.contains("sides"))
        for (auto& x : s["sides"]) m.site.sides.push_back(Dart{x.at(0).get<int>(), x.at(1).get<int>()});
    return m;
}

std::vector<int> invariant_moduli(const Certificate& c) {
    std::set<int> ks{4};
    for (auto& m : c.steps)
        if ((m.kind == MoveKind::NAdd || m.kind == MoveKind::NRemove) && m.n >= 2) ks.insert(m.n);
    return {ks.begin(), ks.end()};
}

StepAudit audit(const LinkDiagram& d, const Orientation& o, const std::vector<int>& ks, const ReplayOptions& opt) {
    StepAudit a;
    a.crossings = d.size();
    a.components = components(d).count;
    a.lk_mod2 = lk_mod2(d, o);
    for (int k : ks) a.col.emplace_back(k, col_group(d, k));
    if (opt.jones && d.size() <= opt.cap) a.v_at_i = eval_jones_at_i(d, o, opt.cap);
    return a;
}

}  // namespace

std::vector<std::vector<int>> lk_mod2(const LinkDiagram& d, const Orientation& o) {
    auto ld = linking_matrix(d, o);
    std::vector<std::vector<int>> m(ld.size(), std::vector<int>(ld.size()));
    for (int i = 0; i < ld.size(); ++i)
        for (int j = 0; j < ld.size(); ++j) m[i][j] = static_cast<int>(((ld.lk(i, j) % 2) + 2) % 2);
    return m;
}

bool same_lk_mod2(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b) {
    if (a.size() != b.size()) return false;
    int n = static_cast<int>(a.size());
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    if (n <= 8) {
        do {
            bool ok = true;
            for (int i = 0; i < n && ok; ++i)
                for (int j = 0; j < n && ok; ++j) ok = a[i][j] == b[p[i]][p[j]];
            if (ok) return true;
        } while (std::next_permutation(p.begin(), p.end()));
        return false;
    }
    auto sig = [](const std::vector<std::vector<int>>& m) {
        std::vector<std::vector<int>> rows = m;
        for (auto& r : rows) std::sort(r.begin(), r.end());
        std::sort(rows.begin(), rows.end());
        return rows;
    };
    return sig(a) == sig(b);
}

std::string to_json(const Certificate& c) {
    json j;
    j["schema"] = 1;
    j["label"] = c.label;
    j["start"] = to_pd(c.start);
    if (c.orientation) j["orientation"] = std::vector<bool>(c.orientation->reversed.begin(), c.orientation->reversed.end());
    json steps = json::array();
    LinkDiagram d = c.start;
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
        Move m;
        try {
            m = portable(d, c.steps[i]);
            d = apply(d, m);
        } catch (const Error& e) {
            throw ReplayError(std::string("cannot encode step: ") + e.what(), static_cast<int>(i));
        }
        steps.push_back(move_json(m));
    }
    j["steps"] = steps;
    j["claimed_end"] = to_pd(c.claimed_end);
    return j.dump(2) + "\n";
}

Certificate parse_certificate(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(std::string("certificate is not valid JSON: ") + e.what());
    }
    try {
        if (j.value("schema", 0) != 1) throw Error("unsupported certificate schema");
        Certificate c;
        c.label = j.value("label", "");
        c.start = parse_pd(j.at("start").get<std::string>());
        if (j.contains("orientation")) c.orientation = Orientation{j["orientation"].get<std::vector<bool>>()};
        for (auto& s : j.at("steps")) c.steps.push_back(move_from_json(s));
        c.claimed_end = parse_pd(j.at("claimed_end").get<std::string>());
        return c;
    } catch (const json::exception& e) {
        throw Error(std::string("malformed certificate: ") + e.what());
    }
}

Certificate load_certificate(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_certificate(ss.str());
}

void save_certificate(const Certificate& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << to_json(c);
}

ReplayReport replay(const Certificate& c, const ReplayOptions& opt) {
    ReplayReport r;
    LinkDiagram d = c.start;
    Orientation o = c.orientation ? *c.orientation : Orientation::reference(d);
    if (static_cast<int>(o.reversed.size()) != components(d).count)
        throw ReplayError("orientation does not match the start diagram", -1);
    auto ks = invariant_moduli(c);
    r.audits.push_back(audit(d, o, ks, opt));
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
        const Move& m = c.steps[i];
        int idx = static_cast<int>(i);
        std::optional<NMoveType> type;
        try {
            if (m.kind == MoveKind::NAdd || m.kind == MoveKind::NRemove) type = classify_nmove_orientation(d, o, m);
            auto [d2, o2] = apply(d, o, m);
            d = std::move(d2);
            o = std::move(o2);
        } catch (const ReplayError&) {
            throw;
        } catch (const Error& e) {
            throw ReplayError("step " + std::to_string(i) + " (" + describe(m) + "): " + e.what(), idx);
        }
        StepAudit a = audit(d, o, ks, opt);
        a.index = idx;
        a.move = describe(m);
        a.nmove_type = type;
        const StepAudit& prev = r.audits.back();
        bool n_move = m.kind == MoveKind::NAdd || m.kind == MoveKind::NRemove;
        auto fail = [&](const std::string& what) {
            throw ReplayError("audit violation after step " + std::to_string(i) + " (" + describe(m) + "): " + what, idx);
        };
        if ((!n_move || m.n % 2 == 0) && a.components != prev.components) fail("component count changed");
        if ((!n_move || m.n == 4) && a.components == prev.components && !same_lk_mod2(a.lk_mod2, prev.lk_mod2))
            fail("linking matrix mod 2 changed");
        for (std::size_t k = 0; k < ks.size(); ++k)
            if ((!n_move || m.n == ks[k]) && !(a.col[k].second == prev.col[k].second))
                fail("Col_" + std::to_string(ks[k]) + " changed");
        if (a.v_at_i && prev.v_at_i && (!n_move || m.n == 4)) {
            bool same = *a.v_at_i == *prev.v_at_i, flipped = *a.v_at_i == -*prev.v_at_i;
            if (!n_move && !same) fail("V(i) changed under a Reidemeister move");
            if (n_move && !same && !flipped) fail("|V(i)| changed under a 4-move");
        }
        r.audits.push_back(std::move(a));
    }
    if (canonical_code(d) != canonical_code(c.claimed_end))
        throw ReplayError("replayed diagram does not match claimed_end", static_cast<int>(c.steps.size()));
    r.end = d;
    r.end_orientation = o;
    return r;
}

std::string audit_table(const ReplayReport& r) {
    std::ostringstream os;
    os << "step  move                                      X  com  lk mod 2        Col                V(i)\n";
    for (const auto& a : r.audits) {
        std::ostringstream lk, col, mv;
        lk << "[";
        for (std::size_t i = 0; i < a.lk_mod2.size(); ++i) {
            lk << (i ? ";" : "");
            for (int x : a.lk_mod2[i]) lk << x;
        }
        lk << "]";
        for (std::size_t i = 0; i < a.col.size(); ++i)
            col << (i ? " " : "") << "C" << a.col[i].first << "=" << a.col[i].second.str();
        mv << (a.index < 0 ? "start" : a.move);
        if (a.nmove_type) mv << (*a.nmove_type == NMoveType::Parallel ? " [t4]" : " [anti]");
        std::string step = a.index < 0 ? "-" : std::to_string(a.index);
        os << step << std::string(std::max<int>(1, 6 - static_cast<int>(step.size())), ' ');
        std::string m = mv.str();
        if (m.size() > 40) m = m.substr(0, 37) + "...";
        os << m << std::string(42 - m.size(), ' ');
        std::string xs = std::to_string(a.crossings);
        os << std::string(std::max<int>(0, 2 - static_cast<int>(xs.size())), ' ') << xs << "  " << a.components
           << "    " << lk.str() << std::string(std::max<int>(1, 16 - static_cast<int>(lk.str().size())), ' ')
           << col.str() << std::string(std::max<int>(1, 19 - static_cast<int>(col.str().size())), ' ')
           << (a.v_at_i ? a.v_at_i->str() : "-") << "\n";
    }
    return os.str();
}

ArfAudit arf_parity_audit(const Certificate& c, const Orientation& o0, int cap) {
    ArfAudit r;
    LinkDiagram d = c.start;
    Orientation o = o0;
    int com = components(d).count;
    auto v = eval_jones_at_i(d, o, cap);
    r.start = arf_from_value(v, com);
    if (!r.start.defined) throw Error("Arf invariant undefined at the certificate start");
    r.sign_pattern_ok = true;
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
        const Move& m = c.steps[i];
        bool four = (m.kind == MoveKind::NAdd || m.kind == MoveKind::NRemove) && m.n == 4;
        std::optional<NMoveType> type;
        if (four) type = classify_nmove_orientation(d, o, m);
        auto [d2, o2] = apply(d, o, m);
        auto v2 = eval_jones_at_i(d2, o2, cap);
        bool flipped = v2 == -v, same = v2 == v;
        if (type == NMoveType::Parallel) {
            ++r.parallel_moves;
            if (!flipped) {
                r.sign_pattern_ok = false;
                r.notes.push_back("step " + std::to_string(i) + ": parallel 4-move without a V(i) sign flip");
            }
        } else {
            if (type) ++r.antiparallel_moves;
            if (!same) {
                r.sign_pattern_ok = false;
                r.notes.push_back("step " + std::to_string(i) + ": V(i) changed at a non-parallel step");
            }
        }
        d = std::move(d2);
        o = std::move(o2);
        v = v2;
    }
    r.end = arf_from_value(v, components(d).count);
    if (!r.end.defined) throw Error("Arf invariant undefined at the certificate end");
    r.parity_ok = (r.parallel_moves % 2) == ((r.start.value - r.end.value + 2) % 2);
    return r;
}

}  // namespace k4
