#include "k4/search.hpp"

#include <algorithm>
#include <map>
#include <thread>
#include <unordered_map>

namespace k4 {

namespace {

struct Invariants {
    int components = 0;
    std::vector<std::vector<int>> lk2;
    AbelianGroup col;
};

struct Node {
    LinkDiagram d;
    std::string parent;
    Move move;
    int depth = 0;
    Invariants inv;
};

struct Child {
    std::string code;
    Move move;
    LinkDiagram d;
};

struct Side {
    std::unordered_map<std::string, Node> seen;
    std::vector<std::string> frontier;
    int depth = 0;
};

Invariants invariants_of(const LinkDiagram& d, const SearchOptions& opt) {
    Invariants v;
    v.components = components(d).count;
    v.lk2 = lk_mod2(d, Orientation::reference(d));
    v.col = col_group(d, opt.n >= 2 ? opt.n : 4);
    return v;
}

void self_check(const Invariants& a, const Invariants& b, const SearchOptions& opt, const Move& m) {
    bool n_move = m.kind == MoveKind::NAdd || m.kind == MoveKind::NRemove;
    bool even = !n_move || m.n % 2 == 0;
    bool ok = (!even || a.components == b.components) && a.col == b.col;
    if (ok && (!n_move || m.n == 4) && a.components == b.components) ok = same_lk_mod2(a.lk2, b.lk2);
    (void)opt;
    if (!ok) throw Error("internal error: move " + describe(m) + " changed a 4-move invariant");
}

int growth(const Move& m) {
    switch (m.kind) {
        case MoveKind::R1Add: return 1;
        case MoveKind::R2Add: return 2;
        case MoveKind::NAdd: return m.n;
        default: return 0;
    }
}

bool allowed(const Move& m, const SearchOptions& opt) {
    if (opt.frozen < 0) return true;
    const auto& cs = m.site.crossings;
    return std::find(cs.begin(), cs.end(), opt.frozen) == cs.end();
}

std::string code_of(const LinkDiagram& d, const SearchOptions& opt) {
    return opt.frozen < 0 ? canonical_code(d) : canonical_code(d, opt.frozen);
}

std::vector<Child> expand(const LinkDiagram& d, const SearchOptions& opt, int max_crossings) {
    MoveSet set;
    set.n = opt.n;
    std::vector<Child> out;
    for (auto& m : enumerate_moves(d, set)) {
        if (d.size() + growth(m) > max_crossings || !allowed(m, opt)) continue;
        LinkDiagram e = apply(d, m);
        out.push_back({code_of(e, opt), m, std::move(e)});
    }
    return out;
}

class Engine {
public:
    Engine(const SearchBudget& b, const SearchOptions& opt, int max_crossings)
        : budget_(b), opt_(opt), max_crossings_(max_crossings) {}

    void seed(int s, const LinkDiagram& d) {
        std::string code = code_of(d, opt_);
        if (sides_[s].seen.count(code)) return;
        Node n{d, "", Move{}, 0, invariants_of(d, opt_)};
        sides_[s].seen.emplace(code, std::move(n));
        sides_[s].frontier.push_back(code);
        std::sort(sides_[s].frontier.begin(), sides_[s].frontier.end());
    }

    SearchResult run(const std::string& label, const LinkDiagram& start) {
        SearchResult r;
        std::string meet = best_meet(0, sides_[0].frontier);
        while (meet.empty()) {
            if (sides_[0].depth + sides_[1].depth >= budget_.max_depth) {
                r.exhausted = "max_depth";
                break;
            }
            if (sides_[0].frontier.empty() || sides_[1].frontier.empty()) {
                r.exhausted = "max_crossings";
                break;
            }
            int s = sides_[1].frontier.size() < sides_[0].frontier.size() ? 1 : 0;
            step(s);
            r.layers.push_back({s, sides_[s].depth, static_cast<long long>(sides_[s].frontier.size()), visited()});
            meet = best_meet(s, sides_[s].frontier);
            if (meet.empty() && visited() > budget_.max_states) {
                r.exhausted = "max_states";
                break;
            }
        }
        r.visited = visited();
        if (meet.empty()) {
            r.outcome = SearchResult::Outcome::Exhausted;
            return r;
        }
        r.outcome = SearchResult::Outcome::Reduced;
        r.certificate = build(label, start, meet);
        r.target = meet_root(meet);
        return r;
    }

    std::map<std::string, std::string> root_names;

private:
    long long visited() const { return static_cast<long long>(sides_[0].seen.size() + sides_[1].seen.size()); }

    void step(int s) {
        Side& side = sides_[s];
        const auto& fr = side.frontier;
        std::vector<std::vector<Child>> kids(fr.size());
        int jobs = std::max(1, std::min<int>(opt_.jobs, static_cast<int>(fr.size())));
        auto work = [&](int w) {
            for (std::size_t i = w; i < fr.size(); i += jobs) kids[i] = expand(side.seen.at(fr[i]).d, opt_, max_crossings_);
        };
        if (jobs == 1) work(0);
        else {
            std::vector<std::thread> pool;
            for (int w = 0; w < jobs; ++w) pool.emplace_back(work, w);
            for (auto& t : pool) t.join();
        }
        std::vector<std::string> next;
        for (std::size_t i = 0; i < fr.size(); ++i) {
            const Node& parent = side.seen.at(fr[i]);
            for (auto& k : kids[i]) {
                if (side.seen.count(k.code)) continue;
                Node n{std::move(k.d), fr[i], k.move, side.depth + 1, {}};
                if (opt_.self_check) {
                    n.inv = invariants_of(n.d, opt_);
                    self_check(parent.inv, n.inv, opt_, k.move);
                }
                side.seen.emplace(k.code, std::move(n));
                next.push_back(k.code);
            }
        }
        std::sort(next.begin(), next.end());
        side.frontier = std::move(next);
        ++side.depth;
    }

    // Among freshly reached codes on side s, the meeting state of least total depth, then least code.
    std::string best_meet(int s, const std::vector<std::string>& fresh) const {
        const Side& other = sides_[1 - s];
        std::string best;
        int best_len = 1 << 30;
        for (const auto& c : fresh) {
            auto it = other.seen.find(c);
            if (it == other.seen.end()) continue;
            int len = sides_[s].seen.at(c).depth + it->second.depth;
            if (len < best_len) best_len = len, best = c;
        }
        return best;
    }

    std::string meet_root(const std::string& meet) const {
        std::string c = meet;
        while (!sides_[1].seen.at(c).parent.empty()) c = sides_[1].seen.at(c).parent;
        auto it = root_names.find(c);
        return it == root_names.end() ? "" : it->second;
    }

    Certificate build(const std::string& label, const LinkDiagram& start, const std::string& meet) const {
        Certificate cert;
        cert.label = label;
        cert.start = start;
        std::vector<Move> fwd;
        for (std::string c = meet; !sides_[0].seen.at(c).parent.empty(); c = sides_[0].seen.at(c).parent)
            fwd.push_back(sides_[0].seen.at(c).move);
        std::reverse(fwd.begin(), fwd.end());
        LinkDiagram d = start;
        for (auto& m : fwd) {
            d = apply(d, m);
            cert.steps.push_back(m);
        }
        // walk back to the goal, finding a move that undoes each backward step
        MoveSet set;
        set.n = opt_.n;
        for (std::string c = meet; !sides_[1].seen.at(c).parent.empty();) {
            const std::string& want = sides_[1].seen.at(c).parent;
            bool found = false;
            for (auto& m : enumerate_moves(d, set)) {
                if (!allowed(m, opt_)) continue;
                LinkDiagram e = apply(d, m);
                if (code_of(e, opt_) == want) {
                    d = std::move(e);
                    cert.steps.push_back(m);
                    found = true;
                    break;
                }
            }
            if (!found) throw Error("internal error: no inverse for a backward search step");
            c = want;
        }
        cert.claimed_end = d;
        return cert;
    }

    SearchBudget budget_;
    SearchOptions opt_;
    int max_crossings_;
    Side sides_[2];
};

int crossing_cap(const SearchBudget& b, int start) { return b.max_crossings > 0 ? b.max_crossings : start + 6; }

void check_budget(const SearchBudget& b) {
    if (b.max_crossings < 0 || b.max_depth <= 0 || b.max_states <= 0) throw Error("search budgets must be positive");
}

}  // namespace

LinkDiagram standard_hopf() { return parse_pd("X(2,1,3,0); X(0,3,1,2)"); }

LinkDiagram trivial_link(int n) {
    LinkDiagram d;
    d.free_loops = n;
    return d;
}

SearchResult reduce_to_trivial(const LinkDiagram& d, const SearchBudget& b, const SearchOptions& opt) {
    check_budget(b);
    validate(d);
    int com = components(d).count;
    int cap = std::max(crossing_cap(b, d.size()), d.size());
    Engine e(b, opt, cap);
    e.seed(0, d);
    LinkDiagram triv = trivial_link(com);
    e.seed(1, triv);
    e.root_names[canonical_code(triv)] = com == 1 ? "unknot" : "trivial " + std::to_string(com) + "-link";
    if (com == 2) {
        LinkDiagram h = standard_hopf(), hm = h;
        for (auto& c : hm.crossings) std::rotate(c.slots.begin(), c.slots.begin() + 1, c.slots.end());
        e.seed(1, h);
        e.seed(1, hm);
        e.root_names[canonical_code(h)] = "Hopf link";
        e.root_names[canonical_code(hm)] = "Hopf link";
    }
    return e.run("reduce", d);
}

SearchResult bidirectional_check(const LinkDiagram& d1, const LinkDiagram& d2, const SearchBudget& b,
                                 const SearchOptions& opt) {
    check_budget(b);
    validate(d1);
    validate(d2);
    SearchResult r;
    auto a = invariants_of(d1, opt), c = invariants_of(d2, opt);
    if (a.components != c.components) r.obstruction = "component count differs";
    else if (opt.n == 4 && !same_lk_mod2(a.lk2, c.lk2)) r.obstruction = "linking matrix mod 2 differs";
    else if (opt.n >= 2 && !(a.col == c.col))
        r.obstruction = "Col_" + std::to_string(opt.n) + " differs (" + a.col.str() + " vs " + c.col.str() + ")";
    if (!r.obstruction.empty()) {
        r.outcome = SearchResult::Outcome::Obstruction;
        return r;
    }
    int cap = std::max({crossing_cap(b, std::max(d1.size(), d2.size())), d1.size(), d2.size()});
    Engine e(b, opt, cap);
    e.seed(0, d1);
    e.seed(1, d2);
    e.root_names[code_of(d2, opt)] = "target";
    return e.run("equiv", d1);
}

}  // namespace k4
