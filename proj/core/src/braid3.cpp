#include "k4/braid3.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <sstream>

namespace k4 {

BraidWord::BraidWord(std::vector<int> ls) {
    for (int x : ls) {
        if (x == 0 || x < -2 || x > 2) throw Error("braid letter out of range");
        if (!letters.empty() && letters.back() == -x) letters.pop_back();
        else letters.push_back(x);
    }
}

std::vector<int> BraidWord::cat(const BraidWord& o) const {
    std::vector<int> v = letters;
    v.insert(v.end(), o.letters.begin(), o.letters.end());
    return v;
}

BraidWord BraidWord::parse(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    std::vector<int> ls;
    while (in >> tok) {
        int g = 0, e = 1;
        if (tok.size() >= 2 && (tok[0] == 's' || tok[0] == 'S') && (tok[1] == '1' || tok[1] == '2')) {
            g = tok[1] - '0';
            std::string rest = tok.substr(2);
            if (rest == "^-1") e = -1;
            else if (rest.rfind('^', 0) == 0) {
                try {
                    e = std::stoi(rest.substr(1));
                } catch (...) {
                    throw ParseError("bad braid exponent in '" + tok + "'", 0);
                }
            } else if (!rest.empty()) throw ParseError("bad braid letter '" + tok + "'", 0);
        } else if (tok == "1" || tok == "e") {
            continue;
        } else {
            throw ParseError("bad braid letter '" + tok + "'", 0);
        }
        for (int i = 0; i < std::abs(e); ++i) ls.push_back(e > 0 ? g : -g);
    }
    return BraidWord(ls);
}

std::string BraidWord::str() const {
    if (letters.empty()) return "1";
    std::string s;
    for (int x : letters) {
        if (!s.empty()) s += " ";
        s += "s" + std::to_string(std::abs(x));
        if (x < 0) s += "^-1";
    }
    return s;
}

namespace {

// generators 0 = a, 1 = a^-1, 2 = b, 3 = b^-1
class ToddCoxeter {
public:
    explicit ToddCoxeter(int cap) : cap_(cap) { new_coset(); }

    void run(const std::vector<std::vector<int>>& rels) {
        for (int c = 0; c < static_cast<int>(table_.size()); ++c) {
            for (const auto& r : rels) {
                if (!alive(c)) break;
                scan_and_fill(c, r);
            }
            if (!alive(c)) continue;
            for (int g = 0; g < 4; ++g)
                if (table_[c][g] < 0) define(c, g);
        }
    }

    std::vector<std::array<int, 4>> compact() const {
        std::vector<int> id(table_.size(), -1);
        int n = 0;
        for (std::size_t c = 0; c < table_.size(); ++c)
            if (alive(static_cast<int>(c))) id[c] = n++;
        std::vector<std::array<int, 4>> out(n);
        for (std::size_t c = 0; c < table_.size(); ++c)
            if (id[c] >= 0)
                for (int g = 0; g < 4; ++g) out[id[c]][g] = id[rep(table_[c][g])];
        return out;
    }

private:
    bool alive(int c) const { return parent_[c] == c; }

    int rep(int c) const {
        while (parent_[c] != c) c = parent_[c];
        return c;
    }

    int new_coset() {
        if (static_cast<int>(table_.size()) >= cap_) throw Error("coset enumeration exceeded its safety cap");
        table_.push_back({-1, -1, -1, -1});
        parent_.push_back(static_cast<int>(parent_.size()));
        return static_cast<int>(table_.size()) - 1;
    }

    void define(int c, int g) {
        int n = new_coset();
        table_[c][g] = n;
        table_[n][g ^ 1] = c;
    }

    void scan_and_fill(int c, const std::vector<int>& w) {
        int f = c, b = c, i = 0, j = static_cast<int>(w.size()) - 1;
        while (true) {
            while (i <= j && table_[f][w[i]] >= 0) f = table_[f][w[i++]];
            if (i > j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j >= i && table_[b][w[j] ^ 1] >= 0) b = table_[b][w[j--] ^ 1];
            if (j < i) {
                coincidence(f, b);
                return;
            }
            if (i == j) {
                table_[f][w[i]] = b;
                table_[b][w[i] ^ 1] = f;
                return;
            }
            define(f, w[i]);
        }
    }

    void merge(int k, int l, std::vector<int>& q) {
        k = rep(k), l = rep(l);
        if (k == l) return;
        if (k > l) std::swap(k, l);
        parent_[l] = k;
        q.push_back(l);
    }

    void coincidence(int a, int b) {
        std::vector<int> q;
        merge(a, b, q);
        for (std::size_t i = 0; i < q.size(); ++i) {
            int e = q[i];
            for (int g = 0; g < 4; ++g) {
                int f = table_[e][g];
                if (f < 0) continue;
                table_[f][g ^ 1] = -1;
                int e1 = rep(e), f1 = rep(f);
                if (table_[e1][g] >= 0) merge(f1, table_[e1][g], q);
                else if (table_[f1][g ^ 1] >= 0) merge(e1, table_[f1][g ^ 1], q);
                else {
                    table_[e1][g] = f1;
                    table_[f1][g ^ 1] = e1;
                }
            }
        }
    }

    int cap_;
    std::vector<std::array<int, 4>> table_;
    std::vector<int> parent_;
};

int gen_index(int letter) { return (std::abs(letter) - 1) * 2 + (letter < 0 ? 1 : 0); }

struct Cache {
    QuotientGroup g;
    std::vector<ConjugacyClass> classes;
    std::vector<int> class_of;
    std::vector<int> label_of_class;  // index into classification_table
};

const Cache& cache() {
    static Cache c = [] {
        Cache k;
        k.g = coset_enumeration();
        k.classes = conjugacy_classes(k.g);
        k.class_of.assign(k.g.order, -1);
        for (std::size_t i = 0; i < k.classes.size(); ++i)
            for (int e : k.classes[i].elements) k.class_of[e] = static_cast<int>(i);
        k.label_of_class.assign(k.classes.size(), -1);
        const auto& t = classification_table();
        for (std::size_t i = 0; i < t.size(); ++i) {
            int cl = k.class_of[k.g.element(BraidWord::parse(t[i].word))];
            if (k.label_of_class[cl] >= 0) throw Error("classification table names one class twice: " + t[i].word);
            k.label_of_class[cl] = static_cast<int>(i);
        }
        return k;
    }();
    return c;
}

}  // namespace

int QuotientGroup::element(const BraidWord& w) const {
    int e = identity;
    for (int x : w.letters) e = act[e][gen_index(x)];
    return e;
}

QuotientGroup coset_enumeration(int max_cosets) {
    ToddCoxeter tc(max_cosets);
    // a b a b^-1 a^-1 b^-1 and a^4
    tc.run({{0, 2, 0, 3, 1, 3}, {0, 0, 0, 0}});
    QuotientGroup g;
    g.act = tc.compact();
    g.order = static_cast<int>(g.act.size());
    g.identity = 0;
    g.word.assign(g.order, BraidWord{});
    std::vector<char> seen(g.order, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    static const int letter_of[4] = {1, -1, 2, -2};
    while (!q.empty()) {
        int e = q.front();
        q.pop();
        for (int s = 0; s < 4; ++s) {
            int f = g.act[e][s];
            if (seen[f]) continue;
            seen[f] = 1;
            g.word[f] = g.word[e] * BraidWord({letter_of[s]});
            q.push(f);
        }
    }
    g.mul.assign(g.order, std::vector<int>(g.order));
    for (int i = 0; i < g.order; ++i)
        for (int j = 0; j < g.order; ++j) {
            int e = i;
            for (int x : g.word[j].letters) e = g.act[e][gen_index(x)];
            g.mul[i][j] = e;
        }
    g.inv.assign(g.order, -1);
    for (int i = 0; i < g.order; ++i)
        for (int j = 0; j < g.order; ++j)
            if (g.mul[i][j] == g.identity) g.inv[i] = j;
    g.gen_a = g.act[0][0];
    g.gen_b = g.act[0][2];
    return g;
}

std::vector<ConjugacyClass> conjugacy_classes(const QuotientGroup& g) {
    std::vector<char> done(g.order, 0);
    std::vector<ConjugacyClass> out;
    for (int x = 0; x < g.order; ++x) {
        if (done[x]) continue;
        ConjugacyClass c;
        for (int y = 0; y < g.order; ++y) {
            int z = g.mul[g.mul[g.inv[y]][x]][y];
            if (!done[z]) done[z] = 1, c.elements.push_back(z);
        }
        std::sort(c.elements.begin(), c.elements.end());
        c.representative = c.elements.front();
        out.push_back(std::move(c));
    }
    return out;
}

std::string label_name(ClassLabel l) {
    switch (l) {
        case ClassLabel::Trivial1: return "Trivial1";
        case ClassLabel::Trivial2: return "Trivial2";
        case ClassLabel::Trivial3: return "Trivial3";
        case ClassLabel::Hopf: return "Hopf";
        case ClassLabel::HopfPlusTrivial: return "HopfPlusTrivial";
        case ClassLabel::ConnectedSumTwoHopf: return "ConnectedSumTwoHopf";
        case ClassLabel::Torus33: return "Torus33";
        case ClassLabel::Borromean: return "Borromean";
    }
    return "";
}

int label_components(ClassLabel l) {
    switch (l) {
        case ClassLabel::Trivial1: return 1;
        case ClassLabel::Trivial2:
        case ClassLabel::Hopf: return 2;
        default: return 3;
    }
}

const std::vector<ClassificationEntry>& classification_table() {
    using L = ClassLabel;
    // trivial labels were confirmed by reducing each closure with the search module
    static const std::vector<ClassificationEntry> t{
        {"1", L::Trivial3},
        {"s1", L::Trivial2},
        {"s1^-1", L::Trivial2},
        {"s1 s1", L::HopfPlusTrivial},
        {"s1 s2", L::Trivial1},
        {"s1^-1 s2", L::Trivial1},
        {"s1^-1 s2^-1", L::Trivial1},
        {"s1 s1 s2", L::Hopf},
        {"s1 s1 s2^-1", L::Hopf},
        {"s1 s1 s2 s2", L::ConnectedSumTwoHopf},
        {"s1 s2^-1 s1 s2^-1", L::Trivial1},
        {"s1 s2 s2 s1 s2^-1", L::Trivial2},
        {"s1 s2^-1 s1 s1 s2^-1", L::Trivial2},
        {"s1 s2 s2 s1 s2 s2", L::Torus33},
        {"s1^-1 s2 s2 s1^-1 s2 s2", L::Torus33},
        {"s1 s2^-1 s1 s2^-1 s1 s2^-1", L::Borromean},
    };
    return t;
}

Classification classify_closure(const BraidWord& w) {
    const Cache& c = cache();
    int cl = c.class_of[c.g.element(w)];
    int entry = c.label_of_class[cl];
    if (entry < 0) throw Error("conjugacy class without a classification entry");
    const auto& e = classification_table()[entry];
    return {e.label, cl, e.word};
}

int closure_components(const BraidWord& w) {
    std::array<int, 3> perm{0, 1, 2};  // position -> strand
    for (int x : w.letters) {
        int i = std::abs(x) - 1;
        std::swap(perm[i], perm[i + 1]);
    }
    std::array<char, 3> seen{0, 0, 0};
    int cycles = 0;
    for (int s = 0; s < 3; ++s) {
        if (seen[s]) continue;
        ++cycles;
        // strand starting at position s ends at the position holding it
        for (int p = s; !seen[p];) {
            seen[p] = 1;
            p = static_cast<int>(std::find(perm.begin(), perm.end(), p) - perm.begin());
        }
    }
    return cycles;
}

LinkDiagram braid_closure_diagram(const BraidWord& w) {
    // strands run upward; s_i is the crossing whose strand from lower left to upper right passes over
    int next = 0;
    std::array<int, 3> bottom{}, cur{};
    for (int p = 0; p < 3; ++p) bottom[p] = cur[p] = next++;
    std::array<char, 3> used{0, 0, 0};
    LinkDiagram d;
    for (int x : w.letters) {
        int i = std::abs(x) - 1;
        int sw = cur[i], se = cur[i + 1];
        int nw = next++, ne = next++;
        used[i] = used[i + 1] = 1;
        Crossing c;
        if (x > 0) c.slots = {se, ne, nw, sw};
        else c.slots = {sw, se, ne, nw};
        d.crossings.push_back(c);
        cur[i] = nw;
        cur[i + 1] = ne;
    }
    // close up: identify the top label at each position with the bottom label
    std::map<int, int> alias;
    for (int p = 0; p < 3; ++p)
        if (used[p] || cur[p] != bottom[p]) alias[cur[p]] = bottom[p];
    for (auto& c : d.crossings)
        for (auto& l : c.slots) {
            auto it = alias.find(l);
            if (it != alias.end()) l = it->second;
        }
    for (int p = 0; p < 3; ++p)
        if (!used[p]) ++d.free_loops;
    d.arc_count = next;
    normalize(d);
    return d;
}

}  // namespace k4
