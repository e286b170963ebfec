#include "k4/coloring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace k4 {

namespace {

std::vector<std::pair<long long, int>> factorize(long long n) {
    std::vector<std::pair<long long, int>> out;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) n /= p, ++e;
            out.push_back({p, e});
        }
    if (n > 1) out.push_back({n, 1});
    return out;
}

// cokernel of the integer matrix, read from its Smith form
AbelianGroup cokernel(const IntMatrix& m) {
    auto diag = smith_normal_form(m).diagonal();
    std::vector<long long> orders;
    int rank = 0;
    for (long long x : diag)
        if (x) {
            ++rank;
            orders.push_back(x);
        }
    return AbelianGroup::from_cyclic(orders, m.cols - rank);
}

}  // namespace

AbelianGroup AbelianGroup::from_cyclic(const std::vector<long long>& orders, int free_rank) {
    // split into prime powers, then stack the largest powers into the last factor
    std::map<long long, std::vector<long long>> powers;
    for (long long n : orders) {
        if (n < 0) n = -n;
        if (n == 0) {
            ++free_rank;
            continue;
        }
        for (auto [p, e] : factorize(n)) {
            long long q = 1;
            for (int i = 0; i < e; ++i) q *= p;
            powers[p].push_back(q);
        }
    }
    std::size_t len = 0;
    for (auto& [p, v] : powers) {
        std::sort(v.rbegin(), v.rend());
        len = std::max(len, v.size());
    }
    AbelianGroup g;
    g.free_rank = free_rank;
    g.factors.assign(len, 1);
    for (auto& [p, v] : powers)
        for (std::size_t i = 0; i < v.size(); ++i) g.factors[len - 1 - i] *= v[i];
    return g;
}

long long AbelianGroup::order() const {
    if (free_rank) return -1;
    long long o = 1;
    for (long long f : factors) o *= f;
    return o;
}

std::string AbelianGroup::str() const {
    std::vector<std::string> parts;
    if (free_rank == 1) parts.push_back("Z");
    else if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) parts.push_back("Z" + std::to_string(*it));
    if (parts.empty()) return "0";
    std::string s = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
    return s;
}

Arcs arcs(const LinkDiagram& d) {
    std::vector<int> parent(d.arc_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& c : d.crossings) {
        int a = find(c.slots[1]), b = find(c.slots[3]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    Arcs r;
    r.of_label.assign(d.arc_count, -1);
    std::map<int, int> index;
    for (int l = 0; l < d.arc_count; ++l) {
        int root = find(l);
        auto [it, fresh] = index.emplace(root, r.count);
        if (fresh) ++r.count;
        r.of_label[l] = it->second;
    }
    r.count += d.free_loops;
    return r;
}

IntMatrix coloring_matrix(const LinkDiagram& d) {
    Arcs a = arcs(d);
    IntMatrix m(d.size(), a.count);
    for (int c = 0; c < d.size(); ++c) {
        m.at(c, a.of_label[d.label(c, 0)]) += 1;
        m.at(c, a.of_label[d.label(c, 2)]) += 1;
        m.at(c, a.of_label[d.label(c, 1)]) -= 2;
    }
    return m;
}

AbelianGroup col_group(const LinkDiagram& d, int k) {
    if (k < 2) throw Error("coloring modulus must be at least 2");
    IntMatrix m = coloring_matrix(d);
    auto diag = smith_normal_form(m).diagonal();
    // solutions of D y = 0 over Z_k, one coordinate per column
    std::vector<long long> orders;
    for (int j = 0; j < m.cols; ++j) {
        long long x = j < static_cast<int>(diag.size()) ? diag[j] : 0;
        orders.push_back(x == 0 ? k : std::gcd(x, static_cast<long long>(k)));
    }
    orders.erase(std::remove(orders.begin(), orders.end(), 1LL), orders.end());
    return AbelianGroup::from_cyclic(orders);
}

AbelianGroup col4_from_linking(const LinkingData& ld) {
    int n = ld.size();
    IntMatrix m(2 * n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m.at(i, j) = 2 * ld.lk(i, j);
        m.at(n + i, i) = 4;
    }
    return cokernel(m);
}

GroupPresentation core_group_presentation(const LinkDiagram& d) {
    Arcs a = arcs(d);
    GroupPresentation p;
    p.generators = a.count;
    for (int c = 0; c < d.size(); ++c) {
        int b = a.of_label[d.label(c, 1)];
        int x = a.of_label[d.label(c, 0)], y = a.of_label[d.label(c, 2)];
        p.relators.push_back({{b, 1}, {x, -1}, {b, 1}, {y, -1}});
    }
    return p;
}

GroupPresentation reduced_presentation(const GroupPresentation& p) {
    if (p.generators < 1) throw Error("presentation has no generators");
    GroupPresentation r;
    r.generators = p.generators - 1;
    for (std::size_t i = 0; i + 1 < p.relators.size(); ++i) {
        std::vector<Letter> w;
        for (auto l : p.relators[i]) {
            if (l.gen == 0) continue;
            Letter n{l.gen - 1, l.exp};
            if (!w.empty() && w.back().gen == n.gen && w.back().exp == -n.exp) w.pop_back();
            else w.push_back(n);
        }
        r.relators.push_back(std::move(w));
    }
    return r;
}

AbelianGroup abelianization(const GroupPresentation& p, int n) {
    int rows = static_cast<int>(p.relators.size()) + (n > 0 ? p.generators : 0);
    IntMatrix m(rows, p.generators);
    for (std::size_t i = 0; i < p.relators.size(); ++i)
        for (auto l : p.relators[i]) m.at(static_cast<int>(i), l.gen) += l.exp;
    if (n > 0)
        for (int g = 0; g < p.generators; ++g) m.at(static_cast<int>(p.relators.size()) + g, g) = n;
    return cokernel(m);
}

std::string export_presentation(const GroupPresentation& p, int exponent) {
    std::ostringstream os;
    os << "# core group; intended quotient adds w^" << exponent << " = 1 for every word w\n";
    os << "gens: ";
    for (int g = 0; g < p.generators; ++g) os << (g ? "," : "") << "y" << g + 1;
    os << "\n";
    for (const auto& r : p.relators) {
        if (r.empty()) continue;
        for (std::size_t i = 0; i < r.size(); ++i)
            os << (i ? "." : "") << "y" << r[i].gen + 1 << (r[i].exp < 0 ? "^-1" : "");
        os << "\n";
    }
    if (exponent > 0) os << "exponent: " << exponent << "\n";
    return os.str();
}

}  // namespace k4
