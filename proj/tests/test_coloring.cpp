#include <functional>

#include "doctest.h"
#include "k4/coloring.hpp"
#include "k4/moves.hpp"
#include "test_util.hpp"

using namespace k4;

namespace {

// Oracle: enumerate every assignment of Z_k colors to PD edges, requiring the two
// edges of each over-passage to agree and each crossing relation to hold.
long long brute_colorings(const LinkDiagram& d, int k) {
    int n = d.arc_count;
    std::vector<int> col(n, 0);
    long long count = 0;
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            for (const auto& c : d.crossings) {
                if (col[c.slots[1]] != col[c.slots[3]]) return;
                if ((col[c.slots[0]] + col[c.slots[2]] - 2 * col[c.slots[1]]) % k != 0) return;
            }
            ++count;
            return;
        }
        for (int v = 0; v < k; ++v) {
            col[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    for (int l = 0; l < d.free_loops; ++l) count *= k;
    return count;
}

}  // namespace

TEST_CASE("smith normal form") {
    IntMatrix m(2, 2);
    m.a = {2, 4, 6, 8};
    auto f = smith_normal_form(m);
    CHECK(f.diagonal() == std::vector<long long>{2, 4});
    CHECK(f.u * m * f.v == f.d);
    CHECK(std::abs(determinant(f.u)) == 1);
    CHECK(std::abs(determinant(f.v)) == 1);
    IntMatrix z(2, 3);
    auto g = smith_normal_form(z);
    CHECK(g.d == z);
    CHECK(g.u == IntMatrix::identity(2));
    CHECK(g.v == IntMatrix::identity(3));
    IntMatrix e(2, 2);
    e.a = {1, 0, 0, 0};
    CHECK(smith_normal_form(e).d == e);
}

TEST_CASE("smith normal form on random matrices") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dim(1, 6), val(-9, 9);
    for (int it = 0; it < 300; ++it) {
        IntMatrix m(dim(rng), dim(rng));
        for (auto& x : m.a) x = val(rng);
        auto f = smith_normal_form(m);
        CHECK(verify(f, m));
        CHECK(std::abs(determinant(f.u)) == 1);
        CHECK(std::abs(determinant(f.v)) == 1);
        auto diag = f.diagonal();
        for (int i = 0; i < f.d.rows; ++i)
            for (int j = 0; j < f.d.cols; ++j)
                if (i != j) CHECK(f.d.at(i, j) == 0);
        for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
            CHECK(diag[i] >= 0);
            if (diag[i]) CHECK(diag[i + 1] % diag[i] == 0);
            else CHECK(diag[i + 1] == 0);
        }
    }
}

TEST_CASE("coloring matrix shapes") {
    auto u = parse_pd("loops=1");
    auto mu = coloring_matrix(u);
    CHECK(mu.rows == 0);
    CHECK(mu.cols == 1);
    auto t = coloring_matrix(test::load("trefoil"));
    CHECK(t.rows == 3);
    CHECK(t.cols == 3);
    for (int i = 0; i < 3; ++i) {
        std::vector<long long> row{t.at(i, 0), t.at(i, 1), t.at(i, 2)};
        std::sort(row.begin(), row.end());
        CHECK(row == std::vector<long long>{-2, 1, 1});
    }
    auto h = coloring_matrix(test::load("hopf"));
    CHECK(h.rows == 2);
    CHECK(h.cols == 2);
    for (int i = 0; i < 2; ++i) CHECK(h.at(i, 0) + h.at(i, 1) == 0);
}

TEST_CASE("coloring groups") {
    CHECK(col_group(test::load("trefoil"), 3).str() == "Z3 + Z3");
    CHECK(col_group(test::load("hopf"), 4).str() == "Z4 + Z2");
    for (auto name : {"trefoil", "figure_eight", "9_34", "9_47"}) CHECK(col_group(test::load(name), 4).str() == "Z4");
    CHECK(col_group(parse_pd("loops=2"), 4).str() == "Z4 + Z4");
}

TEST_CASE("coloring count matches brute force") {
    for (auto& [name, d] : test::corpus()) {
        if (d.arc_count > 9 || d.size() == 0) continue;
        for (int k = 2; k <= 8; ++k) {
            INFO(name << " k=" << k);
            CHECK(col_group(d, k).order() == brute_colorings(d, k));
        }
    }
}

TEST_CASE("Col4 of two-component links from the linking matrix") {
    for (auto& [name, d] : test::corpus()) {
        if (components(d).count != 2) continue;
        INFO(name);
        auto ld = linking_matrix(d, Orientation::reference(d));
        auto g = col_group(d, 4);
        CHECK(g == col4_from_linking(ld));
        CHECK(g.str() == (ld.lk(0, 1) % 2 ? "Z4 + Z2" : "Z4 + Z4"));
    }
    LinkingData hopf{{{-1, 1}, {1, -1}}};
    CHECK(col4_from_linking(hopf).str() == "Z4 + Z2");
    LinkingData triv{{{0, 0}, {0, 0}}};
    CHECK(col4_from_linking(triv).str() == "Z4 + Z4");
    CHECK(col4_from_linking(LinkingData{{{0}}}).str() == "Z4");
}

TEST_CASE("4-colorings are constant on components") {
    // solve over Z_4 by brute force and check every coloring is constant along each component
    for (auto name : {"hopf", "trefoil", "figure_eight"}) {
        auto d = test::load(name);
        auto comp = components(d);
        int n = d.arc_count;
        std::vector<int> col(n, 0);
        std::function<void(int)> rec = [&](int i) {
            if (i == n) {
                for (const auto& c : d.crossings) {
                    if (col[c.slots[1]] != col[c.slots[3]]) return;
                    if ((col[c.slots[0]] + col[c.slots[2]] - 2 * col[c.slots[1]]) % 4 != 0) return;
                }
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        if (comp.of_label[a] == comp.of_label[b]) CHECK(col[a] == col[b]);
                return;
            }
            for (int v = 0; v < 4; ++v) {
                col[i] = v;
                rec(i + 1);
            }
        };
        rec(0);
    }
}

TEST_CASE("core group") {
    auto u = core_group_presentation(parse_pd("loops=1"));
    CHECK(u.generators == 1);
    CHECK(u.relators.empty());
    CHECK(abelianization(u, 0).str() == "Z");
    auto t = core_group_presentation(test::load("trefoil"));
    CHECK(t.generators == 3);
    CHECK(t.relators.size() == 3);
    for (auto& r : t.relators) {
        REQUIRE(r.size() == 4);
        CHECK(r[0] == r[2]);
        CHECK(r[0].exp == 1);
        CHECK(r[1].exp == -1);
        CHECK(r[3].exp == -1);
    }
    CHECK(abelianization(t, 3).str() == "Z3 + Z3");
    CHECK(abelianization(reduced_presentation(t), 0).str() == "Z3");
    CHECK(abelianization(reduced_presentation(core_group_presentation(test::load("hopf"))), 0).str() == "Z2");
    CHECK(abelianization(reduced_presentation(u), 0).str() == "0");
    for (auto& [name, d] : test::corpus())
        for (int n = 2; n <= 5; ++n) {
            INFO(name << " n=" << n);
            auto p = core_group_presentation(d);
            CHECK(abelianization(p, n) == col_group(d, n));
            // dropping a generator removes one Z_n summand
            auto full = col_group(d, n).factors;
            auto red = abelianization(reduced_presentation(p), n);
            CHECK(red.order() * n == col_group(d, n).order());
        }
}

TEST_CASE("presentation export") {
    auto s = export_presentation(core_group_presentation(test::load("trefoil")), 4);
    CHECK(s.find("gens: y1,y2,y3\n") != std::string::npos);
    CHECK(s.find("exponent: 4") != std::string::npos);
    auto u = export_presentation(core_group_presentation(parse_pd("loops=1")), 4);
    CHECK(u.find("gens: y1\n") != std::string::npos);
}

TEST_CASE("coloring groups survive random moves") {
    std::mt19937 rng(11);
    int applied = 0;
    for (auto name : {"trefoil", "figure_eight", "hopf", "borromean"}) {
        auto d = test::load(name);
        for (int step = 0; step < 50; ++step) {
            MoveSet set;
            set.n = (step % 3) + 3;  // k-moves for k in {3,4,5}
            auto moves = enumerate_moves(d, set);
            std::vector<Move> pick;
            for (auto& m : moves)
                if (d.size() < 10 || !is_addition(m.kind)) pick.push_back(m);
            if (pick.empty()) pick = moves;
            auto m = pick[rng() % pick.size()];
            auto e = apply(d, m);
            for (int k : {3, 4, 5}) {
                bool kmove = m.kind == MoveKind::NAdd || m.kind == MoveKind::NRemove;
                if (kmove && m.n != k) continue;
                CHECK(col_group(e, k) == col_group(d, k));
            }
            d = e;
            ++applied;
        }
    }
    CHECK(applied >= 200);
}
