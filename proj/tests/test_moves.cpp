#include <algorithm>

#include "doctest.h"
#include "k4/moves.hpp"
#include "test_util.hpp"

using namespace k4;

namespace {

std::vector<test::Named> small_corpus() {
    std::vector<test::Named> out;
    for (auto& e : test::corpus())
        if (e.d.size() <= 9) out.push_back(e);
    out.push_back({"two_loops", parse_pd("loops=2")});
    out.push_back({"trefoil_plus_loop", parse_pd("loops=1; X(0,3,1,4);X(2,5,3,0);X(4,1,5,2)")});
    return out;
}

bool some_move_returns(const LinkDiagram& d, MoveKind k, int n, const std::string& code) {
    for (auto& s : enumerate_sites(d, k, n)) {
        Move m{k, n, 0, s};
        if (canonical_code(apply(d, m)) == code) return true;
    }
    return false;
}

void check_oriented_step(const LinkDiagram& d, const Orientation& o, const Move& m) {
    auto [d2, o2] = apply(d, o, m);
    CHECK(is_planar(d2));
    CHECK(components(d2).count == components(d).count);
    auto a = linking_matrix(d, o), b = linking_matrix(d2, o2);
    if (m.kind == MoveKind::NAdd || m.kind == MoveKind::NRemove) return;
    // components are ordered by their smallest label, which a move may change, so compare multisets
    auto row_sums = [](const LinkingData& L) {
        std::vector<long long> v;
        for (int i = 0; i < L.size(); ++i)
            for (int j = i + 1; j < L.size(); ++j) v.push_back(std::abs(L.lk(i, j)));
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(row_sums(a) == row_sums(b));
}

}  // namespace

TEST_CASE("R1 add then remove") {
    for (auto& [name, d] : small_corpus()) {
        INFO(name);
        auto code = canonical_code(d);
        auto o = Orientation::reference(d);
        for (auto& s : enumerate_sites(d, MoveKind::R1Add))
            for (int sign : {1, -1}) {
                Move m{MoveKind::R1Add, 0, sign, s};
                auto [d2, o2] = apply(d, o, m);
                REQUIRE(is_planar(d2));
                CHECK(d2.size() == d.size() + 1);
                CHECK(writhe(d2, o2) == writhe(d, o) + sign);
                CHECK(some_move_returns(d2, MoveKind::R1Remove, 0, code));
            }
    }
}

TEST_CASE("R2 add then remove") {
    for (auto& [name, d] : small_corpus()) {
        if (d.size() > 4) continue;
        INFO(name);
        auto code = canonical_code(d);
        auto o = Orientation::reference(d);
        for (auto& s : enumerate_sites(d, MoveKind::R2Add))
            for (int sign : {1, -1}) {
                Move m{MoveKind::R2Add, 0, sign, s};
                INFO(describe(m));
                auto d2 = apply(d, m);
                REQUIRE(is_planar(d2));
                CHECK(d2.size() == d.size() + 2);
                CHECK(some_move_returns(d2, MoveKind::R2Remove, 0, code));
                check_oriented_step(d, o, m);
            }
    }
}

TEST_CASE("R3 is an involution on its triangle") {
    auto seeds = small_corpus();
    // build diagrams with R3 triangles by stacking R2 moves
    std::vector<LinkDiagram> ds;
    for (auto& [name, d] : seeds)
        if (d.size() <= 3)
            for (auto& s : enumerate_sites(d, MoveKind::R2Add)) ds.push_back(apply(d, Move{MoveKind::R2Add, 0, 1, s}));
    int tried = 0;
    for (auto& d : ds) {
        for (auto& s : enumerate_sites(d, MoveKind::R2Add)) {
            auto e = apply(d, Move{MoveKind::R2Add, 0, -1, s});
            auto code = canonical_code(e);
            for (auto& t : enumerate_sites(e, MoveKind::R3)) {
                Move m{MoveKind::R3, 0, 0, t};
                auto f = apply(e, m);
                REQUIRE(is_planar(f));
                CHECK(some_move_returns(f, MoveKind::R3, 0, code));
                check_oriented_step(e, Orientation::reference(e), m);
                ++tried;
            }
        }
        if (tried > 400) break;
    }
    CHECK(tried > 0);
}

TEST_CASE("n-move add then remove") {
    for (int n : {2, 3, 4}) {
        for (auto& [name, d] : small_corpus()) {
            if (d.size() > 4) continue;
            INFO(name << " n=" << n);
            auto code = canonical_code(d);
            for (auto& s : enumerate_sites(d, MoveKind::NAdd, n))
                for (int sign : {1, -1}) {
                    Move m{MoveKind::NAdd, n, sign, s};
                    INFO(describe(m));
                    auto d2 = apply(d, m);
                    REQUIRE(is_planar(d2));
                    CHECK(d2.size() == d.size() + n);
                    CHECK(some_move_returns(d2, MoveKind::NRemove, n, code));
                }
        }
    }
}

TEST_CASE("twist regions of standard knots") {
    auto t = test::load("trefoil");
    auto regs = twist_regions(t);
    // the trefoil is one cyclic twist region of three crossings on one axis
    bool found = false;
    for (auto& r : regs) found |= r.cyclic && r.crossings.size() == 3;
    CHECK(found);
    auto f = test::load("figure_eight");
    int longest = 0;
    for (auto& r : twist_regions(f)) longest = std::max<int>(longest, r.crossings.size());
    CHECK(longest == 2);
}

TEST_CASE("move names round-trip") {
    for (auto k : {MoveKind::R1Add, MoveKind::R1Remove, MoveKind::R2Add, MoveKind::R2Remove, MoveKind::R3,
                   MoveKind::NAdd, MoveKind::NRemove})
        CHECK(parse_kind(kind_name(k)) == k);
}
