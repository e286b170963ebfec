#include "doctest.h"
#include "k4/search.hpp"
#include "test_util.hpp"

using namespace k4;

namespace {

Certificate trefoil_cert() {
    SearchBudget b;
    b.max_crossings = 8;
    return *reduce_to_trivial(test::load("trefoil"), b).certificate;
}

}  // namespace

TEST_CASE("certificate JSON round-trip") {
    auto c = trefoil_cert();
    auto text = to_json(c);
    auto back = parse_certificate(text);
    CHECK(to_json(back) == text);
    CHECK(back.label == c.label);
    CHECK(back.steps.size() == c.steps.size());
    auto rep = replay(back);
    CHECK(canonical_code(rep.end) == canonical_code(c.claimed_end));
    CHECK(text.find("\"schema\": 1") != std::string::npos);
}

TEST_CASE("truncated certificate fails at the end") {
    auto c = trefoil_cert();
    c.steps.pop_back();
    try {
        replay(c);
        FAIL("expected an end mismatch");
    } catch (const ReplayError& e) {
        CHECK(e.step == static_cast<int>(c.steps.size()));
    }
}

TEST_CASE("broken step reports its index") {
    auto c = trefoil_cert();
    c.steps[0].site.crossings = {99};
    c.steps[0].kind = MoveKind::R1Remove;
    try {
        replay(c);
        FAIL("expected a step failure");
    } catch (const ReplayError& e) {
        CHECK(e.step == 0);
    }
    CHECK_THROWS_AS(parse_certificate("{\"schema\": 2}"), Error);
    CHECK_THROWS_AS(parse_certificate("not json"), Error);
}

TEST_CASE("empty certificate") {
    Certificate c;
    c.start = test::load("trefoil");
    c.claimed_end = c.start;
    auto rep = replay(c);
    CHECK(rep.audits.size() == 1);
    auto a = arf_parity_audit(c, Orientation::reference(c.start));
    CHECK(a.parallel_moves == 0);
    CHECK(a.ok());
}

TEST_CASE("Arf parity audit on the trefoil reduction") {
    auto c = trefoil_cert();
    auto a = arf_parity_audit(c, Orientation::reference(c.start));
    CHECK(a.start == ArfValue{true, 1});
    CHECK(a.end == ArfValue{true, 0});
    CHECK(a.parallel_moves == 1);
    CHECK(a.ok());
}

TEST_CASE("n-move orientation classes") {
    // sigma_1^4 braid closure: both strands run the same way through the twist
    auto d = test::load("trefoil");
    auto o = Orientation::reference(d);
    for (auto& s : enumerate_sites(d, MoveKind::NAdd, 4)) {
        Move m{MoveKind::NAdd, 4, 1, s};
        auto t = classify_nmove_orientation(d, o, m);
        auto [e, oe] = apply(d, o, m);
        auto v0 = eval_jones_at_i(d, o), v1 = eval_jones_at_i(e, oe);
        // the value at i flips exactly for parallel strands
        CHECK((t == NMoveType::Parallel) == (v1 == -v0));
        CHECK((t == NMoveType::Antiparallel) == (v1 == v0));
    }
    auto h = test::load("hopf");
    for (auto rev : {false, true}) {
        Orientation oh{{false, rev}};
        for (auto& s : enumerate_sites(h, MoveKind::NAdd, 4)) {
            Move m{MoveKind::NAdd, 4, 1, s};
            auto t = classify_nmove_orientation(h, oh, m);
            Orientation flipped{{false, !rev}};
            CHECK(classify_nmove_orientation(h, flipped, m) != t);
        }
    }
}
