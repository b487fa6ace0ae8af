#include <doctest.h>

#include <random>

#include "egen/projection.hpp"
#include "support.hpp"

using namespace egen;
using namespace egen::testing;

TEST_CASE("kernel signatures") {
    std::vector<Code> a{1, 1, 2, 3};
    CHECK(partition_signature(kernel(a.data(), 4)) == "aa..");
    std::vector<Code> b{0, 8, 1, 0, 1};
    Partition p = kernel(b.data(), 5);
    CHECK(p == Partition{0, 1, 2, 0, 2});
    CHECK(blocks(p) == std::vector<IndexSet>{0b01001, 0b00010, 0b10100});
    CHECK(partition_signature(p) == "a.bab");
}

TEST_CASE("partition counts") {
    std::vector<std::size_t> bell{1, 1, 2, 5, 15, 52, 203};
    for (std::size_t k = 1; k <= 6; ++k) CHECK(enumerate_partitions(k).size() == bell[k]);
}

TEST_CASE("refinements keep the given block") {
    for (IndexSet s : {IndexSet(0b011), IndexSet(0b101), IndexSet(0b1111)}) {
        auto rs = refinements_with_block(s, 4);
        std::size_t rest = 4 - __builtin_popcount(s);
        std::vector<std::size_t> bell{1, 1, 2, 5};
        CHECK(rs.size() == bell[rest]);
        for (const auto& r : rs) {
            auto bs = blocks(r);
            CHECK(std::find(bs.begin(), bs.end(), s) != bs.end());
        }
    }
}

TEST_CASE("match set") {
    std::vector<Code> a{1, 2, 3}, g{1, 0, 3};
    CHECK(match_set(a.data(), g.data(), 3) == 0b101);
}

TEST_CASE("data lattice updates walk down to finite nodes") {
    DataLattice d(3);
    auto c1 = d.update(0b011, 10, Weight(3));
    CHECK(c1.size() == 4);
    CHECK(d.weight(0b001) == Weight(3));
    CHECK(d.witness(0b010) == 10);
    auto c2 = d.update(0b110, 11, Weight(4));
    std::sort(c2.begin(), c2.end());
    CHECK(c2 == std::vector<IndexSet>{0b100, 0b110});
    CHECK(d.weight(0b010) == Weight(3));
    CHECK_FALSE(d.weight(0b111).finite());
}

TEST_CASE("data lattice agrees with brute force") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 20; ++round) {
        const std::size_t k = 4;
        DataLattice d(k);
        std::vector<Weight> best(1u << k, Weight::inf());
        std::uint64_t w = 1;
        for (int i = 0; i < 30; ++i) {
            w += rng() % 2;
            IndexSet s = static_cast<IndexSet>(rng() % (1u << k));
            d.update(s, TermId(i), Weight(w));
            for (IndexSet t = 0; t < (1u << k); ++t)
                if ((t & s) == t && !best[t].finite()) best[t] = Weight(w);
        }
        for (IndexSet t = 0; t < (1u << k); ++t) CHECK(d.weight(t) == best[t]);
    }
}

TEST_CASE("control lattice keeps the first control per kernel") {
    ControlLattice c;
    Partition p{0, 0, 1};
    CHECK(c.add(p, 5, Weight(2)).has_value());
    CHECK_FALSE(c.add(p, 6, Weight(3)).has_value());
    CHECK(c.relation(0).control == 5);
    CHECK(c.with_block(0b011).size() == 1);
    CHECK(c.with_block(0b100).size() == 1);
    CHECK(c.with_block(0b001).empty());
}

TEST_CASE("upper modes") {
    CHECK(parse_upper_mode("idx") == UpperMode::Idx);
    CHECK(parse_upper_mode("condChoice") == UpperMode::CondChoice);
    CHECK(parse_upper_mode("none") == UpperMode::None);
    CHECK_FALSE(parse_upper_mode("if").has_value());
}

TEST_CASE("engine composes an idx solution") {
    SearchConfig cfg;
    cfg.projection.mode = UpperMode::Idx;
    cfg.ceiling = Weight(10);
    Engine e(load("sort int = 0..9\nop 5 : -> int native\nop 7 : -> int native\nvar x : int = (0, 1)\n"
                  "goal g : int = (7, 5)\n"),
             cfg);
    Outcome out = e.run();
    REQUIRE(out.goals[0].status != GoalStatus::Open);
    CHECK(evaluate(e.sig(), e.store(), out.goals[0].term) == std::vector<Code>{7, 5});
    CHECK(out.goals[0].weight == Weight(5));
    CHECK(out.report.counters.compositions > 0);
}

TEST_CASE("engine composes a conditional solution") {
    SearchConfig cfg;
    cfg.projection.mode = UpperMode::CondChoice;
    cfg.ceiling = Weight(10);
    Engine e(load("sort int = 0..9\nop 0 : -> int native\nop 5 : -> int native\nop 7 : -> int native\n"
                  "op = : int, int -> bool native\nvar x : int = (0, 1)\ngoal g : int = (7, 5)\n"),
             cfg);
    Outcome out = e.run();
    REQUIRE(out.goals[0].status != GoalStatus::Open);
    CHECK(evaluate(e.sig(), e.store(), out.goals[0].term) == std::vector<Code>{7, 5});
    CHECK(out.goals[0].text.find("if") == 0);
}
