#include <doctest.h>

#include "egen/errors.hpp"
#include "egen/oracles.hpp"
#include "support.hpp"

using namespace egen;
using namespace egen::testing;

namespace {

const char* kFib =
    "sort int = 0..120\nop 0 : -> int native\nop 1 : -> int native\nop 2 : -> int native\n"
    "op + : int, int -> int native\nop * : int, int -> int native\n"
    "var v_p : int = (3, 4)\nvar v_1 : int = (3, 5)\nvar v_2 : int = (2, 3)\ngoal g : int = (5, 8)\n";

}  // namespace

TEST_CASE("both oracles solve the running example") {
    Problem p = load(kFib);
    auto k = knuth_minimal(p, 0, Weight(8));
    REQUIRE(k.found);
    CHECK(k.weight == Weight(5));
    auto n = naive_search(p, 0, Weight(8));
    REQUIRE(n.found);
    CHECK(n.weight == Weight(5));
    CHECK(n.text == "v_1+v_2");
}

TEST_CASE("oracles report none below the ceiling") {
    Problem p = load(kFib);
    auto k = knuth_minimal(p, 0, Weight(4));
    CHECK_FALSE(k.found);
    auto n = naive_search(p, 0, Weight(4));
    CHECK_FALSE(n.found);
    CHECK_FALSE(n.limit_hit);
}

TEST_CASE("empty language") {
    Problem p = load("sort int = 0..9\nop 2 : -> int native\nop * : int, int -> int native\ngoal g : int = (3)\n");
    CHECK_FALSE(knuth_minimal(p, 0, Weight(20)).found);
    CHECK_FALSE(naive_search(p, 0, Weight(20)).found);
}

TEST_CASE("naive term limit") {
    Problem p = load(kFib);
    auto n = naive_search(p, 0, Weight(30), 10);
    CHECK_FALSE(n.found);
    CHECK(n.limit_hit);
}

TEST_CASE("class grammar of one index") {
    Problem p = load("sort int = 0..3\nop 1 : -> int native\nop + : int, int -> int native\n"
                     "var x : int = (2, 3)\ngoal g : int = (3, 3)\n");
    auto cg = build_class_grammar(p, 0);
    const std::uint32_t o = cg.sort_offset[*p.sig.find_sort("int")];
    // At index 0 the variable x denotes 2.
    // Value v has v+1 splits under +, plus the constant 1 and x.
    CHECK(cg.g.rules[o + 0].size() == 1);
    CHECK(cg.g.rules[o + 1].size() == 3);
    CHECK(cg.g.rules[o + 2].size() == 4);
    CHECK(cg.g.rules[o + 3].size() == 4);
    auto w = knuth_weights(p, cg.g);
    CHECK(w[o + 1] == Weight(1));
    CHECK(w[o + 2] == Weight(2));
    CHECK(w[o + 3] == Weight(4));
    CHECK_FALSE(w[o + 0].finite());
}

TEST_CASE("product grammar holds the lightest solution") {
    std::string small = kFib;
    small.replace(small.find("0..120"), 6, "0..12");
    Problem p = load(small);
    auto pg = lift_and_intersect(p, 1'000'000);
    REQUIRE(pg.has_value());
    std::optional<std::size_t> goal;
    for (std::size_t n = 0; n < pg->tuple_of.size(); ++n)
        if (pg->tuple_of[n] == p.goals[0].vec && pg->sort_of[n] == p.goals[0].sort) goal = n;
    REQUIRE(goal.has_value());
    auto w = knuth_weights(p, pg->g);
    CHECK(w[*goal] == Weight(5));
    bool has_sum = false;
    OpId plus = *p.sig.find_op("+"), v1 = *p.sig.find_op("v_1"), v2 = *p.sig.find_op("v_2");
    for (const auto& alt : pg->g.rules[*goal]) {
        if (alt.op != plus) continue;
        auto is = [&](std::uint32_t n, OpId var) {
            for (const auto& a : pg->g.rules[n])
                if (a.op == var) return true;
            return false;
        };
        if (is(alt.args[0], v1) && is(alt.args[1], v2)) has_sum = true;
    }
    CHECK(has_sum);
}

TEST_CASE("product grammar respects the budget") {
    Problem p = load(kFib);
    CHECK_FALSE(lift_and_intersect(p, 10).has_value());
}

TEST_CASE("closed-form grammar sizes") {
    auto c1 = grammar_size_counts(3, 1);
    CHECK(c1.nonterminals == 3);
    // + : (n+1) splits per value, - : (range-n) pairs per value.
    CHECK(c1.alternatives == (1 + 3) + (2 + 2) + (3 + 1));
    auto c2 = grammar_size_counts(2, 2);
    CHECK(c2.nonterminals == 4);
    CHECK_THROWS_AS(grammar_size_counts(1'000'000, 4), ConfigError);
}
