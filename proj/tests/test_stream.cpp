#include <doctest.h>

#include <set>

#include "egen/wdl_stream.hpp"
#include "support.hpp"

using namespace egen;
using namespace egen::testing;

namespace {

const char* kFib =
    "sort int = 0..120\nop 0 : -> int native\nop 1 : -> int native\nop 2 : -> int native\n"
    "op + : int, int -> int native\nop * : int, int -> int native\n"
    "var v_p : int = (3, 4)\nvar v_1 : int = (3, 5)\nvar v_2 : int = (2, 3)\ngoal g : int = (5, 8)\n";

std::string text(const Signature& sig, const Wdl& w) {
    std::string s = sig.op(w.op).name;
    for (auto a : w.args) s += " " + a.str();
    return s;
}

}  // namespace

TEST_CASE("stream order follows the worked example") {
    Problem p = load(kFib);
    WdlStream s(p.sig, p.ops);
    std::vector<std::string> got;
    for (int i = 0; i < 11; ++i) got.push_back(text(p.sig, *s.next()));
    CHECK(got == std::vector<std::string>{"0", "1", "2", "v_p", "v_1", "v_2", "+ 1 1", "* 1 1", "+ 2 1", "* 2 1",
                                          "+ 2 2"});
    CHECK(s.history() == std::vector<Weight>{Weight(1), Weight(2), Weight(3), Weight(4)});
}

TEST_CASE("trace format") {
    Problem p = load(kFib);
    WdlStream s(p.sig, p.ops);
    for (int i = 0; i < 6; ++i) s.next();
    CHECK(format_wdl(p.sig, *s.next()) == "w 3 + 1 1");
}

TEST_CASE("commutative pruning keeps only descending argument weights") {
    Problem p = load(kFib);
    StreamConfig on, off;
    off.commutative_pruning = false;
    on.ceiling = off.ceiling = Weight(9);
    WdlStream a(p.sig, p.ops, on), b(p.sig, p.ops, off);
    std::set<std::vector<std::uint64_t>> sa, sb;
    while (auto w = a.next()) {
        if (w->args.size() == 2) CHECK(w->args[0] >= w->args[1]);
        sa.insert({w->op, w->args.empty() ? 0 : w->args[0].value(), w->args.empty() ? 0 : w->args.back().value()});
    }
    while (auto w = b.next())
        sb.insert({w->op, w->args.empty() ? 0 : std::max(w->args[0], w->args.back()).value(),
                   w->args.empty() ? 0 : std::min(w->args[0], w->args.back()).value()});
    CHECK(sa == sb);
    CHECK(a.ceiling_hit());
}

TEST_CASE("non-symmetric weight functions are not pruned") {
    Problem p = load("sort int = 0..9\nop 1 : -> int native\nop + : int, int -> int native wf=affine(1;1,2)\n"
                     "var x : int = (1) wf=size(2)\ngoal g : int = (3)\n");
    WdlStream s(p.sig, p.ops, StreamConfig{Weight(8), true, 0});
    bool ascending = false;
    while (auto w = s.next())
        if (w->args.size() == 2 && w->args[0] < w->args[1]) ascending = true;
    CHECK(ascending);
}

TEST_CASE("inhabited predicate holds back uninhabited weights") {
    Problem p = load(kFib);
    std::set<std::uint64_t> inhabited{1};
    WdlStream s(p.sig, p.ops, {}, [&](Weight w) { return inhabited.count(w.value()) > 0; });
    std::vector<std::string> got;
    while (auto w = s.next()) got.push_back(text(p.sig, *w));
    // Only weight 1 joins the history, so binary WDLs use weight 1 arguments only.
    CHECK(got == std::vector<std::string>{"0", "1", "2", "v_p", "v_1", "v_2", "+ 1 1", "* 1 1"});
}

TEST_CASE("heap cap reports overflow") {
    Problem p = load(kFib);
    StreamConfig cfg;
    cfg.heap_cap = 4;
    cfg.ceiling = Weight(12);
    WdlStream s(p.sig, p.ops, cfg);
    std::size_t n = 0;
    while (s.next()) ++n;
    CHECK(s.overflowed());
    CHECK(s.peak() <= 4);
    CHECK(n > 0);
}
