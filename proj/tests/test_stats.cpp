#include <doctest.h>

#include <sstream>

#include "support.hpp"

using namespace egen;
using namespace egen::testing;

namespace {

const char* kFib =
    "sort int = 0..120\nop 0 : -> int native\nop 1 : -> int native\nop 2 : -> int native\n"
    "op + : int, int -> int native\nop * : int, int -> int native\n"
    "var v_p : int = (3, 4)\nvar v_1 : int = (3, 5)\nvar v_2 : int = (2, 3)\ngoal g : int = (5, 8)\n";

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST_CASE("fresh engine has empty counters") {
    Engine e(load(kFib));
    RunReport r = e.report();
    CHECK(r.counters.built() == 0);
    CHECK(r.terms_in_d == 0);
    CHECK(r.rows.empty());
}

TEST_CASE("per-weight rows add up to the totals") {
    Engine e(load(kFib));
    Outcome out = e.run();
    const RunReport& r = out.report;
    std::uint64_t fresh = 0, again = 0, undef = 0;
    for (const auto& row : r.rows) {
        fresh += row.fresh;
        again += row.again;
        undef += row.undef;
    }
    CHECK(fresh == r.counters.compute_solved);
    CHECK(again == r.counters.compute_again);
    CHECK(undef == r.counters.compute_undef);
    CHECK(r.counters.compute_solved == r.terms_in_d);
    CHECK(r.phi_entries == r.terms_in_d);
    for (std::size_t i = 1; i < r.rows.size(); ++i) CHECK(r.rows[i - 1].weight < r.rows[i].weight);
}

TEST_CASE("csv output") {
    Engine e(load(kFib));
    Outcome out = e.run();
    std::ostringstream os;
    out.report.write_csv(os);
    auto ls = lines(os.str());
    REQUIRE(!ls.empty());
    CHECK(ls[0] == "weight,new,old,undef,millis");
    CHECK(ls.size() == out.report.rows.size() + 1);
    CHECK(ls[1].rfind("1,", 0) == 0);
}

TEST_CASE("summary mentions the main counters") {
    Engine e(load(kFib));
    std::ostringstream os;
    e.run().report.write_summary(os);
    CHECK(os.str().find("computeSolved") != std::string::npos);
}
