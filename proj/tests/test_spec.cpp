#include <doctest.h>

#include "egen/errors.hpp"
#include "egen/spec.hpp"
#include "support.hpp"

using namespace egen;
using namespace egen::testing;

namespace {

const char* kFull =
    "bitwidth 4\n"
    "varweight size(2)\n"
    "sort int = 0..15\n"
    "sort color = {red, green, blue}\n"
    "op 0 : -> int native\n"
    "op + : int, int -> int native [c, a] wf=height(1)\n"
    "op * : int, int -> int native [c, a] trusted\n"
    "op mix : color, color -> color table [red, green, blue, green, green, blue, blue, blue, blue]\n"
    "op paint : int -> color table [red, green, blue, red, green, blue, red, green, blue, red, green, blue, red, green, "
    "blue, red]\n"
    "var x : int = (1, 2) wf=size(3)\n"
    "var c : color = (red, blue)\n"
    "redex * + .\n"
    "goal g : int = (2, 4)\n"
    "goal h : color = (green, blue)\n";

std::string error_of(const std::string& text) {
    try {
        load(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("print and parse round trip") {
    ProblemSpec s = parse_spec(kFull);
    CHECK(s.decls.size() == 14);
    std::string printed = print_spec(s);
    CHECK(parse_spec(printed) == s);
    CHECK(print_spec(parse_spec(printed)) == printed);
}

TEST_CASE("compiled problem") {
    Problem p = load(kFull);
    CHECK(p.sig.k() == 2);
    CHECK(p.goals.size() == 2);
    CHECK(p.redices.size() == 1);
    const Operator& plus = p.sig.op(*p.sig.find_op("+"));
    CHECK(plus.flags.commutative);
    CHECK(plus.wf.str() == "height(1)");
    CHECK(p.sig.op(*p.sig.find_op("x")).wf.str() == "size(3)");
    CHECK(p.sig.op(*p.sig.find_op("c")).wf.str() == "size(2)");
}

TEST_CASE("errors carry line numbers") {
    CHECK(error_of("sort int = 0..9\nop + : int, int -> int\n").rfind("line 2:", 0) == 0);
    CHECK(error_of("sort int = 0..9\nop 1 : -> int native\nbogus\n").rfind("line 3:", 0) == 0);
    CHECK(error_of("sort int = 0..9\nop x : int -> int native [q]\n").find("unknown operator flag") !=
          std::string::npos);
}

TEST_CASE("semantic errors") {
    const std::string base = "sort int = 0..9\nop 1 : -> int native\n";
    CHECK(error_of(base + "var univ : int = (1)\ngoal g : int = (1)\n").find("univ") != std::string::npos);
    CHECK(error_of(base + "goal g : int = ()\n") != "");
    CHECK(error_of(base + "goal g : int = (u)\n") != "");
    CHECK(error_of(base + "var x : int = (1, 2)\ngoal g : int = (1)\n") != "");
    CHECK(error_of(base + "op - : int, int -> int native [c]\ngoal g : int = (1)\n").find(
              "commutativity refuted by") != std::string::npos);
    CHECK(error_of(base + "op + : int, int -> int native wf=affine(0;1,1)\ngoal g : int = (1)\n") != "");
    CHECK(error_of(base + "op f : int -> int table [1, 2]\ngoal g : int = (1)\n") != "");
    CHECK(error_of(base + "goal g : int = (1)\n") == "");
}

TEST_CASE("variable modes") {
    Problem all = load("sort e = {a, b, c}\nvar all : e\ngoal g : e = (b, c, a)\n");
    CHECK(all.sig.k() == 3);
    Problem r1 = load("sort int = 0..9\nop 1 : -> int native\nvar random 3 seed 7 : int\ngoal g : int = (1)\n");
    Problem r2 = load("sort int = 0..9\nop 1 : -> int native\nvar random 3 seed 7 : int\ngoal g : int = (1)\n");
    CHECK(r1.ops.size() == r2.ops.size());
    CHECK(r1.sig.num_ops() == r2.sig.num_ops());
}

TEST_CASE("sequence setup with two predecessors") {
    SeqSetup s = seq_setup("0 1 ; 4 9 16", 2, "int");
    REQUIRE(s.vars.size() == 3);
    CHECK(s.vars[0].name == "v_p");
    CHECK(s.vars[0].values == std::vector<std::string>{"2", "3", "4"});
    CHECK(s.vars[1].values == std::vector<std::string>{"1", "4", "9"});
    CHECK(s.vars[2].values == std::vector<std::string>{"0", "1", "4"});
    CHECK(s.goal.values == std::vector<std::string>{"4", "9", "16"});
}

TEST_CASE("sequence setup with an offset prefix") {
    SeqSetup s = seq_setup("1 2 3 ; 5 8", 2, "int");
    CHECK(s.vars[0].values == std::vector<std::string>{"3", "4"});
    CHECK(s.vars[1].values == std::vector<std::string>{"3", "5"});
    CHECK(s.vars[2].values == std::vector<std::string>{"2", "3"});
    SeqSetup o = seq_setup("1 2 3 ; 5 8", 2, "int", 1);
    CHECK(o.vars[0].values == std::vector<std::string>{"4", "5"});
}

TEST_CASE("sequence errors") {
    CHECK_THROWS_AS(seq_setup("; 5", 1, "int"), ConfigError);
    CHECK_THROWS_AS(seq_setup("1 2", 1, "int"), ConfigError);
    CHECK_THROWS_AS(seq_setup("1 ; ", 1, "int"), ConfigError);
    CHECK_THROWS_AS(seq_setup("1 ; x", 1, "int"), ConfigError);
}

TEST_CASE("sequence extrapolation") {
    ProblemSpec spec = parse_spec("sort int = 0..100\n" + arith_ops({"1", "+", "*"}));
    SeqSetup s = seq_setup("0 1 ; 4 9 16", 2, "int");
    apply_seq(spec, s);
    Problem p = compile(spec);
    TermStore st(p.sig.k());
    TermId vp = st.build(p.sig, *p.sig.find_op("v_p"), {});
    std::vector<TermId> a{vp, vp};
    TermId sq = st.build(p.sig, *p.sig.find_op("*"), a);
    CHECK(seq_extrapolate(p, st, sq, s) == 25);
}

TEST_CASE("operator file with nine operators") {
    Problem p = load(
        "sort int = 0..9\n"
        "op 0 : -> int native\nop 1 : -> int native\nop + : int, int -> int native\nop - : int, int -> int native\n"
        "op * : int, int -> int native\nop < : int, int -> bool native\nop ! : bool -> bool native\n"
        "op && : bool, bool -> bool native\nop || : bool, bool -> bool native\n"
        "var x : int = (3)\ngoal g : int = (4)\n");
    CHECK(p.ops.size() == 10);
}
