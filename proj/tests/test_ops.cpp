#include <doctest.h>

#include "egen/errors.hpp"
#include "egen/native_ops.hpp"
#include "egen/op_properties.hpp"
#include "egen/signature.hpp"
#include "support.hpp"

using namespace egen;
using namespace egen::testing;

namespace {

struct Arith {
    Signature sig;
    SortId in, bo;
    Arith(std::int64_t hi = 9) {
        in = sig.add_sort(Sort::int_range("int", 0, hi));
        bo = sig.add_sort(Sort::boolean("bool"));
        sig.set_k(1);
    }
    OpId add(const std::string& name, std::vector<SortId> args, SortId res) {
        Operator op;
        op.name = name;
        op.args = std::move(args);
        op.result = res;
        op.kind = OpKind::Native;
        op.native = find_native(name);
        REQUIRE(op.native != nullptr);
        return sig.add_op(op);
    }
    std::int64_t bin(OpId id, std::int64_t a, std::int64_t b) {
        std::vector<Code> v{sig.sort(in).encode(a), sig.sort(in).encode(b)};
        Code c = sig.apply(id, v, 0);
        const Sort& rs = sig.sort(sig.op(id).result);
        return rs.defined(c) ? rs.decode(c) : -1;
    }
};

}  // namespace

TEST_CASE("sorts encode ⊥ after the defined values") {
    Sort s = Sort::int_range("int", 0, 9);
    CHECK(s.size() == 10);
    CHECK(s.undef() == 10);
    CHECK(s.encode(12) == s.undef());
    CHECK(s.encode(-1) == s.undef());
    CHECK(s.format(s.undef()) == "u");
    CHECK(*s.parse("u") == s.undef());
    Sort b = Sort::boolean();
    CHECK(b.format(1) == "t");
    CHECK(*b.parse("true") == 1);
    Sort e = Sort::enumeration("color", {"red", "green"});
    CHECK(*e.parse("green") == 1);
    CHECK_FALSE(e.parse("blue").has_value());
}

TEST_CASE("division family") {
    Arith a;
    OpId div = a.add("/", {a.in, a.in}, a.in);
    OpId idiv = a.add("//", {a.in, a.in}, a.in);
    OpId mod = a.add("%", {a.in, a.in}, a.in);
    CHECK(a.bin(div, 7, 2) == -1);
    CHECK(a.bin(div, 8, 2) == 4);
    CHECK(a.bin(idiv, 7, 2) == 3);
    CHECK(a.bin(idiv, 7, 0) == -1);
    CHECK(a.bin(mod, 7, 0) == -1);
    CHECK(a.bin(mod, 7, 3) == 1);
}

TEST_CASE("arithmetic clamps to ⊥ outside the range") {
    Arith a;
    OpId plus = a.add("+", {a.in, a.in}, a.in);
    OpId minus = a.add("-", {a.in, a.in}, a.in);
    OpId times = a.add("*", {a.in, a.in}, a.in);
    CHECK(a.bin(minus, 5, 7) == -1);
    CHECK(a.bin(minus, 7, 5) == 2);
    CHECK(a.bin(plus, 5, 5) == -1);
    CHECK(a.bin(times, 3, 3) == 9);
    std::vector<Code> v{a.sig.sort(a.in).undef(), 3};
    CHECK(a.sig.apply(plus, v, 0) == a.sig.sort(a.in).undef());
}

TEST_CASE("vector application") {
    Problem p = load("sort int = 0..20\nop + : int, int -> int native\nvar x : int = (3, 4)\nvar y : int = (2, 3)\n"
                     "goal g : int = (5, 7)\n");
    TermStore st(2);
    TermId x = st.build(p.sig, *p.sig.find_op("x"), {});
    TermId y = st.build(p.sig, *p.sig.find_op("y"), {});
    std::vector<TermId> args{x, y};
    TermId s = st.build(p.sig, *p.sig.find_op("+"), args);
    CHECK(evaluate(p.sig, st, s) == p.goals[0].vec);
    CHECK(print_term(p.sig, st, s) == "x+y");
    CHECK(st.weight(s) == Weight(5));
}

TEST_CASE("comparisons and logic") {
    Arith a;
    OpId lt = a.add("<", {a.in, a.in}, a.bo);
    OpId eq = a.add("=", {a.in, a.in}, a.bo);
    CHECK(a.bin(lt, 2, 3) == 1);
    CHECK(a.bin(lt, 3, 3) == 0);
    CHECK(a.bin(eq, 3, 3) == 1);
    OpId conj = a.add("&&", {a.bo, a.bo}, a.bo);
    std::vector<Code> tf{1, 0}, tt{1, 1};
    CHECK(a.sig.apply(conj, tf, 0) == 0);
    CHECK(a.sig.apply(conj, tt, 0) == 1);
}

TEST_CASE("bitwise operators respect the configured width") {
    Problem p = load("bitwidth 3\nsort int = 0..15\nop ~ : int -> int native\nop << : int, int -> int native\n"
                     "var x : int = (5)\ngoal g : int = (2)\n");
    std::vector<Code> five{5};
    CHECK(p.sig.apply(*p.sig.find_op("~"), five, 0) == 2);
    std::vector<Code> sh{5, 1};
    CHECK(p.sig.apply(*p.sig.find_op("<<"), sh, 0) == 2);
}

TEST_CASE("property checker over tables") {
    Problem p = load(
        "sort int = 0..2\n"
        "op m : int, int -> int table [0, 0, 0, 0, 1, 1, 0, 1, 2]\n"
        "op s : int, int -> int table [0, 1, 2, 1, 1, 2, 2, 2, 2]\n"
        "op d : int, int -> int table [0, 0, 0, 1, 0, 0, 2, 1, 0]\n"
        "var x : int = (1)\ngoal g : int = (0)\n");
    auto m = check_op_properties(p.sig, *p.sig.find_op("m"));
    CHECK(m.exhaustive);
    CHECK(m.holds.commutative);
    CHECK(m.holds.associative);
    CHECK(m.holds.idempotent);
    CHECK(m.holds.strict);
    auto d = check_op_properties(p.sig, *p.sig.find_op("d"));
    CHECK_FALSE(d.holds.commutative);
    OpFlags claim;
    claim.commutative = true;
    CHECK(d.refutation(p.sig, p.sig.op(*p.sig.find_op("d")), claim).find("commutativity refuted by") == 0);
}

TEST_CASE("native flags hold on every small range") {
    for (std::int64_t hi : {0, 1, 4, 9}) {
        for (const NativeOp& nat : native_ops()) {
            if (nat.shape != NativeShape::IntIntInt) continue;
            Arith a(hi);
            OpId id = a.add(std::string(nat.name), {a.in, a.in}, a.in);
            auto rep = check_op_properties(a.sig, id);
            CHECK(rep.holds.strict);
            if (nat.flags.commutative) CHECK_MESSAGE(rep.holds.commutative, nat.name);
            if (nat.flags.associative) CHECK_MESSAGE(rep.holds.associative, nat.name);
            if (nat.flags.idempotent) CHECK_MESSAGE(rep.holds.idempotent, nat.name);
        }
    }
}

TEST_CASE("projection semantics") {
    Problem p = load("sort int = 0..9\nop 0 : -> int native\nvar c : int = (1)\ngoal g : int = (0)\n");
    SortId in = *p.sig.find_sort("int");
    SortId bo = *p.sig.find_sort("bool");
    OpId idx = ensure_projection_op(p.sig, ProjectionFamily::Idx, 3, in, in, WeightFn::size(1));
    std::vector<Code> a{1, 7, 8, 9};
    CHECK(p.sig.apply(idx, a, 0) == 8);
    a[0] = 5;
    CHECK(p.sig.apply(idx, a, 0) == p.sig.sort(in).undef());
    OpId iff = ensure_projection_op(p.sig, ProjectionFamily::If, 2, bo, in, WeightFn::size(1));
    std::vector<Code> t{1, 4, 5}, f{0, 4, 5};
    CHECK(p.sig.apply(iff, t, 0) == 4);
    CHECK(p.sig.apply(iff, f, 0) == 5);
    // Projection law: the selected position does not depend on the data.
    for (Code c = 0; c < 3; ++c)
        for (Code d0 = 0; d0 < 10; ++d0)
            for (Code d1 = 0; d1 < 10; ++d1) {
                std::vector<Code> v{c, d0, d1, 3};
                Code want = c == 0 ? d0 : c == 1 ? d1 : 3;
                CHECK(p.sig.apply(idx, v, 0) == want);
            }
}
