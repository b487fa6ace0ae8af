#include "egen/native_ops.hpp"

#include <algorithm>

namespace egen {

std::string OpFlags::str() const {
    std::string s;
    auto add = [&](bool on, const char* n) {
        if (!on) return;
        if (!s.empty()) s += ",";
        s += n;
    };
    add(commutative, "c");
    add(associative, "a");
    add(idempotent, "i");
    add(strict, "s");
    return s;
}

std::size_t NativeOp::arity() const {
    return shape == NativeShape::IntInt || shape == NativeShape::BoolBool ? 1 : 2;
}

namespace {

using R = std::optional<std::int64_t>;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t mask(const NativeCtx& c) {
    return c.bit_width >= 62 ? std::int64_t(-1) & ~(std::int64_t(1) << 62) : (std::int64_t(1) << c.bit_width) - 1;
}

// Products are only computed when they cannot overflow int64; ranges are
// below 2^31 so the sum/difference never overflow.
R mul(const std::int64_t* a, const NativeCtx&) { return a[0] * a[1]; }

constexpr OpFlags C{true, false, false, true};
constexpr OpFlags CA{true, true, false, true};
constexpr OpFlags CAI{true, true, true, true};
constexpr OpFlags S{false, false, false, true};

const std::vector<NativeOp> kOps = {
    {"+", NativeShape::IntIntInt, CA, 10, "addition, out-of-range results are undefined",
     [](const std::int64_t* a, const NativeCtx&) -> R { return a[0] + a[1]; }},
    {"-", NativeShape::IntIntInt, S, 10, "subtraction, out-of-range results are undefined",
     [](const std::int64_t* a, const NativeCtx&) -> R { return a[0] - a[1]; }},
    {"*", NativeShape::IntIntInt, C, 11, "multiplication, out-of-range results are undefined", mul},
    {"/", NativeShape::IntIntInt, S, 11, "exact division, undefined if the remainder is nonzero",
     [](const std::int64_t* a, const NativeCtx&) -> R {
         if (a[1] == 0 || a[0] % a[1] != 0) return std::nullopt;
         return a[0] / a[1];
     }},
    {"//", NativeShape::IntIntInt, S, 11, "floor division, undefined for divisor 0",
     [](const std::int64_t* a, const NativeCtx&) -> R {
         if (a[1] == 0) return std::nullopt;
         return floor_div(a[0], a[1]);
     }},
    {"%", NativeShape::IntIntInt, S, 11, "remainder of floor division, undefined for divisor 0",
     [](const std::int64_t* a, const NativeCtx&) -> R {
         if (a[1] == 0) return std::nullopt;
         return a[0] - a[1] * floor_div(a[0], a[1]);
     }},
    {"min", NativeShape::IntIntInt, CAI, 0, "minimum",
     [](const std::int64_t* a, const NativeCtx&) -> R { return std::min(a[0], a[1]); }},
    {"max", NativeShape::IntIntInt, CAI, 0, "maximum",
     [](const std::int64_t* a, const NativeCtx&) -> R { return std::max(a[0], a[1]); }},
    {"<", NativeShape::IntIntBool, S, 8, "less than",
     [](const std::int64_t* a, const NativeCtx&) -> R { return a[0] < a[1]; }},
    {"<=", NativeShape::IntIntBool, S, 8, "less or equal",
     [](const std::int64_t* a, const NativeCtx&) -> R { return a[0] <= a[1]; }},
    {"=", NativeShape::AnyAnyBool, C, 7, "equality on any sort",
     [](const std::int64_t* a, const NativeCtx&) -> R { return a[0] == a[1]; }},
    {">=", NativeShape::IntIntBool, S, 8, "greater or equal",
     [](const std::int64_t* a, const NativeCtx&) -> R { return a[0] >= a[1]; }},
    {">", NativeShape::IntIntBool, S, 8, "greater than",
     [](const std::int64_t* a, const NativeCtx&) -> R { return a[0] > a[1]; }},
    {"!", NativeShape::BoolBool, S, 12, "negation",
     [](const std::int64_t* a, const NativeCtx&) -> R { return !a[0]; }},
    {"&&", NativeShape::BoolBoolBool, CAI, 3, "conjunction",
     [](const std::int64_t* a, const NativeCtx&) -> R { return a[0] && a[1]; }},
    {"||", NativeShape::BoolBoolBool, CAI, 2, "disjunction",
     [](const std::int64_t* a, const NativeCtx&) -> R { return a[0] || a[1]; }},
    {"=>", NativeShape::BoolBoolBool, S, 1, "implication",
     [](const std::int64_t* a, const NativeCtx&) -> R { return !a[0] || a[1]; }},
    {"&", NativeShape::IntIntInt, CAI, 6, "bitwise and within the configured bit width",
     [](const std::int64_t* a, const NativeCtx& c) -> R { return (a[0] & a[1]) & mask(c); }},
    {"|", NativeShape::IntIntInt, CAI, 4, "bitwise or within the configured bit width",
     [](const std::int64_t* a, const NativeCtx& c) -> R { return (a[0] | a[1]) & mask(c); }},
    {"^", NativeShape::IntIntInt, C, 5, "bitwise xor within the configured bit width",
     [](const std::int64_t* a, const NativeCtx& c) -> R { return (a[0] ^ a[1]) & mask(c); }},
    {"~", NativeShape::IntInt, S, 12, "bitwise complement within the configured bit width",
     [](const std::int64_t* a, const NativeCtx& c) -> R { return ~a[0] & mask(c); }},
    {"<<", NativeShape::IntIntInt, S, 9, "left shift, bits beyond the width are dropped",
     [](const std::int64_t* a, const NativeCtx& c) -> R {
         if (a[1] < 0) return std::nullopt;
         if (a[1] >= std::int64_t(c.bit_width)) return 0;
         return (a[0] << a[1]) & mask(c);
     }},
    {">>", NativeShape::IntIntInt, S, 9, "right shift",
     [](const std::int64_t* a, const NativeCtx& c) -> R {
         if (a[1] < 0) return std::nullopt;
         if (a[1] >= 63) return 0;
         return (a[0] & mask(c)) >> a[1];
     }},
};

}  // namespace

const std::vector<NativeOp>& native_ops() { return kOps; }

const NativeOp* find_native(std::string_view name) {
    for (const auto& op : kOps)
        if (op.name == name) return &op;
    return nullptr;
}

}  // namespace egen
