#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace egen {

struct OpFlags {
    bool commutative = false;
    bool associative = false;
    bool idempotent = false;
    bool strict = false;

    std::string str() const;
    bool operator==(const OpFlags&) const = default;
};

// Argument/result shape of a native operator. Int means an integer range sort,
// Any means every argument shares one arbitrary sort.
enum class NativeShape { IntIntInt, IntInt, IntIntBool, BoolBoolBool, BoolBool, AnyAnyBool };

struct NativeCtx {
    unsigned bit_width = 8;
};

// Computes on decoded integers (bools are 0/1); nullopt means ⊥. Arguments are
// always defined, ⊥ propagation is done by the caller.
using NativeFn = std::optional<std::int64_t> (*)(const std::int64_t* args, const NativeCtx& ctx);

struct NativeOp {
    std::string_view name;
    NativeShape shape;
    OpFlags flags;      // claimed for every integer range 0..N
    int precedence;     // for infix printing; 0 = prefix
    std::string_view description;
    NativeFn fn;

    std::size_t arity() const;
};

const std::vector<NativeOp>& native_ops();
const NativeOp* find_native(std::string_view name);

}  // namespace egen
