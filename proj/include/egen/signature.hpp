#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "egen/native_ops.hpp"
#include "egen/sort.hpp"
#include "egen/weight.hpp"

namespace egen {

using OpId = std::uint32_t;

enum class OpKind { Table, Native, Variable, Projection };
enum class ProjectionFamily { Idx, If, IfDef, Choice };

struct Operator {
    std::string name;
    std::vector<SortId> args;
    SortId result = 0;
    OpFlags flags;
    WeightFn wf;
    OpKind kind = OpKind::Table;
    std::uint32_t ts = 0;  // declaration order, used for tie-breaking

    std::vector<Code> table;        // Table kind, or compiled natives; row-major, ⊥ included
    const NativeOp* native = nullptr;
    std::vector<Code> values;       // Variable kind: one value per substitution index
    ProjectionFamily family = ProjectionFamily::Idx;

    std::size_t arity() const { return args.size(); }
    bool is_constant() const { return args.empty() && kind != OpKind::Variable; }
    bool is_variable() const { return kind == OpKind::Variable; }
    bool is_projection() const { return kind == OpKind::Projection; }
    int precedence() const { return native ? native->precedence : 0; }
};

class Signature {
public:
    SortId add_sort(Sort s);
    // Assigns ts, checks argument sorts exist, compiles small native
    // operators into dense tables.
    OpId add_op(Operator op);

    const Sort& sort(SortId id) const { return sorts_.at(id); }
    const Operator& op(OpId id) const { return ops_.at(id); }
    Operator& op_mut(OpId id) { return ops_.at(id); }
    std::size_t num_sorts() const { return sorts_.size(); }
    std::size_t num_ops() const { return ops_.size(); }
    const std::vector<Sort>& sorts() const { return sorts_; }
    const std::deque<Operator>& ops() const { return ops_; }

    std::optional<SortId> find_sort(const std::string& name) const;
    std::optional<OpId> find_op(const std::string& name) const;

    // Number of substitution indices (length of value vectors); 0 until known.
    std::size_t k() const { return k_; }
    void set_k(std::size_t k) { k_ = k; }

    NativeCtx& native_ctx() { return ctx_; }
    const NativeCtx& native_ctx() const { return ctx_; }

    // Value of op applied to argument codes at substitution index i.
    Code apply(OpId id, std::span<const Code> args, std::size_t i = 0) const;
    // Componentwise application to whole value vectors.
    void apply_vectors(OpId id, std::span<const Code* const> args, Code* out) const;

    // Dense table index of an argument tuple.
    std::size_t table_index(const Operator& op, std::span<const Code> args) const;
    std::uint64_t table_size(const Operator& op) const;

    static constexpr std::uint64_t kCompileLimit = std::uint64_t(1) << 22;

private:
    Code apply_uncompiled(const Operator& op, std::span<const Code> args, std::size_t i) const;
    void compile(Operator& op) const;

    std::vector<Sort> sorts_;
    std::deque<Operator> ops_;  // stable references while projection ops are added
    std::size_t k_ = 0;
    NativeCtx ctx_;
};

// Result of a projection-like operator; control/data split is implied by the
// family and arity.
Code apply_projection(ProjectionFamily f, const Signature& sig, const Operator& op, std::span<const Code> args);

}  // namespace egen
