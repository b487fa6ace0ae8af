#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "egen/signature.hpp"
#include "egen/weight.hpp"

namespace egen {

using TermId = std::uint32_t;
constexpr TermId kNoTerm = ~TermId(0);

// Append-only hash-free term arena. Every term caches its weight and its value
// vector of length K. Ids grow in insertion order.
class TermStore {
public:
    explicit TermStore(std::size_t k) : k_(k) {}

    std::size_t k() const { return k_; }
    std::size_t size() const { return op_.size(); }

    TermId add(OpId op, std::span<const TermId> args, Weight w, std::span<const Code> vec);
    // Evaluates op on the argument vectors and appends the result.
    TermId build(const Signature& sig, OpId op, std::span<const TermId> args);

    OpId op(TermId t) const { return op_[t]; }
    Weight weight(TermId t) const { return weight_[t]; }
    std::span<const TermId> args(TermId t) const {
        return {args_.data() + arg_begin_[t], arg_begin_[t + 1] - arg_begin_[t]};
    }
    const Code* vec(TermId t) const { return values_.data() + std::size_t(t) * k_; }
    std::span<const Code> vector(TermId t) const { return {vec(t), k_}; }

    Weight weight_of(const Signature& sig, OpId op, std::span<const TermId> args) const;
    void evaluate(const Signature& sig, OpId op, std::span<const TermId> args, Code* out) const;

    std::size_t bytes_per_term() const { return sizeof(OpId) + sizeof(Weight) + sizeof(std::uint32_t) + k_ * sizeof(Code); }
    std::size_t memory_bytes() const;

private:
    std::size_t k_;
    std::vector<OpId> op_;
    std::vector<Weight> weight_;
    std::vector<std::uint32_t> arg_begin_{0};
    std::vector<TermId> args_;
    std::vector<Code> values_;
};

struct PrintOptions {
    bool full_parens = false;
};

std::string print_term(const Signature& sig, const TermStore& store, TermId t, const PrintOptions& opt = {});
std::string print_vector(const Signature& sig, SortId sort, std::span<const Code> vec);

// Evaluates a term tree from scratch at substitution index i; oracles use it
// to avoid trusting cached vectors.
Code eval_at(const Signature& sig, const TermStore& store, TermId t, std::size_t i);

}  // namespace egen
