#pragma once

#include <string>
#include <vector>

#include "egen/signature.hpp"

namespace egen {

struct PropertyReport {
    OpFlags holds;   // properties that hold (only checked where the sorts allow them)
    bool exhaustive = true;
    // Witness argument tuples (codes, ⊥ included) refuting each property.
    std::vector<Code> commutative_witness, associative_witness, idempotent_witness, strict_witness;

    // First claimed flag that does not hold, with its witness rendered as
    // "(a,b[,c])"; empty when every claimed flag holds.
    std::string refutation(const Signature& sig, const Operator& op, const OpFlags& claimed) const;
};

// Exhaustive over the argument domain including ⊥. Associativity falls back
// to border values plus a random sample when |domain|^3 exceeds the limit.
PropertyReport check_op_properties(const Signature& sig, OpId id,
                                   std::uint64_t exhaustive_limit = std::uint64_t(1) << 24);

}  // namespace egen
