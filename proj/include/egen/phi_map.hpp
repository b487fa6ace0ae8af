#pragma once

#include <cstdint>
#include <vector>

#include "egen/signature.hpp"
#include "egen/term_store.hpp"

namespace egen {

// Per-sort map from value vectors to the first (hence lightest) term found
// with that vector, or to a goal marker. Entries store ids only; vectors are
// read back from the term store or the goal arena.
class PhiMap {
public:
    static constexpr std::uint32_t kEmpty = ~std::uint32_t(0);
    static constexpr std::uint32_t kGoalBit = std::uint32_t(1) << 31;

    // Sorts with cardinality^K <= direct_budget get a direct-addressed table,
    // which also makes saturation exact. `with_undef` keeps ⊥ as a regular
    // component value (needed when some operator is not strict).
    PhiMap(const Signature& sig, const TermStore& store, std::uint64_t direct_budget, bool with_undef);

    // Registers a goal vector; returns its group index. Identical vectors share a group.
    std::uint32_t add_goal(SortId s, const Code* vec);

    // Cell for vec in sort s; kEmpty if absent. Storing a term id into an
    // empty cell or over a goal marker must be followed by filled(s).
    std::uint32_t* find(SortId s, const Code* vec);
    void filled(SortId s) { ++tables_[s].count; }

    bool saturated(SortId s) const;
    bool direct(SortId s) const { return tables_[s].direct; }
    std::size_t entries(SortId s) const { return tables_[s].count; }
    std::size_t entries() const;
    std::size_t memory_bytes() const;
    const Code* goal_vec(std::uint32_t group) const { return goal_vecs_.data() + std::size_t(group) * k_; }

private:
    struct Table {
        bool direct = false;
        std::uint64_t radix = 0;
        std::uint64_t full = 0;  // number of distinct storable vectors, 0 if unknown
        std::vector<std::uint32_t> cells;
        std::size_t count = 0;  // term entries
        std::size_t goals = 0;  // goal markers ever placed
    };

    const Code* resolve(std::uint32_t e) const { return e & kGoalBit ? goal_vec(e & ~kGoalBit) : store_.vec(e); }
    std::uint64_t hash(const Code* v) const;
    void grow(Table& t);

    const TermStore& store_;
    std::size_t k_;
    std::vector<Table> tables_;
    std::vector<Code> goal_vecs_;
};

}  // namespace egen
