#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "egen/signature.hpp"
#include "egen/term_store.hpp"

namespace egen {

// Subset of substitution indices {0..K-1} as a bit mask.
using IndexSet = std::uint32_t;
constexpr std::size_t kMaxProjectionK = 16;

IndexSet match_set(const Code* a, const Code* goal, std::size_t k);

// For every S ⊆ {0..K-1}: weight of the lightest term seen so far whose value
// vector agrees with the goal on all of S. Terms must arrive in nondecreasing
// weight order, so each node changes at most once (from ∞ to finite).
class DataLattice {
public:
    explicit DataLattice(std::size_t k);

    // Registers a term agreeing with the goal exactly on S and returns the
    // sets whose weight changed. Walks the spanning tree of the sublattice
    // below S and stops at finite nodes.
    std::vector<IndexSet> update(IndexSet s, TermId t, Weight w);
    void update(IndexSet s, TermId t, Weight w, std::vector<IndexSet>& changed);

    Weight weight(IndexSet s) const { return weight_[s]; }
    TermId witness(IndexSet s) const { return witness_[s]; }
    std::size_t k() const { return k_; }
    IndexSet universe() const { return static_cast<IndexSet>((std::size_t(1) << k_) - 1); }

private:
    std::size_t k_;
    std::vector<Weight> weight_;
    std::vector<TermId> witness_;
};

// Equivalence relation on {0..K-1} as a restricted growth string: entry i is
// the block label of index i, labels numbered by first occurrence.
using Partition = std::vector<std::uint8_t>;

Partition kernel(const Code* vec, std::size_t k);
std::vector<IndexSet> blocks(const Partition& p);
std::string partition_signature(const Partition& p);
std::vector<Partition> enumerate_partitions(std::size_t k);
// All partitions of {0..K-1} that contain S as one block.
std::vector<Partition> refinements_with_block(IndexSet s, std::size_t k);

// Equivalence relations that have a control term, kept sparse. Each relation
// remembers its lightest control term.
class ControlLattice {
public:
    struct Relation {
        Partition partition;
        std::vector<IndexSet> blocks;
        TermId control;
        Weight weight;
    };

    // Returns the relation index if the control term is the first for its kernel.
    std::optional<std::size_t> add(const Partition& p, TermId control, Weight w);
    const Relation& relation(std::size_t i) const { return relations_[i]; }
    std::size_t size() const { return relations_.size(); }
    const std::vector<std::size_t>& with_block(IndexSet b) const;

private:
    static std::uint64_t key(const Partition& p);
    std::vector<Relation> relations_;
    std::unordered_map<std::uint64_t, std::size_t> by_key_;
    std::unordered_map<IndexSet, std::vector<std::size_t>> by_block_;
};

enum class UpperMode { None, Idx, CondChoice };
std::optional<UpperMode> parse_upper_mode(const std::string& s);
std::string upper_mode_name(UpperMode m);

struct ProjectionConfig {
    UpperMode mode = UpperMode::None;
    unsigned max_idx_arity = 10;  // A: idx takes at most A-1 data arguments
    WeightFn wf = WeightFn::size(1);
};

// Registers projection operators for one goal sort and control sort.
OpId ensure_projection_op(Signature& sig, ProjectionFamily f, std::size_t data_arity, SortId control, SortId data,
                          const WeightFn& wf);

// Feeds new D terms into per-goal data lattices and the control lattice and
// composes projection-rooted candidate solutions when every block of a
// control relation has a data term.
class ProjectionHub {
public:
    struct Goal {
        SortId sort;
        std::vector<Code> vec;
    };

    ProjectionHub(Signature& sig, TermStore& store, ProjectionConfig cfg, std::vector<Goal> goals);

    // Appends (goal index, composed term) pairs to `out`.
    void on_new_term(TermId t, std::vector<std::pair<std::size_t, TermId>>& out);
    void retire(std::size_t goal) { active_[goal] = false; }

    const DataLattice& data(std::size_t goal) const { return data_[goal]; }
    const ControlLattice& control() const { return control_; }
    std::size_t compositions() const { return compositions_; }
    std::size_t memory_bytes() const;

private:
    bool is_control(TermId t, Partition& p) const;
    void relation_complete(std::size_t goal, std::size_t rel, std::vector<std::pair<std::size_t, TermId>>& out);
    TermId compose(std::size_t goal, std::size_t rel);

    Signature& sig_;
    TermStore& store_;
    ProjectionConfig cfg_;
    std::vector<Goal> goals_;
    std::vector<bool> active_;
    std::vector<DataLattice> data_;
    ControlLattice control_;
    std::vector<std::vector<std::uint8_t>> finite_;  // per goal, per relation: blocks with a data term
    std::unordered_map<SortId, TermId> padding_;
    std::vector<IndexSet> scratch_;
    std::size_t compositions_ = 0;
};

}  // namespace egen
