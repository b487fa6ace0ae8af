#pragma once

#include <optional>
#include <string>
#include <vector>

#include "egen/signature.hpp"
#include "egen/term_store.hpp"

namespace egen {

// A pattern "main arg1 .. argn" where each argument is an operator or a
// wildcard; any term matching it is known to have a lighter equivalent.
struct Redex {
    OpId main;
    std::vector<std::optional<OpId>> args;

    bool simple() const;
    bool operator==(const Redex&) const = default;
};

class RedexTable {
public:
    RedexTable() = default;
    explicit RedexTable(std::size_t num_ops) : by_main_(num_ops) {}

    void add(const Redex& r);
    // True if root op `main` over argument root ops `args` matches a stored
    // (non-simple) pattern. Simple patterns are folded into admissibility.
    bool is_redex(OpId main, const OpId* args, std::size_t n) const;
    bool empty() const { return count_ == 0; }
    const std::vector<Redex>& all() const { return all_; }

private:
    std::vector<std::vector<Redex>> by_main_;
    std::vector<Redex> all_;
    std::size_t count_ = 0;
};

struct AdmissibilityOptions {
    bool assoc_exclusion = true;
    std::vector<SortId> goal_sorts;  // empty: every sort is needed
};

// For each operator and argument position, the operators allowed as the root
// of that argument, in ts order.
class ArgAdmissibility {
public:
    ArgAdmissibility() = default;
    ArgAdmissibility(const Signature& sig, const std::vector<OpId>& ops, const std::vector<Redex>& redices,
                     const AdmissibilityOptions& opt);

    const std::vector<OpId>& admitted(OpId op, std::size_t pos) const { return lists_[op][pos]; }
    bool allowed(OpId op, std::size_t pos, OpId child) const { return mask_[op][pos][child]; }
    // Operators that may occur at all (inhabited argument sorts, needed result sort).
    bool usable(OpId op) const { return usable_[op]; }
    bool sort_inhabited(SortId s) const { return inhabited_[s]; }
    bool sort_needed(SortId s) const { return needed_[s]; }

private:
    std::vector<std::vector<std::vector<OpId>>> lists_;
    std::vector<std::vector<std::vector<bool>>> mask_;
    std::vector<bool> usable_, inhabited_, needed_;
};

// Whether the engine may restrict argument tuples of `op` for commutativity
// (x1 >= x2, equal-weight pairs in store order) and for associativity.
bool commutative_pruning_applies(const Operator& op);
bool associative_pruning_applies(const Operator& op);

// Total order on stored terms used by the pruning rules: heavier first; equal
// weight, earlier id first. Returns true when a ⪰ b.
inline bool term_geq(const TermStore& st, TermId a, TermId b) {
    Weight wa = st.weight(a), wb = st.weight(b);
    return wa != wb ? wa > wb : a <= b;
}

}  // namespace egen
