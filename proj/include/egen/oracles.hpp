#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "egen/problem.hpp"
#include "egen/term_store.hpp"

namespace egen {

struct OracleResult {
    bool found = false;
    Weight weight = Weight::inf();
    std::string text;             // printed solution term
    std::uint64_t terms_built = 0;
    bool ceiling_reached = false;
    bool limit_hit = false;       // stopped by the term limit, result inconclusive
};

// Generates every term in nondecreasing weight order, without caching by
// value vector and without pruning, and stops at the first one whose vector
// equals the goal.
OracleResult naive_search(const Problem& p, std::size_t goal, Weight ceiling,
                          std::uint64_t term_limit = 50'000'000);

// Regular tree grammar: nonterminal n ::= op(n1..nk) | ...
struct TreeGrammar {
    struct Alt {
        OpId op;
        std::vector<std::uint32_t> args;
    };
    std::vector<std::vector<Alt>> rules;  // indexed by nonterminal
    std::uint64_t alternatives() const;
};

// Class grammar of one substitution index: one nonterminal per defined value
// of every sort (numbered by sort, then code), variables contribute their value
// at index i. With i = nullopt variables are left out.
struct ClassGrammar {
    TreeGrammar g;
    std::vector<std::uint32_t> sort_offset;  // first nonterminal of each sort
};
ClassGrammar build_class_grammar(const Problem& p, std::optional<std::size_t> index);

// Product of the per-index class grammars: nonterminals are K-tuples of
// values of one sort. Materialized only when the tuple count fits the budget.
struct ProductGrammar {
    TreeGrammar g;
    std::vector<SortId> sort_of;
    std::vector<std::vector<Code>> tuple_of;
};
std::optional<ProductGrammar> lift_and_intersect(const Problem& p, std::uint64_t nonterminal_budget);

// Knuth's lightest-derivation algorithm over the product grammar restricted
// to derivations within the ceiling, generated lazily from the per-index
// class grammars.
OracleResult knuth_minimal(const Problem& p, std::size_t goal, Weight ceiling);
// Same over an explicit grammar; returns the minimal derivation weight of
// every nonterminal.
std::vector<Weight> knuth_weights(const Problem& p, const TreeGrammar& g);

struct GrammarCounts {
    std::uint64_t nonterminals = 0;
    std::uint64_t alternatives = 0;
};

// Closed-form sizes of the product grammar for + and - over 0..range-1 with k
// indices, no variables: Σ over value tuples of Π(n_i+1) + Π(range-n_i).
GrammarCounts grammar_size_counts(std::uint64_t range, unsigned k);

}  // namespace egen
