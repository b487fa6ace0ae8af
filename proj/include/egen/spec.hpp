#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "egen/native_ops.hpp"
#include "egen/problem.hpp"
#include "egen/term_store.hpp"

namespace egen {

// Textual problem description. Parsing keeps the declarations in file order,
// printing reproduces a canonical form that parses back to an equal spec.

struct SortDecl {
    std::string name;
    bool range = true;
    std::int64_t lo = 0, hi = 0;
    std::vector<std::string> values;
    bool operator==(const SortDecl&) const = default;
};

struct OpDecl {
    std::string name;
    std::vector<std::string> args;
    std::string result;
    std::optional<OpFlags> flags;  // explicitly claimed
    bool trusted = false;          // claimed flags are recorded without refutation
    std::optional<std::string> wf;
    bool native = true;
    std::string native_name;       // empty: same as name
    std::vector<std::string> table;
    bool operator==(const OpDecl&) const = default;
};

enum class VarMode { Explicit, All, Random };

struct VarDecl {
    std::string name;
    std::string sort;
    VarMode mode = VarMode::Explicit;
    std::vector<std::string> values;
    std::uint64_t count = 0, seed = 0;
    std::optional<std::string> wf;
    bool operator==(const VarDecl&) const = default;
};

struct GoalDecl {
    std::string name;
    std::string sort;
    std::vector<std::string> values;
    bool operator==(const GoalDecl&) const = default;
};

struct RedexDecl {
    std::vector<std::string> ops;  // main op first, "." for wildcards
    bool operator==(const RedexDecl&) const = default;
};

struct SettingDecl {
    std::string key;  // "bitwidth" or "varweight"
    std::string value;
    bool operator==(const SettingDecl&) const = default;
};

using Decl = std::variant<SortDecl, OpDecl, VarDecl, GoalDecl, RedexDecl, SettingDecl>;

struct ProblemSpec {
    std::vector<Decl> decls;
    bool operator==(const ProblemSpec&) const = default;
};

ProblemSpec parse_spec(const std::string& text);
ProblemSpec parse_spec_file(const std::string& path);
// Redex files hold lines "MainOp ArgOp1 .. ArgOpN" with "." as wildcard.
std::vector<RedexDecl> parse_redex_lines(const std::string& text);
std::string print_spec(const ProblemSpec& spec);

// Builds the signature, checks claimed flags and weight functions, expands
// variable modes and validates goals. Throws ConfigError.
Problem compile(const ProblemSpec& spec);

// Sequence mode: "p0 .. ps-1 ; e0 .. em-1". Explained elements sit at absolute
// 0-based positions s..s+m-1; each needs `history` predecessors.
struct SeqSetup {
    std::vector<std::int64_t> sequence;  // prefix followed by explained elements
    std::size_t first_explained = 0;
    std::size_t history = 0;
    std::int64_t vp_offset = 0;
    std::vector<VarDecl> vars;  // v_p, v_1 .. v_h
    GoalDecl goal;
};

SeqSetup seq_setup(const std::string& text, std::size_t history, const std::string& sort,
                   std::int64_t vp_offset = 0);
// Appends the sequence variables and goal to a spec holding the operators.
void apply_seq(ProblemSpec& spec, const SeqSetup& seq);

// Value of a solution term at the next position after the sequence, given
// the extra element values needed by its variables; nullopt if undefined.
std::optional<std::int64_t> seq_extrapolate(const Problem& p, const TermStore& store, TermId t, const SeqSetup& seq);

// Evaluates `t` with each variable replaced by the given value.
Code eval_with_vars(const Signature& sig, const TermStore& store, TermId t, const std::vector<std::pair<OpId, Code>>& env);

std::string describe_native_ops();

}  // namespace egen
