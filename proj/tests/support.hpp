#pragma once

#include <random>
#include <string>
#include <vector>

#include "egen/engine.hpp"
#include "egen/spec.hpp"

namespace egen::testing {

Problem load(const std::string& text);

// Small random instance: int range <= 12, K <= 3, at most four operators
// (binary natives and constants) plus one or two variables and one goal.
// Roughly half of the goals are values of a random term, so they are solvable.
std::string random_instance(std::mt19937_64& rng);

// Vector of the term at every substitution index, recomputed bottom-up.
std::vector<Code> evaluate(const Signature& sig, const TermStore& store, TermId t);

bool matches_goal(const Engine& e, const GoalResult& g, const GoalSpec& spec);

std::string arith_ops(const std::vector<std::string>& names, const std::string& sort = "int");

}  // namespace egen::testing
