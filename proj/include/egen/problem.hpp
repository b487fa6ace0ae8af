#pragma once

#include <string>
#include <vector>

#include "egen/pruning.hpp"
#include "egen/signature.hpp"

namespace egen {

struct GoalSpec {
    std::string name;
    SortId sort = 0;
    std::vector<Code> vec;
};

// A compiled search problem: signature with variables (K fixed), the
// operators available to the search, redex patterns and goals.
struct Problem {
    Signature sig;
    std::vector<OpId> ops;  // non-projection operators including variables, ts order
    std::vector<Redex> redices;
    std::vector<GoalSpec> goals;
    std::vector<std::string> warnings;
};

}  // namespace egen
