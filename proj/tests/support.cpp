#include "support.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace egen::testing {

Problem load(const std::string& text) { return compile(parse_spec(text)); }

std::string random_instance(std::mt19937_64& rng) {
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    const int range = pick(3, 12);
    const int k = pick(1, 3);
    static const std::vector<std::string> binary = {"+", "-", "*", "//", "%", "min", "max"};
    std::ostringstream os;
    os << "sort int = 0.." << range - 1 << "\n";
    const int nbin = pick(1, 3);
    const int nconst = pick(0, 4 - nbin);
    std::vector<std::string> chosen;
    while (int(chosen.size()) < nbin) {
        std::string b = binary[pick(0, int(binary.size()) - 1)];
        if (std::find(chosen.begin(), chosen.end(), b) == chosen.end()) chosen.push_back(b);
    }
    std::vector<int> consts;
    while (int(consts.size()) < nconst) {
        int c = pick(0, std::min(range - 1, 3));
        if (std::find(consts.begin(), consts.end(), c) == consts.end()) consts.push_back(c);
    }
    for (int c : consts) os << "op " << c << " : -> int native\n";
    for (const auto& b : chosen) os << "op " << b << " : int, int -> int native\n";

    std::vector<std::vector<int>> vars(pick(1, 2), std::vector<int>(k));
    for (std::size_t v = 0; v < vars.size(); ++v) {
        os << "var x" << v << " : int = (";
        for (int i = 0; i < k; ++i) {
            vars[v][i] = pick(0, range - 1);
            os << (i ? ", " : "") << vars[v][i];
        }
        os << ")\n";
    }
    std::vector<int> goal(k);
    if (pick(0, 1)) {
        for (auto& g : goal) g = pick(0, range - 1);
    } else {
        // Value of a random small term over the variables; out of range falls back to random values.
        for (int i = 0; i < k; ++i) goal[i] = vars[0][i];
        for (int step = pick(1, 3); step > 0; --step) {
            const std::string& b = chosen[pick(0, int(chosen.size()) - 1)];
            const auto& other = vars[pick(0, int(vars.size()) - 1)];
            for (int i = 0; i < k; ++i) {
                long a = goal[i], c = other[i], r = -1;
                if (b == "+") r = a + c;
                else if (b == "-") r = a - c;
                else if (b == "*") r = a * c;
                else if (b == "//" && c != 0) r = a / c;
                else if (b == "%" && c != 0) r = a % c;
                else if (b == "min") r = std::min(a, c);
                else if (b == "max") r = std::max(a, c);
                goal[i] = r >= 0 && r < range ? int(r) : pick(0, range - 1);
            }
        }
    }
    os << "goal g : int = (";
    for (int i = 0; i < k; ++i) os << (i ? ", " : "") << goal[i];
    os << ")\n";
    return os.str();
}

std::vector<Code> evaluate(const Signature& sig, const TermStore& store, TermId t) {
    std::vector<Code> out(sig.k());
    for (std::size_t i = 0; i < sig.k(); ++i) out[i] = eval_at(sig, store, t, i);
    return out;
}

bool matches_goal(const Engine& e, const GoalResult& g, const GoalSpec& spec) {
    if (g.term == kNoTerm) return false;
    return evaluate(e.sig(), e.store(), g.term) == spec.vec;
}

std::string arith_ops(const std::vector<std::string>& names, const std::string& sort) {
    std::ostringstream os;
    for (const auto& n : names) {
        if (n.empty()) continue;
        if (std::isdigit(static_cast<unsigned char>(n[0])))
            os << "op " << n << " : -> " << sort << " native\n";
        else if (n == "~")
            os << "op " << n << " : " << sort << " -> " << sort << " native\n";
        else
            os << "op " << n << " : " << sort << ", " << sort << " -> " << sort << " native\n";
    }
    return os.str();
}

}  // namespace egen::testing
