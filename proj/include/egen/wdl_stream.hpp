#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "egen/signature.hpp"
#include "egen/weight.hpp"

namespace egen {

// Weight-decorated operator: op applied to argument weights, with the weight
// the operator's weight function yields for them.
struct Wdl {
    OpId op = 0;
    std::vector<Weight> args;
    Weight eval;
    std::uint32_t ts = 0;

    bool operator==(const Wdl&) const = default;
};

// Priority order: eval weight, then ts, then argument weights ascending.
struct WdlLess {
    bool operator()(const Wdl& a, const Wdl& b) const;
};

std::string format_wdl(const Signature& sig, const Wdl& w);

struct StreamConfig {
    std::optional<Weight> ceiling;
    bool commutative_pruning = true;  // for commutative ops with symmetric weight fn only x1 >= x2
    std::size_t heap_cap = 0;         // 0 means unlimited
};

// Emits WDLs in nondecreasing weight order, each exactly once, covering every
// WDL whose argument weights are all inhabited.
class WdlStream {
public:
    // `ops` are the operators to stream; projection operators are ignored.
    // `inhabited` decides which weights join the history; when empty, every
    // drawn weight does.
    WdlStream(const Signature& sig, std::vector<OpId> ops, StreamConfig cfg = {},
              std::function<bool(Weight)> inhabited = {});

    std::optional<Wdl> next();

    bool ceiling_hit() const { return ceiling_hit_; }
    bool overflowed() const { return overflowed_; }
    std::size_t pending() const { return heap_.size(); }
    std::size_t peak() const { return peak_; }
    const std::vector<Weight>& history() const { return history_; }
    // Number of WDLs inserted by the most recent history expansion.
    std::size_t last_expansion() const { return last_expansion_; }

private:
    void insert(Wdl w);
    void expand(Weight w);

    const Signature& sig_;
    std::vector<OpId> ops_;
    StreamConfig cfg_;
    std::function<bool(Weight)> inhabited_;
    std::set<Wdl, WdlLess> heap_;
    std::vector<Weight> history_;
    std::optional<Weight> pending_;
    std::optional<Weight> last_;
    bool ceiling_hit_ = false;
    bool overflowed_ = false;
    std::size_t peak_ = 0;
    std::size_t last_expansion_ = 0;
};

}  // namespace egen
