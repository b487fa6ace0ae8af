#include "egen/wdl_stream.hpp"

#include <algorithm>
#include <sstream>

#include "egen/pruning.hpp"

namespace egen {

bool WdlLess::operator()(const Wdl& a, const Wdl& b) const {
    if (a.eval != b.eval) return a.eval < b.eval;
    if (a.ts != b.ts) return a.ts < b.ts;
    return a.args < b.args;
}

std::string format_wdl(const Signature& sig, const Wdl& w) {
    std::ostringstream os;
    os << "w " << w.eval.str() << " " << sig.op(w.op).name;
    for (Weight a : w.args) os << " " << a.str();
    return os.str();
}

WdlStream::WdlStream(const Signature& sig, std::vector<OpId> ops, StreamConfig cfg, std::function<bool(Weight)> inhabited)
    : sig_(sig), cfg_(cfg), inhabited_(std::move(inhabited)) {
    for (OpId id : ops) {
        const Operator& op = sig_.op(id);
        if (op.is_projection()) continue;
        ops_.push_back(id);
        if (op.arity() == 0) insert(Wdl{id, {}, op.wf.apply({}), op.ts});
    }
}

void WdlStream::insert(Wdl w) {
    if (cfg_.ceiling && w.eval > *cfg_.ceiling) {
        ceiling_hit_ = true;
        return;
    }
    if (heap_.insert(std::move(w)).second) ++last_expansion_;
    if (cfg_.heap_cap && heap_.size() > cfg_.heap_cap) {
        heap_.erase(std::prev(heap_.end()));
        overflowed_ = true;
    }
    peak_ = std::max(peak_, heap_.size());
}

void WdlStream::expand(Weight w) {
    // Tuples over history ∪ {w} containing w; the first occurrence of w sits at
    // position p, earlier positions use only older weights.
    std::vector<Weight> old = history_;
    std::vector<Weight> all = history_;
    all.push_back(w);
    history_.push_back(w);

    for (OpId id : ops_) {
        const Operator& op = sig_.op(id);
        const std::size_t n = op.arity();
        if (n == 0) continue;
        const bool comm = cfg_.commutative_pruning && commutative_pruning_applies(op);
        std::vector<Weight> x(n);
        for (std::size_t p = 0; p < n; ++p) {
            // Odometer over positions != p.
            std::vector<std::size_t> idx(n, 0);
            auto domain = [&](std::size_t j) -> const std::vector<Weight>& { return j < p ? old : all; };
            bool empty = false;
            for (std::size_t j = 0; j < n; ++j)
                if (j != p && domain(j).empty()) empty = true;
            if (empty) continue;
            while (true) {
                for (std::size_t j = 0; j < n; ++j) x[j] = j == p ? w : domain(j)[idx[j]];
                if (!comm || x[0] >= x[1]) insert(Wdl{id, x, op.wf.apply(x), op.ts});
                std::size_t j = 0;
                for (; j < n; ++j) {
                    if (j == p) continue;
                    if (++idx[j] < domain(j).size()) break;
                    idx[j] = 0;
                }
                if (j == n) break;
            }
        }
    }
}

std::optional<Wdl> WdlStream::next() {
    while (true) {
        if (pending_ && (heap_.empty() || heap_.begin()->eval > *pending_)) {
            Weight w = *pending_;
            pending_.reset();
            last_expansion_ = 0;
            if (!inhabited_ || inhabited_(w)) expand(w);
            continue;
        }
        if (heap_.empty()) return std::nullopt;
        Wdl w = *heap_.begin();
        heap_.erase(heap_.begin());
        if (!last_ || w.eval > *last_) {
            pending_ = w.eval;
            last_ = w.eval;
        }
        return w;
    }
}

}  // namespace egen
