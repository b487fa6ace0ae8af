#include "egen/pruning.hpp"

#include <algorithm>

namespace egen {

bool Redex::simple() const {
    return std::count_if(args.begin(), args.end(), [](const auto& a) { return a.has_value(); }) == 1;
}

void RedexTable::add(const Redex& r) {
    all_.push_back(r);
    if (r.simple()) return;
    if (r.main >= by_main_.size()) by_main_.resize(r.main + 1);
    by_main_[r.main].push_back(r);
    ++count_;
}

bool RedexTable::is_redex(OpId main, const OpId* args, std::size_t n) const {
    if (main >= by_main_.size()) return false;
    for (const Redex& r : by_main_[main]) {
        if (r.args.size() != n) continue;
        bool match = true;
        for (std::size_t j = 0; j < n && match; ++j)
            if (r.args[j] && *r.args[j] != args[j]) match = false;
        if (match) return true;
    }
    return false;
}

bool commutative_pruning_applies(const Operator& op) {
    return op.arity() == 2 && op.flags.commutative && op.wf.symmetric() && op.args[0] == op.args[1];
}

bool associative_pruning_applies(const Operator& op) {
    return op.arity() == 2 && op.flags.associative && op.wf.associative_compatible() && op.args[0] == op.args[1] &&
           op.result == op.args[0];
}

ArgAdmissibility::ArgAdmissibility(const Signature& sig, const std::vector<OpId>& ops,
                                   const std::vector<Redex>& redices, const AdmissibilityOptions& opt) {
    const std::size_t nops = sig.num_ops();
    const std::size_t nsorts = sig.num_sorts();
    inhabited_.assign(nsorts, false);
    needed_.assign(nsorts, opt.goal_sorts.empty());
    usable_.assign(nops, false);
    std::vector<bool> in_set(nops, false);
    for (OpId id : ops)
        if (!sig.op(id).is_projection()) in_set[id] = true;

    for (bool changed = true; changed;) {
        changed = false;
        for (OpId id = 0; id < nops; ++id) {
            if (!in_set[id]) continue;
            const Operator& op = sig.op(id);
            if (inhabited_[op.result]) continue;
            if (std::all_of(op.args.begin(), op.args.end(), [&](SortId s) { return inhabited_[s]; })) {
                inhabited_[op.result] = true;
                changed = true;
            }
        }
    }
    for (SortId s : opt.goal_sorts) needed_[s] = true;
    auto args_inhabited = [&](const Operator& op) {
        return std::all_of(op.args.begin(), op.args.end(), [&](SortId s) { return inhabited_[s]; });
    };
    for (bool changed = true; changed;) {
        changed = false;
        for (OpId id = 0; id < nops; ++id) {
            if (!in_set[id]) continue;
            const Operator& op = sig.op(id);
            if (!needed_[op.result] || !args_inhabited(op)) continue;
            for (SortId s : op.args)
                if (!needed_[s]) {
                    needed_[s] = true;
                    changed = true;
                }
        }
    }
    for (OpId id = 0; id < nops; ++id) {
        const Operator& op = sig.op(id);
        usable_[id] = in_set[id] && needed_[op.result] && args_inhabited(op);
    }

    lists_.assign(nops, {});
    mask_.assign(nops, {});
    for (OpId f = 0; f < nops; ++f) {
        const Operator& op = sig.op(f);
        lists_[f].resize(op.arity());
        mask_[f].assign(op.arity(), std::vector<bool>(nops, false));
        if (!usable_[f]) continue;
        for (std::size_t pos = 0; pos < op.arity(); ++pos) {
            for (OpId g = 0; g < nops; ++g) {
                if (!usable_[g] || sig.op(g).result != op.args[pos]) continue;
                if (opt.assoc_exclusion && pos == 1 && g == f && associative_pruning_applies(op)) continue;
                bool banned = false;
                for (const Redex& r : redices)
                    if (r.main == f && r.simple() && r.args.size() == op.arity() && r.args[pos] && *r.args[pos] == g)
                        banned = true;
                if (banned) continue;
                mask_[f][pos][g] = true;
                lists_[f][pos].push_back(g);
            }
            std::sort(lists_[f][pos].begin(), lists_[f][pos].end(),
                      [&](OpId a, OpId b) { return sig.op(a).ts < sig.op(b).ts; });
        }
    }
}

}  // namespace egen
