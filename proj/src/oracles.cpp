#include "egen/oracles.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <map>
#include <queue>
#include <unordered_map>

#include "egen/errors.hpp"
#include "egen/wdl_stream.hpp"

namespace egen {

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) h = (h ^ x) * 1099511628211ull;
        return h;
    }
};

bool usable_op(const Operator& op) { return !op.is_projection(); }

}  // namespace

OracleResult naive_search(const Problem& p, std::size_t goal, Weight ceiling, std::uint64_t term_limit) {
    const Signature& sig = p.sig;
    const GoalSpec& g = p.goals.at(goal);
    OracleResult res;
    TermStore store(sig.k());
    std::vector<OpId> ops;
    for (OpId id : p.ops)
        if (usable_op(sig.op(id))) ops.push_back(id);
    StreamConfig cfg;
    cfg.ceiling = ceiling;
    cfg.commutative_pruning = false;
    WdlStream stream(sig, ops, cfg);
    std::map<std::pair<std::uint64_t, SortId>, std::vector<TermId>> by_weight;

    auto check = [&](TermId t) {
        ++res.terms_built;
        SortId s = sig.op(store.op(t)).result;
        by_weight[{store.weight(t).value(), s}].push_back(t);
        if (s == g.sort && std::equal(g.vec.begin(), g.vec.end(), store.vec(t))) {
            res.found = true;
            res.weight = store.weight(t);
            res.text = print_term(sig, store, t);
            return true;
        }
        return false;
    };

    while (auto w = stream.next()) {
        const Operator& op = sig.op(w->op);
        const std::size_t n = op.arity();
        if (n == 0) {
            if (check(store.build(sig, w->op, {}))) return res;
            continue;
        }
        std::vector<const std::vector<TermId>*> lists(n);
        bool empty = false;
        for (std::size_t j = 0; j < n; ++j) {
            auto it = by_weight.find({w->args[j].value(), op.args[j]});
            if (it == by_weight.end()) {
                empty = true;
                break;
            }
            lists[j] = &it->second;
        }
        if (empty) continue;
        // Lists of the current weight cannot grow here: every argument weight
        // is strictly below w->eval.
        std::vector<std::size_t> idx(n, 0);
        std::vector<TermId> a(n);
        while (true) {
            for (std::size_t j = 0; j < n; ++j) a[j] = (*lists[j])[idx[j]];
            if (check(store.build(sig, w->op, a))) return res;
            if (res.terms_built >= term_limit) {
                res.limit_hit = true;
                return res;
            }
            std::size_t j = n;
            while (j-- > 0) {
                if (++idx[j] < lists[j]->size()) break;
                idx[j] = 0;
            }
            if (j == std::size_t(-1)) break;
        }
    }
    res.ceiling_reached = stream.ceiling_hit();
    return res;
}

std::uint64_t TreeGrammar::alternatives() const {
    std::uint64_t n = 0;
    for (const auto& r : rules) n += r.size();
    return n;
}

ClassGrammar build_class_grammar(const Problem& p, std::optional<std::size_t> index) {
    const Signature& sig = p.sig;
    ClassGrammar cg;
    std::uint32_t total = 0;
    for (SortId s = 0; s < sig.num_sorts(); ++s) {
        cg.sort_offset.push_back(total);
        total += sig.sort(s).size();
    }
    cg.g.rules.resize(total);
    for (OpId id : p.ops) {
        const Operator& op = sig.op(id);
        if (!usable_op(op)) continue;
        const std::uint32_t off = cg.sort_offset[op.result];
        const Sort& rs = sig.sort(op.result);
        if (op.is_variable()) {
            if (!index) continue;
            Code c = op.values.at(*index);
            if (rs.defined(c)) cg.g.rules[off + c].push_back({id, {}});
            continue;
        }
        const std::size_t n = op.arity();
        std::uint64_t combos = 1;
        for (SortId s : op.args) combos *= sig.sort(s).size();
        std::vector<Code> a(n);
        for (std::uint64_t m = 0; m < combos; ++m) {
            std::uint64_t r = m;
            for (std::size_t j = n; j-- > 0;) {
                a[j] = static_cast<Code>(r % sig.sort(op.args[j]).size());
                r /= sig.sort(op.args[j]).size();
            }
            Code v = sig.apply(id, a);
            if (!rs.defined(v)) continue;
            TreeGrammar::Alt alt{id, {}};
            for (std::size_t j = 0; j < n; ++j) alt.args.push_back(cg.sort_offset[op.args[j]] + a[j]);
            cg.g.rules[off + v].push_back(std::move(alt));
        }
    }
    return cg;
}

std::optional<ProductGrammar> lift_and_intersect(const Problem& p, std::uint64_t budget) {
    const Signature& sig = p.sig;
    const std::size_t k = sig.k();
    std::vector<ClassGrammar> comps;
    for (std::size_t i = 0; i < k; ++i) comps.push_back(build_class_grammar(p, i));

    // Product nonterminal numbering: per sort, mixed radix over the K component values.
    ProductGrammar pg;
    std::vector<std::uint64_t> sort_base;
    std::uint64_t total = 0;
    for (SortId s = 0; s < sig.num_sorts(); ++s) {
        sort_base.push_back(total);
        std::uint64_t n = 1;
        for (std::size_t i = 0; i < k; ++i) {
            n *= sig.sort(s).size();
            if (n > budget) return std::nullopt;
        }
        total += n;
        if (total > budget) return std::nullopt;
    }
    pg.g.rules.resize(total);
    pg.sort_of.resize(total);
    pg.tuple_of.resize(total);
    for (SortId s = 0; s < sig.num_sorts(); ++s) {
        std::uint64_t n = total;
        if (s + 1 < sig.num_sorts()) n = sort_base[s + 1];
        for (std::uint64_t id = sort_base[s]; id < n; ++id) {
            std::vector<Code> t(k);
            std::uint64_t m = id - sort_base[s];
            for (std::size_t i = k; i-- > 0;) {
                t[i] = static_cast<Code>(m % sig.sort(s).size());
                m /= sig.sort(s).size();
            }
            pg.sort_of[id] = s;
            pg.tuple_of[id] = std::move(t);
        }
    }
    auto product_id = [&](SortId s, const std::vector<Code>& t) {
        std::uint64_t m = 0;
        for (Code c : t) m = m * sig.sort(s).size() + c;
        return static_cast<std::uint32_t>(sort_base[s] + m);
    };
    // Component value of a class-grammar nonterminal.
    auto value_of = [&](const ClassGrammar& cg, SortId s, std::uint32_t nt) { return nt - cg.sort_offset[s]; };

    std::uint64_t alts = 0;
    for (OpId id : p.ops) {
        const Operator& op = sig.op(id);
        if (!usable_op(op)) continue;
        // Component alternatives of this operator, per index: (result value, arg values).
        std::vector<std::vector<std::pair<Code, std::vector<Code>>>> per(k);
        std::uint64_t combos = 1;
        for (std::size_t i = 0; i < k; ++i) {
            const ClassGrammar& cg = comps[i];
            const std::uint32_t off = cg.sort_offset[op.result];
            for (Code v = 0; v < sig.sort(op.result).size(); ++v)
                for (const auto& alt : cg.g.rules[off + v]) {
                    if (alt.op != id) continue;
                    std::vector<Code> av;
                    for (std::size_t j = 0; j < alt.args.size(); ++j)
                        av.push_back(value_of(cg, op.args[j], alt.args[j]));
                    per[i].emplace_back(v, std::move(av));
                }
            combos *= per[i].size();
            if (combos > budget) return std::nullopt;
        }
        alts += combos;
        if (alts > budget) return std::nullopt;
        std::vector<std::size_t> idx(k, 0);
        if (combos == 0) continue;
        while (true) {
            std::vector<Code> res(k);
            std::vector<std::vector<Code>> args(op.arity(), std::vector<Code>(k));
            for (std::size_t i = 0; i < k; ++i) {
                const auto& [v, av] = per[i][idx[i]];
                res[i] = v;
                for (std::size_t j = 0; j < av.size(); ++j) args[j][i] = av[j];
            }
            TreeGrammar::Alt alt{id, {}};
            for (std::size_t j = 0; j < op.arity(); ++j) alt.args.push_back(product_id(op.args[j], args[j]));
            pg.g.rules[product_id(op.result, res)].push_back(std::move(alt));
            std::size_t i = k;
            while (i-- > 0) {
                if (++idx[i] < per[i].size()) break;
                idx[i] = 0;
            }
            if (i == std::size_t(-1)) break;
        }
    }
    return pg;
}

std::vector<Weight> knuth_weights(const Problem& p, const TreeGrammar& g) {
    const Signature& sig = p.sig;
    const std::size_t nt = g.rules.size();
    std::vector<Weight> best(nt, Weight::inf());
    std::vector<bool> done(nt, false);
    struct Ref {
        std::uint32_t lhs, alt;
    };
    std::vector<std::vector<Ref>> uses(nt);
    std::vector<std::vector<std::uint32_t>> remaining(nt);
    using Item = std::pair<Weight, std::uint32_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;

    auto alt_weight = [&](const TreeGrammar::Alt& a) {
        std::vector<Weight> ws;
        for (auto c : a.args) ws.push_back(best[c]);
        return sig.op(a.op).wf.apply(ws);
    };
    for (std::uint32_t lhs = 0; lhs < nt; ++lhs) {
        remaining[lhs].resize(g.rules[lhs].size());
        for (std::uint32_t ai = 0; ai < g.rules[lhs].size(); ++ai) {
            const auto& a = g.rules[lhs][ai];
            remaining[lhs][ai] = static_cast<std::uint32_t>(a.args.size());
            for (auto c : a.args) uses[c].push_back({lhs, ai});
            if (a.args.empty()) heap.push({alt_weight(a), lhs});
        }
    }
    while (!heap.empty()) {
        auto [w, x] = heap.top();
        heap.pop();
        if (done[x]) continue;
        done[x] = true;
        best[x] = w;
        for (const Ref& r : uses[x]) {
            // One decrement per occurrence of x in the alternative.
            if (--remaining[r.lhs][r.alt] == 0 && !done[r.lhs])
                heap.push({alt_weight(g.rules[r.lhs][r.alt]), r.lhs});
        }
    }
    return best;
}

OracleResult knuth_minimal(const Problem& p, std::size_t goal, Weight ceiling) {
    const Signature& sig = p.sig;
    const std::size_t k = sig.k();
    const GoalSpec& gs = p.goals.at(goal);
    OracleResult res;

    // Per-index rule lookup (op, argument values) -> result value, read off the class grammars.
    std::vector<ClassGrammar> comps;
    std::vector<std::unordered_map<std::vector<std::uint32_t>, Code, VecHash>> rule_of(k);
    for (std::size_t i = 0; i < k; ++i) {
        comps.push_back(build_class_grammar(p, i));
        const ClassGrammar& cg = comps.back();
        for (SortId s = 0; s < sig.num_sorts(); ++s)
            for (Code v = 0; v < sig.sort(s).size(); ++v)
                for (const auto& alt : cg.g.rules[cg.sort_offset[s] + v]) {
                    std::vector<std::uint32_t> key{alt.op};
                    const Operator& op = sig.op(alt.op);
                    for (std::size_t j = 0; j < alt.args.size(); ++j)
                        key.push_back(alt.args[j] - cg.sort_offset[op.args[j]]);
                    rule_of[i][key] = v;
                }
    }

    struct Node {
        SortId sort;
        std::vector<Code> tuple;
        Weight weight;
        OpId op;
        std::vector<std::uint32_t> kids;
    };
    std::vector<Node> nodes;  // finalized product nonterminals
    std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, VecHash> finalized;
    std::vector<std::vector<std::uint32_t>> by_sort(sig.num_sorts());

    struct Cand {
        Weight w;
        std::uint64_t seq;
        SortId sort;
        std::vector<Code> tuple;
        OpId op;
        std::vector<std::uint32_t> kids;
    };
    auto cmp = [](const Cand& a, const Cand& b) { return a.w != b.w ? a.w > b.w : a.seq > b.seq; };
    std::priority_queue<Cand, std::vector<Cand>, decltype(cmp)> heap(cmp);
    std::uint64_t seq = 0;

    auto key_of = [](SortId s, const std::vector<Code>& t) {
        std::vector<std::uint32_t> key{s};
        key.insert(key.end(), t.begin(), t.end());
        return key;
    };
    // Product alternative op(kids): defined iff every component grammar has the rule.
    auto try_alt = [&](OpId id, const std::vector<std::uint32_t>& kids) {
        const Operator& op = sig.op(id);
        std::vector<Weight> ws;
        for (auto c : kids) ws.push_back(nodes[c].weight);
        Weight w = op.wf.apply(ws);
        if (w > ceiling) {
            res.ceiling_reached = true;
            return;
        }
        std::vector<Code> t(k);
        std::vector<std::uint32_t> key(1 + kids.size());
        key[0] = id;
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < kids.size(); ++j) key[1 + j] = nodes[kids[j]].tuple[i];
            auto it = rule_of[i].find(key);
            if (it == rule_of[i].end()) return;
            t[i] = it->second;
        }
        if (finalized.count(key_of(op.result, t))) return;
        ++res.terms_built;
        heap.push(Cand{w, seq++, op.result, std::move(t), id, kids});
    };

    for (OpId id : p.ops)
        if (usable_op(sig.op(id)) && sig.op(id).arity() == 0) try_alt(id, {});

    while (!heap.empty()) {
        Cand c = heap.top();
        heap.pop();
        auto key = key_of(c.sort, c.tuple);
        if (finalized.count(key)) continue;
        const std::uint32_t x = static_cast<std::uint32_t>(nodes.size());
        finalized[key] = x;
        nodes.push_back(Node{c.sort, c.tuple, c.w, c.op, c.kids});
        by_sort[c.sort].push_back(x);

        if (c.sort == gs.sort && c.tuple == gs.vec) {
            res.found = true;
            res.weight = c.w;
            TermStore st(k);
            std::function<TermId(std::uint32_t)> build = [&](std::uint32_t n) {
                std::vector<TermId> a;
                for (auto kid : nodes[n].kids) a.push_back(build(kid));
                return st.build(sig, nodes[n].op, a);
            };
            res.text = print_term(sig, st, build(x));
            return res;
        }

        // New alternatives using x at least once; x first occurs at position q.
        for (OpId id : p.ops) {
            const Operator& op = sig.op(id);
            if (!usable_op(op) || op.arity() == 0) continue;
            const std::size_t n = op.arity();
            for (std::size_t q = 0; q < n; ++q) {
                if (op.args[q] != c.sort) continue;
                std::vector<const std::vector<std::uint32_t>*> dom(n);
                bool empty = false;
                for (std::size_t j = 0; j < n; ++j) {
                    dom[j] = &by_sort[op.args[j]];
                    if (j != q && dom[j]->empty()) empty = true;
                }
                if (empty) continue;
                std::vector<std::size_t> idx(n, 0);
                std::vector<std::uint32_t> kids(n);
                while (true) {
                    bool ok = true;
                    for (std::size_t j = 0; j < n; ++j) {
                        kids[j] = j == q ? x : (*dom[j])[idx[j]];
                        if (j < q && kids[j] == x) ok = false;
                    }
                    if (ok) try_alt(id, kids);
                    std::size_t j = n;
                    while (j-- > 0) {
                        if (j == q) continue;
                        if (++idx[j] < dom[j]->size()) break;
                        idx[j] = 0;
                    }
                    if (j == std::size_t(-1)) break;
                }
            }
        }
    }
    return res;
}

GrammarCounts grammar_size_counts(std::uint64_t range, unsigned k) {
    // Σ over value tuples of a product of per-component factors factorizes
    // into the k-th power of the one-component sum.
    unsigned __int128 plus = 0, minus = 0;
    for (std::uint64_t n = 0; n < range; ++n) {
        plus += n + 1;
        minus += range - n;
    }
    unsigned __int128 nts = 1, pp = 1, mm = 1;
    const unsigned __int128 cap = ~std::uint64_t(0);
    for (unsigned i = 0; i < k; ++i) {
        nts *= range;
        pp *= plus;
        mm *= minus;
        if (nts > cap || pp + mm > cap) throw ConfigError("grammar counts exceed 64 bits");
    }
    return GrammarCounts{static_cast<std::uint64_t>(nts), static_cast<std::uint64_t>(pp + mm)};
}

}  // namespace egen
