#include "egen/projection.hpp"

#include <algorithm>
#include <cstring>
#include <functional>

#include "egen/errors.hpp"

namespace egen {

IndexSet match_set(const Code* a, const Code* goal, std::size_t k) {
    IndexSet s = 0;
    for (std::size_t i = 0; i < k; ++i)
        if (a[i] == goal[i]) s |= IndexSet(1) << i;
    return s;
}

DataLattice::DataLattice(std::size_t k)
    : k_(k), weight_(std::size_t(1) << k, Weight::inf()), witness_(std::size_t(1) << k, kNoTerm) {
    if (k > kMaxProjectionK) throw ConfigError("projection lattices support at most " + std::to_string(kMaxProjectionK) + " indices");
}

std::vector<IndexSet> DataLattice::update(IndexSet s, TermId t, Weight w) {
    std::vector<IndexSet> changed;
    update(s, t, w, changed);
    return changed;
}

void DataLattice::update(IndexSet s, TermId t, Weight w, std::vector<IndexSet>& changed) {
    // Spanning tree of the sublattice below S: parent(T) = T ∪ {min(S \ T)},
    // so the children of T drop an element smaller than min(S \ T).
    struct Item {
        IndexSet set;
        std::uint32_t bound;
    };
    std::vector<Item> stack{{s, static_cast<std::uint32_t>(k_)}};
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        if (weight_[it.set].finite()) continue;
        weight_[it.set] = w;
        witness_[it.set] = t;
        changed.push_back(it.set);
        for (std::uint32_t x = 0; x < it.bound; ++x)
            if (it.set & (IndexSet(1) << x)) stack.push_back({it.set & ~(IndexSet(1) << x), x});
    }
}

Partition kernel(const Code* vec, std::size_t k) {
    Partition p(k);
    std::vector<Code> seen;
    for (std::size_t i = 0; i < k; ++i) {
        auto it = std::find(seen.begin(), seen.end(), vec[i]);
        if (it == seen.end()) {
            p[i] = static_cast<std::uint8_t>(seen.size());
            seen.push_back(vec[i]);
        } else {
            p[i] = static_cast<std::uint8_t>(it - seen.begin());
        }
    }
    return p;
}

std::vector<IndexSet> blocks(const Partition& p) {
    std::vector<IndexSet> b;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] >= b.size()) b.resize(p[i] + 1, 0);
        b[p[i]] |= IndexSet(1) << i;
    }
    return b;
}

std::string partition_signature(const Partition& p) {
    auto bs = blocks(p);
    std::string s(p.size(), '.');
    char next = 'a';
    std::vector<char> letter(bs.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (__builtin_popcount(bs[p[i]]) == 1) continue;
        if (!letter[p[i]]) letter[p[i]] = next++;
        s[i] = letter[p[i]];
    }
    return s;
}

std::vector<Partition> enumerate_partitions(std::size_t k) {
    std::vector<Partition> out;
    Partition p(k, 0);
    std::function<void(std::size_t, std::uint8_t)> rec = [&](std::size_t i, std::uint8_t max_label) {
        if (i == k) {
            out.push_back(p);
            return;
        }
        for (std::uint8_t l = 0; l <= max_label; ++l) {
            p[i] = l;
            rec(i + 1, std::max<std::uint8_t>(max_label, l + 1));
        }
    };
    if (k == 0) return {Partition{}};
    p[0] = 0;
    rec(1, 1);
    return out;
}

std::vector<Partition> refinements_with_block(IndexSet s, std::size_t k) {
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < k; ++i)
        if (!(s & (IndexSet(1) << i))) rest.push_back(i);
    std::vector<Partition> out;
    for (const Partition& q : enumerate_partitions(rest.size())) {
        std::vector<Code> labels(k);
        for (std::size_t i = 0; i < k; ++i)
            if (s & (IndexSet(1) << i)) labels[i] = 0;
        for (std::size_t j = 0; j < rest.size(); ++j) labels[rest[j]] = Code(q[j]) + 1;
        out.push_back(kernel(labels.data(), k));
    }
    return out;
}

std::uint64_t ControlLattice::key(const Partition& p) {
    std::uint64_t h = 0;
    for (std::uint8_t l : p) h = (h << 4) | l;
    return h;
}

std::optional<std::size_t> ControlLattice::add(const Partition& p, TermId control, Weight w) {
    std::uint64_t kk = key(p);
    if (by_key_.count(kk)) return std::nullopt;
    std::size_t idx = relations_.size();
    relations_.push_back(Relation{p, blocks(p), control, w});
    by_key_[kk] = idx;
    for (IndexSet b : relations_.back().blocks) by_block_[b].push_back(idx);
    return idx;
}

const std::vector<std::size_t>& ControlLattice::with_block(IndexSet b) const {
    static const std::vector<std::size_t> none;
    auto it = by_block_.find(b);
    return it == by_block_.end() ? none : it->second;
}

std::optional<UpperMode> parse_upper_mode(const std::string& s) {
    if (s == "none") return UpperMode::None;
    if (s == "idx") return UpperMode::Idx;
    if (s == "condChoice" || s == "condchoice") return UpperMode::CondChoice;
    return std::nullopt;
}

std::string upper_mode_name(UpperMode m) {
    switch (m) {
    case UpperMode::None: return "none";
    case UpperMode::Idx: return "idx";
    case UpperMode::CondChoice: return "condChoice";
    }
    return "none";
}

OpId ensure_projection_op(Signature& sig, ProjectionFamily f, std::size_t data_arity, SortId control, SortId data,
                          const WeightFn& wf) {
    std::string base;
    std::vector<SortId> args;
    switch (f) {
    case ProjectionFamily::Idx:
        base = "idx_" + std::to_string(data_arity);
        args.push_back(control);
        args.insert(args.end(), data_arity, data);
        break;
    case ProjectionFamily::If:
        base = "if";
        args = {control, data, data};
        break;
    case ProjectionFamily::IfDef:
        base = "?";
        args = {control, data};
        break;
    case ProjectionFamily::Choice:
        base = "#_" + std::to_string(data_arity);
        args.assign(data_arity, control);
        args.insert(args.end(), data_arity, data);
        break;
    }
    for (std::string name : {base, base + "@" + sig.sort(data).name() + "@" + sig.sort(control).name()}) {
        auto existing = sig.find_op(name);
        if (existing) {
            const Operator& op = sig.op(*existing);
            if (op.is_projection() && op.args == args && op.result == data) return *existing;
            continue;
        }
        Operator op;
        op.name = name;
        op.args = args;
        op.result = data;
        op.kind = OpKind::Projection;
        op.family = f;
        op.wf = wf;
        return sig.add_op(std::move(op));
    }
    throw ConfigError("cannot register projection operator " + base);
}

ProjectionHub::ProjectionHub(Signature& sig, TermStore& store, ProjectionConfig cfg, std::vector<Goal> goals)
    : sig_(sig), store_(store), cfg_(cfg), goals_(std::move(goals)), active_(goals_.size(), true),
      finite_(goals_.size()) {
    for (std::size_t g = 0; g < goals_.size(); ++g) data_.emplace_back(store.k());
}

bool ProjectionHub::is_control(TermId t, Partition& p) const {
    const Sort& s = sig_.sort(sig_.op(store_.op(t)).result);
    const Code* v = store_.vec(t);
    const std::size_t k = store_.k();
    if (cfg_.mode == UpperMode::Idx) {
        if (!s.is_int()) return false;
        for (std::size_t i = 0; i < k; ++i) {
            if (!s.defined(v[i])) return false;
            std::int64_t c = s.decode(v[i]);
            if (c < 0 || c >= std::int64_t(cfg_.max_idx_arity) - 1) return false;
        }
    } else if (cfg_.mode == UpperMode::CondChoice) {
        if (!s.is_bool()) return false;
        for (std::size_t i = 0; i < k; ++i)
            if (!s.defined(v[i])) return false;
    } else {
        return false;
    }
    p = kernel(v, k);
    return *std::max_element(p.begin(), p.end()) >= 1;
}

void ProjectionHub::on_new_term(TermId t, std::vector<std::pair<std::size_t, TermId>>& out) {
    const OpId opid = store_.op(t);
    const SortId s = sig_.op(opid).result;
    const Weight w = store_.weight(t);
    if (sig_.op(opid).is_constant() && !padding_.count(s)) padding_[s] = t;

    Partition p;
    if (is_control(t, p)) {
        if (auto r = control_.add(p, t, w)) {
            const auto& rel = control_.relation(*r);
            for (std::size_t g = 0; g < goals_.size(); ++g) {
                std::uint8_t cnt = 0;
                for (IndexSet b : rel.blocks)
                    if (data_[g].weight(b).finite()) ++cnt;
                finite_[g].push_back(cnt);
                if (active_[g] && cnt == rel.blocks.size()) relation_complete(g, *r, out);
            }
        }
    }

    const Code* v = store_.vec(t);
    for (std::size_t g = 0; g < goals_.size(); ++g) {
        if (!active_[g] || goals_[g].sort != s) continue;
        IndexSet m = match_set(v, goals_[g].vec.data(), store_.k());
        scratch_.clear();
        data_[g].update(m, t, w, scratch_);
        for (IndexSet b : scratch_)
            for (std::size_t r : control_.with_block(b))
                if (++finite_[g][r] == control_.relation(r).blocks.size()) relation_complete(g, r, out);
    }
}

void ProjectionHub::relation_complete(std::size_t goal, std::size_t rel,
                                      std::vector<std::pair<std::size_t, TermId>>& out) {
    TermId t = compose(goal, rel);
    if (t != kNoTerm) out.emplace_back(goal, t);
}

TermId ProjectionHub::compose(std::size_t goal, std::size_t rel) {
    const auto& r = control_.relation(rel);
    const SortId data_sort = goals_[goal].sort;
    const SortId ctrl_sort = sig_.op(store_.op(r.control)).result;
    const Code* cv = store_.vec(r.control);
    const std::size_t k = store_.k();
    const DataLattice& dl = data_[goal];
    std::vector<TermId> args{r.control};
    OpId op;

    if (cfg_.mode == UpperMode::Idx) {
        const Sort& cs = sig_.sort(ctrl_sort);
        std::int64_t n = 0;
        for (std::size_t i = 0; i < k; ++i) n = std::max(n, cs.decode(cv[i]) + 1);
        std::vector<TermId> slots(n, kNoTerm);
        for (std::size_t i = 0; i < k; ++i) {
            IndexSet b = 0;
            for (std::size_t j = 0; j < k; ++j)
                if (cv[j] == cv[i]) b |= IndexSet(1) << j;
            slots[cs.decode(cv[i])] = dl.witness(b);
        }
        TermId pad = kNoTerm;
        if (auto it = padding_.find(data_sort); it != padding_.end()) pad = it->second;
        for (TermId& d : slots) {
            if (d != kNoTerm) continue;
            if (pad == kNoTerm)
                pad = *std::find_if(slots.begin(), slots.end(), [](TermId x) { return x != kNoTerm; });
            d = pad;
        }
        args.insert(args.end(), slots.begin(), slots.end());
        op = ensure_projection_op(sig_, ProjectionFamily::Idx, slots.size(), ctrl_sort, data_sort, cfg_.wf);
    } else {
        IndexSet tb = 0, fb = 0;
        for (std::size_t i = 0; i < k; ++i) (cv[i] == 1 ? tb : fb) |= IndexSet(1) << i;
        args.push_back(dl.witness(tb));
        args.push_back(dl.witness(fb));
        op = ensure_projection_op(sig_, ProjectionFamily::If, 2, ctrl_sort, data_sort, cfg_.wf);
    }
    TermId t = store_.build(sig_, op, args);
    ++compositions_;
    if (std::memcmp(store_.vec(t), goals_[goal].vec.data(), k * sizeof(Code)) != 0) return kNoTerm;
    return t;
}

std::size_t ProjectionHub::memory_bytes() const {
    std::size_t n = 0;
    for (const auto& d : data_) n += (std::size_t(1) << d.k()) * (sizeof(Weight) + sizeof(TermId));
    n += control_.size() * (sizeof(ControlLattice::Relation) + 64);
    for (const auto& f : finite_) n += f.capacity();
    return n;
}

}  // namespace egen
