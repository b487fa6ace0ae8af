#include "egen/signature.hpp"

#include <array>

#include "egen/errors.hpp"

namespace egen {

SortId Signature::add_sort(Sort s) {
    if (find_sort(s.name())) throw ConfigError("duplicate sort " + s.name());
    sorts_.push_back(std::move(s));
    return static_cast<SortId>(sorts_.size() - 1);
}

OpId Signature::add_op(Operator op) {
    if (find_op(op.name)) throw ConfigError("duplicate operator " + op.name);
    for (SortId s : op.args)
        if (s >= sorts_.size()) throw ConfigError("operator " + op.name + " uses an unknown sort");
    if (op.result >= sorts_.size()) throw ConfigError("operator " + op.name + " uses an unknown sort");
    if (op.kind == OpKind::Table && table_size(op) != op.table.size())
        throw ConfigError("operator " + op.name + ": table has " + std::to_string(op.table.size()) +
                          " entries, expected " + std::to_string(table_size(op)));
    if (op.kind == OpKind::Native && !op.native) throw ConfigError("operator " + op.name + ": missing native");
    op.ts = static_cast<std::uint32_t>(ops_.size());
    if (op.kind == OpKind::Native) compile(op);
    ops_.push_back(std::move(op));
    return static_cast<OpId>(ops_.size() - 1);
}

std::optional<SortId> Signature::find_sort(const std::string& name) const {
    for (std::size_t i = 0; i < sorts_.size(); ++i)
        if (sorts_[i].name() == name) return static_cast<SortId>(i);
    return std::nullopt;
}

std::optional<OpId> Signature::find_op(const std::string& name) const {
    for (std::size_t i = 0; i < ops_.size(); ++i)
        if (ops_[i].name == name) return static_cast<OpId>(i);
    return std::nullopt;
}

std::uint64_t Signature::table_size(const Operator& op) const {
    std::uint64_t n = 1;
    for (SortId s : op.args) {
        std::uint64_t c = sorts_[s].cardinality();
        if (n > (std::uint64_t(1) << 40) / c) return std::uint64_t(1) << 40;
        n *= c;
    }
    return n;
}

std::size_t Signature::table_index(const Operator& op, std::span<const Code> args) const {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < args.size(); ++j) idx = idx * sorts_[op.args[j]].cardinality() + args[j];
    return idx;
}

void Signature::compile(Operator& op) const {
    std::uint64_t n = table_size(op);
    if (n > kCompileLimit) return;
    op.table.assign(n, 0);
    std::vector<Code> a(op.arity(), 0);
    for (std::uint64_t idx = 0; idx < n; ++idx) {
        std::uint64_t m = idx;
        for (std::size_t j = op.arity(); j-- > 0;) {
            std::uint64_t c = sorts_[op.args[j]].cardinality();
            a[j] = static_cast<Code>(m % c);
            m /= c;
        }
        op.table[idx] = apply_uncompiled(op, a, 0);
    }
}

Code Signature::apply_uncompiled(const Operator& op, std::span<const Code> args, std::size_t i) const {
    const Sort& rs = sorts_[op.result];
    switch (op.kind) {
    case OpKind::Variable:
        return op.values.at(i);
    case OpKind::Table:
        return op.table[table_index(op, args)];
    case OpKind::Projection:
        return apply_projection(op.family, *this, op, args);
    case OpKind::Native: {
        std::array<std::int64_t, 4> x{};
        for (std::size_t j = 0; j < args.size(); ++j) {
            const Sort& s = sorts_[op.args[j]];
            if (!s.defined(args[j])) return rs.undef();
            x[j] = s.decode(args[j]);
        }
        if (args.empty()) return op.values.empty() ? rs.undef() : op.values[0];
        auto r = op.native->fn(x.data(), ctx_);
        return r ? rs.encode(*r) : rs.undef();
    }
    }
    return rs.undef();
}

Code Signature::apply(OpId id, std::span<const Code> args, std::size_t i) const {
    const Operator& op = ops_[id];
    if (op.kind == OpKind::Variable) return op.values.at(i);
    if (!op.table.empty()) return op.table[table_index(op, args)];
    return apply_uncompiled(op, args, i);
}

void Signature::apply_vectors(OpId id, std::span<const Code* const> args, Code* out) const {
    const Operator& op = ops_[id];
    const std::size_t k = k_;
    if (op.kind == OpKind::Variable) {
        for (std::size_t i = 0; i < k; ++i) out[i] = op.values[i];
        return;
    }
    if (!op.table.empty()) {
        const Code* tab = op.table.data();
        if (args.empty()) {
            for (std::size_t i = 0; i < k; ++i) out[i] = tab[0];
        } else if (args.size() == 1) {
            const Code* a = args[0];
            for (std::size_t i = 0; i < k; ++i) out[i] = tab[a[i]];
        } else if (args.size() == 2) {
            const Code* a = args[0];
            const Code* b = args[1];
            const std::size_t cb = sorts_[op.args[1]].cardinality();
            for (std::size_t i = 0; i < k; ++i) out[i] = tab[a[i] * cb + b[i]];
        } else {
            std::vector<Code> t(args.size());
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t j = 0; j < args.size(); ++j) t[j] = args[j][i];
                out[i] = tab[table_index(op, t)];
            }
        }
        return;
    }
    std::vector<Code> t(args.size());
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < args.size(); ++j) t[j] = args[j][i];
        out[i] = apply_uncompiled(op, t, i);
    }
}

Code apply_projection(ProjectionFamily f, const Signature& sig, const Operator& op, std::span<const Code> args) {
    const Sort& rs = sig.sort(op.result);
    switch (f) {
    case ProjectionFamily::Idx: {
        const Sort& cs = sig.sort(op.args[0]);
        if (!cs.defined(args[0])) return rs.undef();
        std::int64_t c = cs.decode(args[0]);
        std::int64_t n = std::int64_t(args.size()) - 1;
        return c >= 0 && c < n ? args[1 + c] : rs.undef();
    }
    case ProjectionFamily::If:
        if (args[0] == 1) return args[1];
        if (args[0] == 0) return args[2];
        return rs.undef();
    case ProjectionFamily::IfDef:
        return args[0] == 1 ? args[1] : rs.undef();
    case ProjectionFamily::Choice: {
        std::size_t n = args.size() / 2;
        std::optional<Code> seen;
        for (std::size_t j = 0; j < n; ++j) {
            const Sort& s = sig.sort(op.args[j]);
            if (!s.defined(args[j])) continue;
            if (seen && *seen != args[j]) return rs.undef();
            seen = args[j];
        }
        if (!seen) return args[n];
        for (std::size_t j = 0; j < n; ++j)
            if (args[j] == *seen) return args[n + j];
        return rs.undef();
    }
    }
    return rs.undef();
}

}  // namespace egen
