#include "egen/term_store.hpp"

#include <array>
#include <sstream>

namespace egen {

TermId TermStore::add(OpId op, std::span<const TermId> args, Weight w, std::span<const Code> vec) {
    TermId id = static_cast<TermId>(op_.size());
    op_.push_back(op);
    weight_.push_back(w);
    args_.insert(args_.end(), args.begin(), args.end());
    arg_begin_.push_back(static_cast<std::uint32_t>(args_.size()));
    values_.insert(values_.end(), vec.begin(), vec.end());
    return id;
}

Weight TermStore::weight_of(const Signature& sig, OpId op, std::span<const TermId> args) const {
    std::array<Weight, 8> small{};
    std::vector<Weight> big;
    std::span<Weight> ws;
    if (args.size() <= small.size()) {
        ws = std::span<Weight>(small.data(), args.size());
    } else {
        big.resize(args.size());
        ws = big;
    }
    for (std::size_t j = 0; j < args.size(); ++j) ws[j] = weight_[args[j]];
    return sig.op(op).wf.apply(ws);
}

void TermStore::evaluate(const Signature& sig, OpId op, std::span<const TermId> args, Code* out) const {
    std::array<const Code*, 8> small{};
    std::vector<const Code*> big;
    std::span<const Code*> ptrs;
    if (args.size() <= small.size()) {
        ptrs = std::span<const Code*>(small.data(), args.size());
    } else {
        big.resize(args.size());
        ptrs = big;
    }
    for (std::size_t j = 0; j < args.size(); ++j) ptrs[j] = vec(args[j]);
    sig.apply_vectors(op, ptrs, out);
}

TermId TermStore::build(const Signature& sig, OpId op, std::span<const TermId> args) {
    std::vector<Code> v(k_);
    evaluate(sig, op, args, v.data());
    return add(op, args, weight_of(sig, op, args), v);
}

std::size_t TermStore::memory_bytes() const {
    return op_.capacity() * sizeof(OpId) + weight_.capacity() * sizeof(Weight) +
           arg_begin_.capacity() * sizeof(std::uint32_t) + args_.capacity() * sizeof(TermId) +
           values_.capacity() * sizeof(Code);
}

namespace {

void print_rec(const Signature& sig, const TermStore& st, TermId t, const PrintOptions& opt, std::ostream& os) {
    const Operator& op = sig.op(st.op(t));
    auto a = st.args(t);
    int prec = op.precedence();
    auto child = [&](TermId c, bool right) {
        const Operator& cop = sig.op(st.op(c));
        int cp = cop.precedence();
        bool infix_child = cp > 0 && cop.arity() > 0;
        bool paren = infix_child && (opt.full_parens || cp < prec || (right && cp == prec));
        if (cop.arity() == 1 && cp > 0) paren = opt.full_parens;
        if (paren) os << "(";
        print_rec(sig, st, c, opt, os);
        if (paren) os << ")";
    };
    if (a.empty()) {
        os << op.name;
    } else if (prec > 0 && a.size() == 2) {
        child(a[0], false);
        os << op.name;
        child(a[1], true);
    } else if (prec > 0 && a.size() == 1) {
        os << op.name;
        const Operator& cop = sig.op(st.op(a[0]));
        bool paren = cop.arity() >= 2 || opt.full_parens;
        if (paren) os << "(";
        print_rec(sig, st, a[0], opt, os);
        if (paren) os << ")";
    } else {
        os << op.name << "(";
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (j) os << ",";
            print_rec(sig, st, a[j], opt, os);
        }
        os << ")";
    }
}

}  // namespace

std::string print_term(const Signature& sig, const TermStore& store, TermId t, const PrintOptions& opt) {
    std::ostringstream os;
    print_rec(sig, store, t, opt, os);
    return os.str();
}

std::string print_vector(const Signature& sig, SortId sort, std::span<const Code> vec) {
    std::string s = "<";
    for (std::size_t i = 0; i < vec.size(); ++i) s += (i ? "," : "") + sig.sort(sort).format(vec[i]);
    return s + ">";
}

Code eval_at(const Signature& sig, const TermStore& store, TermId t, std::size_t i) {
    OpId op = store.op(t);
    auto a = store.args(t);
    std::vector<Code> vals(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) vals[j] = eval_at(sig, store, a[j], i);
    return sig.apply(op, vals, i);
}

}  // namespace egen
