#include "egen/op_properties.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace egen {

namespace {

std::string render(const Signature& sig, const Operator& op, const std::vector<Code>& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        SortId sid = op.args.empty() ? op.result : op.args[std::min(i, op.args.size() - 1)];
        s += (i ? "," : "") + sig.sort(sid).format(w[i]);
    }
    return s + ")";
}

}  // namespace

std::string PropertyReport::refutation(const Signature& sig, const Operator& op, const OpFlags& claimed) const {
    auto check = [&](bool want, bool have, const char* name, const std::vector<Code>& w) -> std::string {
        if (!want || have) return {};
        return std::string(name) + " refuted by " + render(sig, op, w);
    };
    for (auto msg : {check(claimed.commutative, holds.commutative, "commutativity", commutative_witness),
                     check(claimed.associative, holds.associative, "associativity", associative_witness),
                     check(claimed.idempotent, holds.idempotent, "idempotence", idempotent_witness),
                     check(claimed.strict, holds.strict, "strictness", strict_witness)})
        if (!msg.empty()) return msg;
    return {};
}

PropertyReport check_op_properties(const Signature& sig, OpId id, std::uint64_t exhaustive_limit) {
    PropertyReport rep;
    const Operator& op = sig.op(id);
    const std::size_t n = op.arity();
    const Sort& rs = sig.sort(op.result);

    // Strictness: every tuple with a ⊥ component maps to ⊥.
    rep.holds.strict = true;
    if (n > 0 && !op.is_projection()) {
        std::uint64_t total = sig.table_size(op);
        if (total > exhaustive_limit) {
            rep.exhaustive = false;
            total = exhaustive_limit;
        }
        std::vector<Code> a(n);
        for (std::uint64_t idx = 0; idx < total && rep.holds.strict; ++idx) {
            std::uint64_t m = idx;
            bool has_undef = false;
            for (std::size_t j = n; j-- > 0;) {
                std::uint64_t c = sig.sort(op.args[j]).cardinality();
                a[j] = static_cast<Code>(m % c);
                m /= c;
                has_undef |= !sig.sort(op.args[j]).defined(a[j]);
            }
            if (has_undef && rs.defined(sig.apply(id, a))) {
                rep.holds.strict = false;
                rep.strict_witness = a;
            }
        }
    } else if (op.is_projection()) {
        rep.holds.strict = false;
    }

    if (n != 2) return rep;
    const Sort& s0 = sig.sort(op.args[0]);
    const Code c0 = static_cast<Code>(s0.cardinality());
    const bool same_args = op.args[0] == op.args[1];
    const bool closed = same_args && op.result == op.args[0];
    auto f = [&](Code x, Code y) {
        const Code a[2] = {x, y};
        return sig.apply(id, a);
    };

    rep.holds.commutative = same_args;
    if (same_args) {
        for (Code x = 0; x < c0 && rep.holds.commutative; ++x)
            for (Code y = 0; y < c0; ++y)
                if (f(x, y) != f(y, x)) {
                    rep.holds.commutative = false;
                    rep.commutative_witness = {x, y};
                    break;
                }
    }

    rep.holds.idempotent = closed;
    if (closed) {
        for (Code x = 0; x < c0; ++x)
            if (f(x, x) != x) {
                rep.holds.idempotent = false;
                rep.idempotent_witness = {x, x};
                break;
            }
    }

    rep.holds.associative = closed;
    if (closed) {
        std::vector<Code> dom;
        std::uint64_t cube = std::uint64_t(c0) * c0 * c0;
        if (cube <= exhaustive_limit) {
            for (Code x = 0; x < c0; ++x) dom.push_back(x);
        } else {
            rep.exhaustive = false;
            std::set<Code> b;
            for (Code x = 0; x < std::min<Code>(c0, 6); ++x) b.insert(x);
            for (Code x = c0 > 6 ? c0 - 6 : 0; x < c0; ++x) b.insert(x);
            std::mt19937 rng(c0);
            std::uniform_int_distribution<Code> d(0, c0 - 1);
            for (int i = 0; i < 64; ++i) b.insert(d(rng));
            dom.assign(b.begin(), b.end());
        }
        for (Code x : dom) {
            for (Code y : dom) {
                Code xy = f(x, y);
                for (Code z : dom) {
                    if (f(xy, z) != f(x, f(y, z))) {
                        rep.holds.associative = false;
                        rep.associative_witness = {x, y, z};
                        goto done;
                    }
                }
            }
        }
    done:;
    }
    return rep;
}

}  // namespace egen
