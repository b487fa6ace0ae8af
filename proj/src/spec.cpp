#include "egen/spec.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "egen/errors.hpp"
#include "egen/op_properties.hpp"

namespace egen {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',' || c == ' ' || c == '\t') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep, std::size_t from = 0,
                 std::size_t to = std::string::npos) {
    std::string s;
    to = std::min(to, v.size());
    for (std::size_t i = from; i < to; ++i) s += (i > from ? sep : "") + v[i];
    return s;
}

// Contents of the first bracketed group "open ... close" in s.
std::optional<std::string> bracketed(const std::string& s, char open, char close, std::string* rest = nullptr) {
    auto b = s.find(open);
    auto e = s.find(close, b == std::string::npos ? 0 : b);
    if (b == std::string::npos || e == std::string::npos) return std::nullopt;
    if (rest) *rest = trim(s.substr(e + 1));
    return s.substr(b + 1, e - b - 1);
}

std::optional<std::int64_t> to_int(const std::string& s) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
    return v;
}

OpFlags parse_flags(const std::string& inner, int line) {
    OpFlags f;
    for (const auto& t : split_list(inner)) {
        if (t == "c") f.commutative = true;
        else if (t == "a") f.associative = true;
        else if (t == "i") f.idempotent = true;
        else if (t == "s") f.strict = true;
        else throw ConfigError("unknown operator flag '" + t + "'", line);
    }
    return f;
}

Decl parse_line(const std::string& raw, int line) {
    auto tok = split_ws(raw);
    const std::string& kw = tok[0];
    if (kw == "sort") {
        if (tok.size() < 4 || tok[2] != "=") throw ConfigError("expected: sort NAME = a..b | {id, ...}", line);
        SortDecl d;
        d.name = tok[1];
        std::string rest = trim(join(tok, " ", 3));
        if (rest.front() == '{') {
            auto inner = bracketed(rest, '{', '}');
            if (!inner) throw ConfigError("unterminated value list", line);
            d.range = false;
            d.values = split_list(*inner);
            if (d.values.empty()) throw ConfigError("empty sort " + d.name, line);
        } else {
            auto dots = rest.find("..");
            if (dots == std::string::npos) throw ConfigError("expected a range a..b", line);
            auto lo = to_int(trim(rest.substr(0, dots)));
            auto hi = to_int(trim(rest.substr(dots + 2)));
            if (!lo || !hi) throw ConfigError("bad range bounds", line);
            d.lo = *lo;
            d.hi = *hi;
        }
        return d;
    }
    if (kw == "op") {
        if (tok.size() < 4 || tok[2] != ":") throw ConfigError("expected: op NAME : S1,..,Sn -> S ...", line);
        OpDecl d;
        d.name = tok[1];
        std::size_t arrow = 3;
        while (arrow < tok.size() && tok[arrow] != "->") ++arrow;
        if (arrow + 1 >= tok.size()) throw ConfigError("missing '-> RESULT' in operator " + d.name, line);
        d.args = split_list(join(tok, " ", 3, arrow));
        d.result = tok[arrow + 1];
        std::size_t i = arrow + 2;
        bool semantics = false;
        while (i < tok.size()) {
            const std::string& t = tok[i];
            if (t.front() == '[') {
                std::string s = t;
                while (s.back() != ']' && ++i < tok.size()) s += " " + tok[i];
                if (s.back() != ']') throw ConfigError("unterminated flag list", line);
                d.flags = parse_flags(s.substr(1, s.size() - 2), line);
                ++i;
            } else if (t == "trusted") {
                d.trusted = true;
                ++i;
            } else if (t.rfind("wf=", 0) == 0) {
                d.wf = t.substr(3);
                ++i;
            } else if (t == "native" || t.rfind("native=", 0) == 0) {
                d.native = true;
                d.native_name = t.size() > 7 ? t.substr(7) : "";
                semantics = true;
                ++i;
            } else if (t == "table") {
                std::string rest = join(tok, " ", i + 1);
                auto inner = bracketed(rest, '[', ']');
                if (!inner) throw ConfigError("expected: table [v, ...]", line);
                d.native = false;
                d.table = split_list(*inner);
                semantics = true;
                i = tok.size();
            } else {
                throw ConfigError("unexpected '" + t + "' in operator " + d.name, line);
            }
        }
        if (!semantics) throw ConfigError("operator " + d.name + " needs 'native' or 'table [...]'", line);
        return d;
    }
    if (kw == "var") {
        if (tok.size() < 2) throw ConfigError("expected: var NAME : S = (v1,..,vK)", line);
        VarDecl d;
        d.name = tok[1];
        if (d.name == "univ") throw ConfigError("var univ is not supported", line);
        if (d.name == "all") {
            if (tok.size() < 4 || tok[2] != ":") throw ConfigError("expected: var all : S", line);
            d.mode = VarMode::All;
            d.sort = tok[3];
            if (tok.size() > 4 && tok[4].rfind("wf=", 0) == 0) d.wf = tok[4].substr(3);
            return d;
        }
        if (d.name == "random") {
            if (tok.size() < 7 || tok[3] != "seed" || tok[5] != ":")
                throw ConfigError("expected: var random N seed S : SORT", line);
            auto n = to_int(tok[2]);
            auto s = to_int(tok[4]);
            if (!n || !s || *n <= 0 || *s < 0) throw ConfigError("bad random variable count or seed", line);
            d.mode = VarMode::Random;
            d.count = static_cast<std::uint64_t>(*n);
            d.seed = static_cast<std::uint64_t>(*s);
            d.sort = tok[6];
            if (tok.size() > 7 && tok[7].rfind("wf=", 0) == 0) d.wf = tok[7].substr(3);
            return d;
        }
        if (tok.size() < 5 || tok[2] != ":" || tok[4] != "=") throw ConfigError("expected: var NAME : S = (v1,..,vK)", line);
        d.sort = tok[3];
        std::string rest;
        auto inner = bracketed(join(tok, " ", 5), '(', ')', &rest);
        if (!inner) throw ConfigError("expected a value vector (v1,..,vK)", line);
        d.values = split_list(*inner);
        if (!rest.empty()) {
            if (rest.rfind("wf=", 0) != 0) throw ConfigError("unexpected '" + rest + "'", line);
            d.wf = rest.substr(3);
        }
        return d;
    }
    if (kw == "goal") {
        if (tok.size() < 5 || tok[2] != ":" || tok[4] != "=") throw ConfigError("expected: goal NAME : S = (v1,..,vK)", line);
        GoalDecl d;
        d.name = tok[1];
        d.sort = tok[3];
        auto inner = bracketed(join(tok, " ", 5), '(', ')');
        if (!inner) throw ConfigError("expected a value vector (v1,..,vK)", line);
        d.values = split_list(*inner);
        return d;
    }
    if (kw == "redex") {
        if (tok.size() < 3) throw ConfigError("expected: redex MAIN ARG1 .. ARGN", line);
        return RedexDecl{std::vector<std::string>(tok.begin() + 1, tok.end())};
    }
    if (kw == "bitwidth" || kw == "varweight") {
        if (tok.size() != 2) throw ConfigError("expected: " + kw + " VALUE", line);
        return SettingDecl{kw, tok[1]};
    }
    throw ConfigError("unknown declaration '" + kw + "'", line);
}

std::string strip_comment(const std::string& line) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') return "";
    auto c = t.find(" #");
    return c == std::string::npos ? t : trim(t.substr(0, c));
}

}  // namespace

ProblemSpec parse_spec(const std::string& text) {
    ProblemSpec spec;
    std::istringstream is(text);
    std::string line;
    int n = 0;
    while (std::getline(is, line)) {
        ++n;
        std::string t = strip_comment(line);
        if (t.empty()) continue;
        spec.decls.push_back(parse_line(t, n));
    }
    return spec;
}

ProblemSpec parse_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_spec(ss.str());
}

std::vector<RedexDecl> parse_redex_lines(const std::string& text) {
    std::vector<RedexDecl> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::string t = strip_comment(line);
        if (t.empty()) continue;
        auto tok = split_ws(t);
        if (tok[0] == "redex") tok.erase(tok.begin());
        if (tok.size() < 2) throw ConfigError("redex line needs a main operator and arguments: " + t);
        out.push_back(RedexDecl{tok});
    }
    return out;
}

std::string print_spec(const ProblemSpec& spec) {
    std::ostringstream os;
    auto vec = [](const std::vector<std::string>& v) { return "(" + join(v, ", ") + ")"; };
    for (const Decl& decl : spec.decls) {
        if (auto* s = std::get_if<SortDecl>(&decl)) {
            os << "sort " << s->name << " = ";
            if (s->range) os << s->lo << ".." << s->hi;
            else os << "{" << join(s->values, ", ") << "}";
        } else if (auto* o = std::get_if<OpDecl>(&decl)) {
            os << "op " << o->name << " :";
            if (!o->args.empty()) os << " " << join(o->args, ", ");
            os << " -> " << o->result;
            if (o->flags) os << " [" << o->flags->str() << "]";
            if (o->trusted) os << " trusted";
            if (o->wf) os << " wf=" << *o->wf;
            if (o->native) os << (o->native_name.empty() ? " native" : " native=" + o->native_name);
            else os << " table [" << join(o->table, ", ") << "]";
        } else if (auto* v = std::get_if<VarDecl>(&decl)) {
            if (v->mode == VarMode::All) os << "var all : " << v->sort;
            else if (v->mode == VarMode::Random) os << "var random " << v->count << " seed " << v->seed << " : " << v->sort;
            else os << "var " << v->name << " : " << v->sort << " = " << vec(v->values);
            if (v->wf) os << " wf=" << *v->wf;
        } else if (auto* g = std::get_if<GoalDecl>(&decl)) {
            os << "goal " << g->name << " : " << g->sort << " = " << vec(g->values);
        } else if (auto* r = std::get_if<RedexDecl>(&decl)) {
            os << "redex " << join(r->ops, " ");
        } else if (auto* st = std::get_if<SettingDecl>(&decl)) {
            os << st->key << " " << st->value;
        }
        os << "\n";
    }
    return os.str();
}

namespace {

WeightFn weight_fn_for(const std::optional<std::string>& text, const WeightFn& dflt, const std::string& who,
                       std::size_t arity) {
    WeightFn fn = dflt;
    if (text) {
        auto parsed = parse_weight_fn(*text);
        if (!parsed) throw ConfigError(who + ": cannot parse weight function '" + *text + "'");
        fn = *parsed;
    }
    auto rep = validate_weight_fn(fn, arity);
    if (!rep.ok()) {
        std::string w;
        for (std::size_t i = 0; i < rep.witness.size(); ++i) w += (i ? "," : "") + rep.witness[i].str();
        throw ConfigError(who + ": weight function " + fn.str() + " is not " + rep.failed + " (witness (" + w + "))");
    }
    return fn;
}

SortId need_sort(const Signature& sig, const std::string& name, const std::string& who) {
    auto s = sig.find_sort(name);
    if (!s) throw ConfigError(who + ": unknown sort " + name);
    return *s;
}

bool shape_ok(const Signature& sig, NativeShape shape, const std::vector<SortId>& args, SortId res) {
    auto is_int = [&](SortId s) { return sig.sort(s).is_int(); };
    auto is_bool = [&](SortId s) { return sig.sort(s).is_bool(); };
    switch (shape) {
    case NativeShape::IntIntInt: return args.size() == 2 && is_int(args[0]) && is_int(args[1]) && is_int(res);
    case NativeShape::IntInt: return args.size() == 1 && is_int(args[0]) && is_int(res);
    case NativeShape::IntIntBool: return args.size() == 2 && is_int(args[0]) && is_int(args[1]) && is_bool(res);
    case NativeShape::BoolBoolBool: return args.size() == 2 && is_bool(args[0]) && is_bool(args[1]) && is_bool(res);
    case NativeShape::BoolBool: return args.size() == 1 && is_bool(args[0]) && is_bool(res);
    case NativeShape::AnyAnyBool: return args.size() == 2 && args[0] == args[1] && is_bool(res);
    }
    return false;
}

std::vector<Code> parse_values(const Sort& s, const std::vector<std::string>& vals, const std::string& who,
                               bool allow_undef) {
    std::vector<Code> out;
    for (const auto& v : vals) {
        auto c = s.parse(v);
        if (!c) throw ConfigError(who + ": '" + v + "' is not a value of sort " + s.name());
        if (!allow_undef && !s.defined(*c)) throw ConfigError(who + ": undefined component in vector");
        out.push_back(*c);
    }
    return out;
}

void add_op_decl(Problem& p, const OpDecl& d) {
    Signature& sig = p.sig;
    const std::string who = "operator " + d.name;
    Operator op;
    op.name = d.name;
    for (const auto& a : d.args) op.args.push_back(need_sort(sig, a, who));
    op.result = need_sort(sig, d.result, who);
    op.wf = weight_fn_for(d.wf, WeightFn::size(1), who, op.args.size());
    const Sort& rs = sig.sort(op.result);

    OpFlags claimed;
    if (d.native) {
        const NativeOp* nat = find_native(d.native_name.empty() ? d.name : d.native_name);
        if (!nat && op.args.empty() && d.native_name.empty()) {
            auto v = rs.parse(d.name);
            if (!v || !rs.defined(*v)) throw ConfigError(who + ": not a literal of sort " + rs.name());
            op.kind = OpKind::Table;
            op.table = {*v};
        } else {
            if (!nat) throw ConfigError(who + ": unknown native operator");
            if (!shape_ok(sig, nat->shape, op.args, op.result))
                throw ConfigError(who + ": argument or result sorts do not fit native " + std::string(nat->name));
            op.kind = OpKind::Native;
            op.native = nat;
            claimed = nat->flags;
        }
    } else {
        std::uint64_t full = 1, defined = 1;
        for (SortId s : op.args) {
            full *= sig.sort(s).cardinality();
            defined *= sig.sort(s).size();
        }
        auto vals = parse_values(rs, d.table, who, true);
        if (vals.size() == full) {
            op.table = std::move(vals);
        } else if (vals.size() == defined) {
            // Only defined argument tuples given: ⊥ anywhere yields ⊥.
            op.table.assign(full, rs.undef());
            std::vector<Code> a(op.args.size());
            for (std::uint64_t idx = 0; idx < defined; ++idx) {
                std::uint64_t m = idx;
                for (std::size_t j = op.args.size(); j-- > 0;) {
                    a[j] = static_cast<Code>(m % sig.sort(op.args[j]).size());
                    m /= sig.sort(op.args[j]).size();
                }
                op.table[sig.table_index(op, a)] = vals[idx];
            }
        } else {
            throw ConfigError(who + ": table has " + std::to_string(vals.size()) + " entries, expected " +
                              std::to_string(full) + " (or " + std::to_string(defined) + " without undefined arguments)");
        }
        op.kind = OpKind::Table;
    }
    if (d.flags) claimed = *d.flags;

    OpId id = sig.add_op(std::move(op));
    PropertyReport rep = check_op_properties(sig, id);
    Operator& o = sig.op_mut(id);
    std::string refuted = rep.refutation(sig, o, claimed);
    if (d.trusted) {
        o.flags = claimed;
        o.flags.strict = claimed.strict || rep.holds.strict;
        if (!refuted.empty()) p.warnings.push_back(who + ": trusted flag, " + refuted);
    } else if (d.flags) {
        if (!refuted.empty()) throw ConfigError(who + ": " + refuted);
        o.flags = claimed;
        o.flags.strict = rep.holds.strict;
    } else {
        o.flags.commutative = claimed.commutative && rep.holds.commutative;
        o.flags.associative = claimed.associative && rep.holds.associative;
        o.flags.idempotent = claimed.idempotent && rep.holds.idempotent;
        o.flags.strict = rep.holds.strict;
        if (!refuted.empty()) p.warnings.push_back(who + ": default flag dropped, " + refuted);
    }
    if (o.arity() == 0) o.flags.strict = true;
    p.ops.push_back(id);
}

void add_variable(Problem& p, const std::string& name, SortId sort, std::vector<Code> values, const WeightFn& wf) {
    Operator op;
    op.name = name;
    op.result = sort;
    op.kind = OpKind::Variable;
    op.values = std::move(values);
    op.wf = wf;
    op.flags.strict = true;
    p.ops.push_back(p.sig.add_op(std::move(op)));
}

}  // namespace

Problem compile(const ProblemSpec& spec) {
    Problem p;
    Signature& sig = p.sig;

    std::size_t k = 0;
    for (const Decl& d : spec.decls) {
        const std::vector<std::string>* vals = nullptr;
        std::string who;
        if (auto* v = std::get_if<VarDecl>(&d); v && v->mode == VarMode::Explicit) {
            vals = &v->values;
            who = "variable " + v->name;
        } else if (auto* g = std::get_if<GoalDecl>(&d)) {
            vals = &g->values;
            who = "goal " + g->name;
        }
        if (!vals) continue;
        if (vals->empty()) throw ConfigError(who + ": empty value vector");
        if (k == 0) k = vals->size();
        if (vals->size() != k)
            throw ConfigError(who + ": has " + std::to_string(vals->size()) + " components, expected " + std::to_string(k));
    }
    if (k == 0) throw ConfigError("no variable or goal vector declares the number of substitution indices");
    sig.set_k(k);

    bool user_bool = std::any_of(spec.decls.begin(), spec.decls.end(), [](const Decl& d) {
        auto* s = std::get_if<SortDecl>(&d);
        return s && s->name == "bool";
    });
    if (!user_bool) sig.add_sort(Sort::boolean("bool"));

    WeightFn var_wf = WeightFn::size(2);
    bool seen_op = false;
    std::vector<RedexDecl> redices;
    for (const Decl& decl : spec.decls) {
        if (auto* s = std::get_if<SortDecl>(&decl)) {
            if (s->range) sig.add_sort(Sort::int_range(s->name, s->lo, s->hi));
            else {
                std::set<std::string> uniq(s->values.begin(), s->values.end());
                if (uniq.size() != s->values.size() || uniq.count("u"))
                    throw ConfigError("sort " + s->name + ": duplicate or reserved value name");
                sig.add_sort(Sort::enumeration(s->name, s->values));
            }
        } else if (auto* st = std::get_if<SettingDecl>(&decl)) {
            if (st->key == "bitwidth") {
                if (seen_op) throw ConfigError("bitwidth must precede all operators");
                auto w = to_int(st->value);
                if (!w || *w < 1 || *w > 31) throw ConfigError("bitwidth must be in 1..31");
                sig.native_ctx().bit_width = static_cast<unsigned>(*w);
            } else {
                auto fn = parse_weight_fn(st->value);
                if (!fn) throw ConfigError("cannot parse weight function '" + st->value + "'");
                var_wf = weight_fn_for(st->value, var_wf, "varweight", 0);
            }
        } else if (auto* o = std::get_if<OpDecl>(&decl)) {
            seen_op = true;
            add_op_decl(p, *o);
        } else if (auto* v = std::get_if<VarDecl>(&decl)) {
            const std::string who = "variable " + v->name;
            SortId sid = need_sort(sig, v->sort, who);
            const Sort& s = sig.sort(sid);
            WeightFn wf = weight_fn_for(v->wf, var_wf, who, 0);
            if (v->mode == VarMode::Explicit) {
                if (sig.find_op(v->name)) throw ConfigError("duplicate name " + v->name);
                add_variable(p, v->name, sid, parse_values(s, v->values, who, true), wf);
            } else if (v->mode == VarMode::All) {
                std::uint64_t total = 1;
                for (std::size_t i = 0; i < k; ++i) {
                    total *= s.size();
                    if (total > 4096) throw ConfigError("var all: |" + s.name() + "|^K exceeds 4096");
                }
                for (std::uint64_t n = 0; n < total; ++n) {
                    std::vector<Code> vals(k);
                    std::uint64_t m = n;
                    for (std::size_t i = k; i-- > 0;) {
                        vals[i] = static_cast<Code>(m % s.size());
                        m /= s.size();
                    }
                    add_variable(p, "all_" + std::to_string(n), sid, std::move(vals), wf);
                }
            } else {
                std::mt19937_64 rng(v->seed);
                std::uniform_int_distribution<Code> dist(0, s.size() - 1);
                for (std::uint64_t n = 0; n < v->count; ++n) {
                    std::vector<Code> vals(k);
                    for (auto& c : vals) c = dist(rng);
                    add_variable(p, "r_" + std::to_string(n), sid, std::move(vals), wf);
                }
            }
        } else if (auto* g = std::get_if<GoalDecl>(&decl)) {
            const std::string who = "goal " + g->name;
            SortId sid = need_sort(sig, g->sort, who);
            p.goals.push_back(GoalSpec{g->name, sid, parse_values(sig.sort(sid), g->values, who, false)});
        } else if (auto* r = std::get_if<RedexDecl>(&decl)) {
            redices.push_back(*r);
        }
    }

    for (const RedexDecl& r : redices) {
        auto main = sig.find_op(r.ops[0]);
        if (!main) throw ConfigError("redex: unknown operator " + r.ops[0]);
        Redex rx{*main, {}};
        for (std::size_t j = 1; j < r.ops.size(); ++j) {
            if (r.ops[j] == ".") {
                rx.args.push_back(std::nullopt);
                continue;
            }
            auto a = sig.find_op(r.ops[j]);
            if (!a) throw ConfigError("redex: unknown operator " + r.ops[j]);
            rx.args.push_back(*a);
        }
        if (rx.args.size() != sig.op(*main).arity())
            throw ConfigError("redex: " + r.ops[0] + " takes " + std::to_string(sig.op(*main).arity()) + " arguments");
        p.redices.push_back(std::move(rx));
    }
    return p;
}

SeqSetup seq_setup(const std::string& text, std::size_t history, const std::string& sort, std::int64_t vp_offset) {
    auto semi = text.find(';');
    if (semi == std::string::npos || text.find(';', semi + 1) != std::string::npos)
        throw ConfigError("sequence must look like 'p0 .. ; e0 ..' with exactly one ';'");
    auto parse_ints = [](const std::string& s) {
        std::vector<std::int64_t> out;
        for (const auto& t : split_list(s)) {
            auto v = to_int(t);
            if (!v) throw ConfigError("sequence element '" + t + "' is not an integer");
            out.push_back(*v);
        }
        return out;
    };
    SeqSetup seq;
    seq.sequence = parse_ints(text.substr(0, semi));
    auto explained = parse_ints(text.substr(semi + 1));
    if (explained.empty()) throw ConfigError("sequence has nothing to explain after ';'");
    seq.first_explained = seq.sequence.size();
    seq.history = history;
    seq.vp_offset = vp_offset;
    seq.sequence.insert(seq.sequence.end(), explained.begin(), explained.end());
    if (seq.first_explained < history)
        throw ConfigError("position " + std::to_string(seq.first_explained) + " needs " + std::to_string(history) +
                          " predecessors but has " + std::to_string(seq.first_explained));

    const std::size_t s = seq.first_explained, m = explained.size();
    VarDecl vp{"v_p", sort};
    for (std::size_t p = s; p < s + m; ++p) vp.values.push_back(std::to_string(std::int64_t(p) + vp_offset));
    seq.vars.push_back(vp);
    for (std::size_t i = 1; i <= history; ++i) {
        VarDecl v{"v_" + std::to_string(i), sort};
        for (std::size_t p = s; p < s + m; ++p) v.values.push_back(std::to_string(seq.sequence[p - i]));
        seq.vars.push_back(v);
    }
    seq.goal.name = "g";
    seq.goal.sort = sort;
    for (auto e : explained) seq.goal.values.push_back(std::to_string(e));
    return seq;
}

void apply_seq(ProblemSpec& spec, const SeqSetup& seq) {
    for (const auto& v : seq.vars) spec.decls.push_back(v);
    spec.decls.push_back(seq.goal);
}

Code eval_with_vars(const Signature& sig, const TermStore& store, TermId t,
                    const std::vector<std::pair<OpId, Code>>& env) {
    OpId op = store.op(t);
    if (sig.op(op).is_variable()) {
        for (auto [v, c] : env)
            if (v == op) return c;
        return sig.sort(sig.op(op).result).undef();
    }
    auto a = store.args(t);
    std::vector<Code> vals(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) vals[j] = eval_with_vars(sig, store, a[j], env);
    return sig.apply(op, vals, 0);
}

std::optional<std::int64_t> seq_extrapolate(const Problem& p, const TermStore& store, TermId t, const SeqSetup& seq) {
    const Signature& sig = p.sig;
    const std::size_t n = seq.sequence.size();
    std::vector<std::pair<OpId, Code>> env;
    auto bind = [&](const std::string& name, std::int64_t value) {
        auto op = sig.find_op(name);
        if (op) env.emplace_back(*op, sig.sort(sig.op(*op).result).encode(value));
    };
    bind("v_p", std::int64_t(n) + seq.vp_offset);
    for (std::size_t i = 1; i <= seq.history; ++i) bind("v_" + std::to_string(i), seq.sequence[n - i]);
    SortId rs = sig.op(store.op(t)).result;
    Code c = eval_with_vars(sig, store, t, env);
    if (!sig.sort(rs).defined(c)) return std::nullopt;
    return sig.sort(rs).decode(c);
}

std::string describe_native_ops() {
    std::ostringstream os;
    auto shape = [](NativeShape s) {
        switch (s) {
        case NativeShape::IntIntInt: return "int,int -> int";
        case NativeShape::IntInt: return "int -> int";
        case NativeShape::IntIntBool: return "int,int -> bool";
        case NativeShape::BoolBoolBool: return "bool,bool -> bool";
        case NativeShape::BoolBool: return "bool -> bool";
        case NativeShape::AnyAnyBool: return "S,S -> bool";
        }
        return "";
    };
    for (const auto& op : native_ops()) {
        std::string name(op.name);
        name.resize(6, ' ');
        std::string sh = shape(op.shape);
        sh.resize(18, ' ');
        std::string fl = "[" + op.flags.str() + "]";
        fl.resize(10, ' ');
        os << name << sh << fl << op.description << "\n";
    }
    os << "Constants: 'op 3 : -> int native' uses the operator name as a literal of the result sort.\n";
    return os.str();
}

}  // namespace egen
