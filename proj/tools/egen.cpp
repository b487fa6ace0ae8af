#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "egen/engine.hpp"
#include "egen/errors.hpp"
#include "egen/oracles.hpp"
#include "egen/spec.hpp"

using namespace egen;

namespace {

struct SolveOpts {
    std::string file;
    std::string redex_file;
    std::string seq;
    std::size_t history = 1;
    std::int64_t vp_offset = 0;
    std::string seq_sort = "int";
    bool require_minimal = false;
    double timeout_s = 0;
    std::size_t memory_mb = 0;
    std::uint64_t ceiling = 0;
    bool trace = false;
    std::string stats;
    std::string upper = "none";
    unsigned max_idx_arity = 10;
    bool no_pruning = false;
    bool no_redices = false;
    bool full_parens = false;
    bool summary = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Loaded {
    Problem problem;
    std::optional<SeqSetup> seq;
};

Loaded load(const SolveOpts& o) {
    ProblemSpec spec = parse_spec_file(o.file);
    if (!o.redex_file.empty())
        for (auto& r : parse_redex_lines(read_file(o.redex_file))) spec.decls.push_back(r);
    Loaded l;
    if (!o.seq.empty()) {
        l.seq = seq_setup(o.seq, o.history, o.seq_sort, o.vp_offset);
        apply_seq(spec, *l.seq);
    }
    l.problem = compile(spec);
    if (l.problem.goals.empty()) throw ConfigError("no goal declared");
    return l;
}

int run_solve(const SolveOpts& o) {
    Loaded l = load(o);
    for (const auto& w : l.problem.warnings) std::cerr << "warning: " << w << "\n";
    SearchConfig cfg;
    cfg.pruning = !o.no_pruning;
    cfg.use_redices = !o.no_redices;
    cfg.require_minimal = o.require_minimal;
    if (o.timeout_s > 0) cfg.timeout = std::chrono::milliseconds(static_cast<std::int64_t>(o.timeout_s * 1000));
    if (o.memory_mb > 0) cfg.memory_limit_bytes = o.memory_mb << 20;
    if (o.ceiling > 0) cfg.ceiling = Weight(o.ceiling);
    if (o.trace) cfg.trace = &std::cout;
    auto mode = parse_upper_mode(o.upper);
    if (!mode) throw ConfigError("unknown upper mode '" + o.upper + "' (none, idx, condChoice)");
    cfg.projection.mode = *mode;
    cfg.projection.max_idx_arity = o.max_idx_arity;
    cfg.print.full_parens = o.full_parens;

    Engine engine(l.problem, cfg);
    Outcome out = engine.run();

    std::size_t found = 0;
    for (const auto& g : out.goals) {
        if (out.goals.size() > 1) std::cout << g.name << ": ";
        if (g.status == GoalStatus::Open) {
            std::cout << "none\n";
            continue;
        }
        ++found;
        std::cout << g.text << " : weight " << g.weight.str() << " : " << goal_status_name(g.status) << "\n";
        if (l.seq) {
            auto next = seq_extrapolate(l.problem, engine.store(), g.term, *l.seq);
            std::cout << "next: " << (next ? std::to_string(*next) : "undefined") << "\n";
        }
    }
    if (out.kind != OutcomeKind::SolvedMinimal) std::cout << "stopped: " << stop_reason_name(out.reason) << "\n";
    if (o.summary) out.report.write_summary(std::cerr);
    if (!o.stats.empty()) {
        std::ofstream csv(o.stats);
        if (!csv) throw ConfigError("cannot write " + o.stats);
        out.report.write_csv(csv);
    }
    if (found == 0) return 2;
    bool complete = found == out.goals.size() &&
                    (out.reason == StopReason::AllSolved || out.reason == StopReason::PreliminaryAccepted);
    return complete ? 0 : 1;
}

int run_oracle(const std::string& kind, const SolveOpts& o, std::uint64_t range, unsigned k) {
    if (kind == "counts") {
        GrammarCounts c = grammar_size_counts(range, k);
        std::cout << "nonterminals " << c.nonterminals << "\nalternatives " << c.alternatives << "\n";
        return 0;
    }
    Loaded l = load(o);
    Weight ceiling = o.ceiling > 0 ? Weight(o.ceiling) : Weight(12);
    std::size_t solved = 0;
    for (std::size_t g = 0; g < l.problem.goals.size(); ++g) {
        OracleResult r = kind == "naive" ? naive_search(l.problem, g, ceiling) : knuth_minimal(l.problem, g, ceiling);
        if (l.problem.goals.size() > 1) std::cout << l.problem.goals[g].name << ": ";
        if (r.found) {
            ++solved;
            std::cout << r.text << " : weight " << r.weight.str() << " : minimal\n";
        } else {
            std::cout << "none" << (r.limit_hit ? " (term limit)" : "") << "\n";
        }
        std::cerr << "terms " << r.terms_built << "\n";
    }
    return solved == l.problem.goals.size() ? 0 : solved > 0 ? 1 : 2;
}

int run_check(const SolveOpts& o) {
    Loaded l = load(o);
    const Signature& sig = l.problem.sig;
    for (const auto& w : l.problem.warnings) std::cout << "warning: " << w << "\n";
    for (OpId id : l.problem.ops) {
        const Operator& op = sig.op(id);
        std::cout << op.name << " :";
        for (std::size_t j = 0; j < op.args.size(); ++j) std::cout << (j ? ", " : " ") << sig.sort(op.args[j]).name();
        std::cout << " -> " << sig.sort(op.result).name() << " [" << op.flags.str() << "] wf=" << op.wf.str() << "\n";
    }
    std::cout << "K = " << sig.k() << ", " << l.problem.goals.size() << " goal(s), " << l.problem.redices.size()
              << " redex(es)\n";
    return 0;
}

void add_problem_opts(CLI::App* app, SolveOpts& o) {
    app->add_option("file", o.file, "problem file")->required()->check(CLI::ExistingFile);
    app->add_option("--redices", o.redex_file, "redex file, one 'Main Arg1 .. ArgN' per line")
        ->check(CLI::ExistingFile);
    app->add_option("--seq", o.seq, "sequence 'p0 .. ; e0 ..' defining v_p, v_1..v_h and the goal");
    app->add_option("--history", o.history, "predecessor variables in sequence mode");
    app->add_option("--vp-offset", o.vp_offset, "added to positions for v_p");
    app->add_option("--seq-sort", o.seq_sort, "sort of sequence variables");
    app->add_option("--ceiling", o.ceiling, "weight ceiling");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"E-generalization by weighted term generation"};
    app.require_subcommand(0, 1);
    bool help_ops = false;
    app.add_flag("--help-ops", help_ops, "list native operators");

    SolveOpts o;
    auto* solve = app.add_subcommand("solve", "search a minimal term for every goal");
    add_problem_opts(solve, o);
    solve->add_flag("--require-minimal", o.require_minimal, "treat preliminary solutions as unfinished");
    solve->add_option("--timeout", o.timeout_s, "seconds");
    solve->add_option("--memory-mb", o.memory_mb, "memory cap in MiB");
    solve->add_flag("--trace", o.trace, "print stream and build trace");
    solve->add_option("--stats", o.stats, "write per-weight CSV");
    solve->add_flag("--summary", o.summary, "print counters to stderr");
    solve->add_option("--upper", o.upper, "none, idx or condChoice");
    solve->add_option("--max-idx-arity", o.max_idx_arity, "idx takes at most this many arguments");
    solve->add_flag("--no-pruning", o.no_pruning, "disable commutativity/associativity/idempotence rules");
    solve->add_flag("--no-redices", o.no_redices, "ignore redex patterns");
    solve->add_flag("--print-full-parens", o.full_parens, "parenthesize every subterm");

    std::string kind;
    std::uint64_t range = 121;
    unsigned k = 2;
    auto* oracle = app.add_subcommand("oracle", "reference solvers");
    oracle->add_option("kind", kind, "naive, grammar or counts")->required()->check(CLI::IsMember({"naive", "grammar", "counts"}));
    oracle->add_option("file", o.file, "problem file");
    oracle->add_option("--redices", o.redex_file, "redex file")->check(CLI::ExistingFile);
    oracle->add_option("--seq", o.seq, "sequence mode");
    oracle->add_option("--history", o.history, "predecessor variables");
    oracle->add_option("--vp-offset", o.vp_offset, "added to positions for v_p");
    oracle->add_option("--seq-sort", o.seq_sort, "sort of sequence variables");
    oracle->add_option("--ceiling", o.ceiling, "weight ceiling (default 12)");
    oracle->add_option("--range", range, "value count for counts");
    oracle->add_option("--k", k, "tuple length for counts");

    auto* check = app.add_subcommand("check", "parse and validate a problem file");
    add_problem_opts(check, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }
    try {
        if (help_ops) {
            std::cout << describe_native_ops();
            return 0;
        }
        if (solve->parsed()) return run_solve(o);
        if (oracle->parsed()) {
            if (kind != "counts" && o.file.empty()) throw ConfigError("oracle " + kind + " needs a problem file");
            return run_oracle(kind, o, range, k);
        }
        if (check->parsed()) return run_check(o);
        std::cout << app.help();
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
