#include "egen/engine.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <sstream>

#include "egen/errors.hpp"

namespace egen {

std::string goal_status_name(GoalStatus s) {
    switch (s) {
    case GoalStatus::Open: return "open";
    case GoalStatus::Preliminary: return "preliminary";
    case GoalStatus::SolvedMinimal: return "minimal";
    }
    return "open";
}

std::string stop_reason_name(StopReason r) {
    switch (r) {
    case StopReason::AllSolved: return "all goals solved";
    case StopReason::PreliminaryAccepted: return "preliminary solutions accepted";
    case StopReason::StreamExhausted: return "search space exhausted";
    case StopReason::CeilingReached: return "weight ceiling reached";
    case StopReason::HeapOverflow: return "WDL heap capacity exceeded";
    case StopReason::Timeout: return "timeout";
    case StopReason::MemoryLimit: return "memory limit";
    }
    return "";
}

Engine::Engine(Problem problem, SearchConfig cfg)
    : problem_(std::move(problem)), cfg_(std::move(cfg)), store_(problem_.sig.k()) {
    const Signature& sig = problem_.sig;
    const std::size_t k = sig.k();
    if (k == 0) throw ConfigError("no substitution indices: declare variables or goals first");
    scratch_.resize(k);

    discard_undef_ = std::all_of(problem_.ops.begin(), problem_.ops.end(),
                                 [&](OpId id) { return sig.op(id).flags.strict || sig.op(id).arity() == 0; });
    phi_ = std::make_unique<PhiMap>(sig, store_, cfg_.direct_budget, !discard_undef_);

    AdmissibilityOptions aopt;
    aopt.assoc_exclusion = cfg_.pruning;
    for (const auto& g : problem_.goals) {
        if (g.vec.size() != k) throw ConfigError("goal " + g.name + " has the wrong length");
        for (Code c : g.vec)
            if (!sig.sort(g.sort).defined(c)) throw ConfigError("goal " + g.name + " has an undefined component");
        aopt.goal_sorts.push_back(g.sort);
        std::uint32_t group = phi_->add_goal(g.sort, g.vec.data());
        if (group >= group_goals_.size()) group_goals_.resize(group + 1);
        group_goals_[group].push_back(goals_.size());
        goal_group_.push_back(group);
        goals_.push_back(GoalResult{g.name});
    }
    // Control terms are roots of their own, so their sorts are needed as well.
    for (SortId s = 0; s < sig.num_sorts() && cfg_.projection.mode != UpperMode::None; ++s) {
        bool ctrl = cfg_.projection.mode == UpperMode::Idx ? sig.sort(s).is_int() : sig.sort(s).is_bool();
        if (ctrl) aopt.goal_sorts.push_back(s);
    }
    std::vector<Redex> redices = cfg_.use_redices ? problem_.redices : std::vector<Redex>{};
    adm_ = ArgAdmissibility(sig, problem_.ops, redices, aopt);
    redex_ = RedexTable(sig.num_ops());
    for (const Redex& r : redices) redex_.add(r);

    std::vector<OpId> stream_ops;
    for (OpId id : problem_.ops)
        if (adm_.usable(id)) stream_ops.push_back(id);
    std::sort(stream_ops.begin(), stream_ops.end(), [&](OpId a, OpId b) { return sig.op(a).ts < sig.op(b).ts; });
    StreamConfig scfg;
    scfg.ceiling = cfg_.ceiling;
    scfg.commutative_pruning = cfg_.pruning;
    scfg.heap_cap = cfg_.heap_cap;
    stream_ = std::make_unique<WdlStream>(sig, stream_ops, scfg, [this](Weight w) { return d_.inhabited(w); });

    if (cfg_.projection.mode != UpperMode::None) {
        if (k > kMaxProjectionK)
            throw ConfigError("upper mode needs at most " + std::to_string(kMaxProjectionK) + " indices");
        std::vector<ProjectionHub::Goal> hg;
        for (const auto& g : problem_.goals) hg.push_back({g.sort, g.vec});
        hub_ = std::make_unique<ProjectionHub>(problem_.sig, store_, cfg_.projection, std::move(hg));
    }
    start_ = std::chrono::steady_clock::now();
}

Engine::~Engine() = default;

bool Engine::all_done() const {
    if (goals_.empty()) return false;
    for (const auto& g : goals_) {
        if (g.status == GoalStatus::SolvedMinimal) continue;
        if (g.status == GoalStatus::Preliminary && !cfg_.require_minimal) continue;
        return false;
    }
    return true;
}

std::size_t Engine::memory_estimate() const {
    std::size_t n = store_.memory_bytes() + phi_->memory_bytes() + d_.terms().capacity() * sizeof(TermId);
    n += stream_->pending() * (sizeof(Wdl) + 64);
    if (hub_) n += hub_->memory_bytes();
    return n;
}

bool Engine::budget_exceeded() {
    if (abort_) return true;
    if (cfg_.timeout && std::chrono::steady_clock::now() - start_ > *cfg_.timeout) abort_ = StopReason::Timeout;
    std::size_t mem = memory_estimate();
    stats_.note_memory(mem);
    if (cfg_.memory_limit_bytes && mem > *cfg_.memory_limit_bytes) abort_ = StopReason::MemoryLimit;
    if (abort_) stop_ = true;
    return abort_.has_value();
}

std::optional<Wdl> Engine::next_wdl() {
    auto w = stream_->next();
    stats_.note_pending(stream_->peak());
    if (!w) return w;
    if (!current_weight_ || w->eval > *current_weight_) {
        current_weight_ = w->eval;
        stats_.begin_weight(w->eval);
    }
    ++stats_.counters().wdls_drawn;
    if (cfg_.trace) *cfg_.trace << format_wdl(problem_.sig, *w) << "\n";
    return w;
}

std::string Engine::candidate_text(OpId op, const TermId* args, std::size_t n) const {
    const Operator& o = problem_.sig.op(op);
    std::vector<std::string> parts;
    for (std::size_t j = 0; j < n; ++j) parts.push_back(print_term(problem_.sig, store_, args[j], cfg_.print));
    std::ostringstream os;
    if (n == 0) {
        os << o.name;
    } else if (o.precedence() > 0 && n == 2) {
        auto wrap = [&](std::size_t j, bool right) {
            const Operator& c = problem_.sig.op(store_.op(args[j]));
            bool paren = c.precedence() > 0 && c.arity() == 2 &&
                         (cfg_.print.full_parens || c.precedence() < o.precedence() ||
                          (right && c.precedence() == o.precedence()));
            return paren ? "(" + parts[j] + ")" : parts[j];
        };
        os << wrap(0, false) << o.name << wrap(1, true);
    } else if (o.precedence() > 0 && n == 1) {
        bool paren = problem_.sig.op(store_.op(args[0])).arity() >= 2;
        os << o.name << (paren ? "(" + parts[0] + ")" : parts[0]);
    } else {
        os << o.name << "(";
        for (std::size_t j = 0; j < n; ++j) os << (j ? "," : "") << parts[j];
        os << ")";
    }
    return os.str();
}

void Engine::on_goal(std::size_t goal, TermId t, bool direct) {
    GoalResult& g = goals_[goal];
    Weight w = store_.weight(t);
    if (direct) {
        if (g.status == GoalStatus::SolvedMinimal) return;
        g.status = GoalStatus::SolvedMinimal;
        events_.push_back({EngineEvent::Kind::GoalHit, t, goal});
        if (hub_) hub_->retire(goal);
    } else {
        if (g.status == GoalStatus::SolvedMinimal) return;
        if (g.status == GoalStatus::Preliminary && !(w < g.weight)) return;
        g.status = GoalStatus::Preliminary;
        events_.push_back({EngineEvent::Kind::Preliminary, t, goal});
    }
    g.term = t;
    g.weight = w;
    g.text = term_text(t);
    if (all_done() && !cfg_.finish_weight_class) stop_ = true;
}

void Engine::register_new(TermId t) {
    events_.push_back({EngineEvent::Kind::TermAdded, t, 0});
    if (!hub_) return;
    composed_.clear();
    hub_->on_new_term(t, composed_);
    stats_.counters().compositions = hub_->compositions();
    for (auto [g, ct] : composed_) on_goal(g, ct, false);
}

void Engine::candidate(OpId op, const TermId* args, std::size_t n, Weight wt) {
    const Signature& sig = problem_.sig;
    std::array<const Code*, 8> small{};
    std::vector<const Code*> big;
    const Code** ptrs = small.data();
    if (n > small.size()) {
        big.resize(n);
        ptrs = big.data();
    }
    for (std::size_t j = 0; j < n; ++j) ptrs[j] = store_.vec(args[j]);
    sig.apply_vectors(op, std::span<const Code* const>(ptrs, n), scratch_.data());

    const SortId rs = sig.op(op).result;
    const std::size_t k = scratch_.size();
    const char* verdict = "old";
    if (discard_undef_) {
        const Code lim = sig.sort(rs).size();
        bool undef = false;
        for (std::size_t i = 0; i < k; ++i) undef |= scratch_[i] >= lim;
        if (undef) {
            stats_.undef();
            if (cfg_.trace)
                *cfg_.trace << "t " << wt.str() << " " << candidate_text(op, args, n) << " = "
                            << print_vector(sig, rs, scratch_) << " undef\n";
            return;
        }
    }
    std::uint32_t* cell = phi_->find(rs, scratch_.data());
    if (*cell == PhiMap::kEmpty || (*cell & PhiMap::kGoalBit)) {
        const std::uint32_t prev = *cell;
        TermId t = store_.add(op, std::span<const TermId>(args, n), wt, scratch_);
        *cell = t;
        phi_->filled(rs);
        d_.append(t, wt, op);
        stats_.solved();
        verdict = prev == PhiMap::kEmpty ? "new" : "goal";
        if (cfg_.trace)
            *cfg_.trace << "t " << wt.str() << " " << term_text(t) << " = " << print_vector(sig, rs, scratch_) << " "
                        << verdict << "\n";
        if (prev != PhiMap::kEmpty)
            for (std::size_t g : group_goals_[prev & ~PhiMap::kGoalBit]) on_goal(g, t, true);
        register_new(t);
    } else {
        stats_.again();
        if (cfg_.trace)
            *cfg_.trace << "t " << wt.str() << " " << candidate_text(op, args, n) << " = "
                        << print_vector(sig, rs, scratch_) << " old\n";
    }
    if ((++tick_ & 0x3ff) == 0) budget_exceeded();
}

template <class Emit>
void Engine::for_each_tuple(const Wdl& w, Emit&& emit) {
    const Operator& op = problem_.sig.op(w.op);
    const std::size_t n = op.arity();
    const auto& D = d_.terms();

    std::vector<const MinimalTermStore::Layer*> layers(n);
    for (std::size_t j = 0; j < n; ++j) {
        layers[j] = d_.layer(w.args[j]);
        if (!layers[j]) return;
    }
    std::vector<std::vector<MinimalTermStore::OpRun>> runs(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (const auto& r : layers[j]->runs)
            if (adm_.allowed(w.op, j, r.op)) runs[j].push_back(r);
        if (runs[j].empty()) return;
    }

    if (n == 2) {
        const bool comm_flag = op.flags.commutative;
        const bool comm = cfg_.pruning && commutative_pruning_applies(op);
        const bool ac = comm && associative_pruning_applies(op);
        const bool idem = cfg_.pruning && op.flags.idempotent && op.args[0] == op.args[1] && op.result == op.args[0];
        const bool same = layers[0] == layers[1];
        for (const auto& r1 : runs[0]) {
            for (const auto& r2 : runs[1]) {
                const OpId roots[2] = {r1.op, r2.op};
                if (!redex_.empty() && redex_.is_redex(w.op, roots, 2)) {
                    ++stats_.counters().redex_skips;
                    continue;
                }
                const bool nested = ac && r1.op == w.op;
                for (std::uint32_t p1 = r1.begin; p1 < r1.end; ++p1) {
                    const TermId t1 = D[p1];
                    const TermId x2 = nested ? store_.args(t1)[1] : kNoTerm;
                    std::uint32_t start = r2.begin;
                    if (comm && same) start = std::max(start, p1);
                    for (std::uint32_t p2 = start; p2 < r2.end; ++p2) {
                        const TermId t2 = D[p2];
                        if (idem && t1 == t2) continue;
                        if (nested && !term_geq(store_, x2, t2)) continue;
                        if (comm_flag && t1 != t2) ++stats_.counters().comm_distinct_pairs;
                        const TermId a[2] = {t1, t2};
                        emit(a, 2);
                        if (stop_) return;
                    }
                }
            }
        }
        return;
    }

    // General arity: odometer over run combinations, then over terms.
    std::vector<std::size_t> ri(n, 0);
    std::vector<OpId> roots(n);
    std::vector<TermId> a(n);
    std::vector<std::uint32_t> pos(n);
    while (true) {
        for (std::size_t j = 0; j < n; ++j) roots[j] = runs[j][ri[j]].op;
        if (!redex_.empty() && redex_.is_redex(w.op, roots.data(), n)) {
            ++stats_.counters().redex_skips;
        } else {
            for (std::size_t j = 0; j < n; ++j) pos[j] = runs[j][ri[j]].begin;
            while (true) {
                for (std::size_t j = 0; j < n; ++j) a[j] = D[pos[j]];
                emit(a.data(), n);
                if (stop_) return;
                std::size_t j = n;
                while (j-- > 0) {
                    if (++pos[j] < runs[j][ri[j]].end) break;
                    pos[j] = runs[j][ri[j]].begin;
                }
                if (j == std::size_t(-1)) break;
            }
        }
        std::size_t j = n;
        while (j-- > 0) {
            if (++ri[j] < runs[j].size()) break;
            ri[j] = 0;
        }
        if (j == std::size_t(-1)) break;
    }
}

const std::vector<EngineEvent>& Engine::process_wdl(const Wdl& w) {
    events_.clear();
    const Operator& op = problem_.sig.op(w.op);
    if (cfg_.saturation && phi_->saturated(op.result)) {
        ++stats_.counters().wdls_saturated;
        return events_;
    }
    const Weight wt = w.eval;
    const OpId id = w.op;
    if (op.arity() == 0) {
        candidate(id, nullptr, 0, wt);
        return events_;
    }
    for_each_tuple(w, [&](const TermId* args, std::size_t n) { candidate(id, args, n, wt); });
    return events_;
}

RunReport Engine::report() const { return stats_.snapshot(d_.size(), phi_->entries()); }

Outcome Engine::run() {
    Outcome out;
    std::optional<Weight> done_weight;
    StopReason reason = StopReason::StreamExhausted;
    while (true) {
        if (all_done()) {
            if (!done_weight) done_weight = current_weight_;
            if (!cfg_.finish_weight_class) {
                reason = std::all_of(goals_.begin(), goals_.end(),
                                     [](const GoalResult& g) { return g.status == GoalStatus::SolvedMinimal; })
                             ? StopReason::AllSolved
                             : StopReason::PreliminaryAccepted;
                break;
            }
        }
        if (budget_exceeded()) {
            reason = *abort_;
            break;
        }
        auto w = next_wdl();
        if (!w) {
            reason = stream_->overflowed() ? StopReason::HeapOverflow
                     : stream_->ceiling_hit() ? StopReason::CeilingReached
                                              : StopReason::StreamExhausted;
            if (all_done()) reason = StopReason::AllSolved;
            break;
        }
        if (done_weight && w->eval > *done_weight) {
            reason = StopReason::AllSolved;
            break;
        }
        stop_ = false;
        process_wdl(*w);
        if (abort_) {
            reason = *abort_;
            break;
        }
    }
    budget_exceeded();
    out.reason = reason;
    out.goals = goals_;
    std::size_t minimal = 0, any = 0;
    for (const auto& g : goals_) {
        minimal += g.status == GoalStatus::SolvedMinimal;
        any += g.status != GoalStatus::Open;
    }
    out.kind = minimal == goals_.size() ? OutcomeKind::SolvedMinimal
               : any > 0               ? OutcomeKind::BestEffort
                                       : OutcomeKind::Failed;
    if (out.kind == OutcomeKind::SolvedMinimal) out.reason = StopReason::AllSolved;
    out.report = report();
    return out;
}

}  // namespace egen
