#pragma once

#include <chrono>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "egen/min_store.hpp"
#include "egen/phi_map.hpp"
#include "egen/problem.hpp"
#include "egen/projection.hpp"
#include "egen/pruning.hpp"
#include "egen/stats.hpp"
#include "egen/term_store.hpp"
#include "egen/wdl_stream.hpp"

namespace egen {

struct SearchConfig {
    bool pruning = true;      // commutativity, associativity and idempotence rules
    bool use_redices = true;
    bool saturation = true;
    std::optional<Weight> ceiling;
    std::optional<std::chrono::milliseconds> timeout;
    std::optional<std::size_t> memory_limit_bytes;
    std::size_t heap_cap = 0;
    bool require_minimal = false;
    // Keep going until the weight class of the last goal hit is complete.
    bool finish_weight_class = false;
    ProjectionConfig projection;
    std::uint64_t direct_budget = std::uint64_t(1) << 22;
    std::ostream* trace = nullptr;
    PrintOptions print;
};

enum class GoalStatus { Open, Preliminary, SolvedMinimal };
enum class OutcomeKind { SolvedMinimal, BestEffort, Failed };
enum class StopReason { AllSolved, PreliminaryAccepted, StreamExhausted, CeilingReached, HeapOverflow, Timeout,
                        MemoryLimit };

std::string goal_status_name(GoalStatus s);
std::string stop_reason_name(StopReason r);

struct GoalResult {
    std::string name;
    GoalStatus status = GoalStatus::Open;
    TermId term = kNoTerm;
    Weight weight = Weight::inf();
    std::string text;
};

struct Outcome {
    OutcomeKind kind = OutcomeKind::Failed;
    StopReason reason = StopReason::StreamExhausted;
    std::vector<GoalResult> goals;
    RunReport report;
};

struct EngineEvent {
    enum class Kind { TermAdded, GoalHit, Preliminary } kind;
    TermId term;
    std::size_t goal = 0;
};

class Engine {
public:
    Engine(Problem problem, SearchConfig cfg = {});
    ~Engine();

    Outcome run();

    // Single steps, exposed for tests and tracing.
    std::optional<Wdl> next_wdl();
    const std::vector<EngineEvent>& process_wdl(const Wdl& w);

    const Signature& sig() const { return problem_.sig; }
    const TermStore& store() const { return store_; }
    const MinimalTermStore& d() const { return d_; }
    const PhiMap& phi() const { return *phi_; }
    const ArgAdmissibility& admissibility() const { return adm_; }
    const WdlStream& stream() const { return *stream_; }
    const std::vector<GoalResult>& goals() const { return goals_; }
    const ProjectionHub* projection() const { return hub_.get(); }
    RunReport report() const;
    std::size_t memory_estimate() const;
    std::string term_text(TermId t) const { return print_term(problem_.sig, store_, t, cfg_.print); }

private:
    template <class Emit>
    void for_each_tuple(const Wdl& w, Emit&& emit);
    void candidate(OpId op, const TermId* args, std::size_t n, Weight wt);
    void register_new(TermId t);
    void on_goal(std::size_t goal, TermId t, bool direct);
    bool all_done() const;
    bool budget_exceeded();
    std::string candidate_text(OpId op, const TermId* args, std::size_t n) const;

    Problem problem_;
    SearchConfig cfg_;
    TermStore store_;
    MinimalTermStore d_;
    std::unique_ptr<PhiMap> phi_;
    ArgAdmissibility adm_;
    RedexTable redex_;
    std::unique_ptr<WdlStream> stream_;
    std::unique_ptr<ProjectionHub> hub_;
    StatsCollector stats_;

    std::vector<GoalResult> goals_;
    std::vector<std::vector<std::size_t>> group_goals_;
    std::vector<std::size_t> goal_group_;
    std::vector<EngineEvent> events_;
    std::vector<Code> scratch_;
    std::vector<std::pair<std::size_t, TermId>> composed_;
    bool discard_undef_ = true;
    bool stop_ = false;
    std::optional<StopReason> abort_;
    std::optional<Weight> current_weight_;
    std::uint64_t tick_ = 0;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace egen
