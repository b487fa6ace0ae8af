#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "egen/weight.hpp"

namespace egen {

struct WeightRow {
    Weight weight;
    std::uint64_t fresh = 0;   // candidates with an unseen vector
    std::uint64_t again = 0;   // candidates whose vector was already reached
    std::uint64_t undef = 0;   // candidates with a ⊥ component
    double millis = 0;
};

struct Counters {
    std::uint64_t compute_solved = 0;
    std::uint64_t compute_again = 0;
    std::uint64_t compute_undef = 0;
    std::uint64_t wdls_drawn = 0;
    std::uint64_t wdls_saturated = 0;      // skipped because the result sort was saturated
    std::uint64_t redex_skips = 0;         // argument-op combinations rejected as redices
    std::uint64_t comm_distinct_pairs = 0; // commutative op applied to two distinct terms
    std::uint64_t compositions = 0;

    std::uint64_t phi_lookups() const { return compute_solved + compute_again; }
    std::uint64_t built() const { return compute_solved + compute_again + compute_undef; }
};

struct RunReport {
    Counters counters;
    std::vector<WeightRow> rows;
    std::size_t peak_pending_wdls = 0;
    std::size_t peak_memory_bytes = 0;
    std::size_t terms_in_d = 0;
    std::size_t phi_entries = 0;
    double millis = 0;

    void write_csv(std::ostream& os) const;
    void write_summary(std::ostream& os) const;
};

// Accumulates counters and closes a per-weight row whenever the drawn weight
// increases.
class StatsCollector {
public:
    StatsCollector();

    void begin_weight(Weight w);
    void solved() { ++report_.counters.compute_solved; if (!report_.rows.empty()) ++report_.rows.back().fresh; }
    void again() { ++report_.counters.compute_again; if (!report_.rows.empty()) ++report_.rows.back().again; }
    void undef() { ++report_.counters.compute_undef; if (!report_.rows.empty()) ++report_.rows.back().undef; }
    Counters& counters() { return report_.counters; }
    void note_memory(std::size_t bytes);
    void note_pending(std::size_t n);
    double elapsed_ms() const;
    RunReport snapshot(std::size_t d_terms, std::size_t phi_entries) const;

private:
    RunReport report_;
    std::chrono::steady_clock::time_point start_, row_start_;
};

}  // namespace egen
