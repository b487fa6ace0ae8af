#include "egen/stats.hpp"

#include <algorithm>
#include <ostream>

namespace egen {

void RunReport::write_csv(std::ostream& os) const {
    os << "weight,new,old,undef,millis\n";
    for (const auto& r : rows)
        os << r.weight.str() << "," << r.fresh << "," << r.again << "," << r.undef << "," << r.millis << "\n";
}

void RunReport::write_summary(std::ostream& os) const {
    const auto& c = counters;
    os << "computeSolved " << c.compute_solved << "\n"
       << "computeAgain " << c.compute_again << "\n"
       << "computeUndef " << c.compute_undef << "\n"
       << "phiLookups " << c.phi_lookups() << "\n"
       << "wdlsDrawn " << c.wdls_drawn << "\n"
       << "termsInD " << terms_in_d << "\n"
       << "peakPendingWdls " << peak_pending_wdls << "\n"
       << "peakMemoryBytes " << peak_memory_bytes << "\n"
       << "millis " << millis << "\n";
}

StatsCollector::StatsCollector() : start_(std::chrono::steady_clock::now()), row_start_(start_) {}

double StatsCollector::elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
}

void StatsCollector::begin_weight(Weight w) {
    auto now = std::chrono::steady_clock::now();
    if (!report_.rows.empty())
        report_.rows.back().millis = std::chrono::duration<double, std::milli>(now - row_start_).count();
    row_start_ = now;
    report_.rows.push_back(WeightRow{w});
}

void StatsCollector::note_memory(std::size_t bytes) {
    report_.peak_memory_bytes = std::max(report_.peak_memory_bytes, bytes);
}

void StatsCollector::note_pending(std::size_t n) { report_.peak_pending_wdls = std::max(report_.peak_pending_wdls, n); }

RunReport StatsCollector::snapshot(std::size_t d_terms, std::size_t phi_entries) const {
    RunReport r = report_;
    if (!r.rows.empty())
        r.rows.back().millis =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - row_start_).count();
    r.terms_in_d = d_terms;
    r.phi_entries = phi_entries;
    r.millis = elapsed_ms();
    return r;
}

}  // namespace egen
