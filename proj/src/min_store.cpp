#include "egen/min_store.hpp"

#include <stdexcept>

namespace egen {

void MinimalTermStore::append(TermId t, Weight w, OpId op) {
    const std::uint32_t pos = static_cast<std::uint32_t>(terms_.size());
    if (layers_.empty() || layers_.back().weight != w) {
        if (!layers_.empty() && layers_.back().weight > w) throw std::logic_error("D appends out of weight order");
        index_[w.value()] = layers_.size();
        layers_.push_back(Layer{w, pos, pos, {}});
    }
    Layer& l = layers_.back();
    if (l.runs.empty() || l.runs.back().op != op) l.runs.push_back(OpRun{op, pos, pos});
    terms_.push_back(t);
    l.end = pos + 1;
    l.runs.back().end = pos + 1;
}

}  // namespace egen
