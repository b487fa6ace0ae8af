#pragma once

#include <unordered_map>
#include <vector>

#include "egen/signature.hpp"
#include "egen/term_store.hpp"

namespace egen {

// Terms of D (one minimal-weight representative per reached value vector),
// grouped by weight and, within a weight, by root operator. Appends arrive in
// WDL order so each (weight, op) group is one contiguous run.
class MinimalTermStore {
public:
    struct OpRun {
        OpId op;
        std::uint32_t begin, end;  // positions in terms()
    };
    struct Layer {
        Weight weight;
        std::uint32_t begin, end;
        std::vector<OpRun> runs;
    };

    void append(TermId t, Weight w, OpId op);

    const Layer* layer(Weight w) const {
        auto it = index_.find(w.value());
        return it == index_.end() ? nullptr : &layers_[it->second];
    }
    bool inhabited(Weight w) const { return layer(w) != nullptr; }
    const std::vector<TermId>& terms() const { return terms_; }
    const std::vector<Layer>& layers() const { return layers_; }
    std::size_t size() const { return terms_.size(); }

private:
    std::vector<TermId> terms_;
    std::vector<Layer> layers_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
};

}  // namespace egen
