#include "egen/phi_map.hpp"

#include <cstring>

namespace egen {

PhiMap::PhiMap(const Signature& sig, const TermStore& store, std::uint64_t direct_budget, bool with_undef)
    : store_(store), k_(store.k()) {
    tables_.resize(sig.num_sorts());
    for (SortId s = 0; s < sig.num_sorts(); ++s) {
        Table& t = tables_[s];
        t.radix = sig.sort(s).cardinality();
        std::uint64_t storable = with_undef ? t.radix : sig.sort(s).size();
        std::uint64_t cells = 1, full = 1;
        bool fits = true;
        for (std::size_t i = 0; i < k_; ++i) {
            if (cells > direct_budget / t.radix) {
                fits = false;
                break;
            }
            cells *= t.radix;
            full *= storable;
        }
        t.direct = fits;
        t.full = fits ? full : 0;
        t.cells.assign(fits ? cells : 16, kEmpty);
    }
}

std::uint64_t PhiMap::hash(const Code* v) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (std::size_t i = 0; i < k_; ++i) {
        h ^= v[i] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdull;
    }
    return h ^ (h >> 33);
}

void PhiMap::grow(Table& t) {
    std::vector<std::uint32_t> old(t.cells.size() * 2, kEmpty);
    old.swap(t.cells);
    const std::size_t mask = t.cells.size() - 1;
    for (std::uint32_t e : old) {
        if (e == kEmpty) continue;
        std::size_t i = hash(resolve(e)) & mask;
        while (t.cells[i] != kEmpty) i = (i + 1) & mask;
        t.cells[i] = e;
    }
}

std::uint32_t* PhiMap::find(SortId s, const Code* vec) {
    Table& t = tables_[s];
    if (t.direct) {
        std::uint64_t idx = 0;
        for (std::size_t i = 0; i < k_; ++i) idx = idx * t.radix + vec[i];
        return &t.cells[idx];
    }
    if ((t.count + t.goals + 1) * 4 > t.cells.size() * 3) grow(t);
    const std::size_t mask = t.cells.size() - 1;
    std::size_t i = hash(vec) & mask;
    while (true) {
        std::uint32_t e = t.cells[i];
        if (e == kEmpty || std::memcmp(resolve(e), vec, k_ * sizeof(Code)) == 0) return &t.cells[i];
        i = (i + 1) & mask;
    }
}

std::uint32_t PhiMap::add_goal(SortId s, const Code* vec) {
    std::uint32_t* cell = find(s, vec);
    if (*cell != kEmpty && (*cell & kGoalBit)) return *cell & ~kGoalBit;
    std::uint32_t group = static_cast<std::uint32_t>(goal_vecs_.size() / k_);
    goal_vecs_.insert(goal_vecs_.end(), vec, vec + k_);
    if (*cell == kEmpty) {
        *cell = group | kGoalBit;
        ++tables_[s].goals;
    }
    return group;
}

bool PhiMap::saturated(SortId s) const {
    const Table& t = tables_[s];
    return t.full != 0 && t.count >= t.full;
}

std::size_t PhiMap::entries() const {
    std::size_t n = 0;
    for (const Table& t : tables_) n += t.count;
    return n;
}

std::size_t PhiMap::memory_bytes() const {
    std::size_t n = goal_vecs_.capacity() * sizeof(Code);
    for (const Table& t : tables_) n += t.cells.capacity() * sizeof(std::uint32_t);
    return n;
}

}  // namespace egen
