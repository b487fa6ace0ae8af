#include "egen/sort.hpp"

#include <algorithm>
#include <charconv>

#include "egen/errors.hpp"

namespace egen {

Sort Sort::enumeration(std::string name, std::vector<std::string> values) {
    Sort s;
    s.name_ = std::move(name);
    s.kind_ = SortKind::Enum;
    s.names_ = std::move(values);
    s.size_ = static_cast<Code>(s.names_.size());
    return s;
}

Sort Sort::int_range(std::string name, std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw ConfigError("empty integer range for sort " + name);
    if (hi - lo >= (std::int64_t(1) << 31)) throw ConfigError("integer range too large for sort " + name);
    Sort s;
    s.name_ = std::move(name);
    s.kind_ = SortKind::IntRange;
    s.lo_ = lo;
    s.hi_ = hi;
    s.size_ = static_cast<Code>(hi - lo + 1);
    return s;
}

Sort Sort::boolean(std::string name) {
    Sort s = enumeration(std::move(name), {"f", "t"});
    s.kind_ = SortKind::Bool;
    return s;
}

Code Sort::encode(std::int64_t v) const {
    if (kind_ == SortKind::IntRange) return v < lo_ || v > hi_ ? undef() : Code(v - lo_);
    return v < 0 || v >= std::int64_t(size_) ? undef() : Code(v);
}

std::string Sort::format(Code c) const {
    if (!defined(c)) return "u";
    if (kind_ == SortKind::IntRange) return std::to_string(lo_ + std::int64_t(c));
    return names_[c];
}

std::optional<Code> Sort::parse(const std::string& text) const {
    if (text == "u" || text == "⊥") return undef();
    if (kind_ == SortKind::IntRange) {
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc() || p != text.data() + text.size()) return std::nullopt;
        Code c = encode(v);
        if (!defined(c)) return std::nullopt;
        return c;
    }
    auto it = std::find(names_.begin(), names_.end(), text);
    if (it == names_.end()) {
        if (kind_ == SortKind::Bool) {
            if (text == "true" || text == "1") return Code(1);
            if (text == "false" || text == "0") return Code(0);
        }
        return std::nullopt;
    }
    return static_cast<Code>(it - names_.begin());
}

}  // namespace egen
