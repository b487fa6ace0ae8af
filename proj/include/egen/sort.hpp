#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace egen {

// Values of a sort are encoded as codes 0..n-1; code n is ⊥.
using Code = std::uint32_t;
using SortId = std::uint32_t;

enum class SortKind { Enum, IntRange, Bool };

class Sort {
public:
    static Sort enumeration(std::string name, std::vector<std::string> values);
    static Sort int_range(std::string name, std::int64_t lo, std::int64_t hi);
    static Sort boolean(std::string name = "bool");

    const std::string& name() const { return name_; }
    SortKind kind() const { return kind_; }
    bool is_int() const { return kind_ == SortKind::IntRange; }
    bool is_bool() const { return kind_ == SortKind::Bool; }

    // Number of defined values; also the code of ⊥.
    Code size() const { return size_; }
    Code undef() const { return size_; }
    std::uint64_t cardinality() const { return std::uint64_t(size_) + 1; }
    bool defined(Code c) const { return c < size_; }

    std::int64_t lo() const { return lo_; }
    std::int64_t hi() const { return hi_; }

    // Integer view used by native operators: int value for IntRange, 0/1 for
    // Bool, the code itself for Enum.
    std::int64_t decode(Code c) const { return kind_ == SortKind::IntRange ? lo_ + std::int64_t(c) : std::int64_t(c); }
    Code encode(std::int64_t v) const;

    std::string format(Code c) const;
    // Accepts a value literal or "u" for ⊥.
    std::optional<Code> parse(const std::string& text) const;

    const std::vector<std::string>& names() const { return names_; }
    bool operator==(const Sort&) const = default;

private:
    std::string name_;
    SortKind kind_ = SortKind::Enum;
    std::vector<std::string> names_;
    std::int64_t lo_ = 0, hi_ = -1;
    Code size_ = 0;
};

}  // namespace egen
