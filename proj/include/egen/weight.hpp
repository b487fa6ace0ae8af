#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace egen {

// Element of N ∪ {∞}. Arithmetic saturates at ∞.
class Weight {
public:
    static constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();

    constexpr Weight() = default;
    constexpr explicit Weight(std::uint64_t v) : v_(v) {}
    static constexpr Weight inf() { return Weight(kInf); }

    constexpr bool finite() const { return v_ != kInf; }
    constexpr std::uint64_t value() const { return v_; }

    friend constexpr auto operator<=>(Weight, Weight) = default;

    friend constexpr Weight operator+(Weight a, Weight b) {
        if (!a.finite() || !b.finite()) return inf();
        std::uint64_t r = a.v_ + b.v_;
        return r < a.v_ || r == kInf ? inf() : Weight(r);
    }

    std::string str() const;

private:
    std::uint64_t v_ = 0;
};

Weight weight_mul(std::uint64_t k, Weight w);

enum class WeightRule { Size, Height, Affine };

// SIZE(base) = base + Σx, HEIGHT(base) = base + max x, AFFINE(c; k1..kn) = c + Σ ki·xi.
struct WeightFn {
    WeightRule rule = WeightRule::Size;
    std::uint64_t base = 1;
    std::vector<std::uint64_t> coeffs;  // AFFINE only

    static WeightFn size(std::uint64_t base) { return {WeightRule::Size, base, {}}; }
    static WeightFn height(std::uint64_t base) { return {WeightRule::Height, base, {}}; }
    static WeightFn affine(std::uint64_t c, std::vector<std::uint64_t> k) {
        return {WeightRule::Affine, c, std::move(k)};
    }

    Weight apply(std::span<const Weight> args) const;

    // f(x1,x2) = f(x2,x1) for every binary argument pair.
    bool symmetric() const;
    // Weight behaves additively so that reassociating ⊕-trees preserves weight.
    bool associative_compatible() const;

    std::string str() const;
    bool operator==(const WeightFn&) const = default;
};

// Parses "size(2)", "height", "affine(1;1,2)". Bare "size"/"height" mean base 1.
std::optional<WeightFn> parse_weight_fn(const std::string& text);

struct WeightFnReport {
    bool monotonic = true;
    bool strictly_increasing = true;
    bool strict = true;
    std::vector<Weight> witness;  // argument tuple refuting the first failed property
    std::string failed;           // name of that property, empty if all hold

    bool ok() const { return failed.empty(); }
};

// Checks the three properties on every tuple of [0, bound]^arity (sampled when
// that grid is large); strictness is decided from the rule itself.
WeightFnReport validate_weight_fn(const WeightFn& fn, std::size_t arity, std::uint64_t bound = 8);

}  // namespace egen
