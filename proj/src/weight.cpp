#include "egen/weight.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace egen {

std::string Weight::str() const { return finite() ? std::to_string(v_) : std::string("inf"); }

Weight weight_mul(std::uint64_t k, Weight w) {
    if (!w.finite()) return k == 0 ? Weight(0) : Weight::inf();
    if (k != 0 && w.value() > (Weight::kInf - 1) / k) return Weight::inf();
    return Weight(k * w.value());
}

Weight WeightFn::apply(std::span<const Weight> args) const {
    for (Weight a : args)
        if (!a.finite()) return Weight::inf();
    Weight r(base);
    switch (rule) {
    case WeightRule::Size:
        for (Weight a : args) r = r + a;
        break;
    case WeightRule::Height: {
        Weight m(0);
        for (Weight a : args) m = std::max(m, a);
        r = r + m;
        break;
    }
    case WeightRule::Affine:
        for (std::size_t i = 0; i < args.size(); ++i) {
            std::uint64_t k = i < coeffs.size() ? coeffs[i] : 0;
            r = r + weight_mul(k, args[i]);
        }
        break;
    }
    return r;
}

bool WeightFn::symmetric() const {
    if (rule != WeightRule::Affine) return true;
    return std::adjacent_find(coeffs.begin(), coeffs.end(), std::not_equal_to<>()) == coeffs.end();
}

bool WeightFn::associative_compatible() const {
    if (rule == WeightRule::Size) return base >= 1;
    if (rule == WeightRule::Affine)
        return base >= 1 && coeffs.size() == 2 && coeffs[0] == 1 && coeffs[1] == 1;
    return false;
}

std::string WeightFn::str() const {
    std::ostringstream os;
    switch (rule) {
    case WeightRule::Size: os << "size(" << base << ")"; break;
    case WeightRule::Height: os << "height(" << base << ")"; break;
    case WeightRule::Affine:
        os << "affine(" << base << ";";
        for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? "," : "") << coeffs[i];
        os << ")";
        break;
    }
    return os.str();
}

namespace {

std::optional<std::uint64_t> parse_uint(const std::string& s) {
    if (s.empty() || s.size() > 18) return std::nullopt;
    std::uint64_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') return std::nullopt;
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return v;
}

std::string strip(std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    return s;
}

}  // namespace

std::optional<WeightFn> parse_weight_fn(const std::string& text) {
    std::string s = strip(text);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    auto open = s.find('(');
    std::string name = s.substr(0, open);
    std::string inner;
    if (open != std::string::npos) {
        if (s.back() != ')') return std::nullopt;
        inner = s.substr(open + 1, s.size() - open - 2);
    }
    if (name == "size" || name == "height") {
        std::uint64_t base = 1;
        if (!inner.empty()) {
            auto b = parse_uint(inner);
            if (!b) return std::nullopt;
            base = *b;
        }
        return name == "size" ? WeightFn::size(base) : WeightFn::height(base);
    }
    if (name == "affine") {
        auto semi = inner.find(';');
        auto c = parse_uint(inner.substr(0, semi));
        if (!c) return std::nullopt;
        std::vector<std::uint64_t> ks;
        if (semi != std::string::npos) {
            std::stringstream ss(inner.substr(semi + 1));
            std::string item;
            while (std::getline(ss, item, ',')) {
                auto k = parse_uint(item);
                if (!k) return std::nullopt;
                ks.push_back(*k);
            }
        }
        return WeightFn::affine(*c, std::move(ks));
    }
    return std::nullopt;
}

WeightFnReport validate_weight_fn(const WeightFn& fn, std::size_t arity, std::uint64_t bound) {
    WeightFnReport rep;
    // Every rule maps finite arguments to finite results unless arithmetic
    // saturates, which the grid below cannot reach.
    rep.strict = true;
    if (arity == 0) {
        if (!fn.apply({}).finite()) {
            rep.strict = false;
            rep.failed = "strict";
        }
        return rep;
    }

    std::vector<std::vector<Weight>> grid;
    std::uint64_t side = bound + 1;
    std::uint64_t total = 1;
    bool exhaustive = true;
    for (std::size_t i = 0; i < arity; ++i) {
        if (total > 20000 / side) {
            exhaustive = false;
            break;
        }
        total *= side;
    }
    if (exhaustive) {
        std::vector<Weight> x(arity, Weight(0));
        for (std::uint64_t n = 0; n < total; ++n) {
            std::uint64_t m = n;
            for (std::size_t i = 0; i < arity; ++i) {
                x[i] = Weight(m % side);
                m /= side;
            }
            grid.push_back(x);
        }
    } else {
        std::mt19937_64 rng(arity * 7919 + bound);
        std::uniform_int_distribution<std::uint64_t> d(0, bound);
        grid.push_back(std::vector<Weight>(arity, Weight(0)));
        for (int n = 0; n < 20000; ++n) {
            std::vector<Weight> x(arity);
            for (auto& w : x) w = Weight(d(rng));
            grid.push_back(std::move(x));
        }
    }

    for (const auto& x : grid) {
        Weight fx = fn.apply(x);
        if (!fx.finite()) {
            rep.strict = false;
            if (rep.failed.empty()) { rep.failed = "strict"; rep.witness = x; }
        }
        for (std::size_t i = 0; i < arity; ++i) {
            if (!(x[i] < fx) && rep.strictly_increasing) {
                rep.strictly_increasing = false;
                if (rep.failed.empty()) { rep.failed = "strictly-increasing"; rep.witness = x; }
            }
            auto y = x;
            y[i] = Weight(x[i].value() + 1);
            if (fn.apply(y) < fx && rep.monotonic) {
                rep.monotonic = false;
                if (rep.failed.empty()) { rep.failed = "monotonic"; rep.witness = x; }
            }
        }
    }
    return rep;
}

}  // namespace egen
