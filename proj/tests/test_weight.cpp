#include <doctest.h>

#include "egen/weight.hpp"

using namespace egen;

TEST_CASE("weight arithmetic saturates at infinity") {
    CHECK((Weight(3) + Weight(4)) == Weight(7));
    CHECK((Weight(3) + Weight::inf()) == Weight::inf());
    CHECK(Weight::inf().str() == "inf");
    CHECK(Weight(2) < Weight::inf());
    CHECK_FALSE(Weight::inf().finite());
}

TEST_CASE("weight rules") {
    std::vector<Weight> a{Weight(2), Weight(3)};
    CHECK(WeightFn::size(1).apply(a) == Weight(6));
    CHECK(WeightFn::height(1).apply(a) == Weight(4));
    CHECK(WeightFn::affine(1, {1, 2}).apply(a) == Weight(9));
    CHECK(WeightFn::size(1).apply({}) == Weight(1));
    CHECK(WeightFn::size(2).apply({}) == Weight(2));
    std::vector<Weight> inf{Weight(1), Weight::inf()};
    CHECK(WeightFn::size(1).apply(inf) == Weight::inf());
}

TEST_CASE("weight function text") {
    CHECK(parse_weight_fn("size")->str() == "size(1)");
    CHECK(parse_weight_fn("height(2)")->str() == "height(2)");
    CHECK(parse_weight_fn("affine(1;1,2)")->str() == "affine(1;1,2)");
    CHECK_FALSE(parse_weight_fn("bogus").has_value());
    CHECK_FALSE(parse_weight_fn("size(x)").has_value());
}

TEST_CASE("symmetry and associativity compatibility") {
    CHECK(WeightFn::size(1).symmetric());
    CHECK(WeightFn::height(1).symmetric());
    CHECK_FALSE(WeightFn::affine(1, {1, 2}).symmetric());
    CHECK(WeightFn::size(1).associative_compatible());
    CHECK(WeightFn::affine(1, {1, 1}).associative_compatible());
    CHECK_FALSE(WeightFn::height(1).associative_compatible());
    CHECK_FALSE(WeightFn::affine(1, {1, 2}).associative_compatible());
}

TEST_CASE("validator accepts the standard rules") {
    for (std::size_t ar = 0; ar <= 3; ++ar) {
        CHECK(validate_weight_fn(WeightFn::size(1), ar).ok());
        CHECK(validate_weight_fn(WeightFn::height(1), ar).ok());
    }
    CHECK(validate_weight_fn(WeightFn::affine(1, {1, 1}), 2).ok());
    CHECK(validate_weight_fn(WeightFn::affine(3, {2, 1}), 2).ok());
}

TEST_CASE("plain sum is not strictly increasing") {
    auto r = validate_weight_fn(WeightFn::affine(0, {1, 1}), 2);
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.strictly_increasing);
    CHECK(r.witness.size() == 2);
}

TEST_CASE("zero coefficient breaks monotonicity in that argument") {
    auto r = validate_weight_fn(WeightFn::affine(1, {1, 0}), 2);
    CHECK_FALSE(r.ok());
}
