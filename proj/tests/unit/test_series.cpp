#include <doctest.h>

#include "cubic/errors.hpp"
#include "helpers.hpp"

using namespace cubic;
using testing::ser;

TEST_CASE("series products truncate") {
    const auto cfg = RingConfig::make(5, 4);
    CHECK(ser(cfg, {1, 1}) * ser(cfg, {1, 4}) == ser(cfg, {1, 0, 4}));
    CHECK((ser(cfg, {0, 0, 1}) * ser(cfg, {0, 0, 0, 1})).is_zero());
    CHECK(ser(cfg, {1, 1}) * ser(cfg, {1, 4, 1, 4}) == ser(cfg, {1}));
}

TEST_CASE("series inverses") {
    const auto cfg = RingConfig::make(5, 4);
    CHECK(ser(cfg, {1}).inverse() == ser(cfg, {1}));
    CHECK(ser(cfg, {1, 1}).inverse() == ser(cfg, {1, 4, 1, 4}));
    CHECK(ser(cfg, {2}).inverse() == ser(cfg, {3}));
    CHECK(ser(cfg, {3, 1, 4}).inverse().inverse() == ser(cfg, {3, 1, 4}));
    CHECK_THROWS_AS(ser(cfg, {0, 1}).inverse(), NonUnitError);
}

TEST_CASE("series valuations") {
    const auto cfg = RingConfig::make(5, 6);
    CHECK(ser(cfg, {0, 0, 1, 1}).valuation() == 2);
    CHECK(Series(cfg).valuation() == kInfinity);
    CHECK(ser(cfg, {3}).valuation() == 0);
    CHECK((ser(cfg, {0, 2}) * ser(cfg, {0, 0, 3})).valuation() == 3);
}

TEST_CASE("ring configuration is validated") {
    CHECK_THROWS_AS(RingConfig::make(3, 4), ConfigError);
    CHECK_THROWS_AS(RingConfig::make(9, 4), ConfigError);
    CHECK_THROWS_AS(RingConfig::make(5, 0), ConfigError);
    CHECK_THROWS_AS(ser(RingConfig::make(5, 4), {1}) + ser(RingConfig::make(7, 4), {1}), ConfigError);
}
