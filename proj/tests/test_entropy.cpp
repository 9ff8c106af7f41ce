#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "secregen/entropy.hpp"
#include "test_util.hpp"

using namespace secregen;

TEST_CASE("log values reduce over the prime basis") {
    LogValue a = LogValue::log_of_integer(12); // 2 log 2 + log 3
    LogValue b = LogValue::log_of_integer(3);
    LogValue c = (a - b) - LogValue::log_of_integer(4);
    CHECK(c.is_zero());
    CHECK(c.sign() == 0);
    CHECK(LogValue::log_of_integer(1).is_zero());
}

TEST_CASE("sign of mixed combinations") {
    // log 9 - log 8 > 0, log 8 - log 9 < 0
    LogValue v = LogValue::log_of_integer(9) - LogValue::log_of_integer(8);
    CHECK(v.sign() == 1);
    CHECK((LogValue::log_of_integer(8) - LogValue::log_of_integer(9)).sign() == -1);
    // scaled below the float margin: forces the exact big-integer comparison
    LogValue tiny = (LogValue::log_of_integer(3) - LogValue::log_of_integer(2))
                        .scale(Rational(1, 1000000000));
    CHECK(tiny.sign() == 1);
    CHECK((LogValue() - tiny).sign() == -1);
}

TEST_CASE("multiple-of-log-q extraction") {
    LogValue v = LogValue::scaled_log(Rational(3, 2), 5);
    auto r = v.as_multiple_of_log(5);
    REQUIRE(r.has_value());
    CHECK(*r == Rational(3, 2));
    CHECK(LogValue::log_of_integer(9).as_multiple_of_log(3) == Rational(2));
    CHECK(LogValue::log_of_integer(9).as_multiple_of_log(9) == Rational(1));
    CHECK(!LogValue::log_of_integer(6).as_multiple_of_log(5).has_value());
    CHECK(LogValue().as_multiple_of_log(7) == Rational(0));
}

TEST_CASE("entropies of simple distributions") {
    // three independent uniform bits X,Y,Z and a constant U
    JointDistribution d({2, 2, 2, 1});
    for (std::uint32_t x = 0; x < 2; ++x)
        for (std::uint32_t y = 0; y < 2; ++y)
            for (std::uint32_t z = 0; z < 2; ++z) d.add_weight({x, y, z, 0}, 1);
    LogValue bit = LogValue::log_of_integer(2);
    CHECK(d.entropy({0}) == bit);
    CHECK(d.entropy({0, 1}) == bit + bit);
    CHECK(d.conditional_entropy({0}, {1}) == bit);
    CHECK(d.mutual_information({0}, {1}).is_zero());
    // LHS 6 bits, RHS 6 bits: equality
    LogValue lhs = d.conditional_entropy({0, 1}, {3}) + d.conditional_entropy({0, 2}, {3}) +
                   d.conditional_entropy({1, 2}, {3});
    LogValue rhs = d.conditional_entropy({0, 1, 2}, {3}).scale(Rational(2));
    CHECK((lhs - rhs).is_zero());
    CHECK(triple_conditional_entropy_inequality(d, 0, 1, 2, 3));
}

TEST_CASE("fully correlated bit: 3 >= 2") {
    JointDistribution d({2, 2, 2, 1});
    d.add_weight({0, 0, 0, 0}, 1);
    d.add_weight({1, 1, 1, 0}, 1);
    LogValue bit = LogValue::log_of_integer(2);
    LogValue lhs = d.conditional_entropy({0, 1}, {3}) + d.conditional_entropy({0, 2}, {3}) +
                   d.conditional_entropy({1, 2}, {3});
    LogValue rhs = d.conditional_entropy({0, 1, 2}, {3}).scale(Rational(2));
    CHECK(lhs == bit + bit + bit);
    CHECK(rhs == bit + bit);
    CHECK(triple_conditional_entropy_inequality(d, 0, 1, 2, 3));
}

TEST_CASE("deterministic all-constant: 0 >= 0") {
    JointDistribution d({1, 1, 1, 1});
    d.add_weight({0, 0, 0, 0}, 5);
    CHECK(d.entropy({0, 1, 2, 3}).is_zero());
    CHECK(triple_conditional_entropy_inequality(d, 0, 1, 2, 3));
}

TEST_CASE("triple inequality holds on randomized joints") {
    TestRng rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
        std::uint32_t cx = 1 + std::uint32_t(rng.below(3));
        std::uint32_t cy = 1 + std::uint32_t(rng.below(3));
        std::uint32_t cz = 1 + std::uint32_t(rng.below(3));
        std::uint32_t cu = 1 + std::uint32_t(rng.below(2));
        JointDistribution d({cx, cy, cz, cu});
        bool nonempty = false;
        for (std::uint32_t x = 0; x < cx; ++x)
            for (std::uint32_t y = 0; y < cy; ++y)
                for (std::uint32_t z = 0; z < cz; ++z)
                    for (std::uint32_t u = 0; u < cu; ++u) {
                        std::uint64_t w = rng.below(6);
                        if (w) { d.add_weight({x, y, z, u}, w); nonempty = true; }
                    }
        if (!nonempty) { d.add_weight({0, 0, 0, 0}, 1); }
        CHECK(triple_conditional_entropy_inequality(d, 0, 1, 2, 3));
    }
}

TEST_CASE("entropy agrees with a float computation") {
    JointDistribution d({3, 1, 1, 1});
    d.add_weight({0, 0, 0, 0}, 1);
    d.add_weight({1, 0, 0, 0}, 2);
    d.add_weight({2, 0, 0, 0}, 3);
    double expect = 0.0;
    for (double w : {1.0, 2.0, 3.0}) {
        double p = w / 6.0;
        expect -= p * std::log(p);
    }
    CHECK(std::abs(d.entropy({0}).to_double() - expect) < 1e-12);
}
