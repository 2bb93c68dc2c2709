#include <doctest.h>

#include <cmath>

#include "linkctr/errors.hpp"
#include "linkctr/rng.hpp"
#include "linkctr/tail.hpp"

using namespace linkctr;

TEST_CASE("ccdf: constant sample collapses to one point") {
    const std::vector<double> v{2.5, 2.5, 2.5};
    const auto table = ccdf(v);
    REQUIRE(table.size() == 1);
    CHECK(table[0].first == 2.5);
    CHECK(table[0].second == 1.0);
}

TEST_CASE("ccdf: non-increasing in x, anchored at 1") {
    Rng rng(1, StreamKind::shuffle, 0);
    std::vector<double> v;
    for (int i = 0; i < 500; ++i) v.push_back(rng.uniform() * 10);
    const auto table = ccdf(v);
    // rows come largest-x first, so probabilities grow along the table
    for (std::size_t i = 1; i < table.size(); ++i) {
        CHECK(table[i].first < table[i - 1].first);
        CHECK(table[i].second > table[i - 1].second);
    }
    CHECK(table.back().second == 1.0);
    CHECK(table.front().second > 0.0);
}

TEST_CASE("ccdf: empty input rejected") {
    CHECK_THROWS_AS(ccdf(std::vector<double>{}), argument_error);
}

TEST_CASE("tail_exponent: recovers a synthetic Pareto exponent") {
    // inverse-CDF sampling of p(x) ~ x^(-2.5) above xmin = 1
    Rng rng(7, StreamKind::shuffle, 0);
    std::vector<double> v;
    v.reserve(100000);
    for (int i = 0; i < 100000; ++i)
        v.push_back(std::pow(1.0 - rng.uniform(), -1.0 / 1.5));
    const double alpha = tail_exponent(v, 1.0);
    CHECK(alpha == doctest::Approx(2.5).epsilon(0.05 / 2.5));
}

TEST_CASE("tail_exponent: input validation") {
    std::vector<double> v(100, 2.0);
    CHECK_THROWS_AS(tail_exponent(v, 0.0), argument_error);
    CHECK_THROWS_AS(tail_exponent(std::vector<double>{1, 2, 3}, 1.0), argument_error);
    CHECK_THROWS_AS(tail_exponent(v, 2.0), argument_error); // all mass at xmin
}
