#include <doctest.h>

#include <vector>

#include <nseries/errors.hpp>
#include <nseries/series_calculus.hpp>
#include <nseries/text_io.hpp>

#include "oracles.hpp"

using namespace nseries;

namespace
{

FreeSeries fs(const char *text, std::size_t m, std::size_t n)
{
    return parse_free_series(text, m, n);
}

FreeSeries x(std::uint32_t i, std::size_t n)
{
    return FreeSeries::variable(2, n, i);
}

} // namespace

TEST_CASE("exponential and logarithm series")
{
    CHECK(series_E0(3) == fs("1 + X0 + 1/2*X0 X0 + 1/6*X0 X0 X0", 1, 3));
    CHECK(series_E0(0) == FreeSeries::unit(1, 0));
    CHECK(series_E0(1) == fs("1 + X0", 1, 1));
    CHECK(series_L0(3) == fs("X0 - 1/2*X0 X0 + 1/3*X0 X0 X0", 1, 3));
    CHECK(series_L0(1) == fs("X0", 1, 1));
    CHECK(series_L0(0).is_zero());
}

TEST_CASE("substitution")
{
    const std::size_t n = 6;
    std::vector<FreeSeries> l{series_L0(n)};
    CHECK(fs_substitute(series_E0(n), l) == fs("1 + X0", 1, n));
    std::vector<FreeSeries> e{series_E0(n) - FreeSeries::unit(1, n)};
    CHECK(fs_substitute(series_L0(n), e) == fs("X0", 1, n));

    std::vector<FreeSeries> swap{x(1, 3), x(0, 3)};
    CHECK(fs_substitute(fs("X0 X1", 2, 3), swap) == fs("X1 X0", 2, 3));

    std::vector<FreeSeries> unit_arg{FreeSeries::unit(1, 3)};
    CHECK_THROWS_AS(fs_substitute(series_E0(3), unit_arg), NotInIdealError);
}

TEST_CASE("block terms")
{
    CHECK(bch_term(1, 2) == fs("X0 + X1 + 1/2*X0 X0 + X0 X1 + 1/2*X1 X1", 2, 2));
    CHECK(bch_term(2, 1).is_zero());
    CHECK(bch_term(2, 2) == fs("X0 X0 + X0 X1 + X1 X0 + X1 X1", 2, 2));
    CHECK_THROWS_AS(bch_term(0, 3), DomainError);
    for (std::size_t k = 1; k <= 4; ++k) {
        CHECK(bch_term(k, 5) == oracle::power_by_factorizations(oracle::exp_product_minus_one(5), k));
    }
}

TEST_CASE("low-degree BCH coefficients")
{
    CHECK(bch_product(1) == fs("X0 + X1", 2, 1));
    CHECK(bch_product(2) == fs("X0 + X1 + 1/2*X0 X1 - 1/2*X1 X0", 2, 2));

    const auto x0 = x(0, 4);
    const auto x1 = x(1, 4);
    const auto c01 = commutator(x0, x1);
    const auto deg3 = Rational(1, 12) * (commutator(x0, c01) - commutator(x1, c01));
    CHECK(fs_slice(bch_product(3), 3) == fs_regrade(deg3, 3));

    const auto deg4 = Rational(-1, 24) * commutator(x1, commutator(x0, c01));
    CHECK(fs_slice(bch_product(4), 4) == deg4);
}

TEST_CASE("Dynkin formula")
{
    CHECK(dynkin_bch(1) == fs("X0 + X1", 2, 1));
    CHECK(dynkin_bch(2) == fs("X0 + X1 + 1/2*X0 X1 - 1/2*X1 X0", 2, 2));
    CHECK(dynkin_bch(5) == bch_product(5));
}

TEST_CASE("Dynkin-Specht-Wever criterion")
{
    const auto c = commutator(x(0, 2), x(1, 2));
    CHECK(dynkin_project(c, 2) == Rational(2) * c);
    CHECK(is_lie_slice(c, 2));
    const auto p = fs("X0 X1", 2, 2);
    CHECK(dynkin_project(p, 2) == c);
    CHECK_FALSE(is_lie_slice(p, 2));
    CHECK(is_lie_slice(bch_product(3), 3));
    CHECK(is_lie_slice(bch_product(3), 2));
    CHECK_FALSE(is_lie_slice(bch_term(1, 3), 2));
}
