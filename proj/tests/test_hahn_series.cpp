#include <doctest.h>

#include <nseries/errors.hpp>
#include <nseries/hahn_series.hpp>
#include <nseries/random.hpp>
#include <nseries/text_io.hpp>

#include "oracles.hpp"

using namespace nseries;

namespace
{

const MonoidCtx lex1 = MonoidCtx::lex(1);

HahnPoly hp(const char *text, const MonoidCtx &ctx, std::size_t n)
{
    return parse_hahn(text, ctx, n);
}

} // namespace

TEST_CASE("addition")
{
    CHECK(hp("1", lex1, 3) + hp("t", lex1, 3) - hp("1", lex1, 3) == hp("t", lex1, 3));
    CHECK(hp_scale(0, hp("1 + 2*t^2", lex1, 3)).is_zero());
    CHECK(hp("2*t", lex1, 3) + hp("3*t", lex1, 3) == hp("5*t", lex1, 3));
    CHECK_THROWS_AS(hp("t", lex1, 3) + hp("t", lex1, 4), DimensionError);
    CHECK_THROWS_AS(hp("t", lex1, 3) + HahnPoly(MonoidCtx::product(1), 3), DimensionError);
}

TEST_CASE("multiplication")
{
    CHECK(hp("1 - t", lex1, 3) * hp("1 + t + t^2 + t^3", lex1, 3) == HahnPoly::unit(lex1, 3));
    const auto prod2 = MonoidCtx::product(2);
    CHECK(HahnPoly::monomial(prod2, 6, {1, 2}) * HahnPoly::monomial(prod2, 6, {2, 0}) ==
          HahnPoly::monomial(prod2, 6, {3, 2}));
    const auto a = hp("1/2 + 3*t^(1,0) - t^(0,2)", prod2, 4);
    CHECK(HahnPoly::unit(prod2, 4) * a == a);
    CHECK((HahnPoly::monomial(prod2, 4, {2, 1}) * HahnPoly::monomial(prod2, 4, {1, 1})).is_zero());
}

TEST_CASE("parallel and serial products agree")
{
    Rng rng(3);
    for (const auto &ctx : {MonoidCtx::lex(1), MonoidCtx::product(2), MonoidCtx::weighted({1, 2})}) {
        for (int t = 0; t < 10; ++t) {
            const auto a = random_hahn(rng, ctx, 7, 50);
            const auto b = random_hahn(rng, ctx, 7, 50);
            const auto c = random_hahn(rng, ctx, 7, 50);
            CHECK(a * b == reference::hp_mul(a, b));
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
        }
    }
}

TEST_CASE("coefficients of a product come from convolution pairs")
{
    Rng rng(23);
    const auto ctx = MonoidCtx::product(2);
    for (int t = 0; t < 10; ++t) {
        const auto a = random_hahn(rng, ctx, 5, 50);
        const auto b = random_hahn(rng, ctx, 5, 50);
        const auto ab = a * b;
        for (const auto &m : basis_universe(ctx, 5)) {
            Rational sum(0);
            for (const auto &[p, q] : oracle::brute_pairs(m, a.support(), b.support())) {
                sum += a.coeff(p) * b.coeff(q);
            }
            CHECK(ab.coeff(m) == sum);
        }
    }
}

TEST_CASE("negative exponents are rejected")
{
    HahnPoly a(lex1, 3);
    CHECK_THROWS_AS(a.add_to({-1}, Rational(1)), DomainError);
    CHECK_THROWS_AS(a.add_to({1, 1}, Rational(1)), DimensionError);
}

TEST_CASE("weights above the bound are dropped")
{
    HahnPoly a(MonoidCtx::weighted({1, 3}), 4);
    a.add_to({0, 2}, Rational(1));
    a.add_to({1, 1}, Rational(2));
    CHECK(a.support() == std::set<ExpVec>{{1, 1}});
}

TEST_CASE("ordered terms and basis universe")
{
    const auto ctx = MonoidCtx::weighted({1, 2});
    CHECK(basis_universe(ctx, 2) == std::vector<ExpVec>{{0, 0}, {1, 0}, {0, 1}, {2, 0}});
    CHECK(basis_universe(lex1, 3) == std::vector<ExpVec>{{0}, {1}, {2}, {3}});
    CHECK(basis_universe(MonoidCtx::product(2), 1) == std::vector<ExpVec>{{0, 0}, {0, 1}, {1, 0}});
    const auto a = hp("t^(2,0) + t^(0,1) + 5", ctx, 2);
    const auto terms = a.ordered_terms();
    REQUIRE(terms.size() == 3);
    CHECK(terms[0].first == ExpVec{0, 0});
    CHECK(terms[1].first == ExpVec{0, 1});
    CHECK(terms[2].first == ExpVec{2, 0});
}

TEST_CASE("strict domination")
{
    const auto w = hp_prec(hp("t^2", lex1, 3), hp("t", lex1, 3));
    REQUIRE(w.has_value());
    CHECK(w->at({2}) == ExpVec{1});
    CHECK_FALSE(hp_prec(HahnPoly(lex1, 3), HahnPoly(lex1, 3)).has_value());
    const auto v = hp("t + t^3", lex1, 3);
    CHECK_FALSE(hp_prec(v, v).has_value());
    // Zero is dominated by anything nonzero, vacuously.
    CHECK(hp_prec(HahnPoly(lex1, 3), v).has_value());
    CHECK_FALSE(hp_prec(v, HahnPoly(lex1, 3)).has_value());
}

TEST_CASE("strict domination is a strict order on random pairs")
{
    Rng rng(29);
    const auto ctx = MonoidCtx::product(2);
    for (int t = 0; t < 30; ++t) {
        const auto u = random_hahn(rng, ctx, 4, 25);
        const auto v = random_hahn(rng, ctx, 4, 25);
        const auto w = random_hahn(rng, ctx, 4, 25);
        if (!u.is_zero()) {
            CHECK_FALSE(hp_prec(u, u).has_value());
        }
        if (hp_prec(u, v) && hp_prec(v, w)) {
            CHECK(hp_prec(u, w).has_value());
        }
    }
}
