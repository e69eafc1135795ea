#include <doctest.h>

#include <nseries/errors.hpp>
#include <nseries/free_algebra.hpp>
#include <nseries/random.hpp>
#include <nseries/text_io.hpp>

#include "oracles.hpp"

using namespace nseries;

namespace
{

FreeSeries fs(const char *text, std::size_t m, std::size_t n)
{
    return parse_free_series(text, m, n);
}

} // namespace

TEST_CASE("word concatenation")
{
    CHECK(word_concat(Word{0, 1}, Word{0}) == Word{0, 1, 0});
    CHECK(word_concat(Word{}, Word{1}) == Word{1});
    CHECK(word_concat(Word{0}, Word{}) == Word{0});
    CHECK(word_concat(Word{0, 1}, Word{1}).length() == 3);
}

TEST_CASE("factorizations enumerate n+1 splittings in left-split order")
{
    using P = std::vector<std::pair<Word, Word>>;
    CHECK(factorizations(Word{0, 1}) == P{{Word{}, Word{0, 1}}, {Word{0}, Word{1}}, {Word{0, 1}, Word{}}});
    CHECK(factorizations(Word{}) == P{{Word{}, Word{}}});
    CHECK(factorizations(Word{0}) == P{{Word{}, Word{0}}, {Word{0}, Word{}}});
    for (const auto &[b, g] : factorizations(Word{1, 0, 1, 1})) {
        CHECK(word_concat(b, g) == Word{1, 0, 1, 1});
    }
}

TEST_CASE("graded word order")
{
    CHECK(Word{1} < Word{0, 0});
    CHECK(Word{0, 1} < Word{1, 0});
    CHECK(Word{} < Word{0});
}

TEST_CASE("addition and scaling")
{
    CHECK(fs("X0", 2, 3) + fs("X1", 2, 3) == fs("X0 + X1", 2, 3));
    CHECK(fs_scale(0, fs("1 + X0 X1", 2, 3)).is_zero());
    const auto sum = fs("X0 + 1/2*X0 X1", 2, 3) + fs("-X0", 2, 3);
    CHECK(sum == fs("1/2*X0 X1", 2, 3));
    CHECK(sum.terms().size() == 1);
    CHECK_THROWS_AS(fs("X0", 2, 3) + fs("X0", 2, 4), DimensionError);
    CHECK_THROWS_AS(fs("X0", 2, 3) + fs("X0", 3, 3), DimensionError);
}

TEST_CASE("Cauchy product")
{
    const auto x = fs("X0 + X1", 2, 2);
    CHECK(x * x == fs("X0 X0 + X0 X1 + X1 X0 + X1 X1", 2, 2));
    CHECK(fs("1 + X0", 1, 3) * fs("1 - X0 + X0 X0 - X0 X0 X0", 1, 3) == FreeSeries::unit(1, 3));
    const auto p = fs("2 - X0 X1 + 1/3*X1", 2, 4);
    CHECK(FreeSeries::unit(2, 4) * p == p);
    CHECK(p * FreeSeries::unit(2, 4) == p);
    // Truncation drops words longer than N.
    CHECK((fs("X0 X0", 1, 3) * fs("X0 X0", 1, 3)).is_zero());
    CHECK_THROWS_AS(fs("X0", 2, 2) * fs("X0", 2, 3), DimensionError);
}

TEST_CASE("Cauchy product agrees with the factorization oracle")
{
    Rng rng(7);
    for (int t = 0; t < 20; ++t) {
        const auto p = random_free_series(rng, 2, 5, 40, rng.chance(50));
        const auto q = random_free_series(rng, 2, 5, 40, rng.chance(50));
        const auto expected = oracle::product_by_factorizations(p, q);
        CHECK(fs_mul(p, q) == expected);
        CHECK(reference::fs_mul(p, q) == expected);
    }
}

TEST_CASE("geometric inverse")
{
    CHECK(fs_geometric_inverse(fs("1 + X0", 1, 3)) == fs("1 - X0 + X0 X0 - X0 X0 X0", 1, 3));
    CHECK(fs_geometric_inverse(fs("2", 1, 3)) == fs("1/2", 1, 3));
    CHECK_THROWS_AS(fs_geometric_inverse(fs("X0", 1, 3)), NotAUnitError);
    CHECK_THROWS_AS(fs_geometric_inverse(FreeSeries(2, 3)), NotAUnitError);
}

TEST_CASE("support slices")
{
    CHECK(fs_support_slice(fs("1 + X0 X1", 2, 3), 2) == std::set<Word>{Word{0, 1}});
    CHECK(fs_support_slice(fs("1", 2, 3), 1).empty());
    // Four words expected by expanding the square with the oracle product.
    const auto x = fs("X0 + X1", 2, 2);
    const auto square = oracle::product_by_factorizations(x, x);
    CHECK(square.terms().size() == 4);
    CHECK(fs_support_slice(x * x, 2) == fs_support_slice(square, 2));
    CHECK(fs_support_slice(x * x, 2) == std::set<Word>{Word{0, 0}, Word{0, 1}, Word{1, 0}, Word{1, 1}});
}

TEST_CASE("letters outside the alphabet are rejected")
{
    FreeSeries p(2, 3);
    CHECK_THROWS_AS(p.add_to(Word{2}, Rational(1)), DimensionError);
}

TEST_CASE("ring laws on random series")
{
    Rng rng(11);
    for (std::size_t n = 0; n <= 6; ++n) {
        for (int t = 0; t < 4; ++t) {
            const auto p = random_free_series(rng, 2, n, 30, rng.chance(50));
            const auto q = random_free_series(rng, 2, n, 30, rng.chance(50));
            const auto r = random_free_series(rng, 2, n, 30, rng.chance(50));
            const auto c = rng.nonzero_rational();
            CHECK((p * q) * r == p * (q * r));
            CHECK(p * (q + r) == p * q + p * r);
            CHECK((p + q) * r == p * r + q * r);
            CHECK((c * p) * q == c * (p * q));
            CHECK(p * (c * q) == c * (p * q));
        }
    }
}

TEST_CASE("inverse roundtrip on random units")
{
    Rng rng(13);
    for (int t = 0; t < 20; ++t) {
        const auto p = random_free_series(rng, 2, 5, 35, true);
        const auto inv = fs_geometric_inverse(p);
        CHECK(p * inv == FreeSeries::unit(2, 5));
        CHECK(inv * p == FreeSeries::unit(2, 5));
    }
}

TEST_CASE("support of a product factors through the supports")
{
    Rng rng(17);
    for (int t = 0; t < 15; ++t) {
        const auto p = random_free_series(rng, 2, 5, 25, rng.chance(50));
        const auto q = random_free_series(rng, 2, 5, 25, rng.chance(50));
        const auto pq = p * q;
        for (std::size_t n = 0; n <= 5; ++n) {
            for (const auto &w : fs_support_slice(pq, n)) {
                bool found = false;
                for (const auto &[b, g] : factorizations(w)) {
                    found = found || (fs_support_slice(p, b.length()).count(b) && fs_support_slice(q, g.length()).count(g));
                }
                CHECK(found);
            }
        }
    }
}

TEST_CASE("augmentation ideal is closed and products start in degree 2")
{
    Rng rng(19);
    for (int t = 0; t < 15; ++t) {
        const auto pq = random_free_series(rng, 3, 4, 30, false) * random_free_series(rng, 3, 4, 30, false);
        CHECK(pq.constant_term() == 0);
        CHECK(fs_support_slice(pq, 1).empty());
    }
}
