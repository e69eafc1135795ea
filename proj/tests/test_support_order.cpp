#include <doctest.h>

#include <algorithm>

#include <nseries/errors.hpp>
#include <nseries/random.hpp>
#include <nseries/support_order.hpp>

#include "oracles.hpp"

using namespace nseries;

TEST_CASE("comparison")
{
    CHECK(cmp(MonoidCtx::lex(2), {1, 5}, {2, 0}) == Cmp::less);
    CHECK(cmp(MonoidCtx::product(2), {1, 0}, {0, 1}) == Cmp::incomparable);
    CHECK(cmp(MonoidCtx::product(2), {1, 1}, {0, 1}) == Cmp::greater);
    CHECK(cmp(MonoidCtx::lex(3), {1, 2, 3}, {1, 2, 3}) == Cmp::equal);
    CHECK(cmp(MonoidCtx::product(2), {4, 4}, {4, 4}) == Cmp::equal);
    CHECK(cmp(MonoidCtx::weighted({1, 2}), {3, 0}, {0, 1}) == Cmp::greater);
    CHECK(cmp(MonoidCtx::weighted({1, 2}), {0, 1}, {2, 0}) == Cmp::less);
    CHECK_THROWS_AS(cmp(MonoidCtx::lex(2), {1}, {2, 0}), DimensionError);
}

TEST_CASE("weighted ties are broken lexicographically")
{
    const auto w = MonoidCtx::weighted({1, 2});
    // (2,0) and (0,1) share weight 2; lex decides.
    CHECK(cmp(w, {2, 0}, {0, 1}) == Cmp::greater);
    CHECK(cmp(w, {0, 1}, {2, 0}) == Cmp::less);
}

TEST_CASE("context descriptors")
{
    CHECK(MonoidCtx::parse("lex:2") == MonoidCtx::lex(2));
    CHECK(MonoidCtx::parse("prod:3") == MonoidCtx::product(3));
    CHECK(MonoidCtx::parse("weighted:1,3").weights() == std::vector<std::int64_t>{1, 3});
    CHECK(MonoidCtx::weighted({2, 5}).descriptor() == "weighted:2,5");
    CHECK(MonoidCtx::lex(1).descriptor() == "lex:1");
    CHECK_THROWS_AS(MonoidCtx::parse("banana:2"), ParseError);
}

TEST_CASE("minimal elements")
{
    CHECK(minimal_elements({MonoidCtx::product(2), {{1, 0}, {0, 1}, {1, 1}}}) == std::set<ExpVec>{{1, 0}, {0, 1}});
    CHECK(minimal_elements({MonoidCtx::lex(1), {{3}, {1}, {2}}}) == std::set<ExpVec>{{1}});
    CHECK(minimal_elements({MonoidCtx::lex(1), {}}).empty());
}

TEST_CASE("maximum antichains")
{
    CHECK(max_antichain({MonoidCtx::lex(2), {{0, 1}, {1, 0}, {2, 2}}}).size() == 1);
    const std::set<ExpVec> diag{{2, 0}, {1, 1}, {0, 2}};
    CHECK(max_antichain({MonoidCtx::product(2), diag}) == diag);
    CHECK(max_antichain({MonoidCtx::product(2), {{3, 3}}}) == std::set<ExpVec>{{3, 3}});
    CHECK(max_antichain({MonoidCtx::product(2), {{0, 0}, {1, 0}, {0, 1}, {2, 0}}}).size() == 2);

    FinitePosetFragment big{MonoidCtx::product(2), {}};
    for (std::int64_t i = 0; i < 70; ++i) {
        big.elements.insert({i, 0});
    }
    CHECK_THROWS_AS(max_antichain(big), ResourceError);
    CHECK(max_antichain(big, 100).size() == 1);
}

TEST_CASE("convolution pairs")
{
    const auto lex1 = MonoidCtx::lex(1);
    const std::set<ExpVec> s{{0}, {1}, {2}};
    using Pairs = std::vector<std::pair<ExpVec, ExpVec>>;
    CHECK(convolution_pairs(lex1, {2}, s, s) == Pairs{{{0}, {2}}, {{1}, {1}}, {{2}, {0}}});
    CHECK(convolution_pairs(lex1, {7}, s, s).empty());
    CHECK(convolution_pairs(MonoidCtx::product(2), {1, 1}, {{1, 0}}, {{0, 1}}) == Pairs{{{1, 0}, {0, 1}}});
}

TEST_CASE("convolution pairs agree with a double loop")
{
    Rng rng(5);
    const auto ctx = MonoidCtx::product(2);
    for (int t = 0; t < 40; ++t) {
        std::set<ExpVec> a, b;
        for (int i = 0; i < 8; ++i) {
            a.insert({rng.uniform(-3, 3), rng.uniform(-3, 3)});
            b.insert({rng.uniform(-3, 3), rng.uniform(-3, 3)});
        }
        const ExpVec m{rng.uniform(-4, 4), rng.uniform(-4, 4)};
        CHECK(convolution_pairs(ctx, m, a, b) == oracle::brute_pairs(m, a, b));
    }
}

TEST_CASE("good pairs")
{
    using Pair = std::pair<std::size_t, std::size_t>;
    CHECK(find_good_pair(MonoidCtx::lex(1), {{3}, {1}, {2}}) == Pair{1, 2});
    CHECK_FALSE(find_good_pair(MonoidCtx::product(2), {{1, 0}, {0, 1}}).has_value());
    CHECK(find_good_pair(MonoidCtx::product(2), {{1, 0}, {0, 1}, {1, 0}}) == Pair{0, 2});
    CHECK(find_good_pair(MonoidCtx::product(2), {{5, 0}, {4, 1}, {3, 2}, {2, 3}, {3, 3}}) == Pair{2, 4});
    CHECK_FALSE(find_good_pair(MonoidCtx::lex(1), {}).has_value());
}

TEST_CASE("choice closure")
{
    const auto ctx = MonoidCtx::lex(1);
    const ChoiceOperator step = [](const ExpVec &n) { return std::vector<ExpVec>{{n[0] + 1}}; };
    const auto words = choice_closure(ctx, {{0}}, step, 3);
    CHECK(words == std::set<ClosureWord>{{{{0}}}, {{{0}, {1}}}, {{{0}, {1}, {2}}}});

    const ChoiceOperator none = [](const ExpVec &) { return std::vector<ExpVec>{}; };
    CHECK(choice_closure(ctx, {{0}, {4}}, none, 5) == std::set<ClosureWord>{{{{0}}}, {{{4}}}});

    const ChoiceOperator two = [](const ExpVec &n) { return std::vector<ExpVec>{{n[0] + 1}, {n[0] + 2}}; };
    const auto w2 = choice_closure(ctx, {{0}}, two, 2);
    CHECK(w2 == std::set<ClosureWord>{{{{0}}}, {{{0}, {1}}}, {{{0}, {2}}}});
    std::vector<ExpVec> lasts;
    for (const auto &w : w2) {
        lasts.push_back(w.last());
    }
    CHECK(std::set<ExpVec>(lasts.begin(), lasts.end()) == std::set<ExpVec>{{0}, {1}, {2}});
    CHECK(find_good_pair(ctx, lasts).has_value());
    std::reverse(lasts.begin(), lasts.end());
    CHECK(find_good_pair(ctx, {lasts[0], lasts[1], lasts[2], lasts[0]}).has_value());

    const ChoiceOperator bad = [](const ExpVec &n) { return std::vector<ExpVec>{{n[0]}}; };
    CHECK_THROWS_AS(choice_closure(ctx, {{0}}, bad, 2), PreconditionError);
}

TEST_CASE("choice closure is translation invariant and preserves unions")
{
    const auto ctx = MonoidCtx::product(2);
    const ChoiceOperator theta = [](const ExpVec &m) {
        return std::vector<ExpVec>{{m[0] + 1, m[1]}, {m[0], m[1] + 2}};
    };
    const std::set<ExpVec> y1{{0, 0}};
    const std::set<ExpVec> y2{{1, 3}};
    const auto u1 = choice_closure(ctx, y1, theta, 3);
    const auto u2 = choice_closure(ctx, y2, theta, 3);
    auto joined = u1;
    joined.insert(u2.begin(), u2.end());
    CHECK(choice_closure(ctx, {{0, 0}, {1, 3}}, theta, 3) == joined);

    const ExpVec shift{1, 3};
    std::set<ClosureWord> shifted;
    for (const auto &w : u1) {
        ClosureWord s;
        for (const auto &l : w.letters) {
            s.letters.push_back(exp_add(l, shift));
        }
        shifted.insert(s);
    }
    CHECK(shifted == u2);
}

TEST_CASE("closure words compare by last letter")
{
    const auto ctx = MonoidCtx::product(2);
    CHECK(closure_cmp(ctx, {{{0, 0}, {1, 0}}}, {{{0, 0}, {0, 1}}}) == Cmp::incomparable);
    CHECK(closure_cmp(ctx, {{{0, 0}, {1, 0}}}, {{{2, 2}}}) == Cmp::less);
}

TEST_CASE("exponent formatting")
{
    CHECK(exp_to_string({1, -2}) == "(1,-2)");
    CHECK(exp_to_string({0}) == "(0)");
}
