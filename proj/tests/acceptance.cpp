// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include <nseries/correspondence.hpp>
#include <nseries/errors.hpp>
#include <nseries/random.hpp>
#include <nseries/series_calculus.hpp>
#include <nseries/support_order.hpp>
#include <nseries/vaut_factors.hpp>
#include <nseries/verify.hpp>

#include "oracles.hpp"

using namespace nseries;

namespace
{

struct Outcome {
    bool ok = true;
    std::string note;

    void require(bool cond, const std::string &what)
    {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

const MonoidCtx lex1 = MonoidCtx::lex(1);
const MonoidCtx prod2 = MonoidCtx::product(2);

FreeSeries x_var(std::uint32_t i, std::size_t n)
{
    return FreeSeries::variable(2, n, i);
}

Outcome exp_log_inversion()
{
    Outcome r;
    for (std::size_t n = 1; n <= 10; ++n) {
        const std::vector<FreeSeries> l{series_L0(n)};
        const std::vector<FreeSeries> e{series_E0(n) - FreeSeries::unit(1, n)};
        r.require(fs_substitute(series_E0(n), l) == FreeSeries::unit(1, n) + FreeSeries::variable(1, n, 0),
                  "E0(L0) at N=" + std::to_string(n));
        r.require(fs_substitute(series_L0(n), e) == FreeSeries::variable(1, n, 0),
                  "L0(E0-1) at N=" + std::to_string(n));
    }
    return r;
}

Outcome bch_low_order()
{
    Outcome r;
    const auto x0 = x_var(0, 6);
    const auto x1 = x_var(1, 6);
    const auto c = commutator(x0, x1);
    const auto z = bch_product(6);
    r.require(fs_slice(z, 2) == Rational(1, 2) * c, "degree 2");
    r.require(fs_slice(z, 3) == Rational(1, 12) * (commutator(x0, c) - commutator(x1, c)), "degree 3");
    const auto dyn = dynkin_bch(6);
    for (std::size_t n = 4; n <= 6; ++n) {
        r.require(fs_slice(z, n) == fs_slice(dyn, n), "degree " + std::to_string(n) + " vs Dynkin");
    }
    return r;
}

Outcome bch_exponential()
{
    Outcome r;
    for (std::size_t n = 1; n <= 8; ++n) {
        const std::vector<FreeSeries> z{bch_product(n)};
        const std::vector<FreeSeries> a{x_var(0, n)};
        const std::vector<FreeSeries> b{x_var(1, n)};
        const auto lhs = fs_substitute(series_E0(n), z);
        const auto rhs = fs_substitute(series_E0(n), a) * fs_substitute(series_E0(n), b);
        r.require(lhs == rhs, "N=" + std::to_string(n));
        r.require(lhs == oracle::exp_product_minus_one(n) + FreeSeries::unit(2, n),
                  "term oracle at N=" + std::to_string(n));
    }
    return r;
}

Outcome lie_slices()
{
    Outcome r;
    const auto z = bch_product(6);
    for (std::size_t n = 2; n <= 6; ++n) {
        r.require(is_lie_slice(z, n), "degree " + std::to_string(n));
    }
    return r;
}

Outcome geometric_inverse()
{
    Outcome r;
    Rng rng(101);
    for (int t = 0; t < 50; ++t) {
        const auto p = random_free_series(rng, 2, 6, 30, true);
        r.require(p * fs_geometric_inverse(p) == FreeSeries::unit(2, 6), "sample " + std::to_string(t));
    }
    return r;
}

std::vector<OpTable> lex_corpus()
{
    Rng rng(103);
    std::vector<OpTable> out;
    for (int t = 0; t < 20; ++t) {
        out.push_back(random_contracting_derivation(rng, lex1, 8, 50));
    }
    return out;
}

Outcome der_to_aut(const std::vector<OpTable> &corpus)
{
    Outcome r;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto &d = corpus[i];
        r.require(op_is_derivation(d).holds, "input " + std::to_string(i) + " not a derivation");
        r.require(op_is_unital_endomorphism(op_exp(d)).holds, "exp of sample " + std::to_string(i));
        r.require(check_binomial_leibniz(d, 8).holds, "binomial Leibniz on sample " + std::to_string(i));
    }
    return r;
}

Outcome aut_to_der(const std::vector<OpTable> &corpus)
{
    Outcome r;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto sigma = op_exp(corpus[i]);
        r.require(op_log(sigma) == corpus[i], "log exp on sample " + std::to_string(i));
        r.require(op_exp(op_log(sigma)) == sigma, "exp log on sample " + std::to_string(i));
    }
    for (std::size_t i = 0; i < 10; ++i) {
        const auto sigma = hand_built_substitution(i, 8);
        const auto l = op_log(sigma);
        r.require(op_is_derivation(l).holds, "log of substitution " + std::to_string(i));
        r.require(op_exp(l) == sigma, "exp log of substitution " + std::to_string(i));
        r.require(op_log(op_exp(l)) == l, "log exp of substitution " + std::to_string(i));
    }
    return r;
}

Outcome group_law()
{
    Outcome r;
    Rng rng(107);
    for (int t = 0; t < 20; ++t) {
        const auto &ctx = t % 2 == 0 ? prod2 : lex1;
        const auto d1 = random_contracting_derivation(rng, ctx, 6, 40);
        const auto d2 = random_contracting_derivation(rng, ctx, 6, 40);
        r.require(op_exp(star(d1, d2)) == op_compose(op_exp(d1), op_exp(d2)), "pair " + std::to_string(t));
    }
    return r;
}

Outcome divisibility()
{
    Outcome r;
    std::vector<OpTable> sigmas;
    for (std::size_t i = 0; i < 10; ++i) {
        sigmas.push_back(hand_built_substitution(i, 6));
    }
    Rng rng(109);
    for (int t = 0; t < 5; ++t) {
        sigmas.push_back(op_exp(random_contracting_derivation(rng, prod2, 6, 40)));
    }
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
        const auto &s = sigmas[i];
        const auto id = OpTable::identity(s.ctx(), s.weight_bound());
        const auto half = fractional_iterate(s, Rational(1, 2));
        const auto third = fractional_iterate(s, Rational(1, 3));
        r.require(op_compose(half, half) == s, "square root of sample " + std::to_string(i));
        r.require(op_compose(third, op_compose(third, third)) == s, "cube root of sample " + std::to_string(i));
        if (s == id) {
            continue;
        }
        auto power = s;
        for (int n = 1; n <= 5; ++n) {
            r.require(!(power == id), "torsion at n=" + std::to_string(n) + " on sample " + std::to_string(i));
            power = op_compose(power, s);
        }
    }
    return r;
}

Outcome flow_check()
{
    Outcome r;
    const std::size_t n = 10;
    const auto d = OpTable::from_function(
        lex1, n, [&](const ExpVec &m) { return HahnPoly::monomial(lex1, n, {m[0] + 1}, m[0]); });
    const auto t1 = HahnPoly::monomial(lex1, n, {1});
    HahnPoly expected(lex1, n);
    for (unsigned k = 0; k < n; ++k) {
        // d^k(t) = k! t^{k+1}, divided by k!
        const auto dk = HahnPoly::monomial(lex1, n, {static_cast<std::int64_t>(k) + 1}, factorial(k));
        r.require(op_apply(op_power(d, k), t1) == dk, "d^" + std::to_string(k) + "(t)");
        expected = expected + Rational(1) / factorial(k) * dk;
    }
    r.require(op_apply(op_exp(d), t1) == expected, "exp(d)(t)");
    return r;
}

Outcome vaut_roundtrip()
{
    Outcome r;
    Rng rng(113);
    for (int t = 0; t < 10; ++t) {
        const auto s = random_vaut_sample(rng, t % 2 == 0 ? 1 : 2, 6);
        r.require(compose_factors(decompose_vaut(s.sigma)) == s.sigma, "sample " + std::to_string(t));
    }
    return r;
}

Outcome factor_algebra()
{
    Outcome r;
    Rng rng(127);
    const std::size_t n = 5;
    for (const auto &ctx : {lex1, prod2}) {
        const auto d = ctx.dimension();
        auto values = [&] {
            std::vector<Rational> v;
            for (std::size_t i = 0; i < d; ++i) {
                v.push_back(rng.nonzero_rational());
            }
            return v;
        };
        for (int t = 0; t < 5; ++t) {
            const CharacterX x(ctx, values());
            const CharacterX y(ctx, values());
            r.require(op_compose(gexp_table(x, n), gexp_table(y, n)) == gexp_table(x * y, n), "character product");
            const AdditiveChar a(ctx, values());
            const AdditiveChar b(ctx, values());
            r.require(op_add(gder_table(a, n), gder_table(b, n)) == gder_table(a + b, n), "additive sum");
        }
        std::vector<ExponentAut> mus{ExponentAut::identity(ctx)};
        if (d == 2) {
            mus.emplace_back(ctx, IntMatrix{{0, 1}, {1, 0}});
        }
        for (const auto &mu : mus) {
            const auto fwd = oaut_table(mu, n);
            const auto back = oaut_table(mu.inverse(), n);
            for (int t = 0; t < 5; ++t) {
                const auto sigma = op_exp(random_contracting_derivation(rng, ctx, n, 40));
                r.require(is_one_aut(sigma).holds, "corpus element is not a 1-automorphism");
                r.require(is_one_aut(op_compose(fwd, op_compose(sigma, back))).holds, "conjugate of 1-automorphism");
            }
        }
    }
    return r;
}

Outcome evaluation_laws()
{
    Outcome r;
    Rng rng(131);
    const std::size_t n = 5;
    for (int t = 0; t < 20; ++t) {
        const auto &ctx = t % 2 == 0 ? lex1 : prod2;
        const std::vector<OpTable> f{random_contracting_table(rng, ctx, n, 40),
                                     random_contracting_table(rng, ctx, n, 40)};
        const auto p = random_free_series(rng, 2, n, 30, rng.chance(50));
        const auto q = random_free_series(rng, 2, n, 30, rng.chance(50));
        r.require(op_evaluate(p * q, f) == op_compose(op_evaluate(p, f), op_evaluate(q, f)),
                  "product law, instance " + std::to_string(t));
        const std::vector<FreeSeries> qs{random_free_series(rng, 2, n, 30, false),
                                         random_free_series(rng, 2, n, 30, false)};
        const std::vector<OpTable> inner{op_evaluate(qs[0], f), op_evaluate(qs[1], f)};
        r.require(op_evaluate(fs_substitute(p, qs), f) == op_evaluate(p, inner),
                  "associativity, instance " + std::to_string(t));
    }
    return r;
}

Outcome order_utilities()
{
    Outcome r;
    Rng rng(137);
    for (const auto &ctx : {lex1, prod2, MonoidCtx::lex(3), MonoidCtx::weighted({1, 2})}) {
        const auto d = ctx.dimension();
        auto draw = [&] {
            ExpVec v(d);
            for (auto &c : v) {
                c = rng.uniform(-3, 3);
            }
            return v;
        };
        for (int t = 0; t < 25; ++t) {
            std::set<ExpVec> a, b;
            for (int i = 0; i < 10; ++i) {
                a.insert(draw());
                b.insert(draw());
            }
            const auto m = exp_add(draw(), draw());
            r.require(convolution_pairs(ctx, m, a, b) == oracle::brute_pairs(m, a, b), "convolution pairs");
        }
    }
    for (std::int64_t len = 1; len <= 12; ++len) {
        // Anti-diagonal, then strictly decreasing in both coordinates: bad.
        std::vector<ExpVec> seq;
        for (std::int64_t k = 0; k < len; ++k) {
            seq.push_back({k, len - k});
        }
        r.require(!find_good_pair(prod2, seq).has_value(), "anti-diagonal bad sequence");
        std::vector<ExpVec> down;
        for (std::int64_t k = len; k > 0; --k) {
            down.push_back({k, 2 * k});
        }
        r.require(!find_good_pair(prod2, down).has_value(), "decreasing bad sequence");
    }
    for (int t = 0; t < 50; ++t) {
        std::vector<ExpVec> fragment;
        const auto size = rng.uniform(1, 8);
        for (std::int64_t i = 0; i < size; ++i) {
            fragment.push_back({rng.uniform(0, 4), rng.uniform(0, 4)});
        }
        std::vector<ExpVec> seq;
        for (std::int64_t i = 0; i <= size; ++i) {
            seq.push_back(fragment[static_cast<std::size_t>(rng.uniform(0, size - 1))]);
        }
        const auto found = find_good_pair(prod2, seq);
        r.require(found.has_value(), "over-length sequence without a good pair");
        if (found) {
            const auto [i, j] = *found;
            const auto c = cmp(prod2, seq[i], seq[j]);
            r.require(i < j && (c == Cmp::less || c == Cmp::equal), "returned pair is not good");
        }
    }
    return r;
}

} // namespace

int main()
{
    const auto corpus = lex_corpus();
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"exp/log inversion in one variable, N = 1..10", exp_log_inversion},
        {"BCH coefficients through degree 6", bch_low_order},
        {"exp(X0 * X1) = exp(X0) exp(X1), N = 1..8", bch_exponential},
        {"BCH slices of degree 2..6 are Lie elements", lie_slices},
        {"geometric inverse on 50 random units", geometric_inverse},
        {"exp of 20 random derivations is an endomorphism; binomial Leibniz", [&] { return der_to_aut(corpus); }},
        {"exp/log roundtrips, including 10 substitutions", [&] { return aut_to_der(corpus); }},
        {"exp(d1 * d2) = exp(d1) o exp(d2) on 20 pairs", group_law},
        {"fractional iterates and torsion-freeness", divisibility},
        {"exp(t^2 d/dt)(t) = t + ... + t^10", flow_check},
        {"decomposition roundtrip on 10 mixed automorphisms", vaut_roundtrip},
        {"factor group laws and conjugation", factor_algebra},
        {"evaluation is multiplicative and associative", evaluation_laws},
        {"convolution pairs and good pairs", order_utilities},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o.ok = false;
            o.note = std::string("exception: ") + e.what();
        }
        std::printf("criterion %2zu: %s  %s", i + 1, o.ok ? "PASS" : "FAIL", criteria[i].first.c_str());
        if (!o.ok) {
            std::printf("  (%s)", o.note.c_str());
            ++failures;
        }
        std::printf("\n");
    }
    return failures == 0 ? 0 : 1;
}
