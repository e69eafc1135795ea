#include <nseries/correspondence.hpp>
#include <nseries/errors.hpp>
#include <nseries/series_calculus.hpp>
#include <nseries/text_io.hpp>
#include <nseries/verify.hpp>

#include <algorithm>
#include <functional>

namespace nseries
{

bool VerifyReport::all_passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

nlohmann::json VerifyReport::to_json(const VerifyConfig &cfg) const
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &c : checks) {
        nlohmann::json entry{{"suite", c.suite}, {"name", c.name}, {"passed", c.passed}};
        if (!c.passed) {
            entry["counterexample"] = c.counterexample;
        }
        arr.push_back(std::move(entry));
    }
    return {{"schema", json_schema_version},
            {"config", {{"order", cfg.order}, {"seed", cfg.seed}, {"trials", cfg.trials}}},
            {"passed", all_passed()},
            {"checks", std::move(arr)}};
}

const std::vector<std::string> &verify_suite_names()
{
    static const std::vector<std::string> names{"free", "bch", "hahn", "operator", "correspondence", "vaut"};
    return names;
}

VautSample random_vaut_sample(Rng &rng, std::size_t dimension, std::size_t weight_bound)
{
    const auto ctx = dimension == 1 ? MonoidCtx::lex(1) : MonoidCtx::product(dimension);
    IntMatrix matrix(dimension, std::vector<std::int64_t>(dimension, 0));
    for (std::size_t i = 0; i < dimension; ++i) {
        matrix[i][i] = 1;
    }
    if (dimension == 2 && rng.chance(50)) {
        matrix = {{0, 1}, {1, 0}};
    }
    std::vector<Rational> chi;
    for (std::size_t i = 0; i < dimension; ++i) {
        chi.push_back(rng.nonzero_rational());
    }
    auto residual = op_exp(random_contracting_derivation(rng, ctx, weight_bound, 40));
    FactorAut factors{ExponentAut(ctx, matrix), CharacterX(ctx, std::move(chi)), std::move(residual)};
    auto sigma = compose_factors(factors);
    return VautSample{std::move(factors), std::move(sigma)};
}

namespace
{

using Check = std::function<std::string()>;

class Runner
{
public:
    Runner(VerifyReport &report, std::string suite) : m_report(report), m_suite(std::move(suite)) {}

    // fn returns an empty string on success and a counterexample otherwise.
    void run(const std::string &name, const Check &fn)
    {
        CheckResult r{m_suite, name, true, {}};
        try {
            r.counterexample = fn();
        } catch (const std::exception &e) {
            r.counterexample = std::string("exception: ") + e.what();
        }
        r.passed = r.counterexample.empty();
        m_report.checks.push_back(std::move(r));
    }

private:
    VerifyReport &m_report;
    std::string m_suite;
};

std::string trial_tag(std::size_t t)
{
    return "trial " + std::to_string(t) + ": ";
}

void suite_free(VerifyReport &report, const VerifyConfig &cfg)
{
    Runner r(report, "free");
    const auto n = cfg.order;
    r.run("associativity", [&]() -> std::string {
        Rng rng(cfg.seed);
        for (std::size_t t = 0; t < cfg.trials; ++t) {
            const auto p = random_free_series(rng, 2, n, 30, rng.chance(50));
            const auto q = random_free_series(rng, 2, n, 30, rng.chance(50));
            const auto s = random_free_series(rng, 2, n, 30, rng.chance(50));
            if (!((p * q) * s == p * (q * s))) {
                return trial_tag(t) + "P=" + format_free_series(p);
            }
        }
        return {};
    });
    r.run("bilinearity", [&]() -> std::string {
        Rng rng(cfg.seed + 1);
        for (std::size_t t = 0; t < cfg.trials; ++t) {
            const auto p = random_free_series(rng, 2, n, 30, true);
            const auto q = random_free_series(rng, 2, n, 30, true);
            const auto s = random_free_series(rng, 2, n, 30, false);
            const auto c = rng.nonzero_rational();
            if (!(p * (q + c * s) == p * q + c * (p * s)) || !((q + c * s) * p == q * p + c * (s * p))) {
                return trial_tag(t) + "P=" + format_free_series(p);
            }
        }
        return {};
    });
    r.run("geometric inverse roundtrip", [&]() -> std::string {
        Rng rng(cfg.seed + 2);
        const auto one = FreeSeries::unit(2, n);
        for (std::size_t t = 0; t < cfg.trials; ++t) {
            const auto p = random_free_series(rng, 2, n, 30, true);
            const auto inv = fs_geometric_inverse(p);
            if (!(p * inv == one) || !(inv * p == one)) {
                return trial_tag(t) + "P=" + format_free_series(p);
            }
        }
        return {};
    });
    r.run("support bound", [&]() -> std::string {
        Rng rng(cfg.seed + 3);
        for (std::size_t t = 0; t < cfg.trials; ++t) {
            const auto p = random_free_series(rng, 2, n, 20, rng.chance(50));
            const auto q = random_free_series(rng, 2, n, 20, rng.chance(50));
            const auto prod = p * q;
            for (std::size_t len = 0; len <= n; ++len) {
                for (const auto &w : fs_support_slice(prod, len)) {
                    const auto splits = factorizations(w);
                    const bool ok = std::any_of(splits.begin(), splits.end(), [&](const auto &bg) {
                        return p.coeff(bg.first) != 0 && q.coeff(bg.second) != 0;
                    });
                    if (!ok) {
                        return trial_tag(t) + "word of length " + std::to_string(len) + " has no supported split";
                    }
                }
            }
        }
        return {};
    });
    r.run("augmentation ideal closure", [&]() -> std::string {
        Rng rng(cfg.seed + 4);
        for (std::size_t t = 0; t < cfg.trials; ++t) {
            const auto prod = random_free_series(rng, 2, n, 30, false) * random_free_series(rng, 2, n, 30, false);
            if (prod.constant_term() != 0 || !fs_support_slice(prod, 1).empty()) {
                return trial_tag(t) + format_free_series(prod);
            }
        }
        return {};
    });
    r.run("parallel kernel matches serial reference", [&]() -> std::string {
        Rng rng(cfg.seed + 5);
        for (std::size_t t = 0; t < cfg.trials; ++t) {
            const auto p = random_free_series(rng, 2, n, 60, true);
            const auto q = random_free_series(rng, 2, n, 60, true);
            if (!(fs_mul(p, q) == reference::fs_mul(p, q))) {
                return trial_tag(t) + "P=" + format_free_series(p);
            }
        }
        return {};
    });
}

void suite_bch(VerifyReport &report, const VerifyConfig &cfg)
{
    Runner r(report, "bch");
    const auto n = cfg.order;
    r.run("exp(L0) = 1 + X0 and log(E0) = X0", [&]() -> std::string {
        for (std::size_t k = 1; k <= n; ++k) {
            const FreeSeries l0[] = {series_L0(k)};
            const FreeSeries e0m1[] = {series_E0(k) - FreeSeries::unit(1, k)};
            const auto x0 = FreeSeries::variable(1, k, 0);
            if (!(fs_substitute(series_E0(k), l0) == FreeSeries::unit(1, k) + x0)) {
                return "exp(L0) at N=" + std::to_string(k);
            }
            if (!(fs_substitute(series_L0(k), e0m1) == x0)) {
                return "log(E0) at N=" + std::to_string(k);
            }
        }
        return {};
    });
    r.run("bch_product matches Dynkin oracle", [&]() -> std::string {
        const auto a = bch_product(n), b = dynkin_bch(n);
        return a == b ? std::string{} : "difference " + format_free_series(a - b);
    });
    r.run("exp(X0 * X1) = exp(X0) exp(X1)", [&]() -> std::string {
        const FreeSeries z[] = {bch_product(n)};
        const FreeSeries x0[] = {FreeSeries::variable(2, n, 0)};
        const FreeSeries x1[] = {FreeSeries::variable(2, n, 1)};
        const auto e = series_E0(n);
        const auto lhs = fs_substitute(e, z);
        const auto rhs = fs_substitute(e, x0) * fs_substitute(e, x1);
        return lhs == rhs ? std::string{} : "difference " + format_free_series(lhs - rhs);
    });
    r.run("BCH slices are Lie elements", [&]() -> std::string {
        const auto z = bch_product(n);
        for (std::size_t k = 2; k <= std::min<std::size_t>(n, 6); ++k) {
            if (!is_lie_slice(z, k)) {
                return "degree " + std::to_string(k);
            }
        }
        return {};
    });
}

void suite_hahn(VerifyReport &report, const VerifyConfig &cfg)
{
    Runner r(report, "hahn");
    const auto n = cfg.order;
    const std::vector<MonoidCtx> contexts{MonoidCtx::lex(1), MonoidCtx::product(2), MonoidCtx::lex(2),
                                          MonoidCtx::weighted({1, 2, 1})};
    auto for_contexts = [&](std::uint64_t salt, const std::function<std::string(Rng &, const MonoidCtx &)> &body) {
        Rng rng(cfg.seed + salt);
        for (const auto &ctx : contexts) {
            for (std::size_t t = 0; t < cfg.trials; ++t) {
                if (auto msg = body(rng, ctx); !msg.empty()) {
                    return ctx.descriptor() + " " + trial_tag(t) + msg;
                }
            }
        }
        return std::string{};
    };
    r.run("product associative, unital, commutative", [&] {
        return for_contexts(10, [&](Rng &rng, const MonoidCtx &ctx) -> std::string {
            const auto a = random_hahn(rng, ctx, n, 30), b = random_hahn(rng, ctx, n, 30),
                       c = random_hahn(rng, ctx, n, 30);
            if (!((a * b) * c == a * (b * c))) {
                return "associativity";
            }
            if (!(HahnPoly::unit(ctx, n) * a == a) || !(a * b == b * a)) {
                return "unit/commutativity";
            }
            return {};
        });
    });
    r.run("product bilinear", [&] {
        return for_contexts(11, [&](Rng &rng, const MonoidCtx &ctx) -> std::string {
            const auto a = random_hahn(rng, ctx, n, 30), b = random_hahn(rng, ctx, n, 30),
                       c = random_hahn(rng, ctx, n, 30);
            const auto s = rng.nonzero_rational();
            return a * (b + s * c) == a * b + s * (a * c) ? std::string{} : "a=" + format_hahn(a);
        });
    });
    r.run("support of product within sum of supports", [&] {
        return for_contexts(12, [&](Rng &rng, const MonoidCtx &ctx) -> std::string {
            const auto a = random_hahn(rng, ctx, n, 30), b = random_hahn(rng, ctx, n, 30);
            for (const auto &m : (a * b).support()) {
                if (convolution_pairs(ctx, m, a.support(), b.support()).empty()) {
                    return "exponent " + exp_to_string(m);
                }
            }
            return {};
        });
    });
    r.run("dominance is a strict partial order", [&] {
        return for_contexts(13, [&](Rng &rng, const MonoidCtx &ctx) -> std::string {
            const auto u = random_hahn(rng, ctx, n, 20), v = random_hahn(rng, ctx, n, 20),
                       w = random_hahn(rng, ctx, n, 20);
            if (hp_prec(u, u)) {
                return "irreflexivity on " + format_hahn(u);
            }
            if (hp_prec(u, v) && hp_prec(v, w) && !hp_prec(u, w)) {
                return "transitivity";
            }
            if (hp_prec(u, w) && hp_prec(v, w) && !hp_prec(u + v, w)) {
                return "additivity";
            }
            return {};
        });
    });
    r.run("finite sums invariant under reordering and regrouping", [&] {
        return for_contexts(14, [&](Rng &rng, const MonoidCtx &ctx) -> std::string {
            std::vector<HahnPoly> family;
            for (int i = 0; i < 6; ++i) {
                family.push_back(random_hahn(rng, ctx, n, 20));
            }
            HahnPoly forward(ctx, n), backward(ctx, n);
            for (const auto &x : family) {
                forward = forward + x;
            }
            for (auto it = family.rbegin(); it != family.rend(); ++it) {
                backward = backward + *it;
            }
            const auto grouped = (family[0] + family[1] + family[2]) + (family[3] + (family[4] + family[5]));
            return forward == backward && forward == grouped ? std::string{} : "sum mismatch";
        });
    });
    r.run("parallel kernel matches serial reference", [&] {
        return for_contexts(15, [&](Rng &rng, const MonoidCtx &ctx) -> std::string {
            const auto a = random_hahn(rng, ctx, n, 60), b = random_hahn(rng, ctx, n, 60);
            return hp_mul(a, b) == reference::hp_mul(a, b) ? std::string{} : "a=" + format_hahn(a);
        });
    });
}

void suite_operator(VerifyReport &report, const VerifyConfig &cfg)
{
    Runner r(report, "operator");
    const auto n = cfg.order;
    const std::vector<MonoidCtx> contexts{MonoidCtx::lex(1), MonoidCtx::product(2)};
    auto for_contexts = [&](std::uint64_t salt, const std::function<std::string(Rng &, const MonoidCtx &)> &body) {
        Rng rng(cfg.seed + salt);
        for (const auto &ctx : contexts) {
            for (std::size_t t = 0; t < cfg.trials; ++t) {
                if (auto msg = body(rng, ctx); !msg.empty()) {
                    return ctx.descriptor() + " " + trial_tag(t) + msg;
                }
            }
        }
        return std::string{};
    };
    r.run("strong linearity on finite sums", [&] {
        return for_contexts(20, [&](Rng &rng, const MonoidCtx &ctx) -> std::string {
            const auto phi = random_contracting_table(rng, ctx, n, 30);
            const auto a = random_hahn(rng, ctx, n, 40), b = random_hahn(rng, ctx, n, 40);
            const auto c = rng.nonzero_rational();
            return op_apply(phi, a + c * b) == op_apply(phi, a) + c * op_apply(phi, b) ? std::string{}
                                                                                      : "a=" + format_hahn(a);
        });
    });
    r.run("contracting tables closed under composition and sums", [&] {
        return for_contexts(21, [&](Rng &rng, const MonoidCtx &ctx) -> std::string {
            const auto phi = random_contracting_table(rng, ctx, n, 30);
            const auto psi = random_contracting_table(rng, ctx, n, 30);
            const auto mixed = op_add(op_scale(rng.nonzero_rational(), OpTable::identity(ctx, n)), psi);
            if (!op_is_contracting(op_compose(phi, psi)) || !op_is_contracting(op_add(phi, psi))) {
                return "closure";
            }
            if (!op_is_contracting(op_compose(phi, mixed)) || !op_is_contracting(op_compose(mixed, phi))) {
                return "ideal property";
            }
            return {};
        });
    });
    r.run("composition matches serial reference", [&] {
        return for_contexts(22, [&](Rng &rng, const MonoidCtx &ctx) -> std::string {
            const auto phi = random_contracting_table(rng, ctx, n, 40);
            const auto psi = random_contracting_table(rng, ctx, n, 40);
            return op_compose(phi, psi) == reference::op_compose(phi, psi) ? std::string{} : "mismatch";
        });
    });
    r.run("evaluation is an algebra morphism", [&] {
        return for_contexts(23, [&](Rng &rng, const MonoidCtx &ctx) -> std::string {
            const OpTable f[] = {random_contracting_table(rng, ctx, n, 25), random_contracting_table(rng, ctx, n, 25)};
            const auto p = random_free_series(rng, 2, n, 15, rng.chance(50));
            const auto q = random_free_series(rng, 2, n, 15, rng.chance(50));
            if (!(op_evaluate(p * q, f) == op_compose(op_evaluate(p, f), op_evaluate(q, f)))) {
                return "multiplicativity, P=" + format_free_series(p);
            }
            if (!(op_evaluate(p + q, f) == op_add(op_evaluate(p, f), op_evaluate(q, f)))) {
                return "additivity";
            }
            return {};
        });
    });
    r.run("evaluation associativity", [&] {
        return for_contexts(24, [&](Rng &rng, const MonoidCtx &ctx) -> std::string {
            const OpTable f[] = {random_contracting_table(rng, ctx, n, 25), random_contracting_table(rng, ctx, n, 25)};
            const auto p = random_free_series(rng, 2, n, 15, true);
            const FreeSeries qs[] = {random_free_series(rng, 2, n, 15, false), random_free_series(rng, 2, n, 15, false)};
            const OpTable evaluated[] = {op_evaluate(qs[0], f), op_evaluate(qs[1], f)};
            return op_evaluate(fs_substitute(p, qs), f) == op_evaluate(p, evaluated) ? std::string{}
                                                                                    : "P=" + format_free_series(p);
        });
    });
    r.run("1 + eps is a unit", [&] {
        return for_contexts(25, [&](Rng &rng, const MonoidCtx &ctx) -> std::string {
            const auto eps = random_contracting_table(rng, ctx, n, 30);
            const OpTable args[] = {eps};
            const auto inv = op_evaluate(fs_geometric_inverse(FreeSeries::unit(1, n) + FreeSeries::variable(1, n, 0)), args);
            const auto one_plus = op_add(OpTable::identity(ctx, n), eps);
            return op_compose(inv, one_plus) == OpTable::identity(ctx, n) ? std::string{} : "inverse mismatch";
        });
    });
    r.run("multiplication operators are strongly linear", [&] {
        return for_contexts(26, [&](Rng &rng, const MonoidCtx &ctx) -> std::string {
            const auto a = random_hahn(rng, ctx, n, 30), b = random_hahn(rng, ctx, n, 30);
            return op_apply(multiplication_operator(a), b) == a * b ? std::string{} : "a=" + format_hahn(a);
        });
    });
}

void suite_correspondence(VerifyReport &report, const VerifyConfig &cfg)
{
    Runner r(report, "correspondence");
    const auto n = cfg.order;
    const std::vector<MonoidCtx> contexts{MonoidCtx::lex(1), MonoidCtx::product(2)};
    auto for_derivations = [&](std::uint64_t salt, const std::function<std::string(Rng &, const OpTable &)> &body) {
        Rng rng(cfg.seed + salt);
        for (const auto &ctx : contexts) {
            for (std::size_t t = 0; t < cfg.trials; ++t) {
                const auto d = random_contracting_derivation(rng, ctx, n, 40);
                if (auto msg = body(rng, d); !msg.empty()) {
                    return ctx.descriptor() + " " + trial_tag(t) + msg;
                }
            }
        }
        return std::string{};
    };
    r.run("exp routes agree (Taylor sum, evaluation)", [&] {
        return for_derivations(30, [](Rng &, const OpTable &d) -> std::string {
            return op_exp(d) == op_exp_via_evaluate(d) ? std::string{} : "exp mismatch";
        });
    });
    r.run("log routes agree", [&] {
        return for_derivations(31, [](Rng &, const OpTable &d) -> std::string {
            const auto s = op_exp(d);
            return op_log(s) == op_log_via_evaluate(s) ? std::string{} : "log mismatch";
        });
    });
    r.run("exp of a derivation is an endomorphism", [&] {
        return for_derivations(32, [](Rng &, const OpTable &d) -> std::string {
            const auto rep = op_is_unital_endomorphism(op_exp(d));
            return rep ? std::string{} : rep.detail;
        });
    });
    r.run("binomial Leibniz identity", [&] {
        return for_derivations(33, [&](Rng &, const OpTable &d) -> std::string {
            const auto rep = check_binomial_leibniz(d, static_cast<unsigned>(n));
            return rep ? std::string{} : rep.detail;
        });
    });
    r.run("log(exp d) = d and exp(log s) = s", [&] {
        return for_derivations(34, [](Rng &, const OpTable &d) -> std::string {
            const auto s = op_exp(d);
            if (!(op_log(s) == d)) {
                return "log(exp d) != d";
            }
            return op_exp(op_log(s)) == s ? std::string{} : "exp(log s) != s";
        });
    });
    r.run("log of an automorphism is a derivation", [&] {
        return for_derivations(35, [](Rng &, const OpTable &d) -> std::string {
            const auto rep = op_is_derivation(op_log(op_exp(d)));
            return rep ? std::string{} : rep.detail;
        });
    });
    r.run("group law exp(d1 * d2) = exp d1 o exp d2", [&] {
        return for_derivations(36, [&](Rng &rng, const OpTable &d1) -> std::string {
            const auto d2 = random_contracting_derivation(rng, d1.ctx(), n, 40);
            return op_exp(star(d1, d2)) == op_compose(op_exp(d1), op_exp(d2)) ? std::string{} : "group law";
        });
    });
    r.run("fractional iterates", [&] {
        return for_derivations(37, [](Rng &, const OpTable &d) -> std::string {
            const auto s = op_exp(d);
            const auto half = fractional_iterate(s, Rational(1, 2));
            const auto third = fractional_iterate(s, Rational(1, 3));
            if (!(op_compose(half, half) == s)) {
                return "half o half != sigma";
            }
            if (!(op_power(third, 3) == s)) {
                return "third^3 != sigma";
            }
            if (!(fractional_iterate(half, Rational(2, 3)) == third)) {
                return "(sigma^[1/2])^[2/3] != sigma^[1/3]";
            }
            return {};
        });
    });
    r.run("torsion-free", [&] {
        return for_derivations(38, [](Rng &, const OpTable &d) -> std::string {
            if (d.is_zero()) {
                return {};
            }
            const auto s = op_exp(d);
            const auto id = OpTable::identity(d.ctx(), d.weight_bound());
            auto power = s;
            for (int k = 1; k <= 5; ++k) {
                if (power == id) {
                    return "sigma^" + std::to_string(k) + " = Id";
                }
                power = op_compose(power, s);
            }
            return {};
        });
    });
    r.run("Lie morphism push (pullback by coordinate swap)", [&]() -> std::string {
        Rng rng(cfg.seed + 39);
        const auto ctx = MonoidCtx::product(2);
        const auto phi = pullback_morphism(ExponentAut(ctx, {{0, 1}, {1, 0}}), n);
        for (std::size_t t = 0; t < cfg.trials; ++t) {
            const auto d1 = random_contracting_derivation(rng, ctx, n, 40);
            const auto d2 = random_contracting_derivation(rng, ctx, n, 40);
            push_morphism(phi, d1);
            if (!preserves_bracket(phi, d1, d2) || !preserves_group_law(phi, op_exp(d1), op_exp(d2))) {
                return trial_tag(t) + "morphism laws";
            }
        }
        return {};
    });
}

void suite_vaut(VerifyReport &report, const VerifyConfig &cfg)
{
    Runner r(report, "vaut");
    const auto n = cfg.order;
    r.run("decompose/compose roundtrip", [&]() -> std::string {
        Rng rng(cfg.seed + 40);
        for (std::size_t t = 0; t < cfg.trials; ++t) {
            const auto sample = random_vaut_sample(rng, 1 + t % 2, n);
            const auto f = decompose_vaut(sample.sigma);
            if (!(compose_factors(f) == sample.sigma) || !(f.mu == sample.factors.mu) || !(f.chi == sample.factors.chi)
                || !(f.residual == sample.factors.residual)) {
                return trial_tag(t) + "roundtrip";
            }
        }
        return {};
    });
    r.run("factor group laws", [&]() -> std::string {
        Rng rng(cfg.seed + 41);
        for (const auto &ctx : {MonoidCtx::lex(1), MonoidCtx::product(2)}) {
            for (std::size_t t = 0; t < cfg.trials; ++t) {
                std::vector<Rational> xv, yv, av, bv;
                for (std::size_t i = 0; i < ctx.dimension(); ++i) {
                    xv.push_back(rng.nonzero_rational());
                    yv.push_back(rng.nonzero_rational());
                    av.push_back(rng.nonzero_rational());
                    bv.push_back(rng.nonzero_rational());
                }
                const CharacterX x(ctx, xv), y(ctx, yv);
                const AdditiveChar a(ctx, av), b(ctx, bv);
                const auto v = random_hahn(rng, ctx, n, 40);
                if (!(apply_gexp(x, apply_gexp(y, v)) == apply_gexp(x * y, v))) {
                    return trial_tag(t) + "Psi_x Psi_y != Psi_xy";
                }
                if (!(apply_gder(a, v) + apply_gder(b, v) == apply_gder(a + b, v))) {
                    return trial_tag(t) + "d_a + d_b != d_(a+b)";
                }
            }
        }
        const auto ctx = MonoidCtx::product(2);
        const ExponentAut swap(ctx, {{0, 1}, {1, 0}});
        if (!(swap.compose(swap) == ExponentAut::identity(ctx))
            || !(op_compose(oaut_table(swap, n), oaut_table(swap, n)) == oaut_table(swap.compose(swap), n))) {
            return "o-Aut composition";
        }
        return {};
    });
    r.run("conjugation preserves 1-Aut", [&]() -> std::string {
        Rng rng(cfg.seed + 42);
        const auto ctx = MonoidCtx::product(2);
        const ExponentAut swap(ctx, {{0, 1}, {1, 0}});
        for (std::size_t t = 0; t < cfg.trials; ++t) {
            const auto rho = op_exp(random_contracting_derivation(rng, ctx, n, 40));
            const CharacterX x(ctx, {rng.nonzero_rational(), rng.nonzero_rational()});
            const auto by_oaut = op_compose(oaut_table(swap, n), op_compose(rho, oaut_table(swap.inverse(), n)));
            const auto by_gexp = op_compose(gexp_table(x, n), op_compose(rho, gexp_table(x.inverse(), n)));
            if (!is_one_aut(by_oaut) || !is_one_aut(by_gexp)) {
                return trial_tag(t) + "conjugate left 1-Aut";
            }
        }
        return {};
    });
    r.run("G-Der elements are non-contracting derivations", [&]() -> std::string {
        Rng rng(cfg.seed + 43);
        for (const auto &ctx : {MonoidCtx::lex(1), MonoidCtx::product(2)}) {
            for (std::size_t t = 0; t < cfg.trials; ++t) {
                std::vector<Rational> av;
                for (std::size_t i = 0; i < ctx.dimension(); ++i) {
                    av.push_back(rng.nonzero_rational());
                }
                const auto table = gder_table(AdditiveChar(ctx, av), n);
                if (!op_is_derivation(table)) {
                    return trial_tag(t) + "not a derivation";
                }
                if (op_is_contracting(table)) {
                    return trial_tag(t) + "unexpectedly contracting";
                }
            }
        }
        return {};
    });
    r.run("middle correspondence", [&]() -> std::string {
        const auto ctx = MonoidCtx::lex(1);
        const AdditiveChar alpha(ctx, {Rational(1)});
        std::map<Rational, Rational> declared;
        for (long k = 0; k <= static_cast<long>(n); ++k) {
            declared[Rational(k)] = int_pow(Rational(2), k);
        }
        const auto x = middle_correspond(alpha, declared);
        const auto gexp = gexp_table(x, n), gder = gder_table(alpha, n);
        if (!(op_compose(gexp, gder) == op_compose(gder, gexp))) {
            return "factors do not commute";
        }
        const auto rep = middle_shadow_check(alpha, x, declared, n);
        return rep ? std::string{} : rep.detail;
    });
}

} // namespace

VerifyReport run_verify(const std::string &suite, const VerifyConfig &cfg)
{
    VerifyReport report;
    const bool all = suite == "all";
    const auto &names = verify_suite_names();
    if (!all && std::find(names.begin(), names.end(), suite) == names.end()) {
        throw DomainError("unknown verify suite '" + suite + "'");
    }
    if (all || suite == "free") {
        suite_free(report, cfg);
    }
    if (all || suite == "bch") {
        suite_bch(report, cfg);
    }
    if (all || suite == "hahn") {
        suite_hahn(report, cfg);
    }
    if (all || suite == "operator") {
        suite_operator(report, cfg);
    }
    if (all || suite == "correspondence") {
        suite_correspondence(report, cfg);
    }
    if (all || suite == "vaut") {
        suite_vaut(report, cfg);
    }
    return report;
}

} // namespace nseries
