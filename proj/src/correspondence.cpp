#include <nseries/correspondence.hpp>
#include <nseries/errors.hpp>
#include <nseries/series_calculus.hpp>

namespace nseries
{

namespace
{

void require_contracting(const OpTable &op, const std::string &what)
{
    if (auto r = op_is_contracting(op); !r.holds) {
        throw PreconditionError(what + " is not contracting: " + r.detail);
    }
}

OpTable minus_identity(const OpTable &sigma)
{
    return op_sub(sigma, OpTable::identity(sigma.ctx(), sigma.weight_bound()));
}

} // namespace

OpTable op_exp(const OpTable &d)
{
    require_contracting(d, "exp argument");
    OpTable sum = OpTable::identity(d.ctx(), d.weight_bound());
    OpTable term = sum;
    for (std::size_t n = 1; n <= d.weight_bound(); ++n) {
        term = op_scale(Rational(1, static_cast<unsigned long>(n)), op_compose(d, term));
        if (term.is_zero()) {
            break;
        }
        sum = op_add(sum, term);
    }
    return sum;
}

OpTable op_exp_via_evaluate(const OpTable &d)
{
    const OpTable args[] = {d};
    return op_evaluate(series_E0(d.weight_bound()), args);
}

OpTable op_log(const OpTable &sigma)
{
    const auto eps = minus_identity(sigma);
    require_contracting(eps, "sigma - Id");
    OpTable sum = OpTable::zero(sigma.ctx(), sigma.weight_bound());
    OpTable power = OpTable::identity(sigma.ctx(), sigma.weight_bound());
    for (std::size_t n = 1; n <= sigma.weight_bound(); ++n) {
        power = op_compose(eps, power);
        if (power.is_zero()) {
            break;
        }
        const Rational c(n % 2 == 1 ? 1 : -1, static_cast<unsigned long>(n));
        sum = op_add(sum, op_scale(c, power));
    }
    return sum;
}

OpTable op_log_via_evaluate(const OpTable &sigma)
{
    const OpTable args[] = {minus_identity(sigma)};
    return op_evaluate(series_L0(sigma.weight_bound()), args);
}

OpTable star(const OpTable &d1, const OpTable &d2)
{
    check_same_context(d1, d2);
    const OpTable args[] = {d1, d2};
    return op_evaluate(bch_product(d1.weight_bound()), args);
}

OpTable fractional_iterate(const OpTable &sigma, const Rational &c)
{
    if (auto r = op_is_unital_endomorphism(sigma); !r.holds) {
        throw PreconditionError("fractional iterate of a non-endomorphism: " + r.detail);
    }
    return op_exp(op_scale(c, op_log(sigma)));
}

PredicateReport check_binomial_leibniz(const OpTable &d, unsigned max_n)
{
    const auto &ctx = d.ctx();
    const auto bound = d.weight_bound();
    std::vector<OpTable> powers{OpTable::identity(ctx, bound)};
    for (unsigned n = 1; n <= max_n; ++n) {
        powers.push_back(op_compose(d, powers.back()));
    }
    const auto universe = basis_universe(ctx, bound);
    for (unsigned n = 0; n <= max_n; ++n) {
        for (const auto &a : universe) {
            for (const auto &b : universe) {
                if (ctx.weight(a) + ctx.weight(b) > static_cast<std::int64_t>(bound)) {
                    break;
                }
                const auto lhs = powers[n].image(exp_add(a, b));
                HahnPoly rhs(ctx, bound);
                for (unsigned i = 0; i <= n; ++i) {
                    rhs = hp_add(rhs, hp_scale(binomial(n, i), hp_mul(powers[i].image(a), powers[n - i].image(b))));
                }
                if (!(lhs == rhs)) {
                    return {false, std::make_pair(a, b),
                            "binomial Leibniz identity fails at n=" + std::to_string(n) + " on t^" + exp_to_string(a)
                                + " * t^" + exp_to_string(b)};
                }
            }
        }
    }
    return {};
}

DerAutPair make_der_aut_pair(const OpTable &d)
{
    return DerAutPair{d, op_exp(d)};
}

LieMorphism identity_morphism()
{
    return {"identity", [](const OpTable &d) { return d; }};
}

LieMorphism conjugation_morphism(const OpTable &rho, const OpTable &rho_inv)
{
    const auto id = OpTable::identity(rho.ctx(), rho.weight_bound());
    if (!(op_compose(rho, rho_inv) == id) || !(op_compose(rho_inv, rho) == id)) {
        throw PreconditionError("conjugation: supplied inverse does not invert rho");
    }
    return {"conjugation", [rho, rho_inv](const OpTable &d) { return op_compose(rho, op_compose(d, rho_inv)); }};
}

LieMorphism scalar_morphism(const Rational &c)
{
    return {"scalar " + to_string(c), [c](const OpTable &d) { return op_scale(c, d); }};
}

bool preserves_bracket(const LieMorphism &phi, const OpTable &d1, const OpTable &d2)
{
    return phi(op_bracket(d1, d2)) == op_bracket(phi(d1), phi(d2));
}

OpTable push_automorphism(const LieMorphism &phi, const OpTable &sigma)
{
    return op_exp(phi(op_log(sigma)));
}

bool preserves_group_law(const LieMorphism &phi, const OpTable &s1, const OpTable &s2)
{
    return push_automorphism(phi, op_compose(s1, s2)) == op_compose(push_automorphism(phi, s1), push_automorphism(phi, s2));
}

PushResult push_morphism(const LieMorphism &phi, const OpTable &d)
{
    require_contracting(d, "derivation");
    const auto image = phi(d);
    require_contracting(image, "Phi(derivation)");
    PushResult out{op_exp(d), op_exp(image)};
    if (!(push_automorphism(phi, out.sigma_in) == out.sigma_out)) {
        throw InconsistencyError("Psi(exp d) differs from exp(Phi(d)) under " + phi.name);
    }
    return out;
}

} // namespace nseries
