#include <nseries/errors.hpp>
#include <nseries/hahn_series.hpp>

#include <algorithm>

#include "parallel.hpp"

namespace nseries
{

HahnPoly HahnPoly::monomial(const MonoidCtx &ctx, std::size_t weight_bound, const ExpVec &m, const Rational &c)
{
    HahnPoly out(ctx, weight_bound);
    out.add_to(m, c);
    return out;
}

HahnPoly HahnPoly::unit(const MonoidCtx &ctx, std::size_t weight_bound)
{
    return monomial(ctx, weight_bound, ExpVec(ctx.dimension(), 0));
}

Rational HahnPoly::coeff(const ExpVec &m) const
{
    const auto it = m_terms.find(m);
    return it == m_terms.end() ? Rational(0) : it->second;
}

std::set<ExpVec> HahnPoly::support() const
{
    std::set<ExpVec> out;
    for (const auto &t : m_terms) {
        out.insert(t.first);
    }
    return out;
}

std::vector<std::pair<ExpVec, Rational>> HahnPoly::ordered_terms() const
{
    std::vector<std::pair<ExpVec, Rational>> out(m_terms.begin(), m_terms.end());
    std::stable_sort(out.begin(), out.end(),
                     [&](const auto &x, const auto &y) { return m_ctx.weight(x.first) < m_ctx.weight(y.first); });
    return out;
}

void HahnPoly::add_to(const ExpVec &m, const Rational &c)
{
    m_ctx.check(m);
    if (std::any_of(m.begin(), m.end(), [](std::int64_t x) { return x < 0; })) {
        throw DomainError("exponent " + exp_to_string(m) + " leaves the nonnegative cone");
    }
    if (c == 0 || m_ctx.weight(m) > static_cast<std::int64_t>(m_bound)) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            m_terms.erase(it);
        }
    }
}

std::vector<ExpVec> basis_universe(const MonoidCtx &ctx, std::size_t weight_bound)
{
    std::vector<ExpVec> out;
    ExpVec cur(ctx.dimension(), 0);
    const auto bound = static_cast<std::int64_t>(weight_bound);
    auto rec = [&](auto &&self, std::size_t i, std::int64_t used) -> void {
        if (i == cur.size()) {
            out.push_back(cur);
            return;
        }
        for (std::int64_t k = 0; used + k * ctx.weights()[i] <= bound; ++k) {
            cur[i] = k;
            self(self, i + 1, used + k * ctx.weights()[i]);
        }
        cur[i] = 0;
    };
    rec(rec, 0, 0);
    std::stable_sort(out.begin(), out.end(), [&](const ExpVec &a, const ExpVec &b) {
        const auto wa = ctx.weight(a), wb = ctx.weight(b);
        return wa != wb ? wa < wb : a < b;
    });
    return out;
}

void check_same_context(const HahnPoly &a, const HahnPoly &b)
{
    if (!(a.ctx() == b.ctx()) || a.weight_bound() != b.weight_bound()) {
        throw DimensionError("Hahn series context mismatch: " + a.ctx().descriptor() + " N="
                             + std::to_string(a.weight_bound()) + " vs " + b.ctx().descriptor()
                             + " N=" + std::to_string(b.weight_bound()));
    }
}

HahnPoly hp_add(const HahnPoly &a, const HahnPoly &b)
{
    check_same_context(a, b);
    HahnPoly out = a;
    for (const auto &[m, c] : b.terms()) {
        out.add_to(m, c);
    }
    return out;
}

HahnPoly hp_sub(const HahnPoly &a, const HahnPoly &b)
{
    check_same_context(a, b);
    HahnPoly out = a;
    for (const auto &[m, c] : b.terms()) {
        out.add_to(m, -c);
    }
    return out;
}

HahnPoly hp_scale(const Rational &c, const HahnPoly &a)
{
    HahnPoly out(a.ctx(), a.weight_bound());
    if (c == 0) {
        return out;
    }
    for (const auto &[m, x] : a.terms()) {
        out.add_to(m, c * x);
    }
    return out;
}

namespace reference
{

HahnPoly hp_mul(const HahnPoly &a, const HahnPoly &b)
{
    check_same_context(a, b);
    HahnPoly out(a.ctx(), a.weight_bound());
    for (const auto &[x, p] : a.terms()) {
        for (const auto &[y, q] : b.terms()) {
            out.add_to(exp_add(x, y), p * q);
        }
    }
    return out;
}

} // namespace reference

HahnPoly hp_mul(const HahnPoly &a, const HahnPoly &b)
{
    check_same_context(a, b);
    const auto &ctx = a.ctx();
    const auto bound = static_cast<std::int64_t>(a.weight_bound());

    // Reachable targets within the weight bound.
    std::set<ExpVec> target_set;
    for (const auto &[x, p] : a.terms()) {
        for (const auto &[y, q] : b.terms()) {
            auto m = exp_add(x, y);
            if (ctx.weight(m) <= bound) {
                target_set.insert(std::move(m));
            }
        }
    }
    const std::vector<ExpVec> targets(target_set.begin(), target_set.end());
    const auto supp_a = a.support(), supp_b = b.support();
    std::vector<Rational> coeffs(targets.size());
    const auto count = static_cast<std::ptrdiff_t>(targets.size());
#pragma omp parallel for schedule(dynamic, 8) if (targets.size() >= detail::parallel_threshold)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        Rational sum(0);
        for (const auto &[x, y] : convolution_pairs(ctx, targets[idx], supp_a, supp_b)) {
            sum += a.terms().at(x) * b.terms().at(y);
        }
        coeffs[idx] = std::move(sum);
    }

    HahnPoly out(ctx, a.weight_bound());
    for (std::size_t i = 0; i < targets.size(); ++i) {
        out.add_to(targets[i], coeffs[i]);
    }
    return out;
}

std::optional<PrecWitness> hp_prec(const HahnPoly &v, const HahnPoly &w)
{
    if (!(v.ctx() == w.ctx())) {
        throw DimensionError("hp_prec: context mismatch");
    }
    if (w.is_zero()) {
        return std::nullopt;
    }
    PrecWitness witness;
    for (const auto &[p, c] : v.terms()) {
        bool found = false;
        for (const auto &[q, d] : w.terms()) {
            if (cmp(v.ctx(), p, q) == Cmp::greater) {
                witness.emplace(p, q);
                found = true;
                break;
            }
        }
        if (!found) {
            return std::nullopt;
        }
    }
    return witness;
}

} // namespace nseries
