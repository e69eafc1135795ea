#include <nseries/errors.hpp>
#include <nseries/operator.hpp>

#include <algorithm>

#include "parallel.hpp"

namespace nseries
{

OpTable::OpTable(MonoidCtx ctx, std::size_t weight_bound, image_map images)
    : m_ctx(std::move(ctx)), m_bound(weight_bound), m_images(std::move(images))
{
    const auto universe = basis_universe(m_ctx, m_bound);
    for (const auto &m : universe) {
        const auto it = m_images.find(m);
        if (it == m_images.end()) {
            throw IncompleteTableError("operator table has no image for basis exponent " + exp_to_string(m));
        }
        if (!(it->second.ctx() == m_ctx) || it->second.weight_bound() != m_bound) {
            throw DimensionError("image of " + exp_to_string(m) + " lives in a different context");
        }
    }
    if (m_images.size() != universe.size()) {
        for (const auto &[m, img] : m_images) {
            if (!std::binary_search(universe.begin(), universe.end(), m, [&](const ExpVec &a, const ExpVec &b) {
                    const auto wa = m_ctx.weight(a), wb = m_ctx.weight(b);
                    return wa != wb ? wa < wb : a < b;
                })) {
                throw DimensionError("operator table lists " + exp_to_string(m) + " outside the basis universe");
            }
        }
    }
}

OpTable OpTable::from_function(const MonoidCtx &ctx, std::size_t weight_bound,
                               const std::function<HahnPoly(const ExpVec &)> &image_of)
{
    image_map images;
    for (auto &m : basis_universe(ctx, weight_bound)) {
        auto img = image_of(m);
        images.emplace(std::move(m), std::move(img));
    }
    return OpTable(ctx, weight_bound, std::move(images));
}

OpTable OpTable::identity(const MonoidCtx &ctx, std::size_t weight_bound)
{
    return from_function(ctx, weight_bound,
                         [&](const ExpVec &m) { return HahnPoly::monomial(ctx, weight_bound, m); });
}

OpTable OpTable::zero(const MonoidCtx &ctx, std::size_t weight_bound)
{
    return from_function(ctx, weight_bound, [&](const ExpVec &) { return HahnPoly(ctx, weight_bound); });
}

const HahnPoly &OpTable::image(const ExpVec &m) const
{
    const auto it = m_images.find(m);
    if (it == m_images.end()) {
        throw IncompleteTableError("operator table has no image for basis exponent " + exp_to_string(m));
    }
    return it->second;
}

bool OpTable::is_zero() const
{
    return std::all_of(m_images.begin(), m_images.end(), [](const auto &kv) { return kv.second.is_zero(); });
}

void check_same_context(const OpTable &phi, const OpTable &psi)
{
    if (!(phi.ctx() == psi.ctx()) || phi.weight_bound() != psi.weight_bound()) {
        throw DimensionError("operator context mismatch: " + phi.ctx().descriptor() + " N="
                             + std::to_string(phi.weight_bound()) + " vs " + psi.ctx().descriptor()
                             + " N=" + std::to_string(psi.weight_bound()));
    }
}

HahnPoly op_apply(const OpTable &phi, const HahnPoly &a)
{
    if (!(a.ctx() == phi.ctx()) || a.weight_bound() != phi.weight_bound()) {
        throw DimensionError("op_apply: series context does not match the operator");
    }
    HahnPoly out(phi.ctx(), phi.weight_bound());
    for (const auto &[m, c] : a.terms()) {
        for (const auto &[q, d] : phi.image(m).terms()) {
            out.add_to(q, c * d);
        }
    }
    return out;
}

namespace reference
{

OpTable op_compose(const OpTable &phi, const OpTable &psi)
{
    check_same_context(phi, psi);
    OpTable::image_map images;
    for (const auto &[m, img] : psi.images()) {
        images.emplace(m, op_apply(phi, img));
    }
    return OpTable(phi.ctx(), phi.weight_bound(), std::move(images));
}

} // namespace reference

OpTable op_compose(const OpTable &phi, const OpTable &psi)
{
    check_same_context(phi, psi);
    std::vector<const OpTable::image_map::value_type *> basis;
    basis.reserve(psi.images().size());
    for (const auto &kv : psi.images()) {
        basis.push_back(&kv);
    }
    std::vector<HahnPoly> results(basis.size(), HahnPoly(phi.ctx(), phi.weight_bound()));
    const auto count = static_cast<std::ptrdiff_t>(basis.size());
#pragma omp parallel for schedule(dynamic, 4) if (basis.size() >= detail::parallel_threshold)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        results[idx] = op_apply(phi, basis[idx]->second);
    }
    OpTable::image_map images;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        images.emplace(basis[i]->first, std::move(results[i]));
    }
    return OpTable(phi.ctx(), phi.weight_bound(), std::move(images));
}

OpTable op_add(const OpTable &phi, const OpTable &psi)
{
    check_same_context(phi, psi);
    OpTable::image_map images;
    for (const auto &[m, img] : phi.images()) {
        images.emplace(m, hp_add(img, psi.image(m)));
    }
    return OpTable(phi.ctx(), phi.weight_bound(), std::move(images));
}

OpTable op_sub(const OpTable &phi, const OpTable &psi)
{
    check_same_context(phi, psi);
    OpTable::image_map images;
    for (const auto &[m, img] : phi.images()) {
        images.emplace(m, hp_sub(img, psi.image(m)));
    }
    return OpTable(phi.ctx(), phi.weight_bound(), std::move(images));
}

OpTable op_scale(const Rational &c, const OpTable &phi)
{
    OpTable::image_map images;
    for (const auto &[m, img] : phi.images()) {
        images.emplace(m, hp_scale(c, img));
    }
    return OpTable(phi.ctx(), phi.weight_bound(), std::move(images));
}

OpTable op_lin_sum(std::span<const OpTable> family)
{
    if (family.empty()) {
        throw DimensionError("op_lin_sum needs a nonempty family to fix the context");
    }
    OpTable out = family.front();
    for (std::size_t i = 1; i < family.size(); ++i) {
        out = op_add(out, family[i]);
    }
    return out;
}

OpTable op_bracket(const OpTable &phi, const OpTable &psi)
{
    return op_sub(op_compose(phi, psi), op_compose(psi, phi));
}

OpTable op_power(const OpTable &phi, unsigned n)
{
    OpTable out = OpTable::identity(phi.ctx(), phi.weight_bound());
    for (unsigned i = 0; i < n; ++i) {
        out = op_compose(out, phi);
    }
    return out;
}

PredicateReport op_is_contracting(const OpTable &phi)
{
    const auto &ctx = phi.ctx();
    for (const auto &[m, img] : phi.images()) {
        for (const auto &[q, c] : img.terms()) {
            if (cmp(ctx, m, q) != Cmp::less) {
                return {false, std::make_pair(m, q),
                        "image of t^" + exp_to_string(m) + " contains t^" + exp_to_string(q) + ", which is not greater"};
            }
            if (ctx.weight(q) < ctx.weight(m) + 1) {
                return {false, std::make_pair(m, q),
                        "image of t^" + exp_to_string(m) + " contains t^" + exp_to_string(q)
                            + " without weight progress"};
            }
        }
    }
    return {};
}

namespace
{

// Basis pairs (a, b) with weight(a) + weight(b) <= N, in universe order.
template <typename Check>
PredicateReport for_basis_pairs(const OpTable &op, std::size_t probe_budget, Check &&check)
{
    const auto &ctx = op.ctx();
    const auto bound = static_cast<std::int64_t>(op.weight_bound());
    const auto universe = basis_universe(ctx, op.weight_bound());
    std::size_t probes = 0;
    for (const auto &a : universe) {
        for (const auto &b : universe) {
            if (ctx.weight(a) + ctx.weight(b) > bound) {
                break;
            }
            if (probe_budget != 0 && probes++ >= probe_budget) {
                return {};
            }
            if (auto r = check(a, b); !r.holds) {
                return r;
            }
        }
    }
    return {};
}

} // namespace

PredicateReport op_is_derivation(const OpTable &d, std::size_t probe_budget)
{
    const auto &ctx = d.ctx();
    const auto n = d.weight_bound();
    return for_basis_pairs(d, probe_budget, [&](const ExpVec &a, const ExpVec &b) -> PredicateReport {
        const auto ta = HahnPoly::monomial(ctx, n, a), tb = HahnPoly::monomial(ctx, n, b);
        const auto lhs = d.image(exp_add(a, b));
        const auto rhs = hp_add(hp_mul(d.image(a), tb), hp_mul(ta, d.image(b)));
        if (lhs == rhs) {
            return {};
        }
        return {false, std::make_pair(a, b),
                "Leibniz rule fails on t^" + exp_to_string(a) + " * t^" + exp_to_string(b)};
    });
}

PredicateReport op_is_unital_endomorphism(const OpTable &sigma, std::size_t probe_budget)
{
    const auto &ctx = sigma.ctx();
    const auto n = sigma.weight_bound();
    const ExpVec zero(ctx.dimension(), 0);
    if (!(sigma.image(zero) == HahnPoly::unit(ctx, n))) {
        return {false, std::make_pair(zero, zero), "sigma(1) != 1"};
    }
    return for_basis_pairs(sigma, probe_budget, [&](const ExpVec &a, const ExpVec &b) -> PredicateReport {
        if (sigma.image(exp_add(a, b)) == hp_mul(sigma.image(a), sigma.image(b))) {
            return {};
        }
        return {false, std::make_pair(a, b),
                "multiplicativity fails on t^" + exp_to_string(a) + " * t^" + exp_to_string(b)};
    });
}

OpTable op_evaluate(const FreeSeries &p, std::span<const OpTable> args, bool require_contracting)
{
    if (args.size() != p.alphabet_size() || args.empty()) {
        throw DimensionError("op_evaluate needs one operator per variable: got " + std::to_string(args.size())
                             + " for alphabet of size " + std::to_string(p.alphabet_size()));
    }
    const auto &ctx = args.front().ctx();
    const auto n = args.front().weight_bound();
    for (std::size_t i = 0; i < args.size(); ++i) {
        check_same_context(args.front(), args[i]);
        if (require_contracting) {
            if (auto r = op_is_contracting(args[i]); !r.holds) {
                throw PreconditionError("argument " + std::to_string(i) + " is not contracting: " + r.detail);
            }
        }
    }
    if (p.grade_bound() < n) {
        throw PreconditionError("series grade bound " + std::to_string(p.grade_bound())
                                + " is below the operator weight bound " + std::to_string(n));
    }

    // Products f(theta_1) o ... o f(theta_k) for every prefix needed, one
    // level of word length at a time.
    std::vector<std::vector<Word>> levels(n + 1);
    {
        std::set<Word> needed;
        for (const auto &[w, c] : p.terms()) {
            if (w.length() > n) {
                break;
            }
            for (std::size_t k = 1; k <= w.length(); ++k) {
                needed.insert(Word(std::vector<std::uint32_t>(w.letters.begin(),
                                                              w.letters.begin() + static_cast<std::ptrdiff_t>(k))));
            }
        }
        for (const auto &w : needed) {
            levels[w.length()].push_back(w);
        }
    }
    std::map<Word, OpTable> products;
    products.emplace(Word{}, OpTable::identity(ctx, n));
    for (std::size_t len = 1; len <= n; ++len) {
        const auto &level = levels[len];
        std::vector<std::optional<OpTable>> computed(level.size());
        const auto count = static_cast<std::ptrdiff_t>(level.size());
#pragma omp parallel for schedule(dynamic) if (level.size() >= 4)
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            const auto &w = level[static_cast<std::size_t>(i)];
            const Word prefix(std::vector<std::uint32_t>(w.letters.begin(), w.letters.end() - 1));
            computed[static_cast<std::size_t>(i)] = op_compose(products.at(prefix), args[w.letters.back()]);
        }
        for (std::size_t i = 0; i < level.size(); ++i) {
            products.emplace(level[i], std::move(*computed[i]));
        }
    }

    OpTable::image_map images;
    for (const auto &m : basis_universe(ctx, n)) {
        images.emplace(m, HahnPoly(ctx, n));
    }
    for (const auto &[w, c] : p.terms()) {
        if (w.length() > n) {
            break;
        }
        for (const auto &[m, img] : products.at(w).images()) {
            auto &acc = images.at(m);
            for (const auto &[q, d] : img.terms()) {
                acc.add_to(q, c * d);
            }
        }
    }
    return OpTable(ctx, n, std::move(images));
}

OpTable derivation_from_generators(const MonoidCtx &ctx, std::size_t weight_bound,
                                   std::span<const HahnPoly> generator_images)
{
    if (generator_images.size() != ctx.dimension()) {
        throw DimensionError("derivation needs one generator image per coordinate");
    }
    return OpTable::from_function(ctx, weight_bound, [&](const ExpVec &m) {
        HahnPoly out(ctx, weight_bound);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) {
                continue;
            }
            auto lower = m;
            --lower[i];
            const auto term = hp_mul(HahnPoly::monomial(ctx, weight_bound, lower, Rational(m[i])), generator_images[i]);
            out = hp_add(out, term);
        }
        return out;
    });
}

OpTable substitution_endomorphism(const MonoidCtx &ctx, std::size_t weight_bound,
                                  std::span<const HahnPoly> generator_images)
{
    if (generator_images.size() != ctx.dimension()) {
        throw DimensionError("substitution needs one generator image per coordinate");
    }
    return OpTable::from_function(ctx, weight_bound, [&](const ExpVec &m) {
        HahnPoly out = HahnPoly::unit(ctx, weight_bound);
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (std::int64_t k = 0; k < m[i]; ++k) {
                out = hp_mul(out, generator_images[i]);
            }
        }
        return out;
    });
}

OpTable multiplication_operator(const HahnPoly &a)
{
    const auto &ctx = a.ctx();
    const auto n = a.weight_bound();
    return OpTable::from_function(ctx, n,
                                  [&](const ExpVec &m) { return hp_mul(a, HahnPoly::monomial(ctx, n, m)); });
}

} // namespace nseries
