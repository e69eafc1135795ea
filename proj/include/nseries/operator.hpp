#ifndef NSERIES_OPERATOR_HPP
#define NSERIES_OPERATOR_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nseries/free_algebra.hpp>
#include <nseries/hahn_series.hpp>

namespace nseries
{

// Strongly linear operator on truncated Hahn series, given by the images of
// every basis monomial t^m with weight(m) <= N.
class OpTable
{
public:
    using image_map = std::map<ExpVec, HahnPoly>;

    // Throws IncompleteTableError when a basis exponent has no image and
    // DimensionError on a context mismatch or an exponent outside the universe.
    OpTable(MonoidCtx ctx, std::size_t weight_bound, image_map images);

    static OpTable identity(const MonoidCtx &ctx, std::size_t weight_bound);
    static OpTable zero(const MonoidCtx &ctx, std::size_t weight_bound);
    static OpTable from_function(const MonoidCtx &ctx, std::size_t weight_bound,
                                 const std::function<HahnPoly(const ExpVec &)> &image_of);

    const MonoidCtx &ctx() const noexcept
    {
        return m_ctx;
    }
    std::size_t weight_bound() const noexcept
    {
        return m_bound;
    }
    const image_map &images() const noexcept
    {
        return m_images;
    }
    const HahnPoly &image(const ExpVec &m) const;
    bool is_zero() const;

    bool operator==(const OpTable &) const = default;

private:
    MonoidCtx m_ctx;
    std::size_t m_bound;
    image_map m_images;
};

HahnPoly op_apply(const OpTable &phi, const HahnPoly &a);

// (phi o psi)(t^m) = phi(psi(t^m))
OpTable op_compose(const OpTable &phi, const OpTable &psi);
OpTable op_add(const OpTable &phi, const OpTable &psi);
OpTable op_sub(const OpTable &phi, const OpTable &psi);
OpTable op_scale(const Rational &c, const OpTable &phi);
OpTable op_lin_sum(std::span<const OpTable> family);
// phi o psi - psi o phi
OpTable op_bracket(const OpTable &phi, const OpTable &psi);
OpTable op_power(const OpTable &phi, unsigned n);

void check_same_context(const OpTable &phi, const OpTable &psi);

// Failure witness for a predicate on basis monomials: (first, second) are the
// exponents involved (for contracting: basis m and offending q).
struct PredicateReport {
    bool holds = true;
    std::optional<std::pair<ExpVec, ExpVec>> witness;
    std::string detail;

    explicit operator bool() const noexcept
    {
        return holds;
    }
};

// supp phi(t^m) > m with weight progress weight(q) >= weight(m) + 1.
PredicateReport op_is_contracting(const OpTable &phi);

// Leibniz rule on all basis pairs with weight(a) + weight(b) <= N. A nonzero
// probe_budget caps the number of pairs checked.
PredicateReport op_is_derivation(const OpTable &d, std::size_t probe_budget = 0);

// sigma(1) = 1 and multiplicativity on all basis pairs within the weight bound.
PredicateReport op_is_unital_endomorphism(const OpTable &sigma, std::size_t probe_budget = 0);

// ev_f(P) = sum_theta P(theta) f(theta_1) o ... o f(theta_n). Words longer than
// N contribute nothing. With require_contracting, every argument must pass
// op_is_contracting (PreconditionError carries the witness otherwise).
OpTable op_evaluate(const FreeSeries &p, std::span<const OpTable> args, bool require_contracting = true);

// Builders.

// The derivation with d(t^{e_i}) = generator_images[i]:
// d(t^m) = sum_i m_i t^{m - e_i} generator_images[i].
OpTable derivation_from_generators(const MonoidCtx &ctx, std::size_t weight_bound,
                                   std::span<const HahnPoly> generator_images);

// The substitution endomorphism t^{e_i} -> generator_images[i]:
// sigma(t^m) = prod_i generator_images[i]^{m_i}.
OpTable substitution_endomorphism(const MonoidCtx &ctx, std::size_t weight_bound,
                                  std::span<const HahnPoly> generator_images);

// t^m -> a t^m
OpTable multiplication_operator(const HahnPoly &a);

namespace reference
{

OpTable op_compose(const OpTable &phi, const OpTable &psi);

} // namespace reference

} // namespace nseries

#endif
