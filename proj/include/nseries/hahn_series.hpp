#ifndef NSERIES_HAHN_SERIES_HPP
#define NSERIES_HAHN_SERIES_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include <nseries/rational.hpp>
#include <nseries/support_order.hpp>

namespace nseries
{

// Truncated element of k((M)): exponents live in the cone N^d and every stored
// exponent has weight <= weight_bound.
class HahnPoly
{
public:
    using term_map = std::map<ExpVec, Rational>;

    HahnPoly(MonoidCtx ctx, std::size_t weight_bound) : m_ctx(std::move(ctx)), m_bound(weight_bound) {}

    static HahnPoly monomial(const MonoidCtx &ctx, std::size_t weight_bound, const ExpVec &m,
                             const Rational &c = Rational(1));
    static HahnPoly unit(const MonoidCtx &ctx, std::size_t weight_bound);

    const MonoidCtx &ctx() const noexcept
    {
        return m_ctx;
    }
    std::size_t weight_bound() const noexcept
    {
        return m_bound;
    }
    const term_map &terms() const noexcept
    {
        return m_terms;
    }
    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }
    Rational coeff(const ExpVec &m) const;
    std::set<ExpVec> support() const;

    // Terms sorted by (weight, lex).
    std::vector<std::pair<ExpVec, Rational>> ordered_terms() const;

    // Accumulates c at exponent m. Exponents above the weight bound are
    // dropped; negative coordinates are a DomainError.
    void add_to(const ExpVec &m, const Rational &c);

    bool operator==(const HahnPoly &) const = default;

private:
    MonoidCtx m_ctx;
    std::size_t m_bound;
    term_map m_terms;
};

// Every exponent of N^d with weight <= bound, in (weight, lex) order.
std::vector<ExpVec> basis_universe(const MonoidCtx &ctx, std::size_t weight_bound);

HahnPoly hp_add(const HahnPoly &a, const HahnPoly &b);
HahnPoly hp_sub(const HahnPoly &a, const HahnPoly &b);
HahnPoly hp_scale(const Rational &c, const HahnPoly &a);
HahnPoly hp_mul(const HahnPoly &a, const HahnPoly &b);

// For each p in supp v, some q in supp w with q < p.
using PrecWitness = std::map<ExpVec, ExpVec>;

// Some(witness) iff v is strictly dominated by w.
std::optional<PrecWitness> hp_prec(const HahnPoly &v, const HahnPoly &w);

void check_same_context(const HahnPoly &a, const HahnPoly &b);

inline HahnPoly operator+(const HahnPoly &a, const HahnPoly &b)
{
    return hp_add(a, b);
}
inline HahnPoly operator-(const HahnPoly &a, const HahnPoly &b)
{
    return hp_sub(a, b);
}
inline HahnPoly operator*(const HahnPoly &a, const HahnPoly &b)
{
    return hp_mul(a, b);
}
inline HahnPoly operator*(const Rational &c, const HahnPoly &a)
{
    return hp_scale(c, a);
}

namespace reference
{

// Serial double loop over both supports.
HahnPoly hp_mul(const HahnPoly &a, const HahnPoly &b);

} // namespace reference

} // namespace nseries

#endif
