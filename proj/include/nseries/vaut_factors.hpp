#ifndef NSERIES_VAUT_FACTORS_HPP
#define NSERIES_VAUT_FACTORS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include <nseries/correspondence.hpp>
#include <nseries/hahn_series.hpp>
#include <nseries/operator.hpp>

namespace nseries
{

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Multiplicative character x: (Z^d, +) -> (k^x, .), fixed by its values on the
// standard generators.
class CharacterX
{
public:
    CharacterX(MonoidCtx ctx, std::vector<Rational> generator_values);
    static CharacterX trivial(const MonoidCtx &ctx);

    const MonoidCtx &ctx() const noexcept
    {
        return m_ctx;
    }
    const std::vector<Rational> &generator_values() const noexcept
    {
        return m_values;
    }
    Rational operator()(const ExpVec &g) const;
    CharacterX operator*(const CharacterX &o) const;
    CharacterX inverse() const;

    bool operator==(const CharacterX &) const = default;

private:
    MonoidCtx m_ctx;
    std::vector<Rational> m_values;
};

// Order automorphism of (Z^d, +, <): unimodular integer matrix whose column i
// is the image of e_i.
class ExponentAut
{
public:
    // Throws DomainError unless det = +-1 and the map preserves the order on a
    // probe box in both directions.
    ExponentAut(MonoidCtx ctx, IntMatrix matrix);
    static ExponentAut identity(const MonoidCtx &ctx);

    const MonoidCtx &ctx() const noexcept
    {
        return m_ctx;
    }
    const IntMatrix &matrix() const noexcept
    {
        return m_matrix;
    }
    ExpVec operator()(const ExpVec &g) const;
    ExponentAut inverse() const;
    // (this o o)(g) = this(o(g))
    ExponentAut compose(const ExponentAut &o) const;

    bool operator==(const ExponentAut &) const = default;

private:
    MonoidCtx m_ctx;
    IntMatrix m_matrix;
};

// Additive character alpha: (Z^d, +) -> (k, +).
class AdditiveChar
{
public:
    AdditiveChar(MonoidCtx ctx, std::vector<Rational> generator_values);

    const MonoidCtx &ctx() const noexcept
    {
        return m_ctx;
    }
    const std::vector<Rational> &generator_values() const noexcept
    {
        return m_values;
    }
    Rational operator()(const ExpVec &g) const;
    AdditiveChar operator+(const AdditiveChar &o) const;

    bool operator==(const AdditiveChar &) const = default;

private:
    MonoidCtx m_ctx;
    std::vector<Rational> m_values;
};

IntMatrix int_matrix_mul(const IntMatrix &a, const IntMatrix &b);
Rational int_matrix_det(const IntMatrix &m);

// Psi_x: sum a(g) t^g -> sum x(g) a(g) t^g
HahnPoly apply_gexp(const CharacterX &x, const HahnPoly &a);

// Relabels exponents by an arbitrary integer matrix. Throws
// TruncationOverflowError when an image leaves the weight bound or the cone.
HahnPoly apply_exponent_map(const IntMatrix &matrix, const HahnPoly &a);

HahnPoly apply_oaut(const ExponentAut &mu, const HahnPoly &a);

// d_alpha: sum a(g) t^g -> sum alpha(g) a(g) t^g
HahnPoly apply_gder(const AdditiveChar &alpha, const HahnPoly &a);

OpTable gexp_table(const CharacterX &x, std::size_t weight_bound);
OpTable oaut_table(const ExponentAut &mu, std::size_t weight_bound);
OpTable gder_table(const AdditiveChar &alpha, std::size_t weight_bound);

// Conjugation d -> T o d o T^-1 by the o-Aut table of mu.
LieMorphism pullback_morphism(const ExponentAut &mu, std::size_t weight_bound);

enum class ExpMode { declared, taylor };

// The character g -> e(alpha(g)). In declared mode, e is given by its values
// on finitely many points; e(a+b) = e(a) e(b) is verified wherever all three
// are declared (InconsistencyError otherwise), e(0) must be 1 and each needed
// e(alpha(e_i)) must be declared and nonzero. In taylor mode, e(v) is the
// truncated sum_{n<=N} v^n/n! and `declared` is ignored.
CharacterX middle_correspond(const AdditiveChar &alpha, const std::map<Rational, Rational> &declared,
                             ExpMode mode = ExpMode::declared, std::size_t weight_bound = 0);

Rational taylor_exp(const Rational &v, std::size_t order);

// On every basis monomial g whose alpha-value has a declared exponential,
// e(alpha(g)) == x(g).
PredicateReport middle_shadow_check(const AdditiveChar &alpha, const CharacterX &x,
                                    const std::map<Rational, Rational> &declared, std::size_t weight_bound);

struct FactorAut {
    ExponentAut mu;
    CharacterX chi;
    OpTable residual;
};

// residual o Psi_chi o mu
OpTable compose_factors(const FactorAut &f);

// sigma is a unital endomorphism and sigma - Id is contracting.
PredicateReport is_one_aut(const OpTable &sigma);

// Splits sigma into (mu, chi, residual) with compose_factors(result) == sigma.
// Throws NotDecomposableError with a witness on failure.
FactorAut decompose_vaut(const OpTable &sigma);

} // namespace nseries

#endif
