#ifndef NSERIES_RANDOM_HPP
#define NSERIES_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include <nseries/free_algebra.hpp>
#include <nseries/hahn_series.hpp>
#include <nseries/operator.hpp>

namespace nseries
{

// Seeded generator whose draws depend only on the mt19937_64 bit stream, so
// the same seed gives the same corpus on every platform.
class Rng
{
public:
    explicit Rng(std::uint64_t seed) : m_engine(seed) {}

    // Uniform in [lo, hi]; modulo bias is irrelevant at these ranges.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    bool chance(unsigned percent);
    // Small nonzero rational with numerator in [-5, 5] and denominator in [1, 4].
    Rational nonzero_rational();

private:
    std::mt19937_64 m_engine;
};

// Random element of k<<m>> with roughly `percent` of the words up to the
// grade bound present. With unit, the constant term is forced nonzero;
// otherwise it is zero.
FreeSeries random_free_series(Rng &rng, std::size_t alphabet, std::size_t grade_bound, unsigned percent, bool unit);

HahnPoly random_hahn(Rng &rng, const MonoidCtx &ctx, std::size_t weight_bound, unsigned percent);

// Contracting (with weight progress) table that need not be a derivation.
OpTable random_contracting_table(Rng &rng, const MonoidCtx &ctx, std::size_t weight_bound, unsigned percent);

// Contracting derivation from random generator images h_i whose exponents q
// satisfy e_i < q and weight(q) >= weight(e_i) + 1.
OpTable random_contracting_derivation(Rng &rng, const MonoidCtx &ctx, std::size_t weight_bound, unsigned percent);

// d = 1 substitution automorphisms t -> t + c2 t^2 + ... , the i-th of a fixed
// family of ten hand-picked shapes.
OpTable hand_built_substitution(std::size_t index, std::size_t weight_bound);

} // namespace nseries

#endif
