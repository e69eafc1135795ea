#include <nseries/errors.hpp>
#include <nseries/random.hpp>

namespace nseries
{

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi)
{
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(m_engine() % span);
}

bool Rng::chance(unsigned percent)
{
    return static_cast<unsigned>(m_engine() % 100) < percent;
}

Rational Rng::nonzero_rational()
{
    std::int64_t num = 0;
    while (num == 0) {
        num = uniform(-5, 5);
    }
    Rational r(static_cast<long>(num), static_cast<unsigned long>(uniform(1, 4)));
    r.canonicalize();
    return r;
}

FreeSeries random_free_series(Rng &rng, std::size_t alphabet, std::size_t grade_bound, unsigned percent, bool unit)
{
    FreeSeries out(alphabet, grade_bound);
    if (unit) {
        out.add_to(Word{}, rng.nonzero_rational());
    }
    // Words of length 1..N in graded order.
    std::vector<std::uint32_t> letters;
    auto rec = [&](auto &&self, std::size_t len) -> void {
        if (letters.size() == len) {
            if (rng.chance(percent)) {
                out.add_to(Word(letters), rng.nonzero_rational());
            }
            return;
        }
        for (std::uint32_t l = 0; l < alphabet; ++l) {
            letters.push_back(l);
            self(self, len);
            letters.pop_back();
        }
    };
    for (std::size_t len = 1; len <= grade_bound; ++len) {
        rec(rec, len);
    }
    return out;
}

HahnPoly random_hahn(Rng &rng, const MonoidCtx &ctx, std::size_t weight_bound, unsigned percent)
{
    HahnPoly out(ctx, weight_bound);
    for (const auto &m : basis_universe(ctx, weight_bound)) {
        if (rng.chance(percent)) {
            out.add_to(m, rng.nonzero_rational());
        }
    }
    return out;
}

OpTable random_contracting_table(Rng &rng, const MonoidCtx &ctx, std::size_t weight_bound, unsigned percent)
{
    const auto universe = basis_universe(ctx, weight_bound);
    return OpTable::from_function(ctx, weight_bound, [&](const ExpVec &m) {
        HahnPoly img(ctx, weight_bound);
        for (const auto &q : universe) {
            if (cmp(ctx, m, q) == Cmp::less && ctx.weight(q) >= ctx.weight(m) + 1 && rng.chance(percent)) {
                img.add_to(q, rng.nonzero_rational());
            }
        }
        return img;
    });
}

OpTable random_contracting_derivation(Rng &rng, const MonoidCtx &ctx, std::size_t weight_bound, unsigned percent)
{
    const auto universe = basis_universe(ctx, weight_bound);
    std::vector<HahnPoly> gens;
    for (std::size_t i = 0; i < ctx.dimension(); ++i) {
        const auto e = unit_exp(ctx.dimension(), i);
        HahnPoly h(ctx, weight_bound);
        for (const auto &q : universe) {
            if (cmp(ctx, e, q) == Cmp::less && ctx.weight(q) >= ctx.weight(e) + 1 && rng.chance(percent)) {
                h.add_to(q, rng.nonzero_rational());
            }
        }
        gens.push_back(std::move(h));
    }
    return derivation_from_generators(ctx, weight_bound, gens);
}

OpTable hand_built_substitution(std::size_t index, std::size_t weight_bound)
{
    // Coefficients of t^2, t^3, t^4 in the image of t.
    static const long shapes[10][3][2] = {
        {{1, 1}, {0, 1}, {0, 1}},  {{-1, 1}, {0, 1}, {0, 1}}, {{1, 2}, {1, 3}, {0, 1}}, {{0, 1}, {1, 1}, {0, 1}},
        {{0, 1}, {0, 1}, {-2, 1}}, {{2, 1}, {-1, 1}, {1, 1}}, {{1, 1}, {1, 1}, {1, 1}}, {{-3, 2}, {0, 1}, {5, 4}},
        {{1, 5}, {-1, 7}, {0, 1}}, {{0, 1}, {3, 1}, {-1, 2}},
    };
    if (index >= 10) {
        throw DomainError("hand_built_substitution: index must be below 10");
    }
    const auto ctx = MonoidCtx::lex(1);
    HahnPoly image = HahnPoly::monomial(ctx, weight_bound, {1});
    for (std::size_t k = 0; k < 3; ++k) {
        Rational c(shapes[index][k][0], static_cast<unsigned long>(shapes[index][k][1]));
        c.canonicalize();
        image.add_to({static_cast<std::int64_t>(k + 2)}, c);
    }
    const HahnPoly gens[] = {image};
    return substitution_endomorphism(ctx, weight_bound, gens);
}

} // namespace nseries
