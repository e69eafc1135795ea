#include <nseries/errors.hpp>
#include <nseries/vaut_factors.hpp>

#include <algorithm>

namespace nseries
{

namespace
{

void check_dimension(const MonoidCtx &ctx, std::size_t n, const char *what)
{
    if (n != ctx.dimension()) {
        throw DimensionError(std::string(what) + ": expected " + std::to_string(ctx.dimension())
                             + " generator values, got " + std::to_string(n));
    }
}

void check_square(const IntMatrix &m, std::size_t d)
{
    if (m.size() != d || std::any_of(m.begin(), m.end(), [&](const auto &row) { return row.size() != d; })) {
        throw DimensionError("exponent matrix must be " + std::to_string(d) + "x" + std::to_string(d));
    }
}

ExpVec matrix_apply(const IntMatrix &m, const ExpVec &g)
{
    if (m.size() == 0 || m.front().size() != g.size()) {
        throw DimensionError("exponent matrix does not match exponent " + exp_to_string(g));
    }
    ExpVec out(m.size(), 0);
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t c = 0; c < g.size(); ++c) {
            out[r] += m[r][c] * g[c];
        }
    }
    return out;
}

// Gauss-Jordan over Q; the result must be integral.
IntMatrix integer_inverse(const IntMatrix &m)
{
    const auto d = m.size();
    std::vector<std::vector<Rational>> a(d, std::vector<Rational>(2 * d));
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            a[r][c] = Rational(static_cast<long>(m[r][c]));
        }
        a[r][d + r] = 1;
    }
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t pivot = col;
        while (pivot < d && a[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == d) {
            throw DomainError("exponent matrix is singular");
        }
        std::swap(a[pivot], a[col]);
        const Rational inv = 1 / a[col][col];
        for (auto &x : a[col]) {
            x *= inv;
        }
        for (std::size_t r = 0; r < d; ++r) {
            if (r != col && a[r][col] != 0) {
                const Rational f = a[r][col];
                for (std::size_t c = 0; c < 2 * d; ++c) {
                    a[r][c] -= f * a[col][c];
                }
            }
        }
    }
    IntMatrix out(d, std::vector<std::int64_t>(d));
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            const auto &x = a[r][d + c];
            if (x.get_den() != 1) {
                throw DomainError("exponent matrix is not invertible over the integers");
            }
            out[r][c] = x.get_num().get_si();
        }
    }
    return out;
}

// Probe box [-2, 2]^d around the origin.
std::vector<ExpVec> probe_box(std::size_t d)
{
    std::vector<ExpVec> out;
    ExpVec cur(d, -2);
    while (true) {
        out.push_back(cur);
        std::size_t i = 0;
        while (i < d && cur[i] == 2) {
            cur[i] = -2;
            ++i;
        }
        if (i == d) {
            break;
        }
        ++cur[i];
    }
    return out;
}

} // namespace

CharacterX::CharacterX(MonoidCtx ctx, std::vector<Rational> generator_values)
    : m_ctx(std::move(ctx)), m_values(std::move(generator_values))
{
    check_dimension(m_ctx, m_values.size(), "character");
    for (const auto &v : m_values) {
        if (v == 0) {
            throw DomainError("character values must be nonzero");
        }
    }
}

CharacterX CharacterX::trivial(const MonoidCtx &ctx)
{
    return CharacterX(ctx, std::vector<Rational>(ctx.dimension(), Rational(1)));
}

Rational CharacterX::operator()(const ExpVec &g) const
{
    m_ctx.check(g);
    Rational out(1);
    for (std::size_t i = 0; i < g.size(); ++i) {
        out *= int_pow(m_values[i], g[i]);
    }
    return out;
}

CharacterX CharacterX::operator*(const CharacterX &o) const
{
    if (!(m_ctx == o.m_ctx)) {
        throw DimensionError("character context mismatch");
    }
    std::vector<Rational> v(m_values.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = m_values[i] * o.m_values[i];
    }
    return CharacterX(m_ctx, std::move(v));
}

CharacterX CharacterX::inverse() const
{
    std::vector<Rational> v(m_values.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = 1 / m_values[i];
    }
    return CharacterX(m_ctx, std::move(v));
}

ExponentAut::ExponentAut(MonoidCtx ctx, IntMatrix matrix) : m_ctx(std::move(ctx)), m_matrix(std::move(matrix))
{
    check_square(m_matrix, m_ctx.dimension());
    const auto det = int_matrix_det(m_matrix);
    if (det != 1 && det != -1) {
        throw DomainError("exponent automorphism needs det = +-1, got " + to_string(det));
    }
    const ExpVec origin(m_ctx.dimension(), 0);
    for (const auto &g : probe_box(m_ctx.dimension())) {
        const auto image = matrix_apply(m_matrix, g);
        if (cmp(m_ctx, origin, g) != cmp(m_ctx, origin, image)) {
            throw DomainError("exponent map does not preserve the order: " + exp_to_string(g) + " -> "
                              + exp_to_string(image));
        }
    }
}

ExponentAut ExponentAut::identity(const MonoidCtx &ctx)
{
    IntMatrix m(ctx.dimension(), std::vector<std::int64_t>(ctx.dimension(), 0));
    for (std::size_t i = 0; i < m.size(); ++i) {
        m[i][i] = 1;
    }
    return ExponentAut(ctx, std::move(m));
}

ExpVec ExponentAut::operator()(const ExpVec &g) const
{
    m_ctx.check(g);
    return matrix_apply(m_matrix, g);
}

ExponentAut ExponentAut::inverse() const
{
    return ExponentAut(m_ctx, integer_inverse(m_matrix));
}

ExponentAut ExponentAut::compose(const ExponentAut &o) const
{
    return ExponentAut(m_ctx, int_matrix_mul(m_matrix, o.m_matrix));
}

AdditiveChar::AdditiveChar(MonoidCtx ctx, std::vector<Rational> generator_values)
    : m_ctx(std::move(ctx)), m_values(std::move(generator_values))
{
    check_dimension(m_ctx, m_values.size(), "additive character");
}

Rational AdditiveChar::operator()(const ExpVec &g) const
{
    m_ctx.check(g);
    Rational out(0);
    for (std::size_t i = 0; i < g.size(); ++i) {
        out += m_values[i] * static_cast<long>(g[i]);
    }
    return out;
}

AdditiveChar AdditiveChar::operator+(const AdditiveChar &o) const
{
    if (!(m_ctx == o.m_ctx)) {
        throw DimensionError("additive character context mismatch");
    }
    std::vector<Rational> v(m_values.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = m_values[i] + o.m_values[i];
    }
    return AdditiveChar(m_ctx, std::move(v));
}

IntMatrix int_matrix_mul(const IntMatrix &a, const IntMatrix &b)
{
    if (a.empty() || b.empty() || a.front().size() != b.size()) {
        throw DimensionError("matrix product shape mismatch");
    }
    IntMatrix out(a.size(), std::vector<std::int64_t>(b.front().size(), 0));
    for (std::size_t r = 0; r < a.size(); ++r) {
        for (std::size_t k = 0; k < b.size(); ++k) {
            for (std::size_t c = 0; c < b.front().size(); ++c) {
                out[r][c] += a[r][k] * b[k][c];
            }
        }
    }
    return out;
}

Rational int_matrix_det(const IntMatrix &m)
{
    const auto d = m.size();
    std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d));
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            a[r][c] = Rational(static_cast<long>(m[r][c]));
        }
    }
    Rational det(1);
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t pivot = col;
        while (pivot < d && a[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == d) {
            return Rational(0);
        }
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < d; ++r) {
            const Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < d; ++c) {
                a[r][c] -= f * a[col][c];
            }
        }
    }
    return det;
}

HahnPoly apply_gexp(const CharacterX &x, const HahnPoly &a)
{
    if (!(x.ctx() == a.ctx())) {
        throw DimensionError("apply_gexp: context mismatch");
    }
    HahnPoly out(a.ctx(), a.weight_bound());
    for (const auto &[g, c] : a.terms()) {
        out.add_to(g, x(g) * c);
    }
    return out;
}

HahnPoly apply_exponent_map(const IntMatrix &matrix, const HahnPoly &a)
{
    check_square(matrix, a.ctx().dimension());
    HahnPoly out(a.ctx(), a.weight_bound());
    for (const auto &[g, c] : a.terms()) {
        const auto image = matrix_apply(matrix, g);
        if (std::any_of(image.begin(), image.end(), [](std::int64_t v) { return v < 0; })
            || a.ctx().weight(image) > static_cast<std::int64_t>(a.weight_bound())) {
            throw TruncationOverflowError("exponent " + exp_to_string(g) + " maps to " + exp_to_string(image)
                                          + ", outside the truncated cone");
        }
        out.add_to(image, c);
    }
    return out;
}

HahnPoly apply_oaut(const ExponentAut &mu, const HahnPoly &a)
{
    if (!(mu.ctx() == a.ctx())) {
        throw DimensionError("apply_oaut: context mismatch");
    }
    return apply_exponent_map(mu.matrix(), a);
}

HahnPoly apply_gder(const AdditiveChar &alpha, const HahnPoly &a)
{
    if (!(alpha.ctx() == a.ctx())) {
        throw DimensionError("apply_gder: context mismatch");
    }
    HahnPoly out(a.ctx(), a.weight_bound());
    for (const auto &[g, c] : a.terms()) {
        out.add_to(g, alpha(g) * c);
    }
    return out;
}

OpTable gexp_table(const CharacterX &x, std::size_t weight_bound)
{
    return OpTable::from_function(x.ctx(), weight_bound, [&](const ExpVec &m) {
        return HahnPoly::monomial(x.ctx(), weight_bound, m, x(m));
    });
}

OpTable oaut_table(const ExponentAut &mu, std::size_t weight_bound)
{
    return OpTable::from_function(mu.ctx(), weight_bound, [&](const ExpVec &m) {
        return apply_oaut(mu, HahnPoly::monomial(mu.ctx(), weight_bound, m));
    });
}

OpTable gder_table(const AdditiveChar &alpha, std::size_t weight_bound)
{
    return OpTable::from_function(alpha.ctx(), weight_bound, [&](const ExpVec &m) {
        return HahnPoly::monomial(alpha.ctx(), weight_bound, m, alpha(m));
    });
}

LieMorphism pullback_morphism(const ExponentAut &mu, std::size_t weight_bound)
{
    auto m = conjugation_morphism(oaut_table(mu, weight_bound), oaut_table(mu.inverse(), weight_bound));
    m.name = "pullback";
    return m;
}

Rational taylor_exp(const Rational &v, std::size_t order)
{
    Rational sum(0), term(1);
    for (std::size_t n = 0; n <= order; ++n) {
        if (n > 0) {
            term *= v / static_cast<unsigned long>(n);
        }
        sum += term;
    }
    return sum;
}

CharacterX middle_correspond(const AdditiveChar &alpha, const std::map<Rational, Rational> &declared, ExpMode mode,
                             std::size_t weight_bound)
{
    const auto &gens = alpha.generator_values();
    std::vector<Rational> values(gens.size());
    if (mode == ExpMode::taylor) {
        for (std::size_t i = 0; i < gens.size(); ++i) {
            values[i] = taylor_exp(gens[i], weight_bound);
        }
        return CharacterX(alpha.ctx(), std::move(values));
    }
    if (auto it = declared.find(Rational(0)); it != declared.end() && it->second != 1) {
        throw InconsistencyError("declared e(0) = " + to_string(it->second) + ", expected 1");
    }
    for (const auto &[a, ea] : declared) {
        if (ea == 0) {
            throw InconsistencyError("declared e(" + to_string(a) + ") = 0");
        }
        for (const auto &[b, eb] : declared) {
            const auto it = declared.find(a + b);
            if (it != declared.end() && it->second != ea * eb) {
                throw InconsistencyError("declared exponential violates e(a+b) = e(a)e(b): e(" + to_string(a + b)
                                         + ") = " + to_string(it->second) + " but e(" + to_string(a) + ")e("
                                         + to_string(b) + ") = " + to_string(ea * eb));
            }
        }
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i] == 0) {
            values[i] = 1;
            continue;
        }
        const auto it = declared.find(gens[i]);
        if (it == declared.end()) {
            throw PreconditionError("no declared exponential for alpha(e_" + std::to_string(i)
                                    + ") = " + to_string(gens[i]));
        }
        values[i] = it->second;
    }
    return CharacterX(alpha.ctx(), std::move(values));
}

PredicateReport middle_shadow_check(const AdditiveChar &alpha, const CharacterX &x,
                                    const std::map<Rational, Rational> &declared, std::size_t weight_bound)
{
    for (const auto &g : basis_universe(alpha.ctx(), weight_bound)) {
        const auto it = declared.find(alpha(g));
        if (it == declared.end()) {
            continue;
        }
        if (it->second != x(g)) {
            return {false, std::make_pair(g, g),
                    "e(alpha(" + exp_to_string(g) + ")) = " + to_string(it->second) + " but x = " + to_string(x(g))};
        }
    }
    return {};
}

OpTable compose_factors(const FactorAut &f)
{
    const auto n = f.residual.weight_bound();
    return op_compose(f.residual, op_compose(gexp_table(f.chi, n), oaut_table(f.mu, n)));
}

PredicateReport is_one_aut(const OpTable &sigma)
{
    if (auto r = op_is_unital_endomorphism(sigma); !r.holds) {
        return r;
    }
    return op_is_contracting(op_sub(sigma, OpTable::identity(sigma.ctx(), sigma.weight_bound())));
}

FactorAut decompose_vaut(const OpTable &sigma)
{
    const auto &ctx = sigma.ctx();
    const auto n = sigma.weight_bound();
    const auto d = ctx.dimension();
    if (auto r = op_is_unital_endomorphism(sigma); !r.holds) {
        throw NotDecomposableError("not a unital endomorphism: " + r.detail);
    }

    // Leading exponent and coefficient of each generator image.
    IntMatrix mu_matrix(d, std::vector<std::int64_t>(d, 0));
    std::vector<Rational> lead(d);
    for (std::size_t i = 0; i < d; ++i) {
        const auto e = unit_exp(d, i);
        if (ctx.weight(e) > static_cast<std::int64_t>(n)) {
            throw NotDecomposableError("generator " + exp_to_string(e) + " lies above the weight bound");
        }
        const auto &img = sigma.image(e);
        const auto minimal = minimal_elements(FinitePosetFragment{ctx, img.support()});
        if (minimal.size() != 1) {
            throw NotDecomposableError("image of t^" + exp_to_string(e) + " has " + std::to_string(minimal.size())
                                       + " minimal exponents, expected a unique leading monomial");
        }
        const auto &g = *minimal.begin();
        for (std::size_t r = 0; r < d; ++r) {
            mu_matrix[r][i] = g[r];
        }
        lead[i] = img.coeff(g);
    }

    std::optional<ExponentAut> mu;
    std::optional<ExponentAut> mu_inv;
    try {
        mu.emplace(ctx, mu_matrix);
        mu_inv.emplace(mu->inverse());
    } catch (const DomainError &e) {
        throw NotDecomposableError(std::string("leading exponents are not an order automorphism: ") + e.what());
    }

    // sigma(t^{e_i}) leads with x(mu e_i); solve for x on the generators.
    std::vector<Rational> chi_values(d, Rational(1));
    const auto &inv = mu_inv->matrix();
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) {
            chi_values[j] *= int_pow(lead[i], inv[i][j]);
        }
    }
    CharacterX chi(ctx, std::move(chi_values));

    // residual(t^m) = x(m)^{-1} sigma(t^{mu^{-1} m})
    OpTable residual = OpTable::zero(ctx, n);
    try {
        residual = OpTable::from_function(ctx, n, [&](const ExpVec &m) {
            const auto source = (*mu_inv)(m);
            if (std::any_of(source.begin(), source.end(), [](std::int64_t v) { return v < 0; })
                || ctx.weight(source) > static_cast<std::int64_t>(n)) {
                throw TruncationOverflowError("mu^-1 sends " + exp_to_string(m) + " outside the truncated cone");
            }
            return hp_scale(1 / chi(m), sigma.image(source));
        });
    } catch (const TruncationOverflowError &e) {
        throw NotDecomposableError(e.what());
    }
    if (auto r = is_one_aut(residual); !r.holds) {
        throw NotDecomposableError("residual is not near-identity: " + r.detail);
    }
    FactorAut out{*mu, chi, residual};
    if (!(compose_factors(out) == sigma)) {
        throw NotDecomposableError("factors do not recompose to the input");
    }
    return out;
}

} // namespace nseries
