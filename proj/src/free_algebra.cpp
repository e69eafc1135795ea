#include <nseries/errors.hpp>
#include <nseries/free_algebra.hpp>

#include <algorithm>
#include <string>

#include "parallel.hpp"

namespace nseries
{

std::strong_ordering operator<=>(const Word &a, const Word &b)
{
    if (auto c = a.letters.size() <=> b.letters.size(); c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(a.letters.begin(), a.letters.end(), b.letters.begin(),
                                                  b.letters.end());
}

Word word_concat(const Word &a, const Word &b)
{
    std::vector<std::uint32_t> out;
    out.reserve(a.length() + b.length());
    out.insert(out.end(), a.letters.begin(), a.letters.end());
    out.insert(out.end(), b.letters.begin(), b.letters.end());
    return Word(std::move(out));
}

std::vector<std::pair<Word, Word>> factorizations(const Word &theta)
{
    std::vector<std::pair<Word, Word>> out;
    out.reserve(theta.length() + 1);
    for (std::size_t k = 0; k <= theta.length(); ++k) {
        const auto mid = theta.letters.begin() + static_cast<std::ptrdiff_t>(k);
        out.emplace_back(Word({theta.letters.begin(), mid}), Word({mid, theta.letters.end()}));
    }
    return out;
}

FreeSeries FreeSeries::constant(std::size_t alphabet_size, std::size_t grade_bound, const Rational &c)
{
    FreeSeries out(alphabet_size, grade_bound);
    out.add_to(Word{}, c);
    return out;
}

FreeSeries FreeSeries::variable(std::size_t alphabet_size, std::size_t grade_bound, std::uint32_t i)
{
    return monomial(alphabet_size, grade_bound, Word{i});
}

FreeSeries FreeSeries::monomial(std::size_t alphabet_size, std::size_t grade_bound, const Word &w,
                                const Rational &c)
{
    FreeSeries out(alphabet_size, grade_bound);
    out.add_to(w, c);
    return out;
}

Rational FreeSeries::coeff(const Word &w) const
{
    const auto it = m_terms.find(w);
    return it == m_terms.end() ? Rational(0) : it->second;
}

void FreeSeries::add_to(const Word &w, const Rational &c)
{
    for (auto l : w.letters) {
        if (l >= m_alphabet) {
            throw DimensionError("letter X" + std::to_string(l) + " outside alphabet of size "
                                 + std::to_string(m_alphabet));
        }
    }
    if (w.length() > m_grade || c == 0) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            m_terms.erase(it);
        }
    }
}

namespace
{

void check_same_context(const FreeSeries &p, const FreeSeries &q)
{
    if (p.alphabet_size() != q.alphabet_size() || p.grade_bound() != q.grade_bound()) {
        throw DimensionError("free series context mismatch: (alphabet " + std::to_string(p.alphabet_size())
                             + ", grade " + std::to_string(p.grade_bound()) + ") vs (alphabet "
                             + std::to_string(q.alphabet_size()) + ", grade " + std::to_string(q.grade_bound())
                             + ")");
    }
}

} // namespace

FreeSeries fs_add(const FreeSeries &p, const FreeSeries &q)
{
    check_same_context(p, q);
    FreeSeries out = p;
    for (const auto &[w, c] : q.terms()) {
        out.add_to(w, c);
    }
    return out;
}

FreeSeries fs_sub(const FreeSeries &p, const FreeSeries &q)
{
    check_same_context(p, q);
    FreeSeries out = p;
    for (const auto &[w, c] : q.terms()) {
        out.add_to(w, -c);
    }
    return out;
}

FreeSeries fs_scale(const Rational &c, const FreeSeries &p)
{
    FreeSeries out(p.alphabet_size(), p.grade_bound());
    if (c == 0) {
        return out;
    }
    for (const auto &[w, a] : p.terms()) {
        out.add_to(w, c * a);
    }
    return out;
}

namespace reference
{

FreeSeries fs_mul(const FreeSeries &p, const FreeSeries &q)
{
    check_same_context(p, q);
    const auto n = p.grade_bound();
    FreeSeries out(p.alphabet_size(), n);
    for (const auto &[b, x] : p.terms()) {
        for (const auto &[g, y] : q.terms()) {
            if (b.length() + g.length() > n) {
                // q is ordered by length: nothing further fits.
                break;
            }
            out.add_to(word_concat(b, g), x * y);
        }
    }
    return out;
}

} // namespace reference

FreeSeries fs_mul(const FreeSeries &p, const FreeSeries &q)
{
    check_same_context(p, q);
    if (p.terms().size() < detail::parallel_threshold || detail::max_threads() == 1) {
        return reference::fs_mul(p, q);
    }
    const auto n = p.grade_bound();
    std::vector<const FreeSeries::term_map::value_type *> lhs;
    lhs.reserve(p.terms().size());
    for (const auto &t : p.terms()) {
        lhs.push_back(&t);
    }
    std::vector<FreeSeries> partial(static_cast<std::size_t>(detail::max_threads()),
                                    FreeSeries(p.alphabet_size(), n));
    const auto count = static_cast<std::ptrdiff_t>(lhs.size());
#pragma omp parallel
    {
        auto &local = partial[static_cast<std::size_t>(detail::thread_index())];
#pragma omp for schedule(dynamic, 4)
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            const auto &[b, x] = *lhs[static_cast<std::size_t>(i)];
            for (const auto &[g, y] : q.terms()) {
                if (b.length() + g.length() > n) {
                    break;
                }
                local.add_to(word_concat(b, g), x * y);
            }
        }
    }
    FreeSeries out = std::move(partial.front());
    for (std::size_t i = 1; i < partial.size(); ++i) {
        out = fs_add(out, partial[i]);
    }
    return out;
}

FreeSeries fs_pow(const FreeSeries &p, unsigned n)
{
    FreeSeries out = FreeSeries::unit(p.alphabet_size(), p.grade_bound());
    for (unsigned i = 0; i < n; ++i) {
        out = fs_mul(out, p);
    }
    return out;
}

FreeSeries fs_geometric_inverse(const FreeSeries &p)
{
    const Rational c = p.constant_term();
    if (c == 0) {
        throw NotAUnitError("series has zero constant term: it lies in the augmentation ideal");
    }
    const Rational inv_c = 1 / c;
    // q = -(P - c)/c, inverse = (1/c) * sum_{n <= N} q^n
    const FreeSeries q = fs_scale(-inv_c, fs_sub(p, FreeSeries::constant(p.alphabet_size(), p.grade_bound(), c)));
    FreeSeries sum = FreeSeries::unit(p.alphabet_size(), p.grade_bound());
    FreeSeries power = sum;
    for (std::size_t k = 1; k <= p.grade_bound(); ++k) {
        power = fs_mul(power, q);
        if (power.is_zero()) {
            break;
        }
        sum = fs_add(sum, power);
    }
    return fs_scale(inv_c, sum);
}

std::set<Word> fs_support_slice(const FreeSeries &p, std::size_t n)
{
    std::set<Word> out;
    for (const auto &[w, c] : p.terms()) {
        if (w.length() == n) {
            out.insert(w);
        }
    }
    return out;
}

FreeSeries fs_slice(const FreeSeries &p, std::size_t n)
{
    FreeSeries out(p.alphabet_size(), p.grade_bound());
    for (const auto &[w, c] : p.terms()) {
        if (w.length() == n) {
            out.add_to(w, c);
        }
    }
    return out;
}

FreeSeries fs_regrade(const FreeSeries &p, std::size_t grade_bound)
{
    FreeSeries out(p.alphabet_size(), grade_bound);
    for (const auto &[w, c] : p.terms()) {
        out.add_to(w, c);
    }
    return out;
}

} // namespace nseries
