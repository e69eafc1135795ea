#ifndef NSERIES_FREE_ALGEBRA_HPP
#define NSERIES_FREE_ALGEBRA_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include <nseries/rational.hpp>

namespace nseries
{

// Element of J*: a finite sequence of variable indices.
struct Word {
    std::vector<std::uint32_t> letters;

    Word() = default;
    Word(std::initializer_list<std::uint32_t> l) : letters(l) {}
    explicit Word(std::vector<std::uint32_t> l) : letters(std::move(l)) {}

    std::size_t length() const noexcept
    {
        return letters.size();
    }
    bool empty() const noexcept
    {
        return letters.empty();
    }

    bool operator==(const Word &) const = default;
};

// Graded order: length first, then lexicographic.
std::strong_ordering operator<=>(const Word &a, const Word &b);

Word word_concat(const Word &a, const Word &b);

// All n+1 splittings theta = beta gamma, shortest beta first.
std::vector<std::pair<Word, Word>> factorizations(const Word &theta);

// Truncated element of k<<J>> modulo words of length > grade_bound.
class FreeSeries
{
public:
    using term_map = std::map<Word, Rational>;

    FreeSeries(std::size_t alphabet_size, std::size_t grade_bound)
        : m_alphabet(alphabet_size), m_grade(grade_bound)
    {
    }

    static FreeSeries constant(std::size_t alphabet_size, std::size_t grade_bound, const Rational &c);
    static FreeSeries unit(std::size_t alphabet_size, std::size_t grade_bound)
    {
        return constant(alphabet_size, grade_bound, Rational(1));
    }
    // X_i
    static FreeSeries variable(std::size_t alphabet_size, std::size_t grade_bound, std::uint32_t i);
    static FreeSeries monomial(std::size_t alphabet_size, std::size_t grade_bound, const Word &w,
                               const Rational &c = Rational(1));

    std::size_t alphabet_size() const noexcept
    {
        return m_alphabet;
    }
    std::size_t grade_bound() const noexcept
    {
        return m_grade;
    }
    const term_map &terms() const noexcept
    {
        return m_terms;
    }
    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }

    Rational coeff(const Word &w) const;
    Rational constant_term() const
    {
        return coeff(Word{});
    }

    // Accumulates c into the coefficient of w. Words longer than the grade
    // bound are dropped; letters outside the alphabet throw DimensionError.
    void add_to(const Word &w, const Rational &c);

    bool operator==(const FreeSeries &) const = default;

private:
    std::size_t m_alphabet;
    std::size_t m_grade;
    term_map m_terms;
};

FreeSeries fs_add(const FreeSeries &p, const FreeSeries &q);
FreeSeries fs_sub(const FreeSeries &p, const FreeSeries &q);
FreeSeries fs_scale(const Rational &c, const FreeSeries &p);
FreeSeries fs_mul(const FreeSeries &p, const FreeSeries &q);
FreeSeries fs_pow(const FreeSeries &p, unsigned n);

// Inverse of a unit (nonzero constant term) as a truncated geometric series.
FreeSeries fs_geometric_inverse(const FreeSeries &p);

// supp_n P: words of length exactly n.
std::set<Word> fs_support_slice(const FreeSeries &p, std::size_t n);

// Homogeneous degree-n component.
FreeSeries fs_slice(const FreeSeries &p, std::size_t n);

// Same terms, grade bound changed (terms above the new bound are dropped).
FreeSeries fs_regrade(const FreeSeries &p, std::size_t grade_bound);

inline FreeSeries operator+(const FreeSeries &p, const FreeSeries &q)
{
    return fs_add(p, q);
}
inline FreeSeries operator-(const FreeSeries &p, const FreeSeries &q)
{
    return fs_sub(p, q);
}
inline FreeSeries operator*(const FreeSeries &p, const FreeSeries &q)
{
    return fs_mul(p, q);
}
inline FreeSeries operator*(const Rational &c, const FreeSeries &p)
{
    return fs_scale(c, p);
}

namespace reference
{

// Serial Cauchy product, kept as the baseline for the parallel kernel.
FreeSeries fs_mul(const FreeSeries &p, const FreeSeries &q);

} // namespace reference

} // namespace nseries

#endif
