#include <nseries/errors.hpp>
#include <nseries/series_calculus.hpp>

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace nseries
{

FreeSeries series_E0(std::size_t grade_bound)
{
    FreeSeries out(1, grade_bound);
    for (std::size_t n = 0; n <= grade_bound; ++n) {
        out.add_to(Word(std::vector<std::uint32_t>(n, 0)), 1 / factorial(static_cast<unsigned>(n)));
    }
    return out;
}

FreeSeries series_L0(std::size_t grade_bound)
{
    FreeSeries out(1, grade_bound);
    for (std::size_t n = 1; n <= grade_bound; ++n) {
        const Rational c(n % 2 == 1 ? 1 : -1, static_cast<unsigned long>(n));
        out.add_to(Word(std::vector<std::uint32_t>(n, 0)), c);
    }
    return out;
}

FreeSeries fs_substitute(const FreeSeries &p, std::span<const FreeSeries> args)
{
    if (args.size() != p.alphabet_size() || args.empty()) {
        throw DimensionError("substitution needs one argument per variable: got " + std::to_string(args.size())
                             + " for alphabet of size " + std::to_string(p.alphabet_size()));
    }
    const auto m = args.front().alphabet_size();
    const auto n = args.front().grade_bound();
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i].alphabet_size() != m || args[i].grade_bound() != n) {
            throw DimensionError("substitution arguments do not share a context");
        }
        if (args[i].constant_term() != 0) {
            throw NotInIdealError("argument for X" + std::to_string(i) + " has nonzero constant term "
                                  + to_string(args[i].constant_term()));
        }
    }

    // Prefix products, each computed once.
    std::map<Word, FreeSeries> memo;
    memo.emplace(Word{}, FreeSeries::unit(m, n));
    std::function<const FreeSeries &(const Word &)> product = [&](const Word &w) -> const FreeSeries & {
        if (auto it = memo.find(w); it != memo.end()) {
            return it->second;
        }
        Word prefix(std::vector<std::uint32_t>(w.letters.begin(), w.letters.end() - 1));
        FreeSeries value = fs_mul(product(prefix), args[w.letters.back()]);
        return memo.emplace(w, std::move(value)).first->second;
    };

    FreeSeries out(m, n);
    for (const auto &[w, c] : p.terms()) {
        // Every argument has grade >= 1.
        if (w.length() > n) {
            break;
        }
        for (const auto &[v, d] : product(w).terms()) {
            out.add_to(v, c * d);
        }
    }
    return out;
}

FreeSeries commutator(const FreeSeries &p, const FreeSeries &q)
{
    return fs_sub(fs_mul(p, q), fs_mul(q, p));
}

FreeSeries bch_term(std::size_t n, std::size_t grade_bound)
{
    if (n == 0) {
        throw DomainError("bch_term: block count must be positive");
    }
    FreeSeries out(2, grade_bound);
    std::vector<std::uint32_t> letters;
    // Enumerate n blocks X0^a X1^b with a + b >= 1 and total length <= N.
    std::function<void(std::size_t, const Rational &)> blocks = [&](std::size_t remaining, const Rational &weight) {
        if (remaining == 0) {
            out.add_to(Word(letters), weight);
            return;
        }
        // Each remaining block needs at least one letter.
        if (letters.size() + remaining > grade_bound) {
            return;
        }
        const std::size_t room = grade_bound - letters.size() - (remaining - 1);
        for (std::size_t a = 0; a <= room; ++a) {
            for (std::size_t b = (a == 0 ? 1 : 0); a + b <= room; ++b) {
                const auto mark = letters.size();
                letters.insert(letters.end(), a, 0);
                letters.insert(letters.end(), b, 1);
                blocks(remaining - 1, weight / (factorial(static_cast<unsigned>(a)) * factorial(static_cast<unsigned>(b))));
                letters.resize(mark);
            }
        }
    };
    blocks(n, Rational(1));
    return out;
}

FreeSeries bch_product(std::size_t grade_bound)
{
    FreeSeries out(2, grade_bound);
    for (std::size_t n = 1; n <= grade_bound; ++n) {
        const Rational c(n % 2 == 1 ? 1 : -1, static_cast<unsigned long>(n));
        out = fs_add(out, fs_scale(c, bch_term(n, grade_bound)));
    }
    return out;
}

namespace
{

// [a1,[a2,...,[a_{k-1},a_k]...]]
class RightNestedBrackets
{
public:
    RightNestedBrackets(std::size_t alphabet, std::size_t grade) : m_alphabet(alphabet), m_grade(grade) {}

    const FreeSeries &operator()(const Word &w)
    {
        if (auto it = m_memo.find(w); it != m_memo.end()) {
            return it->second;
        }
        FreeSeries value(m_alphabet, m_grade);
        if (w.length() == 1) {
            value = FreeSeries::variable(m_alphabet, m_grade, w.letters.front());
        } else if (w.length() > 1) {
            const Word rest(std::vector<std::uint32_t>(w.letters.begin() + 1, w.letters.end()));
            const auto head = FreeSeries::variable(m_alphabet, m_grade, w.letters.front());
            value = commutator(head, (*this)(rest));
        }
        return m_memo.emplace(w, std::move(value)).first->second;
    }

private:
    std::size_t m_alphabet;
    std::size_t m_grade;
    std::map<Word, FreeSeries> m_memo;
};

} // namespace

FreeSeries dynkin_bch(std::size_t grade_bound)
{
    RightNestedBrackets bracket(2, grade_bound);
    FreeSeries out(2, grade_bound);
    std::vector<std::uint32_t> letters;
    for (std::size_t n = 1; n <= grade_bound; ++n) {
        const Rational sign(n % 2 == 1 ? 1 : -1, static_cast<unsigned long>(n));
        // (r_1, s_1, ..., r_n, s_n) with r_i + s_i > 0; coefficient 1/(prod r_i! s_i!).
        std::function<void(std::size_t, const Rational &)> tuples = [&](std::size_t left, const Rational &denom) {
            if (left == 0) {
                const auto degree = letters.size();
                const Rational c = sign / (denom * static_cast<unsigned long>(degree));
                for (const auto &[w, d] : bracket(Word(letters)).terms()) {
                    out.add_to(w, c * d);
                }
                return;
            }
            if (letters.size() + left > grade_bound) {
                return;
            }
            const std::size_t room = grade_bound - letters.size() - (left - 1);
            for (std::size_t r = 0; r <= room; ++r) {
                for (std::size_t s = (r == 0 ? 1 : 0); r + s <= room; ++s) {
                    const auto mark = letters.size();
                    letters.insert(letters.end(), r, 0);
                    letters.insert(letters.end(), s, 1);
                    tuples(left - 1, denom * factorial(static_cast<unsigned>(r)) * factorial(static_cast<unsigned>(s)));
                    letters.resize(mark);
                }
            }
        };
        tuples(n, Rational(1));
    }
    return out;
}

FreeSeries dynkin_project(const FreeSeries &p, std::size_t n)
{
    const auto m = p.alphabet_size();
    const auto grade = p.grade_bound();
    FreeSeries out(m, grade);
    std::map<Word, FreeSeries> memo;
    std::function<const FreeSeries &(const Word &)> left = [&](const Word &w) -> const FreeSeries & {
        if (auto it = memo.find(w); it != memo.end()) {
            return it->second;
        }
        FreeSeries value(m, grade);
        if (w.length() == 1) {
            value = FreeSeries::variable(m, grade, w.letters.front());
        } else if (w.length() > 1) {
            const Word init(std::vector<std::uint32_t>(w.letters.begin(), w.letters.end() - 1));
            value = commutator(left(init), FreeSeries::variable(m, grade, w.letters.back()));
        }
        return memo.emplace(w, std::move(value)).first->second;
    };
    for (const auto &[w, c] : p.terms()) {
        if (w.length() != n) {
            continue;
        }
        for (const auto &[v, d] : left(w).terms()) {
            out.add_to(v, c * d);
        }
    }
    return out;
}

bool is_lie_slice(const FreeSeries &p, std::size_t n)
{
    return dynkin_project(p, n) == fs_scale(Rational(static_cast<unsigned long>(n)), fs_slice(p, n));
}

} // namespace nseries
