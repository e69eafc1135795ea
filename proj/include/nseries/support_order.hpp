#ifndef NSERIES_SUPPORT_ORDER_HPP
#define NSERIES_SUPPORT_ORDER_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace nseries
{

// Exponent in Z^d.
using ExpVec = std::vector<std::int64_t>;

enum class OrderKind { lex, product, weighted };

enum class Cmp { less, greater, equal, incomparable };

// Ordered exponent monoid together with an additive weight used for truncation.
class MonoidCtx
{
public:
    static MonoidCtx lex(std::size_t dimension);
    static MonoidCtx product(std::size_t dimension);
    // Compare by w.m, ties broken lexicographically.
    static MonoidCtx weighted(std::vector<std::int64_t> weights);

    // "lex:d", "prod:d" or "weighted:w1,w2,..."
    static MonoidCtx parse(const std::string &descriptor);
    std::string descriptor() const;

    std::size_t dimension() const noexcept
    {
        return m_weights.size();
    }
    OrderKind kind() const noexcept
    {
        return m_kind;
    }
    const std::vector<std::int64_t> &weights() const noexcept
    {
        return m_weights;
    }

    std::int64_t weight(const ExpVec &m) const;

    // Throws DimensionError when m has the wrong length.
    void check(const ExpVec &m) const;

    bool operator==(const MonoidCtx &) const = default;

private:
    MonoidCtx(OrderKind kind, std::vector<std::int64_t> weights) : m_kind(kind), m_weights(std::move(weights)) {}

    OrderKind m_kind;
    std::vector<std::int64_t> m_weights;
};

ExpVec exp_add(const ExpVec &a, const ExpVec &b);
ExpVec exp_sub(const ExpVec &a, const ExpVec &b);
// e_i in dimension d
ExpVec unit_exp(std::size_t d, std::size_t i);

Cmp cmp(const MonoidCtx &ctx, const ExpVec &a, const ExpVec &b);

inline bool exp_less(const MonoidCtx &ctx, const ExpVec &a, const ExpVec &b)
{
    return cmp(ctx, a, b) == Cmp::less;
}

struct FinitePosetFragment {
    MonoidCtx ctx;
    std::set<ExpVec> elements;
};

std::set<ExpVec> minimal_elements(const FinitePosetFragment &frag);

inline constexpr std::size_t default_antichain_bound = 64;

// Exhaustive search; throws ResourceError above the size bound. Among maximum
// antichains the lexicographically first (in element order) is returned.
std::set<ExpVec> max_antichain(const FinitePosetFragment &frag, std::size_t bound = default_antichain_bound);

std::vector<std::pair<ExpVec, ExpVec>> convolution_pairs(const MonoidCtx &ctx, const ExpVec &m,
                                                         const std::set<ExpVec> &a, const std::set<ExpVec> &b);

// Least (i, j), i < j, with seq[i] <= seq[j]; nullopt if the sequence is bad.
std::optional<std::pair<std::size_t, std::size_t>> find_good_pair(const MonoidCtx &ctx,
                                                                  const std::vector<ExpVec> &seq);

using ChoiceOperator = std::function<std::vector<ExpVec>(const ExpVec &)>;

// A word (w_0, ..., w_m) with w_{i+1} in theta(w_i). Words compare through
// their last letter.
struct ClosureWord {
    std::vector<ExpVec> letters;

    const ExpVec &last() const
    {
        return letters.back();
    }
    bool operator<(const ClosureWord &o) const
    {
        return letters < o.letters;
    }
    bool operator==(const ClosureWord &) const = default;
};

// All words of length <= depth starting in Y. Throws PreconditionError naming
// (p, q) when some q in theta(p) fails p < q.
std::set<ClosureWord> choice_closure(const MonoidCtx &ctx, const std::set<ExpVec> &seeds,
                                     const ChoiceOperator &theta, std::size_t depth);

Cmp closure_cmp(const MonoidCtx &ctx, const ClosureWord &u, const ClosureWord &v);

std::string exp_to_string(const ExpVec &m);

} // namespace nseries

#endif
