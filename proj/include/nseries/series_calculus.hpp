#ifndef NSERIES_SERIES_CALCULUS_HPP
#define NSERIES_SERIES_CALCULUS_HPP

#include <cstddef>
#include <span>

#include <nseries/free_algebra.hpp>

namespace nseries
{

// E0 = sum_{n<=N} X0^n / n!  over the one-letter alphabet.
FreeSeries series_E0(std::size_t grade_bound);

// L0 = sum_{1<=n<=N} (-1)^{n+1}/n X0^n.
FreeSeries series_L0(std::size_t grade_bound);

// Evaluates P at args[i] in place of X_i. Every argument must have zero
// constant term (NotInIdealError otherwise) and all arguments must share an
// alphabet and grade bound; the result lives in that context.
FreeSeries fs_substitute(const FreeSeries &p, std::span<const FreeSeries> args);

// [P, Q] = PQ - QP
FreeSeries commutator(const FreeSeries &p, const FreeSeries &q);

// K_n over the alphabet {X0, X1}: sum over n nonempty blocks X0^m X1^p with
// weight 1/(m! p!) per block, i.e. (exp X0 exp X1 - 1)^n. n = 0 is a DomainError.
FreeSeries bch_term(std::size_t n, std::size_t grade_bound);

// X0 * X1 = sum_{n>=1} (-1)^{n+1}/n K_n, truncated at grade N.
FreeSeries bch_product(std::size_t grade_bound);

// Baker-Campbell-Hausdorff series from Dynkin's right-nested commutator formula.
FreeSeries dynkin_bch(std::size_t grade_bound);

// Left-normed bracketing [...[[a1,a2],a3],...,an] applied to the degree-n slice of P.
FreeSeries dynkin_project(const FreeSeries &p, std::size_t n);

// Dynkin-Specht-Wever: the degree-n slice of P is a Lie element iff
// dynkin_project(P, n) == n * slice.
bool is_lie_slice(const FreeSeries &p, std::size_t n);

} // namespace nseries

#endif
