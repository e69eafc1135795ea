#ifndef NSERIES_CORRESPONDENCE_HPP
#define NSERIES_CORRESPONDENCE_HPP

#include <functional>
#include <string>
#include <utility>

#include <nseries/operator.hpp>

namespace nseries
{

// exp(d) = sum_n d^n / n! for a contracting d (PreconditionError otherwise).
OpTable op_exp(const OpTable &d);

// Same map computed as ev_d(E0).
OpTable op_exp_via_evaluate(const OpTable &d);

// log(sigma) = sum_{n>=1} (-1)^{n+1}/n (sigma - Id)^n; sigma - Id must be contracting.
OpTable op_log(const OpTable &sigma);

// Same map computed as ev_{sigma - Id}(L0).
OpTable op_log_via_evaluate(const OpTable &sigma);

// d1 * d2 = ev_{d1,d2}(X0 * X1)
OpTable star(const OpTable &d1, const OpTable &d2);

// sigma^[c] = exp(c log sigma). sigma must be a unital endomorphism with
// sigma - Id contracting.
OpTable fractional_iterate(const OpTable &sigma, const Rational &c);

// d^n(a b) = sum_i C(n,i) d^i(a) d^{n-i}(b) on all basis pairs, for n <= max_n.
PredicateReport check_binomial_leibniz(const OpTable &d, unsigned max_n);

// A contracting derivation with its exponential.
struct DerAutPair {
    OpTable derivation;
    OpTable automorphism;
};

DerAutPair make_der_aut_pair(const OpTable &d);

// A map on operator tables standing in for a strongly linear Lie morphism.
struct LieMorphism {
    std::string name;
    std::function<OpTable(const OpTable &)> map;

    OpTable operator()(const OpTable &d) const
    {
        return map(d);
    }
};

LieMorphism identity_morphism();

// d -> rho o d o rho_inv. Throws PreconditionError unless rho o rho_inv = Id
// and rho_inv o rho = Id.
LieMorphism conjugation_morphism(const OpTable &rho, const OpTable &rho_inv);

// d -> c d; a Lie morphism only for c in {0, 1}.
LieMorphism scalar_morphism(const Rational &c);

// Phi([d1, d2]) == [Phi d1, Phi d2]
bool preserves_bracket(const LieMorphism &phi, const OpTable &d1, const OpTable &d2);

// Psi(sigma) = exp(Phi(log sigma))
OpTable push_automorphism(const LieMorphism &phi, const OpTable &sigma);

// Psi(s1 o s2) == Psi(s1) o Psi(s2)
bool preserves_group_law(const LieMorphism &phi, const OpTable &s1, const OpTable &s2);

struct PushResult {
    OpTable sigma_in;  // exp(d)
    OpTable sigma_out; // exp(Phi(d))
};

// Returns (exp d, exp Phi(d)) after checking Psi(exp d) == exp(Phi(d)).
// Throws PreconditionError when Phi(d) is not contracting and
// InconsistencyError when the identity fails.
PushResult push_morphism(const LieMorphism &phi, const OpTable &d);

} // namespace nseries

#endif
