#ifndef NSERIES_VERIFY_HPP
#define NSERIES_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include <nseries/random.hpp>
#include <nseries/vaut_factors.hpp>

namespace nseries
{

struct VerifyConfig {
    std::size_t order = 6;
    std::uint64_t seed = 1;
    std::size_t trials = 10;
};

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = true;
    std::string counterexample;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_passed() const;
    nlohmann::json to_json(const VerifyConfig &cfg) const;
};

const std::vector<std::string> &verify_suite_names();

// suite is one of verify_suite_names() or "all"; anything else is a DomainError.
VerifyReport run_verify(const std::string &suite, const VerifyConfig &cfg);

// sigma = residual o Psi_x o mu with a random near-identity residual. d = 1
// uses lex:1 (mu = id); d = 2 uses prod:2 with mu the identity or the
// coordinate swap.
struct VautSample {
    FactorAut factors;
    OpTable sigma;
};

VautSample random_vaut_sample(Rng &rng, std::size_t dimension, std::size_t weight_bound);

} // namespace nseries

#endif
