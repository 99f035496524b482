#ifndef JACK4_VERIFY_HPP
#define JACK4_VERIFY_HPP

#include "jack4/exact.hpp"
#include "jack4/kernels.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace jack4 {

/// Outcome of one exact verification sweep. Every check is an exact equality;
/// `failures` counts violated checks and the first one is described.
struct SuiteReport {
    std::string suite;
    std::string kappa;
    std::string kappa_prime;
    int max_degree = 0;
    long checked = 0;
    long failures = 0;
    std::string first_counterexample;
    nlohmann::json details = nlohmann::json::object();

    bool ok() const { return failures == 0; }
    nlohmann::json to_json() const;
};

/// prop1, prop2, eval-ones, hooks, spectrum, identities, f1-norm, plus
/// eigen (Cherednik eigenfunctions), jack (symmetric Jack polynomials) and
/// laguerre (the y0 Hermite/Laguerre identity).
const std::vector<std::string>& suite_names();

/// Runs one suite. Suites over NSJPs use N = 3 regardless of ctx.nvars().
/// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(const std::string& name, const ParamContext& ctx, int max_degree, Exec exec = Exec::Parallel);

}  // namespace jack4

#endif
