#pragma once

#include <cstdint>
#include <string>

#include "colorwitt/grading.hpp"

namespace colorwitt {

// Executable identity suites. Each runs a family of checks and stops at the
// first counterexample; `checks` counts individual comparisons performed.
struct SuiteResult {
    bool pass = true;
    long checks = 0;
    std::string counterexample;  // empty when pass

    void fail(const std::string& what) {
        if (pass) {
            pass = false;
            counterexample = what;
        }
    }
};

// Moebius-type identities: sum_{d|n} mu(d) = 0, the 1_p/mu_p convolution
// identity, and multiplicativity of 1_p and mu_p.
SuiteResult verify_mobius(int limit = 500);

// Closed-form super dimensions against the super-Lyndon oracle, over every
// spec with arity <= 3, counts <= 2, and every parity assignment.
SuiteResult verify_oracle_super(int max_total = 8);

// Restricted closed forms (totals and multidegree sums) against the p-power
// closure oracle, r <= 3, p in {2,3}.
SuiteResult verify_oracle_restricted(int max_n = 12);

// Both sweeps.
SuiteResult verify_oracle(int max_total = 8, int restricted_max = 12);

// pbw_exp(free_lie_character) == free_assoc_character on pseudo-random specs.
SuiteResult verify_pbw(std::uint64_t seed, int max_degree = 10, int num_specs = 20,
                       int max_arity = 4, int max_count = 3);

// Restricted counterpart over a deterministic spec family, p in {2,3,5}.
SuiteResult verify_pbw_p(int max_degree = 10, int max_arity = 3);

// Operator round-trips on random series: log/exp pairs in the plain,
// restricted, and group-coefficient settings.
SuiteResult verify_operators(std::uint64_t seed, int max_degree = 8, int trials = 50);

// Deterministic pseudo-random spec used by verify_pbw; exposed so tests can
// reproduce individual cases.
GradingSpec random_spec(std::uint64_t seed, int index, int max_degree, int max_arity,
                        int max_count);

}  // namespace colorwitt
