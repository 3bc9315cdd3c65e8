#pragma once

#include <vector>

#include "colorwitt/grading.hpp"
#include "colorwitt/numtheory.hpp"
#include "colorwitt/rational.hpp"

namespace colorwitt {

// Brute-force dimension oracle. Dimensions of free color Lie superalgebras
// are recovered by enumerating Lyndon words (words strictly smaller than all
// proper rotations) over the expanded generator alphabet, with squares of
// odd-parity Lyndon words added for the super case; restricted dimensions by
// p-power closure of plain Lyndon counts. Enumeration is deliberately naive:
// this module exists to validate the closed forms, never to produce primary
// outputs, so clarity wins over speed.

inline constexpr int kDefaultOracleCap = 14;

// Number of Lyndon words whose class-wise letter counts equal alpha. Class i
// contributes count_i distinct letters, ordered class-major.
long count_lyndon(const GradingSpec& spec, const Multidegree& alpha,
                       int cap = kDefaultOracleCap);

// Super-Lyndon count: Lyndon words of multidegree alpha plus odd-parity
// Lyndon words w with 2 wt(w) = alpha.
long oracle_dim_super(const GradingSpec& spec, const Multidegree& alpha,
                           int cap = kDefaultOracleCap);

// Dimension of the free restricted Lie p-algebra on r generators in total
// degree n: sum over n = m p^s of the plain Lyndon count in degree m.
long oracle_dim_restricted(int generators, int n, const Prime& p,
                                int cap = kDefaultOracleCap);

// Full table of oracle_dim_super over every multidegree with
// 1 <= total <= max_total, in graded-lex order. The plain entry point runs
// the multidegrees in parallel (OpenMP); the _serial variant is the
// reference implementation the tests compare against.
using OracleTable = std::vector<std::pair<Multidegree, long>>;
OracleTable oracle_super_table(const GradingSpec& spec, int max_total,
                               int cap = kDefaultOracleCap);
OracleTable oracle_super_table_serial(const GradingSpec& spec, int max_total,
                                      int cap = kDefaultOracleCap);

}  // namespace colorwitt
