#pragma once

#include "colorwitt/grading.hpp"
#include "colorwitt/numtheory.hpp"
#include "colorwitt/series.hpp"

namespace colorwitt {

// Closed-form dimension formulas computed directly from divisor sums over
// gcd(alpha). These never touch the series pipeline, so the two routes can
// check each other. Every division is exact-rational with a final
// integrality assertion.

// dim of the multihomogeneous component at alpha of the free color Lie
// superalgebra on the spec's generators. No truncation applies.
Integer dim_multidegree(const GradingSpec& spec, const Multidegree& alpha);

// total-degree dimension for k even and l odd generators, weight 1 each
Integer dim_total_super(int even_count, int odd_count, int n);

struct SuperHilbert {
    Series bivariate;  // variables (t_+, t_-), even/odd bookkeeping
    Series diagonal;   // t_+ = t_- = t
};

// Hilbert series of the free color Lie superalgebra on k even and l odd
// generators, truncated at max_degree. Zero generators yield zero series.
SuperHilbert hilbert_series_super(int even_count, int odd_count, int max_degree);

// Restricted (characteristic p) counterparts; the spec must be all-even.
Integer dim_multidegree_p(const GradingSpec& spec, const Multidegree& alpha, const Prime& p);
Integer dim_total_p(int generator_count, int n, const Prime& p);

}  // namespace colorwitt
