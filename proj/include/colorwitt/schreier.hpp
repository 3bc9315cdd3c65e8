#pragma once

#include "colorwitt/series.hpp"

namespace colorwitt {

// The univariate generating-function calculus for free generators of
// subalgebras of free Lie algebras. Everything here lives in Z[[t]]: series
// over a single even class with nonnegative integer coefficients.

// A univariate all-even grading spec of the given truncation order.
GradingSpec univariate_spec(int max_degree);

// sum a_i t^i |-> prod (1 - t^i)^(-a_i), truncated. Requires zero constant
// term and nonnegative integer coefficients.
Series epsilon_univariate(const Series& f);

// H(Z) = (H(X) - 1) eps(H(L/K)) + 1: the generating function of a free
// generating set of a subalgebra K, from the generator series H(X) and the
// quotient series H(L/K). Inconsistent inputs surface as a negative
// coefficient, which is rejected.
Series schreier_generators_series(const Series& hx, const Series& hquot);

}  // namespace colorwitt
