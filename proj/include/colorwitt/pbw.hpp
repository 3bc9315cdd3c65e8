#pragma once

#include <optional>
#include <string>

#include "colorwitt/numtheory.hpp"
#include "colorwitt/series.hpp"

namespace colorwitt {

// The mutually inverse exp/log-style operator pair relating the character of
// a free color Lie superalgebra to the character of its (restricted)
// enveloping algebra, plus the resulting character formulas.

// exp(sum_m f^[m] / m); requires zero constant term.
Series pbw_exp(const Series& f);

// sum_n (mu(n)/n) log(f^[n]); requires constant term exactly 1.
Series pbw_log(const Series& f);

// Restricted (characteristic p) variants; the grading must be all-even.
Series pbw_exp_p(const Series& f, const Prime& p);
Series pbw_log_p(const Series& f, const Prime& p);

// Mixed-parity extension: the 1_p weights apply to the even-parity part of f
// and the plain weights to the odd part.
Series pbw_exp_p_mixed(const Series& f, const Prime& p);

// Character of the free color Lie superalgebra on the spec's generators.
// Every coefficient is checked to be a nonnegative integer.
Series free_lie_character(const GradingSpec& spec);

// Character of the free restricted Lie p-algebra (all classes even).
Series free_restricted_character(const GradingSpec& spec, const Prime& p);

// Degree-n component of the restricted character by the closed divisor-sum
// formula (an independent code path from slicing free_restricted_character).
Series restricted_component_character(const GradingSpec& spec, const Prime& p, int n);

struct PbwReport {
    bool ok = true;
    std::optional<Multidegree> first_mismatch;
    Rational lie_side;    // coefficient from the operator route
    Rational assoc_side;  // coefficient from the associative-algebra route
    std::string str() const;
};

// Checks pbw_exp(free_lie_character) == free_assoc_character up to the
// truncation order. A failure signals an implementation bug, so it is
// reported, not thrown.
PbwReport pbw_verify(const GradingSpec& spec);

// Restricted counterpart: pbw_exp_p(free_restricted_character) == 1/(1 - ch X).
PbwReport pbw_verify_p(const GradingSpec& spec, const Prime& p);

}  // namespace colorwitt
