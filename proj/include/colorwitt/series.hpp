#pragma once

#include <map>

#include "colorwitt/grading.hpp"
#include "colorwitt/multidegree.hpp"
#include "colorwitt/rational.hpp"

namespace colorwitt {

// Truncated sparse multivariate formal power series over exact rationals.
// Terms beyond the spec's truncation order are dropped on every operation;
// zero coefficients are never stored. Values are immutable in practice: all
// operations build new series.
class Series {
public:
    explicit Series(GradingSpec spec) : spec_(std::move(spec)) {}

    static Series constant(const GradingSpec& spec, const Rational& c) {
        Series s(spec);
        s.add_term(Multidegree::zero(spec.arity()), c);
        return s;
    }
    static Series one(const GradingSpec& spec) { return constant(spec, 1); }
    static Series monomial(const GradingSpec& spec, const Multidegree& m, const Rational& c) {
        Series s(spec);
        spec.check_arity(m);
        s.add_term(m, c);
        return s;
    }

    const GradingSpec& spec() const { return spec_; }
    const std::map<Multidegree, Rational>& terms() const { return terms_; }
    int truncation() const { return spec_.truncation(); }
    int arity() const { return spec_.arity(); }

    Rational coeff(const Multidegree& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    Rational constant_term() const { return coeff(Multidegree::zero(arity())); }
    bool is_zero() const { return terms_.empty(); }

    // Accumulates c onto the coefficient at m; drops terms beyond the
    // truncation order and prunes exact zeros.
    void add_term(const Multidegree& m, const Rational& c) {
        if (c.is_zero() || m.total() > truncation()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator-(const Series& a);
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(const Rational& c, const Series& f);

    friend bool operator==(const Series& a, const Series& b) {
        return a.spec_.same_shape(b.spec_) && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    // terms of exact total degree n
    Series slice_total(int n) const {
        Series out(spec_);
        for (const auto& [m, c] : terms_)
            if (m.total() == n) out.add_term(m, c);
        return out;
    }

    std::string str() const;

private:
    GradingSpec spec_;
    std::map<Multidegree, Rational> terms_;
};

// Truncated Cauchy product. operator* dispatches to the OpenMP kernel for
// large operands; mul_serial is the reference implementation and the two are
// checked against each other in the test suite.
Series mul_serial(const Series& a, const Series& b);
Series mul_parallel(const Series& a, const Series& b);

// Multiplicative inverse up to the truncation order; requires a nonzero
// constant term.
Series inverse(const Series& f);

// exp(f) = sum f^k / k!; requires zero constant term.
Series exp(const Series& f);

// log(f) for f with constant term exactly 1.
Series log(const Series& f);

// f^n by repeated truncated multiplication, n >= 0.
Series pow(const Series& f, long n);

// The parity-twisted dilation: c t^alpha |-> c (-1)^((m+1) |alpha|_-) t^(m alpha),
// terms pushed past the truncation order are dropped.
Series twisted_dilate(const Series& f, int m);

// ch X = sum s_i t_i.
Series generator_character(const GradingSpec& spec);

// Character of the free associative algebra on the spec's generators:
// 1 / (1 - ch X), truncated.
Series free_assoc_character(const GradingSpec& spec);

}  // namespace colorwitt
