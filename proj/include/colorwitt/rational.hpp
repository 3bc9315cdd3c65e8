#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace colorwitt {

using Integer = mpz_class;

// Thrown when a quantity that must be a nonnegative integer (a dimension)
// comes out fractional or negative. Reaching this is an implementation bug,
// not a user error.
struct integrality_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Exact rational number, always in lowest terms with positive denominator.
// All arithmetic is exact; equality is structural.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, lets `f * 2` read naturally
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_nonnegative() const { return sgn(v_) >= 0; }

    // Exact integer value; throws integrality_error otherwise.
    Integer to_integer() const {
        if (!is_integer())
            throw integrality_error("expected integer, got " + str());
        return v_.get_num();
    }

    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

private:
    mpq_class v_;  // canonical at all times
};

}  // namespace colorwitt
