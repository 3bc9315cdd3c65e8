#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "colorwitt/rational.hpp"

namespace colorwitt {

// A validated prime. Construction runs deterministic trial division; the
// primes used by the restricted formulas are tiny, so nothing fancier is
// warranted.
class Prime {
public:
    explicit Prime(long value);
    long value() const { return value_; }
    friend bool operator==(const Prime& a, const Prime& b) { return a.value_ == b.value_; }

private:
    long value_;
};

// (prime, exponent) pairs, ascending by prime.
std::vector<std::pair<long, int>> factorize(long n);

// Classical Moebius function: 0 on squareful n, else (-1)^#prime divisors.
int mobius(long n);

// 1_p(n): 1 if p does not divide n, 1 - p if it does.
long one_p(long n, const Prime& p);

// mu_p(n): mu(n) for p coprime to n; mu(m) (p^s - p^(s-1)) for n = m p^s, s >= 1.
long mobius_p(long n, const Prime& p);

// All divisors of n, ascending.
std::vector<long> divisors(long n);

// (sum parts)! / prod (part!) as an exact big integer.
Integer multinomial(const std::vector<int>& parts);

}  // namespace colorwitt
