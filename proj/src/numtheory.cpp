#include "colorwitt/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace colorwitt {

Prime::Prime(long value) : value_(value) {
    if (value < 2) throw std::invalid_argument("Prime: value must be >= 2");
    for (long d = 2; d * d <= value; ++d)
        if (value % d == 0)
            throw std::invalid_argument("Prime: " + std::to_string(value) + " is composite");
}

std::vector<std::pair<long, int>> factorize(long n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<long, int>> fs;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        int e = 0;
        while (n % d == 0) { n /= d; ++e; }
        fs.emplace_back(d, e);
    }
    if (n > 1) fs.emplace_back(n, 1);
    return fs;
}

int mobius(long n) {
    if (n < 1) throw std::invalid_argument("mobius: n must be positive");
    int sign = 1;
    for (const auto& [p, e] : factorize(n)) {
        (void)p;
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

long one_p(long n, const Prime& p) {
    if (n < 1) throw std::invalid_argument("one_p: n must be positive");
    return n % p.value() == 0 ? 1 - p.value() : 1;
}

long mobius_p(long n, const Prime& p) {
    if (n < 1) throw std::invalid_argument("mobius_p: n must be positive");
    long m = n;
    int s = 0;
    while (m % p.value() == 0) { m /= p.value(); ++s; }
    if (s == 0) return mobius(n);
    long ps = 1;
    for (int i = 1; i < s; ++i) ps *= p.value();
    return mobius(m) * (ps * p.value() - ps);
}

std::vector<long> divisors(long n) {
    if (n < 1) throw std::invalid_argument("divisors: n must be positive");
    std::vector<long> small, big;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) big.push_back(n / d);
    }
    small.insert(small.end(), big.rbegin(), big.rend());
    return small;
}

Integer multinomial(const std::vector<int>& parts) {
    unsigned long total = 0;
    for (int part : parts) {
        if (part < 0) throw std::invalid_argument("multinomial: negative part");
        total += static_cast<unsigned long>(part);
    }
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), total);
    for (int part : parts) {
        Integer f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(part));
        result /= f;
    }
    return result;
}

}  // namespace colorwitt
