#include "colorwitt/witt.hpp"

namespace colorwitt {

namespace {

Integer int_pow(const Integer& base, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

Integer finalize_dimension(const Rational& value, const char* what) {
    if (!value.is_integer() || !value.is_nonnegative())
        throw integrality_error(std::string(what) + ": got " + value.str());
    return value.to_integer();
}

}  // namespace

Integer dim_multidegree(const GradingSpec& spec, const Multidegree& alpha) {
    spec.check_arity(alpha);
    if (alpha.is_zero()) throw std::invalid_argument("dim_multidegree: zero multidegree");
    const int total = alpha.total();
    const int odd = spec.odd_weight(alpha);
    Rational sum = 0;
    for (long n : divisors(alpha.gcd_nonzero())) {
        const int mu = mobius(n);
        if (mu == 0) continue;
        const Multidegree beta = alpha.divided(static_cast<int>(n));
        Integer term = multinomial(beta.exp);
        for (int i = 0; i < spec.arity(); ++i)
            term *= int_pow(spec.generator_class(i).count,
                            static_cast<unsigned long>(beta[i]));
        // (-1)^(|alpha|_- + |alpha|_-/n), times mu(n)
        int sign = ((odd + odd / n) % 2 == 0) ? mu : -mu;
        sum += Rational(sign) * Rational(term);
    }
    return finalize_dimension(sum / total, "dim_multidegree");
}

Integer dim_total_super(int even_count, int odd_count, int n) {
    if (even_count < 0 || odd_count < 0 || even_count + odd_count < 1)
        throw std::invalid_argument("dim_total_super: need at least one generator");
    if (n < 1) throw std::invalid_argument("dim_total_super: n must be >= 1");
    Rational sum = 0;
    for (long m : divisors(n)) {
        const int mu = mobius(m);
        if (mu == 0) continue;
        const Integer base = m % 2 == 0 ? Integer(even_count - odd_count)
                                        : Integer(even_count + odd_count);
        sum += Rational(mu) * Rational(int_pow(base, static_cast<unsigned long>(n / m)));
    }
    return finalize_dimension(sum / n, "dim_total_super");
}

SuperHilbert hilbert_series_super(int even_count, int odd_count, int max_degree) {
    if (even_count < 0 || odd_count < 0)
        throw std::invalid_argument("hilbert_series_super: negative generator count");
    const GradingSpec two({{1, Parity::even, {}}, {1, Parity::odd, {}}}, max_degree);
    const GradingSpec diag({{1, Parity::even, {}}}, max_degree);
    SuperHilbert out{Series(two), Series(diag)};
    if (even_count + odd_count == 0) return out;

    Series gen(two);
    gen.add_term(Multidegree::unit(2, 0), even_count);
    gen.add_term(Multidegree::unit(2, 1), odd_count);
    const Series one = Series::one(two);
    for (int n = 1; n <= max_degree; ++n) {
        const int mu = mobius(n);
        if (mu == 0) continue;
        Series d = twisted_dilate(gen, n);
        if (d.is_zero()) break;
        out.bivariate -= Rational(mu, n) * log(one - d);
    }
    for (const auto& [m, c] : out.bivariate.terms()) {
        if (!c.is_integer() || !c.is_nonnegative())
            throw integrality_error("hilbert_series_super coefficient " + c.str());
        out.diagonal.add_term(Multidegree({m.total()}), c);
    }
    return out;
}

Integer dim_multidegree_p(const GradingSpec& spec, const Multidegree& alpha, const Prime& p) {
    if (!spec.all_even())
        throw std::invalid_argument("dim_multidegree_p requires an all-even grading");
    spec.check_arity(alpha);
    if (alpha.is_zero()) throw std::invalid_argument("dim_multidegree_p: zero multidegree");
    const int total = alpha.total();
    Rational sum = 0;
    for (long n : divisors(alpha.gcd_nonzero())) {
        const long mu = mobius_p(n, p);
        if (mu == 0) continue;
        const Multidegree beta = alpha.divided(static_cast<int>(n));
        Integer term = multinomial(beta.exp);
        for (int i = 0; i < spec.arity(); ++i)
            term *= int_pow(spec.generator_class(i).count,
                            static_cast<unsigned long>(beta[i]));
        sum += Rational(mu) * Rational(term);
    }
    return finalize_dimension(sum / total, "dim_multidegree_p");
}

Integer dim_total_p(int generator_count, int n, const Prime& p) {
    if (generator_count < 1) throw std::invalid_argument("dim_total_p: need generators");
    if (n < 1) throw std::invalid_argument("dim_total_p: n must be >= 1");
    Rational sum = 0;
    for (long m : divisors(n)) {
        const long mu = mobius_p(m, p);
        if (mu == 0) continue;
        sum += Rational(mu) *
               Rational(int_pow(generator_count, static_cast<unsigned long>(n / m)));
    }
    return finalize_dimension(sum / n, "dim_total_p");
}

}  // namespace colorwitt
