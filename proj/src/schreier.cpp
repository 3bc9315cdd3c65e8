#include "colorwitt/schreier.hpp"

namespace colorwitt {

namespace {

void check_counting_series(const Series& f, const char* what) {
    if (f.arity() != 1)
        throw std::invalid_argument(std::string(what) + ": series must be univariate");
    if (f.spec().generator_class(0).parity != Parity::even)
        throw std::invalid_argument(std::string(what) + ": series must be all-even");
    if (!f.constant_term().is_zero())
        throw std::invalid_argument(std::string(what) + ": constant term must be zero");
    for (const auto& [m, c] : f.terms()) {
        (void)m;
        if (!c.is_integer() || !c.is_nonnegative())
            throw std::invalid_argument(std::string(what) +
                                        ": coefficients must be nonnegative integers, got " +
                                        c.str());
    }
}

}  // namespace

GradingSpec univariate_spec(int max_degree) {
    return GradingSpec({{1, Parity::even, {}}}, max_degree);
}

Series epsilon_univariate(const Series& f) {
    check_counting_series(f, "epsilon_univariate");
    const int n = f.truncation();
    Series result = Series::one(f.spec());
    for (const auto& [m, c] : f.terms()) {
        const int i = m.total();
        const Integer count = c.to_integer();
        if (!count.fits_slong_p())
            throw std::invalid_argument("epsilon_univariate: coefficient too large: " + c.str());
        // 1/(1 - t^i) = sum_j t^(ij), truncated
        Series geometric(f.spec());
        for (int j = 0; j * i <= n; ++j) geometric.add_term(Multidegree({j * i}), 1);
        result = result * pow(geometric, count.get_si());
    }
    return result;
}

Series schreier_generators_series(const Series& hx, const Series& hquot) {
    check_counting_series(hx, "schreier_generators_series: H(X)");
    check_counting_series(hquot, "schreier_generators_series: H(L/K)");
    const Series one = Series::one(hx.spec());
    const Series hz = (hx - one) * epsilon_univariate(hquot) + one;
    for (const auto& [m, c] : hz.terms()) {
        (void)m;
        if (!c.is_integer() || !c.is_nonnegative())
            throw std::invalid_argument(
                "schreier_generators_series: inconsistent inputs, coefficient " + c.str());
    }
    return hz;
}

}  // namespace colorwitt
