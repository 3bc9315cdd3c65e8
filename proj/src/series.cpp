#include "colorwitt/series.hpp"

#include <sstream>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace colorwitt {

namespace {

void check_compatible(const Series& a, const Series& b) {
    if (!a.spec().same_shape(b.spec()))
        throw std::invalid_argument("series operands have mismatched grading specs");
}

}  // namespace

Series& Series::operator+=(const Series& o) {
    check_compatible(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Series& Series::operator-=(const Series& o) {
    check_compatible(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Series operator-(const Series& a) {
    Series out(a.spec_);
    for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, -c);
    return out;
}

Series operator*(const Rational& c, const Series& f) {
    Series out(f.spec_);
    if (c.is_zero()) return out;
    for (const auto& [m, v] : f.terms_) out.terms_.emplace(m, c * v);
    return out;
}

Series mul_serial(const Series& a, const Series& b) {
    check_compatible(a, b);
    Series out(a.spec());
    const int n = a.truncation();
    for (const auto& [ma, ca] : a.terms()) {
        const int ta = ma.total();
        for (const auto& [mb, cb] : b.terms()) {
            if (ta + mb.total() > n) break;  // map is graded, later terms only grow
            out.add_term(ma + mb, ca * cb);
        }
    }
    return out;
}

Series mul_parallel(const Series& a, const Series& b) {
#ifndef _OPENMP
    return mul_serial(a, b);
#else
    check_compatible(a, b);
    std::vector<std::pair<const Multidegree*, const Rational*>> left;
    left.reserve(a.terms().size());
    for (const auto& [m, c] : a.terms()) left.emplace_back(&m, &c);

    const int n = a.truncation();
    Series out(a.spec());
    #pragma omp parallel
    {
        Series local(a.spec());
        #pragma omp for schedule(dynamic, 8) nowait
        for (long i = 0; i < static_cast<long>(left.size()); ++i) {
            const Multidegree& ma = *left[static_cast<size_t>(i)].first;
            const Rational& ca = *left[static_cast<size_t>(i)].second;
            const int ta = ma.total();
            for (const auto& [mb, cb] : b.terms()) {
                if (ta + mb.total() > n) break;
                local.add_term(ma + mb, ca * cb);
            }
        }
        #pragma omp critical(colorwitt_mul_merge)
        out += local;
    }
    return out;
#endif
}

Series operator*(const Series& a, const Series& b) {
    // The parallel kernel pays off only on large operands.
    const size_t work = a.terms_.size() * b.terms_.size();
    if (work >= 200000) return mul_parallel(a, b);
    return mul_serial(a, b);
}

Series inverse(const Series& f) {
    const Rational c = f.constant_term();
    if (c.is_zero()) throw std::invalid_argument("inverse: constant term is zero");
    // f = c (1 - h) with h of positive order; 1/f = (1/c) sum h^k.
    Series h = Series::one(f.spec()) - Rational(1) / c * f;
    Series acc = Series::one(f.spec());
    Series sum = Series::one(f.spec());
    for (int k = 1; k <= f.truncation(); ++k) {
        acc = acc * h;
        if (acc.is_zero()) break;
        sum += acc;
    }
    return Rational(1) / c * sum;
}

Series exp(const Series& f) {
    if (!f.constant_term().is_zero())
        throw std::invalid_argument("exp: constant term must be zero");
    Series sum = Series::one(f.spec());
    Series term = Series::one(f.spec());
    for (int k = 1; k <= f.truncation(); ++k) {
        term = Rational(1, k) * (term * f);
        if (term.is_zero()) break;
        sum += term;
    }
    return sum;
}

Series log(const Series& f) {
    if (!f.constant_term().is_one())
        throw std::invalid_argument("log: constant term must be exactly 1");
    const Series h = f - Series::one(f.spec());
    Series sum(f.spec());
    Series hk = Series::one(f.spec());
    for (int k = 1; k <= f.truncation(); ++k) {
        hk = hk * h;
        if (hk.is_zero()) break;
        sum += Rational(k % 2 ? 1 : -1, k) * hk;
    }
    return sum;
}

Series pow(const Series& f, long n) {
    if (n < 0) throw std::invalid_argument("pow: negative exponent");
    Series result = Series::one(f.spec());
    Series base = f;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

Series twisted_dilate(const Series& f, int m) {
    if (m < 1) throw std::invalid_argument("twisted_dilate: m must be >= 1");
    Series out(f.spec());
    for (const auto& [alpha, c] : f.terms()) {
        if (static_cast<long>(m) * alpha.total() > f.truncation()) break;
        const bool negate = ((m + 1) * f.spec().odd_weight(alpha)) % 2 != 0;
        out.add_term(alpha.scaled(m), negate ? -c : c);
    }
    return out;
}

Series generator_character(const GradingSpec& spec) {
    Series out(spec);
    for (int i = 0; i < spec.arity(); ++i)
        out.add_term(Multidegree::unit(spec.arity(), i), spec.generator_class(i).count);
    return out;
}

Series free_assoc_character(const GradingSpec& spec) {
    return inverse(Series::one(spec) - generator_character(spec));
}

std::string Series::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (int i = 0; i < m.size(); ++i)
            if (m[i]) {
                os << "*t" << i + 1;
                if (m[i] > 1) os << "^" << m[i];
            }
    }
    return os.str();
}

}  // namespace colorwitt
