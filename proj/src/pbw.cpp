#include "colorwitt/pbw.hpp"

#include <functional>

namespace colorwitt {

namespace {

// exp(sum_m w(m) f^[m]) for f of positive order. Dilation by m raises the
// minimum total degree to m, so the sum stops at the truncation order.
Series exp_with_weights(const Series& f, const std::function<Rational(int)>& weight) {
    if (!f.constant_term().is_zero())
        throw std::invalid_argument("operator requires zero constant term");
    Series arg(f.spec());
    for (int m = 1; m <= f.truncation(); ++m) {
        const Rational w = weight(m);
        if (w.is_zero()) continue;
        Series d = twisted_dilate(f, m);
        if (d.is_zero()) continue;
        arg += w * d;
    }
    return exp(arg);
}

// sum_n w(n) log(f^[n]) for f with constant term 1.
Series log_with_weights(const Series& f, const std::function<Rational(int)>& weight) {
    if (!f.constant_term().is_one())
        throw std::invalid_argument("operator requires constant term exactly 1");
    Series out(f.spec());
    for (int n = 1; n <= f.truncation(); ++n) {
        const Rational w = weight(n);
        if (w.is_zero()) continue;
        Series l = log(twisted_dilate(f, n));
        if (l.is_zero()) continue;
        out += w * l;
    }
    return out;
}

void require_all_even(const GradingSpec& spec, const char* what) {
    if (!spec.all_even())
        throw std::invalid_argument(std::string(what) + " requires an all-even grading");
}

// -sum_n w(n) log(1 - (ch X)^[n]), the common core of both free character
// formulas; coefficients are checked to be nonnegative integers.
Series free_character_core(const GradingSpec& spec, const std::function<Rational(int)>& weight) {
    const Series gen = generator_character(spec);
    const Series one = Series::one(spec);
    Series out(spec);
    for (int n = 1; n <= spec.truncation(); ++n) {
        const Rational w = weight(n);
        if (w.is_zero()) continue;
        Series d = twisted_dilate(gen, n);
        if (d.is_zero()) break;  // dilation past the truncation order
        out -= w * log(one - d);
    }
    for (const auto& [m, c] : out.terms())
        if (!c.is_integer() || !c.is_nonnegative())
            throw integrality_error("free character coefficient " + c.str() +
                                    " at a multidegree of total " + std::to_string(m.total()));
    return out;
}

PbwReport compare_series(const Series& lie_route, const Series& assoc_route) {
    PbwReport report;
    // walk the union of supports in graded-lex order
    auto ita = lie_route.terms().begin();
    auto itb = assoc_route.terms().begin();
    auto mismatch = [&](const Multidegree& m, const Rational& a, const Rational& b) {
        report.ok = false;
        report.first_mismatch = m;
        report.lie_side = a;
        report.assoc_side = b;
    };
    while (ita != lie_route.terms().end() || itb != assoc_route.terms().end()) {
        if (itb == assoc_route.terms().end() ||
            (ita != lie_route.terms().end() && ita->first < itb->first)) {
            mismatch(ita->first, ita->second, 0);
            return report;
        }
        if (ita == lie_route.terms().end() || itb->first < ita->first) {
            mismatch(itb->first, 0, itb->second);
            return report;
        }
        if (ita->second != itb->second) {
            mismatch(ita->first, ita->second, itb->second);
            return report;
        }
        ++ita;
        ++itb;
    }
    return report;
}

}  // namespace

Series pbw_exp(const Series& f) {
    return exp_with_weights(f, [](int m) { return Rational(1, m); });
}

Series pbw_log(const Series& f) {
    return log_with_weights(f, [](int n) { return Rational(mobius(n), n); });
}

Series pbw_exp_p(const Series& f, const Prime& p) {
    require_all_even(f.spec(), "pbw_exp_p");
    return exp_with_weights(f, [&](int m) { return Rational(one_p(m, p), m); });
}

Series pbw_log_p(const Series& f, const Prime& p) {
    require_all_even(f.spec(), "pbw_log_p");
    return log_with_weights(f, [&](int n) { return Rational(mobius_p(n, p), n); });
}

Series pbw_exp_p_mixed(const Series& f, const Prime& p) {
    if (!f.constant_term().is_zero())
        throw std::invalid_argument("pbw_exp_p_mixed requires zero constant term");
    // Split by the parity of each term's odd weight.
    Series even_part(f.spec()), odd_part(f.spec());
    for (const auto& [m, c] : f.terms())
        (f.spec().odd_weight(m) % 2 == 0 ? even_part : odd_part).add_term(m, c);
    const Series a = exp_with_weights(even_part, [&](int m) { return Rational(one_p(m, p), m); });
    const Series b = exp_with_weights(odd_part, [](int m) { return Rational(1, m); });
    return a * b;
}

Series free_lie_character(const GradingSpec& spec) {
    return free_character_core(spec, [](int n) { return Rational(mobius(n), n); });
}

Series free_restricted_character(const GradingSpec& spec, const Prime& p) {
    require_all_even(spec, "free_restricted_character");
    return free_character_core(spec, [&](int n) { return Rational(mobius_p(n, p), n); });
}

Series restricted_component_character(const GradingSpec& spec, const Prime& p, int n) {
    require_all_even(spec, "restricted_component_character");
    if (n < 1 || n > spec.truncation())
        throw std::invalid_argument("restricted_component_character: n out of range");
    const Series gen = generator_character(spec);
    Series sum(spec);
    for (long k : divisors(n)) {
        const long w = mobius_p(k, p);
        if (w == 0) continue;
        sum += Rational(w) * pow(twisted_dilate(gen, static_cast<int>(k)), n / k);
    }
    return Rational(1, n) * sum;
}

std::string PbwReport::str() const {
    if (ok) return "ok";
    std::string s = "mismatch at multidegree (";
    for (int i = 0; i < first_mismatch->size(); ++i) {
        if (i) s += ",";
        s += std::to_string((*first_mismatch)[i]);
    }
    s += "): operator route " + lie_side.str() + " vs associative route " + assoc_side.str();
    return s;
}

PbwReport pbw_verify(const GradingSpec& spec) {
    return compare_series(pbw_exp(free_lie_character(spec)), free_assoc_character(spec));
}

PbwReport pbw_verify_p(const GradingSpec& spec, const Prime& p) {
    require_all_even(spec, "pbw_verify_p");
    return compare_series(pbw_exp_p(free_restricted_character(spec, p), p),
                          free_assoc_character(spec));
}

}  // namespace colorwitt
