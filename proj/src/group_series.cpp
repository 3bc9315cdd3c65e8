#include "colorwitt/group_series.hpp"

#include "colorwitt/witt.hpp"

namespace colorwitt {

namespace {

void check_compatible(const GroupSeries& a, const GroupSeries& b) {
    if (!a.spec().same_shape(b.spec()))
        throw std::invalid_argument("group series operands have mismatched grading specs");
}

}  // namespace

bool GroupSeries::constant_is_zero() const {
    if (terms_.empty()) return true;
    return terms_.begin()->first.first.total() > 0;  // graded order: smallest first
}

bool GroupSeries::constant_is_unit() const {
    auto it = terms_.begin();
    if (it == terms_.end() || it->first.first.total() != 0) return false;
    if (!(it->first.second == spec_.group().identity()) || !it->second.is_one()) return false;
    ++it;
    return it == terms_.end() || it->first.first.total() > 0;
}

GroupSeries& GroupSeries::operator+=(const GroupSeries& o) {
    check_compatible(*this, o);
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

GroupSeries& GroupSeries::operator-=(const GroupSeries& o) {
    check_compatible(*this, o);
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

GroupSeries operator*(const Rational& c, const GroupSeries& f) {
    GroupSeries out(f.spec_);
    if (c.is_zero()) return out;
    for (const auto& [k, v] : f.terms_) out.terms_.emplace(k, c * v);
    return out;
}

GroupSeries operator*(const GroupSeries& a, const GroupSeries& b) {
    check_compatible(a, b);
    const auto& group = a.spec().group();
    GroupSeries out(a.spec());
    const int n = a.truncation();
    for (const auto& [ka, ca] : a.terms()) {
        const int ta = ka.first.total();
        for (const auto& [kb, cb] : b.terms()) {
            if (ta + kb.first.total() > n) break;
            out.add_term(ka.first + kb.first, group.compose(ka.second, kb.second), ca * cb);
        }
    }
    return out;
}

GroupSeries exp(const GroupSeries& f) {
    if (!f.constant_is_zero())
        throw std::invalid_argument("exp: group series must have zero constant term");
    GroupSeries sum = GroupSeries::one(f.spec());
    GroupSeries term = GroupSeries::one(f.spec());
    for (int k = 1; k <= f.truncation(); ++k) {
        term = Rational(1, k) * (term * f);
        if (term.is_zero()) break;
        sum += term;
    }
    return sum;
}

GroupSeries log(const GroupSeries& f) {
    if (!f.constant_is_unit())
        throw std::invalid_argument("log: group series must have constant term [e]*1");
    const GroupSeries h = f - GroupSeries::one(f.spec());
    GroupSeries sum(f.spec());
    GroupSeries hk = GroupSeries::one(f.spec());
    for (int k = 1; k <= f.truncation(); ++k) {
        hk = hk * h;
        if (hk.is_zero()) break;
        sum += Rational(k % 2 ? 1 : -1, k) * hk;
    }
    return sum;
}

GroupSeries group_twisted_dilate(const GroupSeries& f, int m) {
    if (m < 1) throw std::invalid_argument("group_twisted_dilate: m must be >= 1");
    const auto& group = f.spec().group();
    GroupSeries out(f.spec());
    for (const auto& [k, c] : f.terms()) {
        if (static_cast<long>(m) * k.first.total() > f.truncation()) break;
        const bool negate = group.parity_sign(k.second) < 0 && (m + 1) % 2 != 0;
        out.add_term(k.first.scaled(m), group.power(k.second, m), negate ? -c : c);
    }
    return out;
}

GroupSeries pbw_exp_g(const GroupSeries& f) {
    if (!f.constant_is_zero())
        throw std::invalid_argument("pbw_exp_g requires zero constant term");
    GroupSeries arg(f.spec());
    for (int m = 1; m <= f.truncation(); ++m) {
        GroupSeries d = group_twisted_dilate(f, m);
        if (d.is_zero()) continue;
        arg += Rational(1, m) * d;
    }
    return exp(arg);
}

GroupSeries pbw_log_g(const GroupSeries& f) {
    if (!f.constant_is_unit())
        throw std::invalid_argument("pbw_log_g requires constant term [e]*1");
    GroupSeries out(f.spec());
    for (int n = 1; n <= f.truncation(); ++n) {
        const int mu = mobius(n);
        if (mu == 0) continue;
        GroupSeries l = log(group_twisted_dilate(f, n));
        if (l.is_zero()) continue;
        out += Rational(mu, n) * l;
    }
    return out;
}

GroupSeries free_lie_character_g(const GradingSpec& spec) {
    if (!spec.has_group())
        throw std::invalid_argument("free_lie_character_g: spec has no group labels");
    GroupSeries gen(spec);
    for (int i = 0; i < spec.arity(); ++i) {
        const auto& cls = spec.generator_class(i);
        gen.add_term(Multidegree::unit(spec.arity(), i), *cls.label, cls.count);
    }
    // geometric series 1/(1 - ch X) with group coefficients
    GroupSeries geo = GroupSeries::one(spec);
    GroupSeries acc = GroupSeries::one(spec);
    for (int k = 1; k <= spec.truncation(); ++k) {
        acc = acc * gen;
        if (acc.is_zero()) break;
        geo += acc;
    }
    GroupSeries out = pbw_log_g(geo);
    for (const auto& [k, c] : out.terms())
        if (!c.is_integer() || !c.is_nonnegative())
            throw integrality_error("free_lie_character_g coefficient " + c.str());
    return out;
}

Series collapse_labels(const GroupSeries& f) {
    Series out(f.spec());
    for (const auto& [k, c] : f.terms()) out.add_term(k.first, c);
    return out;
}

std::pair<GroupElement, Rational> color_super_dim(const GroupSeries& f, const Multidegree& alpha) {
    const auto& spec = f.spec();
    spec.check_arity(alpha);
    const GroupElement label = spec.label_of(alpha);
    Rational dim = 0;
    for (const auto& [k, c] : f.terms())
        if (k.first == alpha) dim += c;
    const int sign = spec.group().parity_sign(label);
    return {label, Rational(sign) * dim};
}

std::vector<Multidegree> group_degree_fiber(const GradingSpec& spec, int n,
                                            const GroupElement& g) {
    if (!spec.has_group())
        throw std::invalid_argument("group_degree_fiber: spec has no group labels");
    const GroupElement target = spec.group().reduce(g);
    std::vector<Multidegree> fiber;
    for_each_composition(spec.arity(), n, [&](const Multidegree& alpha) {
        if (spec.label_of(alpha) == target) fiber.push_back(alpha);
    });
    return fiber;
}

Integer dim_by_group_degree(const GradingSpec& spec, int n, const GroupElement& g,
                            const std::optional<Prime>& p) {
    if (n < 1) throw std::invalid_argument("dim_by_group_degree: n must be >= 1");
    if (n > spec.truncation())
        throw std::invalid_argument("dim_by_group_degree: n exceeds the truncation order");
    if (p && !spec.all_even())
        throw std::invalid_argument("dim_by_group_degree: restricted case needs all-even classes");
    Integer total = 0;
    for (const Multidegree& alpha : group_degree_fiber(spec, n, g))
        total += p ? dim_multidegree_p(spec, alpha, *p) : dim_multidegree(spec, alpha);
    return total;
}

}  // namespace colorwitt
