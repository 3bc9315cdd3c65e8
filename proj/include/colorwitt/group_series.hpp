#pragma once

#include <map>
#include <optional>
#include <utility>

#include "colorwitt/numtheory.hpp"
#include "colorwitt/series.hpp"

namespace colorwitt {

// Truncated series whose coefficients live in the group algebra of the
// spec's finite abelian group: a finite map (multidegree, group element) ->
// rational. Multiplication convolves the group part.
class GroupSeries {
public:
    using Key = std::pair<Multidegree, GroupElement>;

    explicit GroupSeries(GradingSpec spec) : spec_(std::move(spec)) {
        if (!spec_.has_group())
            throw std::invalid_argument("GroupSeries: grading spec has no group");
    }

    static GroupSeries one(const GradingSpec& spec) {
        GroupSeries s(spec);
        s.add_term(Multidegree::zero(spec.arity()), spec.group().identity(), 1);
        return s;
    }
    static GroupSeries monomial(const GradingSpec& spec, const Multidegree& m,
                                const GroupElement& g, const Rational& c) {
        GroupSeries s(spec);
        spec.check_arity(m);
        s.add_term(m, g, c);
        return s;
    }

    const GradingSpec& spec() const { return spec_; }
    const std::map<Key, Rational>& terms() const { return terms_; }
    int truncation() const { return spec_.truncation(); }

    Rational coeff(const Multidegree& m, const GroupElement& g) const {
        auto it = terms_.find({m, spec_.group().reduce(g)});
        return it == terms_.end() ? Rational(0) : it->second;
    }
    bool is_zero() const { return terms_.empty(); }

    // true iff there is no term at multidegree zero
    bool constant_is_zero() const;
    // true iff the multidegree-zero part is exactly 1 at the identity
    bool constant_is_unit() const;

    void add_term(const Multidegree& m, const GroupElement& g, const Rational& c) {
        if (c.is_zero() || m.total() > truncation()) return;
        Key key{m, spec_.group().reduce(g)};
        auto [it, inserted] = terms_.emplace(std::move(key), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    GroupSeries& operator+=(const GroupSeries& o);
    GroupSeries& operator-=(const GroupSeries& o);
    friend GroupSeries operator+(GroupSeries a, const GroupSeries& b) { return a += b; }
    friend GroupSeries operator-(GroupSeries a, const GroupSeries& b) { return a -= b; }
    friend GroupSeries operator*(const GroupSeries& a, const GroupSeries& b);
    friend GroupSeries operator*(const Rational& c, const GroupSeries& f);

    friend bool operator==(const GroupSeries& a, const GroupSeries& b) {
        return a.spec_.same_shape(b.spec_) && a.terms_ == b.terms_;
    }
    friend bool operator!=(const GroupSeries& a, const GroupSeries& b) { return !(a == b); }

private:
    GradingSpec spec_;
    std::map<Key, Rational> terms_;
};

// exp/log on group series, same domains as the plain versions.
GroupSeries exp(const GroupSeries& f);
GroupSeries log(const GroupSeries& f);

// Group-twisted dilation: r [g] t^alpha |-> r nu(g)^(m+1) [g^m] t^(m alpha).
GroupSeries group_twisted_dilate(const GroupSeries& f, int m);

// The group-coefficient operator pair: exp(sum f^[m]/m) and its Moebius
// inverse sum (mu(n)/n) log f^[n].
GroupSeries pbw_exp_g(const GroupSeries& f);
GroupSeries pbw_log_g(const GroupSeries& f);

// G-character of the free color Lie superalgebra on a labeled spec: the
// (alpha, g) coefficient is the dimension of that component.
GroupSeries free_lie_character_g(const GradingSpec& spec);

// Forget the group labels (sum coefficients over G); lands in the plain
// series algebra over the same spec.
Series collapse_labels(const GroupSeries& f);

// Color super dimension of the slice at alpha: the group-algebra element
// kappa(alpha) * sdim, where sdim carries the parity sign. Read-only
// diagnostic; nothing downstream consumes it.
std::pair<GroupElement, Rational> color_super_dim(const GroupSeries& f, const Multidegree& alpha);

// Total dimension of the (n, g) component: sum of dim over all multidegrees
// alpha with |alpha| = n and label(alpha) = g, via the closed-form dimension
// formulas (restricted ones when p is given).
Integer dim_by_group_degree(const GradingSpec& spec, int n, const GroupElement& g,
                            const std::optional<Prime>& p = std::nullopt);

// The multidegrees the sum above ranges over, graded-lex order.
std::vector<Multidegree> group_degree_fiber(const GradingSpec& spec, int n,
                                            const GroupElement& g);

}  // namespace colorwitt
