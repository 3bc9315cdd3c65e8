#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "colorwitt/group_series.hpp"
#include "colorwitt/lyndon.hpp"
#include "colorwitt/pbw.hpp"
#include "colorwitt/witt.hpp"
#include "testutil.hpp"

using namespace colorwitt;
using namespace colorwitt::testutil;

namespace {

// Z2 with G_- = {1}: the sign grading
GradingSpec z2_mixed_spec(int max_degree) {
    const FiniteAbelianGroup group({2}, {GroupElement({1})});
    std::vector<GeneratorClass> classes{
        {1, Parity::even, GroupElement({0})},
        {1, Parity::odd, GroupElement({1})},
    };
    return GradingSpec(std::move(classes), max_degree, group);
}

GroupSeries random_gs(std::mt19937_64& rng, const GradingSpec& spec, bool unit) {
    GroupSeries f(spec);
    if (unit) f.add_term(Multidegree::zero(spec.arity()), spec.group().identity(), 1);
    const auto elems = spec.group().elements();
    std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
    std::uniform_int_distribution<int> sparsity(0, 2);
    for (const Multidegree& m : multidegrees_up_to(spec.arity(), spec.truncation()))
        if (sparsity(rng) == 0) f.add_term(m, elems[pick(rng)], random_rational(rng));
    return f;
}

}  // namespace

TEST_CASE("group validation") {
    CHECK_NOTHROW(FiniteAbelianGroup({2}, {GroupElement({1})}));
    CHECK_NOTHROW(FiniteAbelianGroup({4}, {GroupElement({1}), GroupElement({3})}));
    CHECK_NOTHROW(FiniteAbelianGroup({2, 2}, {}));
    // nu fails to be a homomorphism:
    CHECK_THROWS_AS(FiniteAbelianGroup({3}, {GroupElement({1})}), std::invalid_argument);
    CHECK_THROWS_AS(FiniteAbelianGroup({2, 2}, {GroupElement({0, 1})}), std::invalid_argument);
    CHECK_THROWS_AS(FiniteAbelianGroup({1}, {}), std::invalid_argument);

    const FiniteAbelianGroup g({2, 2}, {GroupElement({0, 1}), GroupElement({1, 0})});
    CHECK(g.order() == 4);
    CHECK(g.parity_sign(GroupElement({1, 1})) == 1);
    CHECK(g.parity_sign(GroupElement({0, 1})) == -1);
    CHECK(g.power(GroupElement({1, 1}), 2) == g.identity());
    CHECK(g.compose(GroupElement({0, 1}), GroupElement({1, 0})) == GroupElement({1, 1}));
}

TEST_CASE("labels must match class parity") {
    const FiniteAbelianGroup group({2}, {GroupElement({1})});
    std::vector<GeneratorClass> bad{{1, Parity::even, GroupElement({1})}};
    CHECK_THROWS_AS(GradingSpec(bad, 6, group), std::invalid_argument);
}

TEST_CASE("group convolution product") {
    const GradingSpec spec = z2_mixed_spec(6);
    const auto& g = spec.group();
    const GroupElement e({0}), s({1});

    const GroupSeries a = GroupSeries::monomial(spec, Multidegree({1, 0}), s, 1);
    const GroupSeries b = GroupSeries::monomial(spec, Multidegree({1, 0}), e, 1);
    // ([s] t)([e] t) = [s] t^2
    CHECK(a * b == GroupSeries::monomial(spec, Multidegree({2, 0}), s, 1));

    const GroupSeries one = GroupSeries::one(spec);
    CHECK(a * one == a);
    CHECK(one * (a + b) == a + b);

    // ([1]t + [0]t)^2 over Z2 = 2[0]t^2 + 2[1]t^2
    const GroupSeries sum = a + b;
    GroupSeries expected(spec);
    expected.add_term(Multidegree({2, 0}), e, 2);
    expected.add_term(Multidegree({2, 0}), s, 2);
    CHECK(sum * sum == expected);
    CHECK(g.parity_sign(e) == 1);
}

TEST_CASE("group twisted dilation") {
    const GradingSpec spec = z2_mixed_spec(8);
    const GroupElement e({0}), s({1});

    const GroupSeries f = GroupSeries::monomial(spec, Multidegree({0, 1}), s, 1);
    CHECK(group_twisted_dilate(f, 1) == f);
    // odd label, m = 2: sign nu(s)^3 = -1, s^2 = e
    CHECK(group_twisted_dilate(f, 2) ==
          GroupSeries::monomial(spec, Multidegree({0, 2}), e, -1));

    const GroupSeries g = GroupSeries::monomial(spec, Multidegree({1, 0}), e, 1);
    CHECK(group_twisted_dilate(g, 3) == GroupSeries::monomial(spec, Multidegree({3, 0}), e, 1));

    CHECK_THROWS_AS(group_twisted_dilate(f, 0), std::invalid_argument);

    // composition and multiplicativity
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 15; ++trial) {
        const GroupSeries x = random_gs(rng, spec, false);
        const GroupSeries y = random_gs(rng, spec, false);
        CHECK(group_twisted_dilate(group_twisted_dilate(x, 2), 3) == group_twisted_dilate(x, 6));
        CHECK(group_twisted_dilate(x * y, 2) ==
              group_twisted_dilate(x, 2) * group_twisted_dilate(y, 2));
    }
}

TEST_CASE("group operator pair") {
    const GradingSpec spec = z2_mixed_spec(6);
    const GroupElement e({0}), s({1});

    CHECK(pbw_exp_g(GroupSeries(spec)) == GroupSeries::one(spec));

    // polynomial algebra on one even generator labeled s: coefficient of t^n is [s^n]
    const FiniteAbelianGroup z2_plus({2}, {});
    std::vector<GeneratorClass> classes{{1, Parity::even, GroupElement({1})}};
    const GradingSpec plus(classes, 5, z2_plus);
    const GroupSeries gen = GroupSeries::monomial(plus, Multidegree({1}), GroupElement({1}), 1);
    const GroupSeries env = pbw_exp_g(gen);
    for (int n = 0; n <= 5; ++n) {
        const GroupElement gn = z2_plus.power(GroupElement({1}), n);
        CHECK(env.coeff(Multidegree({n}), gn) == Rational(1));
        CHECK(env.coeff(Multidegree({n}), z2_plus.compose(gn, GroupElement({1}))) == Rational(0));
    }

    // round trip on the odd generator
    const GroupSeries u = GroupSeries::monomial(spec, Multidegree({0, 1}), s, 1);
    CHECK(pbw_log_g(pbw_exp_g(u)) == u);
    CHECK(spec.group().parity_sign(e) == 1);

    std::mt19937_64 rng(606060);
    for (int trial = 0; trial < 30; ++trial) {
        const GroupSeries f = random_gs(rng, spec, false);
        const GroupSeries g2 = random_gs(rng, spec, false);
        CHECK(pbw_log_g(pbw_exp_g(f)) == f);
        CHECK(pbw_exp_g(f + g2) == pbw_exp_g(f) * pbw_exp_g(g2));
    }
}

TEST_CASE("free character with group coefficients") {
    // one even generator labeled [1] in Z2 with G = G_+: rank-1 free Lie
    // algebra is one-dimensional
    const FiniteAbelianGroup z2_plus({2}, {});
    std::vector<GeneratorClass> classes{{1, Parity::even, GroupElement({1})}};
    const GradingSpec plus(classes, 5, z2_plus);
    const GroupSeries ch = free_lie_character_g(plus);
    CHECK(ch.coeff(Multidegree({1}), GroupElement({1})) == Rational(1));
    Rational rest = 0;
    for (const auto& [key, c] : ch.terms())
        if (key.first.total() > 1) rest += c;
    CHECK(rest == Rational(0));

    // two even generators labeled [0]: classical Witt dims, all at the identity
    std::vector<GeneratorClass> classes2{{2, Parity::even, GroupElement({0})}};
    const GradingSpec trivial(classes2, 6, z2_plus);
    const GroupSeries ch2 = free_lie_character_g(trivial);
    for (int n = 1; n <= 6; ++n) {
        CHECK(ch2.coeff(Multidegree({n}), GroupElement({0})) ==
              Rational(dim_total_super(2, 0, n)));
        CHECK(ch2.coeff(Multidegree({n}), GroupElement({1})) == Rational(0));
    }
}

TEST_CASE("collapsing labels recovers the plain character") {
    const GradingSpec spec = z2z2_spec(7);
    CHECK(collapse_labels(free_lie_character_g(spec)) == free_lie_character(spec));
}

TEST_CASE("fiber dimensions by total degree and group element") {
    const GradingSpec spec = z2z2_spec(8);
    const GroupElement target({1, 1});

    const auto fiber = group_degree_fiber(spec, 3, target);
    REQUIRE(fiber.size() == 5);
    CHECK(fiber[0] == Multidegree({0, 1, 0, 2}));
    CHECK(fiber[1] == Multidegree({0, 1, 2, 0}));
    CHECK(fiber[2] == Multidegree({0, 3, 0, 0}));
    CHECK(fiber[3] == Multidegree({1, 0, 1, 1}));
    CHECK(fiber[4] == Multidegree({2, 1, 0, 0}));

    CHECK(dim_by_group_degree(spec, 3, target) == 10);

    // degree-1 fibers recover the generator multiplicities
    CHECK(dim_by_group_degree(spec, 1, GroupElement({0, 0})) == 1);
    CHECK(dim_by_group_degree(spec, 1, GroupElement({1, 1})) == 2);
    CHECK(dim_by_group_degree(spec, 1, GroupElement({0, 1})) == 1);

    // Z2 spec: even gen at [0], odd gen at [1], n = 2, g = [0]
    const GradingSpec mixed = z2_mixed_spec(6);
    CHECK(dim_by_group_degree(mixed, 2, GroupElement({0})) == 1);

    CHECK_THROWS_AS(dim_by_group_degree(spec, 9, target), std::invalid_argument);
}

TEST_CASE("fiber sums against the group character and the oracle") {
    const GradingSpec spec = z2z2_spec(6);
    const GroupSeries ch = free_lie_character_g(spec);
    for (int n = 1; n <= 6; ++n) {
        Integer by_groups = 0;
        for (const GroupElement& g : spec.group().elements()) {
            const Integer fiber_dim = dim_by_group_degree(spec, n, g);
            by_groups += fiber_dim;
            // the group character refines the same numbers
            Rational from_series = 0;
            for (const Multidegree& alpha : group_degree_fiber(spec, n, g))
                from_series += ch.coeff(alpha, g);
            CHECK(from_series == Rational(fiber_dim));
        }
        CHECK(by_groups == dim_total_super(spec.even_multiplicity(), spec.odd_multiplicity(), n));
    }
}

TEST_CASE("restricted fiber dims") {
    const FiniteAbelianGroup z2_plus({2}, {});
    std::vector<GeneratorClass> classes{{1, Parity::even, GroupElement({0})},
                                        {1, Parity::even, GroupElement({1})}};
    const GradingSpec spec(classes, 6, z2_plus);
    const Prime two(2);
    for (int n = 1; n <= 6; ++n) {
        Integer total = 0;
        for (const GroupElement& g : spec.group().elements())
            total += dim_by_group_degree(spec, n, g, two);
        CHECK(total == dim_total_p(2, n, two));
    }

    const GradingSpec mixed = z2_mixed_spec(6);
    CHECK_THROWS_AS(dim_by_group_degree(mixed, 2, GroupElement({0}), two),
                    std::invalid_argument);
}

TEST_CASE("color super dimension slice") {
    const GradingSpec spec = z2z2_spec(6);
    const GroupSeries ch = free_lie_character_g(spec);

    const auto [label_even, value_even] = color_super_dim(ch, Multidegree({1, 0, 0, 0}));
    CHECK(label_even == GroupElement({0, 0}));
    CHECK(value_even == Rational(1));

    const auto [label_odd, value_odd] = color_super_dim(ch, Multidegree({0, 0, 1, 0}));
    CHECK(label_odd == GroupElement({0, 1}));
    CHECK(value_odd == Rational(-1));  // parity sign flips the dimension
}
