#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "colorwitt/lyndon.hpp"
#include "colorwitt/witt.hpp"
#include "testutil.hpp"

using namespace colorwitt;
using namespace colorwitt::testutil;

TEST_CASE("count_lyndon on two even letters") {
    const GradingSpec spec = make_spec({{1, Parity::even}, {1, Parity::even}}, 8);
    CHECK(count_lyndon(spec, Multidegree({2, 1})) == 1);  // xxy
    CHECK(count_lyndon(spec, Multidegree({1, 1})) == 1);  // xy
    CHECK(count_lyndon(spec, Multidegree({2, 2})) == 1);  // xxyy
    CHECK(count_lyndon(spec, Multidegree({1, 0})) == 1);
    CHECK(count_lyndon(spec, Multidegree({3, 0})) == 0);  // xxx is periodic
}

TEST_CASE("count_lyndon treats class multiplicities as distinct letters") {
    const GradingSpec spec = make_spec({{2, Parity::even}}, 8);
    // aab and abb
    CHECK(count_lyndon(spec, Multidegree({3})) == 2);
    CHECK(count_lyndon(spec, Multidegree({1})) == 2);
    CHECK(count_lyndon(spec, Multidegree({2})) == 1);  // ab
}

TEST_CASE("super dimension oracle adds odd squares") {
    const GradingSpec odd = make_spec({{1, Parity::odd}}, 8);
    CHECK(oracle_dim_super(odd, Multidegree({2})) == 1);  // square of y
    CHECK(oracle_dim_super(odd, Multidegree({1})) == 1);
    CHECK(oracle_dim_super(odd, Multidegree({3})) == 0);
    CHECK(oracle_dim_super(odd, Multidegree({4})) == 0);  // yy is not Lyndon

    const GradingSpec mixed = make_spec({{1, Parity::even}, {1, Parity::odd}}, 8);
    CHECK(oracle_dim_super(mixed, Multidegree({2, 2})) == 2);  // xxyy plus (xy)^2

    const GradingSpec even2 = make_spec({{1, Parity::even}, {1, Parity::even}}, 8);
    CHECK(oracle_dim_super(even2, Multidegree({2, 2})) == 1);  // no odd squares
}

TEST_CASE("restricted oracle") {
    CHECK(oracle_dim_restricted(1, 4, Prime(2)) == 1);
    CHECK(oracle_dim_restricted(2, 2, Prime(2)) == 3);
    CHECK(oracle_dim_restricted(2, 3, Prime(3)) == 4);
    CHECK(oracle_dim_restricted(1, 3, Prime(2)) == 0);
    CHECK(oracle_dim_restricted(1, 8, Prime(2)) == 1);
}

TEST_CASE("lyndon counts per total degree reproduce the necklace values") {
    for (int r = 1; r <= 3; ++r) {
        const GradingSpec spec = make_spec({{r, Parity::even}}, 12);
        for (int n = 1; n <= 12; ++n)
            CHECK(count_lyndon(spec, Multidegree({n})) == dim_total_super(r, 0, n));
    }
}

TEST_CASE("multidegree counts refine the total count") {
    const GradingSpec spec = make_spec({{1, Parity::even}, {1, Parity::even}, {1, Parity::even}}, 7);
    const GradingSpec flat = make_spec({{3, Parity::even}}, 7);
    for (int n = 1; n <= 7; ++n) {
        long total = 0;
        for_each_composition(3, n,
                             [&](const Multidegree& m) { total += count_lyndon(spec, m); });
        CHECK(total == count_lyndon(flat, Multidegree({n})));
    }
}

TEST_CASE("oracle table kernels agree") {
    const GradingSpec spec = make_spec({{2, Parity::even}, {1, Parity::odd}}, 9);
    const OracleTable serial = oracle_super_table_serial(spec, 9);
    const OracleTable parallel = oracle_super_table(spec, 9);
    REQUIRE(serial.size() == parallel.size());
    CHECK(serial == parallel);
    // spot-check the table against the closed form
    for (const auto& [alpha, count] : serial)
        CHECK(Integer(count) == dim_multidegree(spec, alpha));
}

TEST_CASE("oracle cap is enforced") {
    const GradingSpec spec = make_spec({{1, Parity::even}}, 20);
    CHECK_THROWS_AS(count_lyndon(spec, Multidegree({15})), std::invalid_argument);
    CHECK_THROWS_AS(oracle_dim_restricted(2, 15, Prime(2)), std::invalid_argument);
    CHECK_NOTHROW(count_lyndon(spec, Multidegree({15}), 15));
}
