#include "colorwitt/verify.hpp"

#include <exception>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "colorwitt/group_series.hpp"
#include "colorwitt/lyndon.hpp"
#include "colorwitt/pbw.hpp"
#include "colorwitt/witt.hpp"

namespace colorwitt {

namespace {

std::string show(const Multidegree& m) {
    std::string s = "(";
    for (int i = 0; i < m.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(m[i]);
    }
    return s + ")";
}

std::string show_spec(const GradingSpec& spec) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < spec.arity(); ++i) {
        if (i) os << " ";
        const auto& c = spec.generator_class(i);
        os << c.count << (c.parity == Parity::even ? "e" : "o");
    }
    os << " N=" << spec.truncation() << "]";
    return os.str();
}

// every parity/multiplicity assignment with r classes, counts in 1..max_count
std::vector<GradingSpec> small_spec_family(int max_arity, int max_count, int max_degree) {
    std::vector<GradingSpec> out;
    for (int r = 1; r <= max_arity; ++r) {
        std::vector<GeneratorClass> classes(static_cast<size_t>(r));
        auto rec = [&](auto&& self, int i) -> void {
            if (i == r) {
                out.emplace_back(classes, max_degree);
                return;
            }
            for (int s = 1; s <= max_count; ++s)
                for (Parity p : {Parity::even, Parity::odd}) {
                    classes[static_cast<size_t>(i)] = {s, p, {}};
                    self(self, i + 1);
                }
        };
        rec(rec, 0);
    }
    return out;
}

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    return Rational(num(rng), den(rng));
}

Series random_series(std::mt19937_64& rng, const GradingSpec& spec, bool unit_constant) {
    Series f = unit_constant ? Series::one(spec) : Series(spec);
    std::uniform_int_distribution<int> per_degree(0, 2);
    for (const Multidegree& m : multidegrees_up_to(spec.arity(), spec.truncation()))
        if (per_degree(rng) == 0) f.add_term(m, random_rational(rng));
    return f;
}

GroupSeries random_group_series(std::mt19937_64& rng, const GradingSpec& spec,
                                bool unit_constant) {
    GroupSeries f(spec);
    if (unit_constant) f.add_term(Multidegree::zero(spec.arity()), spec.group().identity(), 1);
    const auto elems = spec.group().elements();
    std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
    std::uniform_int_distribution<int> sparsity(0, 2);
    for (const Multidegree& m : multidegrees_up_to(spec.arity(), spec.truncation()))
        if (sparsity(rng) == 0) f.add_term(m, elems[pick(rng)], random_rational(rng));
    return f;
}

}  // namespace

GradingSpec random_spec(std::uint64_t seed, int index, int max_degree, int max_arity,
                        int max_count) {
    std::mt19937_64 rng(seed + 1000003ull * static_cast<std::uint64_t>(index));
    std::uniform_int_distribution<int> arity(1, max_arity);
    std::uniform_int_distribution<int> count(1, max_count);
    std::uniform_int_distribution<int> parity(0, 1);
    const int r = arity(rng);
    std::vector<GeneratorClass> classes;
    for (int i = 0; i < r; ++i)
        classes.push_back({count(rng), parity(rng) ? Parity::odd : Parity::even, {}});
    return GradingSpec(std::move(classes), max_degree);
}

SuiteResult verify_mobius(int limit) {
    SuiteResult res;
    for (long n = 2; n <= limit && res.pass; ++n) {
        long sum = 0;
        for (long d : divisors(n)) sum += mobius(d);
        ++res.checks;
        if (sum != 0) res.fail("sum of mu over divisors of " + std::to_string(n));
    }
    for (long p : {2L, 3L, 5L, 7L}) {
        const Prime prime(p);
        for (long n = 2; n <= limit && res.pass; ++n) {
            long long sum = 0;
            for (long a : divisors(n)) sum += one_p(n / a, prime) * mobius_p(a, prime);
            ++res.checks;
            if (sum != 0)
                res.fail("1_p/mu_p convolution at n=" + std::to_string(n) +
                         ", p=" + std::to_string(p));
        }
    }
    // multiplicativity on coprime pairs
    for (long p : {2L, 3L, 5L}) {
        const Prime prime(p);
        for (long m = 1; m <= 300 && res.pass; ++m)
            for (long n = 1; n <= 300 && res.pass; ++n) {
                if (std::gcd(m, n) != 1) continue;
                ++res.checks;
                if (mobius_p(m * n, prime) != mobius_p(m, prime) * mobius_p(n, prime) ||
                    one_p(m * n, prime) != one_p(m, prime) * one_p(n, prime))
                    res.fail("multiplicativity at m=" + std::to_string(m) +
                             ", n=" + std::to_string(n) + ", p=" + std::to_string(p));
            }
    }
    return res;
}

SuiteResult verify_oracle_super(int max_total) {
    SuiteResult res;
    // closed form vs super-Lyndon counts, all small specs
    for (const GradingSpec& spec : small_spec_family(3, 2, max_total)) {
        const OracleTable table = oracle_super_table(spec, max_total);
        for (const auto& [alpha, want] : table) {
            ++res.checks;
            const Integer got = dim_multidegree(spec, alpha);
            if (got != want) {
                res.fail("dim mismatch at spec " + show_spec(spec) + " alpha " + show(alpha) +
                         ": closed form " + got.get_str() + " vs oracle " +
                         std::to_string(want));
                return res;
            }
        }
    }
    return res;
}

SuiteResult verify_oracle_restricted(int max_n) {
    SuiteResult res;
    const int restricted_max = max_n;
    // restricted totals vs p-power closure of Lyndon counts
    for (long p : {2L, 3L}) {
        const Prime prime(p);
        for (int r = 1; r <= 3; ++r) {
            std::vector<GeneratorClass> classes(static_cast<size_t>(r),
                                                GeneratorClass{1, Parity::even, {}});
            const GradingSpec spec(classes, restricted_max);
            for (int n = 1; n <= restricted_max; ++n) {
                const long want = oracle_dim_restricted(r, n, prime);
                ++res.checks;
                if (dim_total_p(r, n, prime) != want) {
                    res.fail("dim_total_p mismatch at r=" + std::to_string(r) +
                             ", n=" + std::to_string(n) + ", p=" + std::to_string(p));
                    return res;
                }
                Integer by_multidegree = 0;
                for_each_composition(r, n, [&](const Multidegree& alpha) {
                    by_multidegree += dim_multidegree_p(spec, alpha, prime);
                });
                ++res.checks;
                if (by_multidegree != want) {
                    res.fail("dim_multidegree_p sum mismatch at r=" + std::to_string(r) +
                             ", n=" + std::to_string(n) + ", p=" + std::to_string(p));
                    return res;
                }
            }
        }
    }
    return res;
}

SuiteResult verify_oracle(int max_total, int restricted_max) {
    SuiteResult res = verify_oracle_super(max_total);
    if (!res.pass) return res;
    SuiteResult restricted = verify_oracle_restricted(restricted_max);
    restricted.checks += res.checks;
    return restricted;
}

SuiteResult verify_pbw(std::uint64_t seed, int max_degree, int num_specs, int max_arity,
                       int max_count) {
    SuiteResult res;
    std::vector<PbwReport> reports(static_cast<size_t>(num_specs));
    std::vector<GradingSpec> specs;
    for (int i = 0; i < num_specs; ++i)
        specs.push_back(random_spec(seed, i, max_degree, max_arity, max_count));
    std::exception_ptr error;
    #pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < num_specs; ++i) {
        try {
            reports[static_cast<size_t>(i)] = pbw_verify(specs[static_cast<size_t>(i)]);
        } catch (...) {
            #pragma omp critical(colorwitt_verify_err)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    for (int i = 0; i < num_specs; ++i) {
        ++res.checks;
        if (!reports[static_cast<size_t>(i)].ok) {
            res.fail("pbw identity fails on spec " + show_spec(specs[static_cast<size_t>(i)]) +
                     ": " + reports[static_cast<size_t>(i)].str());
            return res;
        }
    }
    return res;
}

SuiteResult verify_pbw_p(int max_degree, int max_arity) {
    SuiteResult res;
    for (long p : {2L, 3L, 5L}) {
        const Prime prime(p);
        for (int r = 1; r <= max_arity; ++r)
            for (int s = 1; s <= 2; ++s) {
                std::vector<GeneratorClass> classes(static_cast<size_t>(r),
                                                    GeneratorClass{s, Parity::even, {}});
                const GradingSpec spec(classes, max_degree);
                const PbwReport report = pbw_verify_p(spec, prime);
                ++res.checks;
                if (!report.ok) {
                    res.fail("restricted pbw identity fails on spec " + show_spec(spec) +
                             ", p=" + std::to_string(p) + ": " + report.str());
                    return res;
                }
            }
    }
    return res;
}

SuiteResult verify_operators(std::uint64_t seed, int max_degree, int trials) {
    SuiteResult res;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> arity(1, 3);
    std::uniform_int_distribution<int> parity(0, 1);

    auto make_spec = [&](bool all_even) {
        const int r = arity(rng);
        std::vector<GeneratorClass> classes;
        for (int i = 0; i < r; ++i)
            classes.push_back(
                {1, !all_even && parity(rng) ? Parity::odd : Parity::even, {}});
        return GradingSpec(std::move(classes), max_degree);
    };

    for (int t = 0; t < trials && res.pass; ++t) {
        // plain pair, both directions
        {
            const GradingSpec spec = make_spec(false);
            const Series f = random_series(rng, spec, false);
            ++res.checks;
            if (pbw_log(pbw_exp(f)) != f) res.fail("log(exp(f)) != f at trial " + std::to_string(t));
            const Series g = random_series(rng, spec, true);
            ++res.checks;
            if (pbw_exp(pbw_log(g)) != g) res.fail("exp(log(g)) != g at trial " + std::to_string(t));
        }
        // restricted pair
        for (long p : {2L, 3L, 5L}) {
            const GradingSpec spec = make_spec(true);
            const Prime prime(p);
            const Series f = random_series(rng, spec, false);
            ++res.checks;
            if (pbw_log_p(pbw_exp_p(f, prime), prime) != f)
                res.fail("restricted round-trip fails at trial " + std::to_string(t) +
                         ", p=" + std::to_string(p));
        }
        // group pair over Z2 x Z2 with the diagonal parity partition
        {
            const FiniteAbelianGroup group(
                {2, 2}, {GroupElement({0, 1}), GroupElement({1, 0})});
            std::vector<GeneratorClass> classes{
                {1, Parity::even, GroupElement({0, 0})},
                {1, Parity::odd, GroupElement({0, 1})}};
            const GradingSpec spec(classes, max_degree, group);
            const GroupSeries f = random_group_series(rng, spec, false);
            ++res.checks;
            if (pbw_log_g(pbw_exp_g(f)) != f)
                res.fail("group round-trip fails at trial " + std::to_string(t));
        }
    }
    return res;
}

}  // namespace colorwitt
