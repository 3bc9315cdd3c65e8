// Benchmark of the OpenMP kernels against their serial references: the
// Lyndon-oracle dimension table and the truncated Cauchy product.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "colorwitt/lyndon.hpp"
#include "colorwitt/pbw.hpp"
#include "colorwitt/series.hpp"

using namespace colorwitt;

namespace {

double seconds(const std::chrono::steady_clock::time_point& a,
               const std::chrono::steady_clock::time_point& b) {
    return std::chrono::duration<double>(b - a).count();
}

template <typename F>
double timed(F&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return seconds(t0, t1);
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-28s serial %8.3f s   parallel %8.3f s   speedup %5.2fx\n", name, serial,
                parallel, parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
    int oracle_total = 10;
    if (argc > 1) oracle_total = std::atoi(argv[1]);

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; parallel kernels fall back to serial\n");
#endif

    {
        const GradingSpec spec({{2, Parity::even, {}}, {2, Parity::even, {}},
                                {2, Parity::odd, {}}},
                               oracle_total);
        OracleTable serial_table, parallel_table;
        const double ts = timed([&] { serial_table = oracle_super_table_serial(spec, oracle_total); });
        const double tp = timed([&] { parallel_table = oracle_super_table(spec, oracle_total); });
        if (serial_table != parallel_table) {
            std::printf("oracle tables disagree -- kernel bug\n");
            return 1;
        }
        report("lyndon oracle table", ts, tp);
    }

    {
        const GradingSpec spec(
            std::vector<GeneratorClass>(4, GeneratorClass{3, Parity::even, {}}), 12);
        const Series f = free_assoc_character(spec);
        Series a(spec), b(spec);
        const double ts = timed([&] { a = mul_serial(f, f); });
        const double tp = timed([&] { b = mul_parallel(f, f); });
        if (a != b) {
            std::printf("products disagree -- kernel bug\n");
            return 1;
        }
        report("cauchy product (r=4, N=12)", ts, tp);
    }

    {
        const GradingSpec spec(
            {{2, Parity::even, {}}, {1, Parity::odd, {}}, {3, Parity::even, {}}}, 12);
        double ts = 0, tp = 0;
        PbwReport r;
        ts = timed([&] { r = pbw_verify(spec); });
        if (!r.ok) {
            std::printf("pbw identity fails -- bug\n");
            return 1;
        }
        tp = ts;  // single-spec check; the suite-level parallelism is over specs
        std::printf("%-28s one spec  %8.3f s\n", "pbw verify (r=3, N=12)", tp);
    }

    return 0;
}
