#include "colorwitt/lyndon.hpp"

#include <exception>
#include <stdexcept>

namespace colorwitt {

namespace {

// w strictly smaller than every proper rotation of itself
bool is_lyndon(const std::vector<int>& w) {
    const size_t n = w.size();
    for (size_t r = 1; r < n; ++r) {
        bool smaller = false;
        for (size_t i = 0; i < n; ++i) {
            const int a = w[i];
            const int b = w[(i + r) % n];
            if (a != b) {
                if (a > b) return false;
                smaller = true;
                break;
            }
        }
        if (!smaller) return false;  // equal to a proper rotation: periodic
    }
    return true;
}

// Enumerate words over `alphabet` letters (letter -> class via class_of) with
// class-wise counts fixed by budget, counting the Lyndon ones. A Lyndon word
// never contains a letter smaller than its first, which prunes most of the
// tree.
long count_words(const std::vector<int>& class_of, std::vector<int>& budget, int length) {
    std::vector<int> word(static_cast<size_t>(length));
    long found = 0;
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == length) {
            if (is_lyndon(word)) ++found;
            return;
        }
        const int first = pos == 0 ? 0 : word[0];
        for (int letter = first; letter < static_cast<int>(class_of.size()); ++letter) {
            int& left = budget[static_cast<size_t>(class_of[static_cast<size_t>(letter)])];
            if (left == 0) continue;
            --left;
            word[static_cast<size_t>(pos)] = letter;
            self(self, pos + 1);
            ++left;
        }
    };
    rec(rec, 0);
    return found;
}

std::vector<int> expand_alphabet(const GradingSpec& spec) {
    std::vector<int> class_of;
    for (int i = 0; i < spec.arity(); ++i)
        for (int j = 0; j < spec.generator_class(i).count; ++j) class_of.push_back(i);
    return class_of;
}

}  // namespace

long count_lyndon(const GradingSpec& spec, const Multidegree& alpha, int cap) {
    spec.check_arity(alpha);
    const int total = alpha.total();
    if (total < 1) throw std::invalid_argument("count_lyndon: zero multidegree");
    if (total > cap)
        throw std::invalid_argument("count_lyndon: total degree " + std::to_string(total) +
                                    " exceeds the oracle cap " + std::to_string(cap));
    const std::vector<int> class_of = expand_alphabet(spec);
    std::vector<int> budget = alpha.exp;
    return count_words(class_of, budget, total);
}

long oracle_dim_super(const GradingSpec& spec, const Multidegree& alpha, int cap) {
    long count = count_lyndon(spec, alpha, cap);
    // squares of odd Lyndon words land at doubled multidegree
    if (alpha.divisible_by(2)) {
        const Multidegree half = alpha.divided(2);
        if (spec.odd_weight(half) % 2 != 0) count += count_lyndon(spec, half, cap);
    }
    return count;
}

long oracle_dim_restricted(int generators, int n, const Prime& p, int cap) {
    if (generators < 1) throw std::invalid_argument("oracle_dim_restricted: need generators");
    if (n < 1) throw std::invalid_argument("oracle_dim_restricted: n must be >= 1");
    if (n > cap) throw std::invalid_argument("oracle_dim_restricted: degree exceeds the oracle cap");
    std::vector<int> class_of(static_cast<size_t>(generators), 0);
    long total = 0;
    for (long m = n; ; m /= p.value()) {
        // words of length m over `generators` letters, single class
        std::vector<int> budget{static_cast<int>(m)};
        total += count_words(class_of, budget, static_cast<int>(m));
        if (m % p.value() != 0) break;
    }
    return total;
}

OracleTable oracle_super_table_serial(const GradingSpec& spec, int max_total, int cap) {
    OracleTable table;
    for (const Multidegree& m : multidegrees_up_to(spec.arity(), max_total))
        table.emplace_back(m, oracle_dim_super(spec, m, cap));
    return table;
}

OracleTable oracle_super_table(const GradingSpec& spec, int max_total, int cap) {
    const std::vector<Multidegree> degrees = multidegrees_up_to(spec.arity(), max_total);
    OracleTable table(degrees.size());
    std::exception_ptr error;
    #pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(degrees.size()); ++i) {
        try {
            const Multidegree& m = degrees[static_cast<size_t>(i)];
            table[static_cast<size_t>(i)] = {m, oracle_dim_super(spec, m, cap)};
        } catch (...) {
            #pragma omp critical(colorwitt_oracle_err)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return table;
}

}  // namespace colorwitt
