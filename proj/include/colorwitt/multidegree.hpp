#pragma once

#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace colorwitt {

// Exponent vector in N_0^r, one entry per generator class. Ordered by total
// degree first, then lexicographically, so maps keyed by Multidegree iterate
// in the canonical output order.
struct Multidegree {
    std::vector<int> exp;

    Multidegree() = default;
    explicit Multidegree(std::vector<int> e) : exp(std::move(e)) {}

    static Multidegree zero(int r) { return Multidegree(std::vector<int>(r, 0)); }
    static Multidegree unit(int r, int i) {
        Multidegree m = zero(r);
        m.exp[static_cast<size_t>(i)] = 1;
        return m;
    }

    int size() const { return static_cast<int>(exp.size()); }
    int operator[](int i) const { return exp[static_cast<size_t>(i)]; }

    int total() const { return std::accumulate(exp.begin(), exp.end(), 0); }
    bool is_zero() const { return total() == 0; }

    // gcd over nonzero components; 0 for the zero multidegree.
    int gcd_nonzero() const {
        int g = 0;
        for (int a : exp) g = std::gcd(g, a);
        return g;
    }

    bool divisible_by(int n) const {
        for (int a : exp)
            if (a % n != 0) return false;
        return true;
    }

    Multidegree divided(int n) const {
        Multidegree m = *this;
        for (int& a : m.exp) a /= n;
        return m;
    }

    Multidegree scaled(int m) const {
        Multidegree out = *this;
        for (int& a : out.exp) a *= m;
        return out;
    }

    friend Multidegree operator+(const Multidegree& a, const Multidegree& b) {
        Multidegree s = a;
        for (size_t i = 0; i < s.exp.size(); ++i) s.exp[i] += b.exp[i];
        return s;
    }

    friend bool operator==(const Multidegree& a, const Multidegree& b) { return a.exp == b.exp; }
    friend bool operator!=(const Multidegree& a, const Multidegree& b) { return a.exp != b.exp; }

    // graded lexicographic
    friend bool operator<(const Multidegree& a, const Multidegree& b) {
        int ta = a.total(), tb = b.total();
        if (ta != tb) return ta < tb;
        return a.exp < b.exp;
    }
};

// Visit every multidegree of arity r with the exact total given, in
// lexicographic order of the exponent vector.
inline void for_each_composition(int r, int total, const std::function<void(const Multidegree&)>& fn) {
    if (r < 1) throw std::invalid_argument("for_each_composition: arity must be >= 1");
    std::vector<int> e(static_cast<size_t>(r), 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == r - 1) {
            e[static_cast<size_t>(pos)] = remaining;
            fn(Multidegree(e));
            return;
        }
        for (int a = 0; a <= remaining; ++a) {
            e[static_cast<size_t>(pos)] = a;
            self(self, pos + 1, remaining - a);
        }
    };
    rec(rec, 0, total);
}

// All multidegrees with 1 <= total <= max_total, graded-lex order.
inline std::vector<Multidegree> multidegrees_up_to(int r, int max_total) {
    std::vector<Multidegree> out;
    for (int n = 1; n <= max_total; ++n)
        for_each_composition(r, n, [&](const Multidegree& m) { out.push_back(m); });
    return out;
}

}  // namespace colorwitt
