#include "colorwitt/group.hpp"

#include <algorithm>

namespace colorwitt {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> moduli,
                                       const std::vector<GroupElement>& negatives)
    : moduli_(std::move(moduli)) {
    if (moduli_.empty()) throw std::invalid_argument("group: needs at least one cyclic factor");
    for (int m : moduli_)
        if (m < 2) throw std::invalid_argument("group: cyclic factor orders must be >= 2");
    for (const auto& g : negatives) {
        if (static_cast<int>(g.residues.size()) != rank())
            throw std::invalid_argument("group: negative element has wrong rank");
        negatives_.insert(reduce(g));
    }
    // The parity map must be a homomorphism: nu(ab) = nu(a)nu(b) for all a, b.
    const auto elems = elements();
    for (const auto& a : elems)
        for (const auto& b : elems)
            if (parity_sign(compose(a, b)) != parity_sign(a) * parity_sign(b))
                throw std::invalid_argument(
                    "group: parity partition is not a homomorphism (fails at " + a.str() +
                    " * " + b.str() + ")");
}

long FiniteAbelianGroup::order() const {
    long n = 1;
    for (int m : moduli_) n *= m;
    return n;
}

GroupElement FiniteAbelianGroup::reduce(const GroupElement& g) const {
    if (static_cast<int>(g.residues.size()) != rank())
        throw std::invalid_argument("group: element has wrong rank");
    GroupElement out = g;
    for (size_t i = 0; i < moduli_.size(); ++i) {
        int m = moduli_[i];
        out.residues[i] = ((out.residues[i] % m) + m) % m;
    }
    return out;
}

GroupElement FiniteAbelianGroup::compose(const GroupElement& a, const GroupElement& b) const {
    GroupElement out = reduce(a);
    GroupElement bb = reduce(b);
    for (size_t i = 0; i < moduli_.size(); ++i)
        out.residues[i] = (out.residues[i] + bb.residues[i]) % moduli_[i];
    return out;
}

GroupElement FiniteAbelianGroup::power(const GroupElement& g, long m) const {
    GroupElement out = reduce(g);
    for (size_t i = 0; i < moduli_.size(); ++i) {
        long v = (static_cast<long>(out.residues[i]) * m) % moduli_[i];
        out.residues[i] = static_cast<int>((v + moduli_[i]) % moduli_[i]);
    }
    return out;
}

bool FiniteAbelianGroup::contains(const GroupElement& g) const {
    if (static_cast<int>(g.residues.size()) != rank()) return false;
    for (size_t i = 0; i < moduli_.size(); ++i)
        if (g.residues[i] < 0 || g.residues[i] >= moduli_[i]) return false;
    return true;
}

std::vector<GroupElement> FiniteAbelianGroup::elements() const {
    std::vector<GroupElement> out;
    GroupElement cur = identity();
    while (true) {
        out.push_back(cur);
        int i = rank() - 1;
        while (i >= 0) {
            if (++cur.residues[static_cast<size_t>(i)] < moduli_[static_cast<size_t>(i)]) break;
            cur.residues[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace colorwitt
