#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace colorwitt {

// Element of a finite abelian group presented as a product of cyclic groups;
// one residue per cyclic factor, reduced modulo that factor's order.
struct GroupElement {
    std::vector<int> residues;

    GroupElement() = default;
    explicit GroupElement(std::vector<int> r) : residues(std::move(r)) {}

    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.residues == b.residues;
    }
    friend bool operator!=(const GroupElement& a, const GroupElement& b) {
        return a.residues != b.residues;
    }
    friend bool operator<(const GroupElement& a, const GroupElement& b) {
        return a.residues < b.residues;
    }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < residues.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(residues[i]);
        }
        return s + ")";
    }
};

// Finite abelian group Z_{m_1} x ... x Z_{m_k} together with a parity
// partition G = G_+ u G_-. The map sending G_+ to +1 and G_- to -1 must be a
// group homomorphism; this is validated exhaustively at construction (the
// groups here are tiny).
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup(std::vector<int> moduli, const std::vector<GroupElement>& negatives);

    int rank() const { return static_cast<int>(moduli_.size()); }
    const std::vector<int>& moduli() const { return moduli_; }
    long order() const;

    GroupElement identity() const { return GroupElement(std::vector<int>(moduli_.size(), 0)); }
    GroupElement reduce(const GroupElement& g) const;
    GroupElement compose(const GroupElement& a, const GroupElement& b) const;
    GroupElement power(const GroupElement& g, long m) const;

    bool contains(const GroupElement& g) const;
    bool is_negative(const GroupElement& g) const { return negatives_.count(reduce(g)) > 0; }
    int parity_sign(const GroupElement& g) const { return is_negative(g) ? -1 : 1; }

    // all elements, sorted
    std::vector<GroupElement> elements() const;

    friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
        return a.moduli_ == b.moduli_ && a.negatives_ == b.negatives_;
    }

private:
    std::vector<int> moduli_;
    std::set<GroupElement> negatives_;
};

}  // namespace colorwitt
