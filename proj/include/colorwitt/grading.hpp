#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "colorwitt/group.hpp"
#include "colorwitt/multidegree.hpp"

namespace colorwitt {

enum class Parity { even, odd };

// One class of free generators: s indistinguishable-in-weight generators
// sharing a parity and, when a grading group is attached, a group label.
struct GeneratorClass {
    int count = 1;
    Parity parity = Parity::even;
    std::optional<GroupElement> label;
};

// Generator classes plus the global truncation order. Every series in this
// library carries one of these; class i contributes the variable t_i of
// weight e_i in N_0^r.
class GradingSpec {
public:
    GradingSpec(std::vector<GeneratorClass> classes, int max_degree)
        : GradingSpec(std::move(classes), max_degree, std::nullopt) {}

    GradingSpec(std::vector<GeneratorClass> classes, int max_degree,
                std::optional<FiniteAbelianGroup> group)
        : classes_(std::move(classes)), max_degree_(max_degree), group_(std::move(group)) {
        if (classes_.empty()) throw std::invalid_argument("GradingSpec: needs at least one class");
        if (max_degree_ < 1) throw std::invalid_argument("GradingSpec: truncation must be >= 1");
        for (const auto& c : classes_) {
            if (c.count < 1) throw std::invalid_argument("GradingSpec: class multiplicity must be >= 1");
            if (c.label.has_value() != group_.has_value())
                throw std::invalid_argument("GradingSpec: group labels present iff a group is attached");
            if (group_) {
                if (!group_->contains(group_->reduce(*c.label)))
                    throw std::invalid_argument("GradingSpec: label outside the group");
                Parity derived = group_->is_negative(*c.label) ? Parity::odd : Parity::even;
                if (derived != c.parity)
                    throw std::invalid_argument(
                        "GradingSpec: class parity disagrees with the group parity of its label");
            }
        }
    }

    int arity() const { return static_cast<int>(classes_.size()); }
    int truncation() const { return max_degree_; }
    const GeneratorClass& generator_class(int i) const { return classes_[static_cast<size_t>(i)]; }
    const std::vector<GeneratorClass>& classes() const { return classes_; }

    bool has_group() const { return group_.has_value(); }
    const FiniteAbelianGroup& group() const {
        if (!group_) throw std::invalid_argument("GradingSpec: no group attached");
        return *group_;
    }

    bool all_even() const {
        for (const auto& c : classes_)
            if (c.parity == Parity::odd) return false;
        return true;
    }

    int even_multiplicity() const {
        int k = 0;
        for (const auto& c : classes_)
            if (c.parity == Parity::even) k += c.count;
        return k;
    }
    int odd_multiplicity() const {
        int l = 0;
        for (const auto& c : classes_)
            if (c.parity == Parity::odd) l += c.count;
        return l;
    }
    int total_multiplicity() const { return even_multiplicity() + odd_multiplicity(); }

    // |alpha|_-: the weight carried by odd classes.
    int odd_weight(const Multidegree& alpha) const {
        check_arity(alpha);
        int w = 0;
        for (int i = 0; i < arity(); ++i)
            if (classes_[static_cast<size_t>(i)].parity == Parity::odd) w += alpha[i];
        return w;
    }

    // The labeling homomorphism: multidegree alpha |-> prod g_i^(alpha_i).
    GroupElement label_of(const Multidegree& alpha) const {
        check_arity(alpha);
        const auto& g = group();
        GroupElement out = g.identity();
        for (int i = 0; i < arity(); ++i)
            out = g.compose(out, g.power(*classes_[static_cast<size_t>(i)].label, alpha[i]));
        return out;
    }

    GradingSpec with_truncation(int n) const {
        return GradingSpec(classes_, n, group_);
    }

    // Series operations only require matching arity, parities, and truncation.
    bool same_shape(const GradingSpec& o) const {
        if (arity() != o.arity() || max_degree_ != o.max_degree_) return false;
        for (int i = 0; i < arity(); ++i)
            if (classes_[static_cast<size_t>(i)].parity !=
                o.classes_[static_cast<size_t>(i)].parity)
                return false;
        if (group_.has_value() != o.group_.has_value()) return false;
        if (group_ && !(*group_ == *o.group_)) return false;
        return true;
    }

    void check_arity(const Multidegree& alpha) const {
        if (alpha.size() != arity())
            throw std::invalid_argument("multidegree arity does not match the grading spec");
    }

private:
    std::vector<GeneratorClass> classes_;
    int max_degree_;
    std::optional<FiniteAbelianGroup> group_;
};

}  // namespace colorwitt
