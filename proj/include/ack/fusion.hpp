#pragma once

// Level-k integrable weights, conformal weights, simple currents and the
// sl(2) fusion rules.

#include "ack/rootdata.hpp"

#include <map>
#include <vector>

namespace ack {

struct LevelWeightSet {
    LieType type;
    int level = 0;
    std::vector<DominantWeight> weights;  // lexicographic

    bool contains(const DominantWeight& w) const;
};

/// ⟨λ,θ⟩ = Σ a_i∨ λ(α_i∨).
int theta_pairing(const RootSystem& rs, const DominantWeight& lambda);
bool in_level_set(const RootSystem& rs, int level, const DominantWeight& lambda);

LevelWeightSet level_weights(const RootSystem& rs, int level);

/// Lowest L(0)-weight ⟨λ,λ+2ρ⟩/(2(k+h∨)) of L(k,λ).
Rational conformal_weight(const RootSystem& rs, int level, const DominantWeight& lambda);

/// Multiplicities over classes [L(k,λ)].
using FusionVector = std::map<DominantWeight, Integer>;

/// [L(k,i)]·[L(k,j)] = Σ [L(k,r)], |i-j| <= r <= min(i+j, 2k-i-j), r ≡ i+j (mod 2).
FusionVector sl2_fusion(int level, int i, int j);

/// The simple currents [L(k,kλ_i)] (a_i = 1) and [L(k,0)], with group law
/// inherited from P∨/Q∨ and action on P_k through the affine Dynkin diagram
/// automorphism that sends node 0 to node i.
class SimpleCurrentGroup {
public:
    SimpleCurrentGroup(RootSystem rs, int level);

    const RootSystem& root_system() const { return rs_; }
    int level() const { return level_; }
    const AbelianGroupPresentation& center() const { return center_; }

    /// Node labels; 0 is the identity [L(k,0)].
    const std::vector<int>& elements() const { return center_.elements; }
    int multiply(int a, int b) const { return center_.multiply(a, b); }
    int power(int a, long m) const { return center_.power(a, m); }

    /// kλ_i for element i, 0 for the identity.
    DominantWeight current(int element) const;
    /// Permutation of the affine nodes 0..rank.
    const std::vector<int>& permutation(int element) const;
    /// The weight λ' with [L(k,λ)]·[current] = [L(k,λ')].
    DominantWeight act(int element, const DominantWeight& lambda) const;
    /// Element attached to h + Q∨ for h in P∨.
    int element_for(const CoweightVector& h) const;

private:
    RootSystem rs_;
    int level_;
    AbelianGroupPresentation center_;
    std::map<int, std::vector<int>> perms_;
};

SimpleCurrentGroup simple_current_group(const RootSystem& rs, int level);
DominantWeight current_action(const SimpleCurrentGroup& group, int element, const DominantWeight& lambda);

}  // namespace ack
