#pragma once

// Irreducible modules W(λ,γ)[L] of the extended algebra: untwisted condition,
// the order of σ_W, lattice shifts, classification and extended fusion.

#include "ack/extension.hpp"
#include "ack/fusion.hpp"

#include <compare>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace ack {

/// W(λ,γ) = L(k,λ) ⊗ M_{h'}(1,γ); γ in coordinates of the α' basis.
struct ModuleLabel {
    DominantWeight lambda;
    std::vector<Rational> gamma;

    auto operator<=>(const ModuleLabel& o) const
    {
        // γ first (lexicographic), then λ
        if (auto c = gamma.size() <=> o.gamma.size(); c != 0) return c;
        for (std::size_t i = 0; i < gamma.size(); ++i) {
            int c = cmp(gamma[i], o.gamma[i]);
            if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return lambda <=> o.lambda;
    }
    bool operator==(const ModuleLabel& o) const { return lambda == o.lambda && gamma == o.gamma; }

    std::string to_string() const;
};

/// Canonical representative of W(λ,γ)[L]: the orbit member with every γ
/// coordinate in [0,1).
struct ExtModuleLabel {
    ModuleLabel rep;

    auto operator<=>(const ExtModuleLabel&) const = default;
};

struct TwistInfo {
    Integer order;  // order of σ_W; always finite for rational γ
    bool untwisted = true;
};

/// Integer-label convention of the rank-one constructions: γ = j·scale·α'.
ModuleLabel module_from_integer_label(const ExtensionData& ext, const DominantWeight& lambda,
                                      const std::vector<Rational>& j);
std::vector<Rational> integer_label_of(const ExtensionData& ext, const ModuleLabel& label);

/// λ(h''_i) + ⟨γ,α'_i⟩ for each generator.
std::vector<Rational> generator_pairings(const ExtensionData& ext, const ModuleLabel& label);

bool untwisted_condition(const ExtensionData& ext, const ModuleLabel& label);
TwistInfo sigma_order(const ExtensionData& ext, const ModuleLabel& label);

/// W(λ,γ)^(α) for α = Σ m_i α_i.
ModuleLabel shift_module(const ExtensionData& ext, const ModuleLabel& label, std::span<const long> m);
ExtModuleLabel canonical(const ExtensionData& ext, const ModuleLabel& label);

/// All inequivalent irreducible V[L]-modules, sorted by canonical order.
std::vector<ExtModuleLabel> classify(const ExtensionData& ext);

/// Lowest L(0)-weight of W(λ,γ)[L] (minimum over the lattice orbit).
Rational module_lowest_weight(const ExtensionData& ext, const ModuleLabel& label);

using ExtFusionVector = std::map<ExtModuleLabel, Integer>;

/// Closed-form extended fusion for A_1: Σ_i [W(i, j1+j2)[L]] over the sl(2)
/// fusion range, folding j1+j2 >= k through W(i,j)[L] = W(k-i, j-k)[L].
ExtFusionVector ext_fusion_sl2(const ExtensionData& ext, const ExtModuleLabel& a, const ExtModuleLabel& b);

/// Fusion rules of the affine factor L(k,·).
using BaseFusion = std::function<FusionVector(const DominantWeight&, const DominantWeight&)>;
BaseFusion sl2_base_fusion(int level);

/// Σ_{α∈L} N_{W1 W2}^{W3^(α)} for V = L(k,0) ⊗ M_{h'}(1,0).
Integer fusion_lift(const ExtensionData& ext, const BaseFusion& base, const ModuleLabel& w1, const ModuleLabel& w2,
                    const ModuleLabel& w3);

struct QuotientTable {
    std::vector<ExtModuleLabel> classes;
    /// products[{a,b}] for class indices a, b
    std::map<std::pair<std::size_t, std::size_t>, ExtFusionVector> products;
};

/// Structure constants of A(V) on untwisted classes modulo [W] - [W^(α)].
/// Throws ValidationError if the base table leaves the untwisted classes.
QuotientTable verlinde_quotient(const ExtensionData& ext, const BaseFusion& base);

}  // namespace ack
