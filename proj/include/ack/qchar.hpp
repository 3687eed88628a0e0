#pragma once

// Truncated graded characters. Series are graded by L(0) unless a function
// says otherwise; truncation orders are exact rationals.

#include "ack/extension.hpp"
#include "ack/modrep.hpp"
#include "ack/series.hpp"

#include <vector>

namespace ack {

/// p(0), ..., p(n).
std::vector<Integer> partition_counts(long n);

/// Character of M(1,γ) on a dim-dimensional Heisenberg space with ⟨γ,γ⟩ = norm:
/// q^{norm/2}·Π_{n>=1}(1-q^n)^{-dim}.
CharSeries boson_char(int dim, const Rational& norm, const Rational& order);

/// Graded dimension of L(k,i) for sl(2), graded by L(0) minus the lowest weight.
CharSeries affine_sl2_char(int level, int i, const Rational& order);

/// Level-one character of a simply-laced type, Θ_{λ+Q}/φ^rank, graded by
/// L(0) minus the lowest weight.
CharSeries affine_level1_char(const RootSystem& rs, const DominantWeight& lambda, const Rational& order);

/// Dispatches to the two routes above; other (type, level) pairs are refused.
CharSeries affine_char(const RootSystem& rs, int level, const DominantWeight& lambda, const Rational& order);

/// W(i,γ)[L] ≅ L(k,i)⊗V_{2L'+γ} ⊕ L(k,k-i)⊗V_{2L'+γ+α'} for A_1, graded by L(0).
CharSeries ext_module_char(const ExtensionData& ext, const ExtModuleLabel& label, const Rational& order);

/// Σ_{α∈L} char W(λ,γ)^(α), summed over the components directly, graded by L(0).
CharSeries component_sum_char(const ExtensionData& ext, const ModuleLabel& label, const Rational& order);

/// dim of the weight-one subspace of V[L].
Integer weight_one_dim(const ExtensionData& ext);

}  // namespace ack
