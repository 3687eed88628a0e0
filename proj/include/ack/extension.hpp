#pragma once

// Construction data for the simple-current extension V[L] of
// V = L_g(k,0) ⊗ M_{h'}(1,0): generators α_i = h''_i + α'_i with h''_i a
// fundamental coweight and α'_i spanning the Heisenberg space h', and the
// integral lattice L with B(α_i,α_j) = k⟨h''_i,h''_j⟩ + ⟨α'_i,α'_j⟩.

#include "ack/fusion.hpp"
#include "ack/lattice.hpp"
#include "ack/rootdata.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ack {

struct ExtensionData {
    RootSystem rs;
    int level = 0;
    SimpleCurrentGroup currents;
    std::vector<int> generator_nodes;            // h''_i = h^(generator_nodes[i])
    std::vector<CoweightVector> coweight_parts;
    Matrix heis_gram;                            // ⟨α'_i,α'_j⟩; 0×0 when h' = 0
    IntegralLattice lattice;
    /// γ = j·gamma_scale·α' for the integer module label j of the rank-one
    /// constructions; 1 (raw coordinates) when there is no such convention.
    Rational gamma_scale = 1;

    int heis_dim() const { return static_cast<int>(heis_gram.rows()); }
    int generator_count() const { return static_cast<int>(generator_nodes.size()); }
    /// Σ m_i h''_i.
    CoweightVector coweight_of(std::span<const long> m) const;
    /// Simple-current element attached to Σ m_i h''_i + Q∨.
    int current_of(std::span<const long> m) const;
};

/// Built-in constructions for A_n, B_n, C_n, D_n, E6, E7. The optional
/// override replaces the default Heisenberg Gram ⟨α'_i,α'_j⟩.
ExtensionData build_extension(const RootSystem& rs, int level, std::optional<Matrix> heis_override = std::nullopt);

struct HypothesisReport {
    enum class Status { pass, fail, skipped };
    struct Check {
        std::string name;
        Status status;
        std::string detail;
    };
    std::vector<Check> checks;

    bool ok() const;
    /// Names of failed checks, comma separated.
    std::string failures() const;
};

const char* status_name(HypothesisReport::Status s);

HypothesisReport check_hypotheses(const ExtensionData& ext);

struct ParityReport {
    bool is_super = false;
    int even_sublattice_index = 1;
    std::vector<std::vector<long>> even_sublattice_basis;
};

ParityReport parity(const ExtensionData& ext);

/// Lowest L(0)-weight of the component V^(α), α = Σ m_i α_i.
Rational component_lowest_weight(const ExtensionData& ext, std::span<const long> m);
/// Highest weight of the affine factor L(k,μ) of V^(α).
DominantWeight component_affine_weight(const ExtensionData& ext, std::span<const long> m);

struct GeneratorSpec {
    struct Space {
        std::vector<long> m;          // α = Σ m_i α_i
        DominantWeight lowest_space;  // L(μ) ⊗ e^{α'}
        Rational weight;
        Integer dim;
        std::string label;
    };
    std::vector<Space> spaces;  // besides g + h'
    /// N with (z1 - z2)^N [Y(u,z1), Y(v,z2)]_± = 0 for u, v in opposite spaces.
    long locality_order = 0;
};

/// Throws ValidationError for D_n with n even (no generator list known).
GeneratorSpec generator_spec(const ExtensionData& ext);

/// Heisenberg norm ⟨Σ m_i α'_i, Σ m_i α'_i⟩.
Rational heis_norm(const ExtensionData& ext, std::span<const long> m);
Rational heis_norm(const ExtensionData& ext, const std::vector<Rational>& gamma);

}  // namespace ack
