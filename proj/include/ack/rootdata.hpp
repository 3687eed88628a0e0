#pragma once

// Root-system, weight and coweight data for simple Lie algebras of types A-G.
//
// Nodes are numbered 1..rank in the Kac convention (E6: chain 1-2-3-4-5 with
// node 6 on node 3; E7: chain 1..6 with 7 on 3; E8: chain 1..7 with 8 on 5).
// The invariant form is normalized so long roots have norm 2.

#include "ack/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace ack {

enum class Family { A, B, C, D, E, F, G };

struct LieType {
    Family family;
    int rank;

    /// Validates rank bounds: A>=1, B>=2, C>=2, D>=3, E in {6,7,8}, F4, G2.
    static LieType make(Family family, int rank);
    static LieType parse(char family, int rank);

    char letter() const;
    std::string name() const;  // "A2", "E7"
    bool simply_laced() const;

    bool operator==(const LieType&) const = default;
};

/// Coordinates in the simple-coroot basis {α_j∨}.
struct CoweightVector {
    std::vector<Rational> coords;

    CoweightVector operator+(const CoweightVector& o) const;
    CoweightVector operator-(const CoweightVector& o) const;
    CoweightVector operator*(const Rational& s) const;
    bool operator==(const CoweightVector&) const = default;
};

/// Dynkin labels λ(α_i∨).
struct DominantWeight {
    std::vector<int> labels;

    static DominantWeight zero(int rank) { return {std::vector<int>(rank, 0)}; }
    static DominantWeight fundamental(int rank, int node, int multiple = 1);
    int total() const;
    std::string to_string() const;  // "1,0,2"

    auto operator<=>(const DominantWeight&) const = default;
};

struct RootSystem {
    LieType type;
    std::vector<std::vector<int>> cartan;  // cartan[i][j] = α_j(α_i∨)
    std::vector<Rational> root_norms;      // ⟨α_i,α_i⟩
    Matrix root_form;                      // ⟨α_i,α_j⟩
    std::vector<int> marks;                // θ = Σ a_i α_i
    std::vector<int> comarks;              // θ∨ = Σ a_i∨ α_i∨
    int dual_coxeter = 0;
    Matrix weight_coeffs;                  // λ_i = Σ_j weight_coeffs(i,j) α_j
    std::vector<std::vector<int>> positive_roots;  // simple-root coordinates, sorted by height

    int rank() const { return type.rank; }
};

RootSystem build_root_system(LieType type);

/// h^(i) with α_j(h^(i)) = δ_ij; node is 1-based.
CoweightVector fundamental_coweight(const RootSystem& rs, int node);
CoweightVector simple_coroot(const RootSystem& rs, int node);

/// Normalized invariant form on coweights.
Rational bilinear(const RootSystem& rs, const CoweightVector& x, const CoweightVector& y);

/// α_j(h) for every simple root.
std::vector<Rational> root_pairings(const RootSystem& rs, const CoweightVector& h);
/// λ(h) for a weight given by Dynkin labels.
Rational weight_pairing(const RootSystem& rs, const DominantWeight& lambda, const CoweightVector& h);

bool in_coroot_lattice(const CoweightVector& h);
bool in_coweight_lattice(const RootSystem& rs, const CoweightVector& h);

/// Nodes with a_i = 1 (1-based, ascending).
std::vector<int> cominimal_indices(const RootSystem& rs);

/// ⟨λ,μ⟩ for weights given by Dynkin labels.
Rational weight_form(const RootSystem& rs, const DominantWeight& lambda, const DominantWeight& mu);
Rational weight_form(const RootSystem& rs, const std::vector<Rational>& lambda, const std::vector<Rational>& mu);

Integer weyl_dim(const RootSystem& rs, const DominantWeight& lambda);
int lie_algebra_dim(const RootSystem& rs);

/// A presentation of P∨/Q∨. Elements are named by node: 0 is the identity
/// class Q∨, i > 0 is h^(i) + Q∨ for a cominimal node i.
struct AbelianGroupPresentation {
    /// Σ coeffs[g]·h^(generators[g]) ≡ h^(result) mod Q∨ (result 0 means ≡ 0).
    struct Relation {
        std::vector<int> coeffs;
        int result;
    };

    std::vector<int> elements;             // identity first, then cominimal nodes
    std::vector<std::vector<int>> table;   // table[a][b] indexes `elements`
    std::vector<int> invariant_factors;    // {} trivial, {4}, {2,2}, ...
    std::vector<int> generators;
    std::vector<Relation> relations;

    int order() const { return static_cast<int>(elements.size()); }
    int index_of(int node) const;
    int multiply(int a, int b) const;    // node labels in and out
    int power(int a, long m) const;
    int inverse(int a) const;
    int element_order(int a) const;
    std::string structure() const;       // "Z/4", "Z/2 x Z/2", "trivial"
};

AbelianGroupPresentation center_group(const RootSystem& rs);

/// Class of h + Q∨ for h in P∨, as a node label (0 for Q∨).
int coweight_class(const RootSystem& rs, const CoweightVector& h);

}  // namespace ack
