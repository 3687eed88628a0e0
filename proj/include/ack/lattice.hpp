#pragma once

// Integral lattices (L, B) given by an ordered basis and an exact Gram matrix.

#include "ack/kernels.hpp"
#include "ack/rational.hpp"
#include "ack/series.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ack {

struct IntegralLattice {
    std::vector<std::string> basis_names;
    Matrix gram;

    /// Requires a square symmetric Gram matching the basis names.
    static IntegralLattice make(std::vector<std::string> names, Matrix gram);
    /// Basis named a1..ad.
    static IntegralLattice from_gram(Matrix gram);

    std::size_t rank() const { return basis_names.size(); }
};

struct ValidationReport {
    bool integral = false;
    bool even = false;
    bool positive_definite = false;
    int even_sublattice_index = 1;
    /// Integer coordinates (in the lattice basis) of a basis of the even
    /// sublattice {v : B(v,v) ∈ 2Z}. Only filled for integral lattices.
    std::vector<std::vector<long>> even_sublattice_basis;
};

ValidationReport validate(const IntegralLattice& lat);

/// The {±1}-valued bimultiplicative cocycle determined on basis pairs by
/// ε(α_i,α_j) = (-1)^{B(α_i,α_j)+B(α_i,α_i)B(α_j,α_j)} for i >= j, 1 for i < j.
int epsilon(const IntegralLattice& lat, std::span<const long> a, std::span<const long> b);

/// ε with the basis parities precomputed; for repeated evaluation.
class Cocycle {
public:
    explicit Cocycle(const IntegralLattice& lat);
    int operator()(std::span<const long> a, std::span<const long> b) const;
    std::size_t rank() const { return d_; }

private:
    std::size_t d_;
    std::vector<unsigned char> odd_;  // odd_[i*d+j] for i > j
};

/// A pair (α, h) with α in L (integer coordinates) and h in Q⊗L.
struct LatticePair {
    std::vector<long> lattice;
    std::vector<Rational> dual;
};

struct EtaC {
    Rational eta;
    int c;  // ±1
};

/// The phase exp(πi·x) with x not an integer: the twisted regime.
class TwistedPhase : public std::domain_error {
public:
    explicit TwistedPhase(Rational exponent);
    const Rational& exponent() const { return exponent_; }

private:
    Rational exponent_;
};

/// η = -B(α1,α2) - B(α1,h2) - B(α2,h1); C = exp(πi(B(α1,h2) - B(α2,h1))).
/// Throws TwistedPhase when the C exponent is not an integer.
EtaC eta_c(const IntegralLattice& lat, const LatticePair& p1, const LatticePair& p2);
Rational c_exponent(const IntegralLattice& lat, const LatticePair& p1, const LatticePair& p2);

/// True iff B(v, α_i) ∈ Z for every basis vector.
bool dual_membership(const IntegralLattice& lat, const std::vector<Rational>& v);

struct CosetLabel {
    std::vector<Rational> shift;
};

/// Box containing every integer m with B(c+m, c+m)/2 <= max_exponent, from
/// |x_i|^2 <= (B^{-1})_ii·B(x,x). Requires a positive-definite Gram.
kernels::Box enumeration_box(const Matrix& gram, const std::vector<Rational>& shift, const Rational& max_exponent);

/// Σ_{β ∈ c+L} q^{B(β,β)/2} through exponent N.
CharSeries theta_coset(const IntegralLattice& lat, const CosetLabel& coset, const Rational& order);
CharSeries theta_coset_serial(const IntegralLattice& lat, const CosetLabel& coset, const Rational& order);

}  // namespace ack
