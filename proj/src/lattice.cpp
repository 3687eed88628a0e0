#include "ack/lattice.hpp"

#include <algorithm>

namespace ack {

IntegralLattice IntegralLattice::make(std::vector<std::string> names, Matrix gram)
{
    if (!gram.square() || gram.rows() != names.size() || names.empty())
        throw ValidationError("lattice Gram matrix must be square and match the basis");
    if (!gram.symmetric()) throw ValidationError("lattice Gram matrix must be symmetric");
    return IntegralLattice{std::move(names), std::move(gram)};
}

IntegralLattice IntegralLattice::from_gram(Matrix gram)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < gram.rows(); ++i) names.push_back("a" + std::to_string(i + 1));
    return make(std::move(names), std::move(gram));
}

ValidationReport validate(const IntegralLattice& lat)
{
    ValidationReport r;
    const std::size_t d = lat.rank();
    r.integral = true;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (!is_integer(lat.gram(i, j))) r.integral = false;
    r.positive_definite = lat.gram.positive_definite();
    if (!r.integral) return r;

    // B(v,v) ≡ Σ v_i B_ii (mod 2), so L^e is the kernel of v ↦ Σ v_i B_ii mod 2.
    int pivot = -1;
    for (std::size_t i = 0; i < d; ++i)
        if (lat.gram(i, i).get_num() % 2 != 0) {
            pivot = static_cast<int>(i);
            break;
        }
    r.even = pivot < 0;
    r.even_sublattice_index = r.even ? 1 : 2;
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<long> v(d, 0);
        if (pivot < 0 || static_cast<int>(j) == pivot) {
            v[j] = pivot < 0 ? 1 : 2;
        } else {
            v[j] = 1;
            if (lat.gram(j, j).get_num() % 2 != 0) v[pivot] = -1;
        }
        r.even_sublattice_basis.push_back(v);
    }
    return r;
}

Cocycle::Cocycle(const IntegralLattice& lat) : d_(lat.rank()), odd_(d_ * d_, 0)
{
    for (std::size_t i = 0; i < d_; ++i)
        if (!is_integer(lat.gram(i, i))) throw ValidationError("epsilon requires an integral lattice");
    for (std::size_t i = 0; i < d_; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            Rational c = lat.gram(i, j) + lat.gram(i, i) * lat.gram(j, j);
            if (!is_integer(c)) throw ValidationError("epsilon requires an integral lattice");
            odd_[i * d_ + j] = mpz_odd_p(c.get_num_mpz_t()) ? 1 : 0;
        }
}

int Cocycle::operator()(std::span<const long> a, std::span<const long> b) const
{
    if (a.size() != d_ || b.size() != d_) throw std::invalid_argument("epsilon: dimension mismatch");
    unsigned long parity = 0;
    for (std::size_t i = 1; i < d_; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (odd_[i * d_ + j]) parity ^= static_cast<unsigned long>(a[i] & 1) & static_cast<unsigned long>(b[j] & 1);
    return parity ? -1 : 1;
}

int epsilon(const IntegralLattice& lat, std::span<const long> a, std::span<const long> b)
{
    return Cocycle(lat)(a, b);
}

TwistedPhase::TwistedPhase(Rational exponent)
    : std::domain_error("C phase exponent " + to_string(exponent) + " is not an integer (twisted sector)"),
      exponent_(std::move(exponent))
{
}

namespace {

std::vector<Rational> as_rational(const std::vector<long>& v) { return {v.begin(), v.end()}; }

void check_pair(const IntegralLattice& lat, const LatticePair& p)
{
    if (p.lattice.size() != lat.rank() || p.dual.size() != lat.rank())
        throw std::invalid_argument("eta_c: dimension mismatch");
}

}  // namespace

Rational c_exponent(const IntegralLattice& lat, const LatticePair& p1, const LatticePair& p2)
{
    check_pair(lat, p1);
    check_pair(lat, p2);
    return quadratic(lat.gram, as_rational(p1.lattice), p2.dual) - quadratic(lat.gram, as_rational(p2.lattice), p1.dual);
}

EtaC eta_c(const IntegralLattice& lat, const LatticePair& p1, const LatticePair& p2)
{
    check_pair(lat, p1);
    check_pair(lat, p2);
    auto a1 = as_rational(p1.lattice), a2 = as_rational(p2.lattice);
    Rational eta = -quadratic(lat.gram, a1, a2) - quadratic(lat.gram, a1, p2.dual) - quadratic(lat.gram, a2, p1.dual);
    Rational x = c_exponent(lat, p1, p2);
    if (!is_integer(x)) throw TwistedPhase(x);
    return {eta, x.get_num() % 2 == 0 ? 1 : -1};
}

bool dual_membership(const IntegralLattice& lat, const std::vector<Rational>& v)
{
    auto bv = lat.gram.apply(v);
    return std::all_of(bv.begin(), bv.end(), [](const Rational& x) { return is_integer(x); });
}

kernels::Box enumeration_box(const Matrix& gram, const std::vector<Rational>& shift, const Rational& max_exponent)
{
    if (!gram.positive_definite()) throw ValidationError("theta enumeration needs a positive-definite lattice");
    const std::size_t d = shift.size();
    kernels::Box box{std::vector<long>(d), std::vector<long>(d)};
    if (max_exponent < 0) {
        // empty box
        for (std::size_t i = 0; i < d; ++i) {
            box.lo[i] = 1;
            box.hi[i] = 0;
        }
        return box;
    }
    Matrix inv = gram.inverse();
    for (std::size_t i = 0; i < d; ++i) {
        // |c_i + m_i| <= sqrt((B^{-1})_ii · 2N)
        Integer t = ceil_sqrt(inv(i, i) * 2 * max_exponent);
        box.lo[i] = to_long(ceil_of(Rational(-t) - shift[i]));
        box.hi[i] = to_long(floor_of(Rational(t) - shift[i]));
    }
    return box;
}

namespace {

template <class Kernel>
CharSeries theta_with(const IntegralLattice& lat, const CosetLabel& coset, const Rational& order, Kernel kernel)
{
    if (coset.shift.size() != lat.rank()) throw std::invalid_argument("theta_coset: coset dimension mismatch");
    CharSeries out(order);
    auto box = enumeration_box(lat.gram, coset.shift, order);
    if (order < 0) return out;
    for (const auto& [e, c] : kernel(lat.gram, coset.shift, box, order)) out.add_term(e, c);
    return out;
}

}  // namespace

CharSeries theta_coset(const IntegralLattice& lat, const CosetLabel& coset, const Rational& order)
{
    return theta_with(lat, coset, order, kernels::theta_parallel);
}

CharSeries theta_coset_serial(const IntegralLattice& lat, const CosetLabel& coset, const Rational& order)
{
    return theta_with(lat, coset, order, kernels::theta_serial);
}

}  // namespace ack
