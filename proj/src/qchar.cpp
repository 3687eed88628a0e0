#include "ack/qchar.hpp"

#include <algorithm>
#include <set>

namespace ack {

namespace {

// Dense Π_{n>=1}(1-q^n)^{-dim} through q^len-1.
std::vector<Integer> inverse_euler_power(int dim, long len)
{
    std::vector<Integer> a(std::max(len, 0L));
    if (len <= 0) return a;
    a[0] = 1;
    for (long n = 1; n < len; ++n)
        for (int d = 0; d < dim; ++d)
            for (long t = n; t < len; ++t) a[t] += a[t - n];
    return a;
}

long integer_cutoff(const Rational& order)
{
    // number of integer exponents 0..floor(order)
    return order < 0 ? 0 : to_long(floor_of(order)) + 1;
}

}  // namespace

std::vector<Integer> partition_counts(long n)
{
    if (n < 0) throw ValidationError("partition count needs n >= 0");
    return inverse_euler_power(1, n + 1);
}

CharSeries boson_char(int dim, const Rational& norm, const Rational& order)
{
    if (dim < 1) throw ValidationError("Heisenberg dimension must be >= 1");
    if (norm < 0) throw ValidationError("norm must be nonnegative");
    const Rational lead = norm / 2;
    CharSeries out(order);
    auto a = inverse_euler_power(dim, integer_cutoff(order - lead));
    for (std::size_t t = 0; t < a.size(); ++t) out.add_term(lead + Rational(static_cast<long>(t)), a[t]);
    return out;
}

CharSeries affine_sl2_char(int level, int i, const Rational& order)
{
    if (level < 1) throw ValidationError("level must be a positive integer");
    if (i < 0 || i > level) throw ValidationError("sl(2) label out of range [0, level]");
    if (level == 1) {
        // L(1,i) = V_{Zα + iα/2}, ⟨α,α⟩ = 2, lowest weight i/4
        auto lat = IntegralLattice::from_gram(Matrix::from_rows({{2}}));
        const Rational h = frac(i, 4);
        auto theta = theta_coset(lat, CosetLabel{{frac(i, 2)}}, order + h);
        CharSeries shifted(order);
        for (const auto& [e, c] : theta.terms()) shifted.add_term(e - h, c);
        return shifted * boson_char(1, 0, order);
    }
    // Specialized Weyl–Kac: Σ_m (i+1+2(k+2)m) q^{(k+2)m²+(i+1)m} / φ(q)^3.
    const long len = integer_cutoff(order);
    std::vector<Integer> num(len);
    const long p = level + 2;
    for (long m = 0;; ++m) {
        bool any = false;
        for (long s : {m, -m - 1}) {
            long e = p * s * s + (i + 1) * s;
            if (e < len) {
                num[e] += i + 1 + 2 * p * s;
                any = true;
            }
        }
        if (!any) break;
    }
    auto inv = inverse_euler_power(3, len);
    CharSeries out(order);
    for (long t = 0; t < len; ++t) {
        Integer c = 0;
        for (long s = 0; s <= t; ++s) c += num[s] * inv[t - s];
        if (c < 0) throw std::logic_error("negative graded dimension in sl(2) character");
        out.add_term(Rational(t), c);
    }
    return out;
}

CharSeries affine_level1_char(const RootSystem& rs, const DominantWeight& lambda, const Rational& order)
{
    if (!rs.type.simply_laced()) throw ValidationError("level-one lattice route needs a simply-laced type");
    const Rational h = conformal_weight(rs, 1, lambda);
    const int n = rs.rank();
    std::vector<Rational> shift(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) shift[j] += lambda.labels[i] * rs.weight_coeffs(i, j);
    auto lat = IntegralLattice::from_gram(rs.root_form);
    auto theta = theta_coset(lat, CosetLabel{shift}, order + h);
    CharSeries shifted(order);
    for (const auto& [e, c] : theta.terms()) shifted.add_term(e - h, c);
    return shifted * boson_char(n, 0, order);
}

CharSeries affine_char(const RootSystem& rs, int level, const DominantWeight& lambda, const Rational& order)
{
    if (rs.type.family == Family::A && rs.rank() == 1) return affine_sl2_char(level, lambda.labels.at(0), order);
    if (level == 1 && rs.type.simply_laced()) return affine_level1_char(rs, lambda, order);
    throw ValidationError("characters of " + rs.type.name() + " at level " + std::to_string(level) +
                          " are not supported");
}

CharSeries ext_module_char(const ExtensionData& ext, const ExtModuleLabel& label, const Rational& order)
{
    if (ext.rs.type.family != Family::A || ext.rs.rank() != 1)
        throw ValidationError("theta decomposition is only available for A_1");
    const auto& w = label.rep;
    if (!untwisted_condition(ext, w)) throw ValidationError(w.to_string() + " is twisted");
    const int k = ext.level;
    const int i = w.lambda.labels[0];
    // V_{2L'+x} has character Θ_{x+2Z}/φ with ½⟨x,x⟩ = (k/4)x²; in the
    // coordinate y = x/2 the lattice 2Zα' has Gram 2k.
    auto lat = IntegralLattice::from_gram(Matrix::from_rows({{2 * k}}));
    auto piece = [&](int label_i, const Rational& x) {
        const Rational h = conformal_weight(ext.rs, k, DominantWeight{{label_i}});
        auto affine = affine_sl2_char(k, label_i, order).shifted(h);
        auto theta = theta_coset(lat, CosetLabel{{x / 2}}, order);
        return affine * theta * boson_char(1, 0, order);
    };
    return piece(i, w.gamma[0]) + piece(k - i, w.gamma[0] + 1);
}

CharSeries component_sum_char(const ExtensionData& ext, const ModuleLabel& label, const Rational& order)
{
    if (ext.heis_dim() == 0)
        throw ValidationError("component sums for " + ext.rs.type.name() + " (h' = 0) are not supported");
    if (!untwisted_condition(ext, label)) throw ValidationError(label.to_string() + " is twisted");
    CharSeries out(order);
    // Affine parts have nonnegative weight, so the Heisenberg norm bounds m.
    auto box = enumeration_box(ext.heis_gram, label.gamma, order);
    std::vector<long> m = box.lo;
    const std::size_t d = m.size();
    for (std::size_t i = 0; i < d; ++i)
        if (box.lo[i] > box.hi[i]) return out;
    while (true) {
        auto w = shift_module(ext, label, m);
        const Rational norm = heis_norm(ext, w.gamma);
        if (norm / 2 <= order) {
            const Rational h = conformal_weight(ext.rs, ext.level, w.lambda);
            auto affine = affine_char(ext.rs, ext.level, w.lambda, order).shifted(h);
            out = out + affine * boson_char(ext.heis_dim(), norm, order);
        }
        std::size_t i = d;
        while (i > 0 && m[i - 1] == box.hi[i - 1]) {
            m[i - 1] = box.lo[i - 1];
            --i;
        }
        if (i == 0) break;
        ++m[i - 1];
    }
    return out;
}

Integer weight_one_dim(const ExtensionData& ext)
{
    Integer dim = lie_algebra_dim(ext.rs) + ext.heis_dim();
    if (ext.heis_dim() == 0) {
        // V[L] = ⊕ over the simple currents in the image of L.
        std::set<int> seen{0};
        const int order = ext.currents.center().element_order(ext.current_of(std::vector<long>{1}));
        for (long m = 1; m < order; ++m) {
            std::vector<long> mv{m};
            if (!seen.insert(ext.current_of(mv)).second) continue;
            if (component_lowest_weight(ext, mv) == 1) dim += weyl_dim(ext.rs, component_affine_weight(ext, mv));
        }
        return dim;
    }
    const std::size_t d = ext.heis_dim();
    auto box = enumeration_box(ext.heis_gram, std::vector<Rational>(d), 1);
    std::vector<long> m = box.lo;
    while (true) {
        bool zero = std::all_of(m.begin(), m.end(), [](long x) { return x == 0; });
        if (!zero && component_lowest_weight(ext, m) == 1) dim += weyl_dim(ext.rs, component_affine_weight(ext, m));
        std::size_t i = d;
        while (i > 0 && m[i - 1] == box.hi[i - 1]) {
            m[i - 1] = box.lo[i - 1];
            --i;
        }
        if (i == 0) break;
        ++m[i - 1];
    }
    return dim;
}

}  // namespace ack
