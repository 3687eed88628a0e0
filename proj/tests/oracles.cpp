#include "oracles.hpp"

#include <functional>
#include <stdexcept>

namespace oracle {

Integer freudenthal_dim(const ack::RootSystem& rs, const std::vector<int>& lambda)
{
    const int n = rs.rank();
    const ack::Matrix sinv = rs.root_form.inverse();
    // (x,y) = v_xᵀ S⁻¹ v_y with v_x[i] = (x,α_i) = x_i·|α_i|²/2
    auto form = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
        Rational s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                s += x[i] * rs.root_norms[i] / 2 * sinv(i, j) * y[j] * rs.root_norms[j] / 2;
        return s;
    };
    auto labels_of = [&](const std::vector<int>& depth) {
        std::vector<Rational> mu(n);
        for (int i = 0; i < n; ++i) {
            mu[i] = lambda[i];
            for (int j = 0; j < n; ++j) mu[i] -= depth[j] * rs.cartan[i][j];
        }
        return mu;
    };
    auto plus_rho = [&](std::vector<Rational> mu) {
        for (auto& x : mu) x += 1;
        return mu;
    };
    const auto top = plus_rho(labels_of(std::vector<int>(n, 0)));
    const Rational top_norm = form(top, top);

    std::map<std::vector<int>, Integer> mult;
    std::vector<std::vector<int>> layer{std::vector<int>(n, 0)};
    mult[layer[0]] = 1;
    Integer total = 1;
    while (!layer.empty()) {
        std::map<std::vector<int>, bool> next;
        for (const auto& c : layer)
            for (int i = 0; i < n; ++i) {
                auto d = c;
                ++d[i];
                next[d] = true;
            }
        layer.clear();
        for (const auto& [c, unused] : next) {
            auto mu = labels_of(c);
            auto mr = plus_rho(mu);
            Rational denom = top_norm - form(mr, mr);
            if (denom == 0) continue;
            Rational rhs = 0;
            for (const auto& alpha : rs.positive_roots) {
                for (int j = 1;; ++j) {
                    std::vector<int> shifted = c;
                    bool inside = true;
                    for (int t = 0; t < n; ++t) {
                        shifted[t] -= j * alpha[t];
                        if (shifted[t] < 0) inside = false;
                    }
                    if (!inside) break;
                    auto it = mult.find(shifted);
                    if (it == mult.end()) continue;
                    auto w = labels_of(shifted);
                    Rational pairing = 0;
                    for (int t = 0; t < n; ++t) pairing += alpha[t] * w[t] * rs.root_norms[t] / 2;
                    rhs += 2 * pairing * it->second;
                }
            }
            Rational m = rhs / denom;
            if (!ack::is_integer(m)) throw std::logic_error("Freudenthal produced a fractional multiplicity");
            if (m > 0) {
                mult[c] = m.get_num();
                total += m.get_num();
                layer.push_back(c);
            }
        }
    }
    return total;
}

namespace {

using Poly = std::vector<Rational>;  // coefficient of x^e at index e

void trim(Poly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder and quotient of a by b over Q.
std::pair<Poly, Poly> divide(Poly a, const Poly& b)
{
    trim(a);
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (a.size() >= b.size() && !a.empty()) {
        std::size_t shift = a.size() - b.size();
        Rational f = a.back() / b.back();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
    }
    return {q, a};
}

Poly cyclotomic(int m)
{
    Poly p(m + 1);
    p[0] = -1;
    p[m] = 1;
    for (int d = 1; d < m; ++d)
        if (m % d == 0) p = divide(p, cyclotomic(d)).first;
    return p;
}

}  // namespace

Rational verlinde_sl2(int k, int a, int b, int c)
{
    const int m_ord = 2 * (k + 2);  // ζ = exp(πi/(k+2))
    Poly acc(m_ord);
    auto mod = [&](long e) { return static_cast<std::size_t>(((e % m_ord) + m_ord) % m_ord); };
    for (int m = 0; m <= k; ++m) {
        // S_am/S_0m = Σ_t ζ^{(a-2t)(m+1)}
        Poly ratio(m_ord);
        for (int t = 0; t <= a; ++t) ratio[mod(static_cast<long>(a - 2 * t) * (m + 1))] += 1;
        // sin x sin y with sin x = (ζ^x - ζ^-x)/2i gives -(ζ^x-ζ^-x)(ζ^y-ζ^-y)/4
        const long bx = static_cast<long>(b + 1) * (m + 1);
        const long cx = static_cast<long>(c + 1) * (m + 1);
        Poly sines(m_ord);
        sines[mod(bx + cx)] -= Rational(1, 4);
        sines[mod(bx - cx)] += Rational(1, 4);
        sines[mod(-bx + cx)] += Rational(1, 4);
        sines[mod(-bx - cx)] -= Rational(1, 4);
        for (int s = 0; s < m_ord; ++s)
            for (int t = 0; t < m_ord; ++t) acc[mod(s + t)] += ratio[s] * sines[t];
    }
    for (auto& x : acc) x *= ack::frac(2, k + 2);
    auto rem = divide(acc, cyclotomic(m_ord)).second;
    if (rem.size() > 1) throw std::logic_error("Verlinde sum is not rational");
    return rem.empty() ? Rational(0) : rem[0];
}

std::vector<Integer> affine_freudenthal_sl2(int k, int i, int depth)
{
    // μ = kΛ_0 + (p/2)α - dδ; (μ+ρ|μ+ρ) = (p+1)²/2 - 2(k+2)d
    std::map<std::pair<int, int>, Integer> mult;
    auto get = [&](int p, int d) -> Integer {
        auto it = mult.find({p, d});
        return it == mult.end() ? Integer(0) : it->second;
    };
    std::vector<Integer> graded(depth + 1);
    for (int d = 0; d <= depth; ++d) {
        // weights satisfy |μ|² <= |Λ|², i.e. p² <= i² + 4kd
        const long bound2 = static_cast<long>(i) * i + 4L * k * d;
        long r = 0;
        while ((r + 1) * (r + 1) <= bound2) ++r;
        long hi = r;
        if ((hi - i) % 2 != 0) --hi;
        for (long p = hi; p >= -hi; p -= 2) {
            Integer m;
            if (d == 0 && p == i) {
                m = 1;
            } else {
                Rational denom = ack::frac((i + 1) * (i + 1) - (p + 1) * (p + 1), 2) + 2 * (k + 2) * d;
                if (denom == 0) continue;
                Rational rhs = 0;
                // β = α (n = 0): same depth, higher p
                for (long j = 1; p + 2 * j <= hi; ++j) rhs += 2 * Rational(p + 2 * j) * get(p + 2 * j, d);
                for (int n = 1; n <= d; ++n)
                    for (int j = 1; j * n <= d; ++j) {
                        const int dd = d - j * n;
                        rhs += 2 * Rational(p + 2 * j + k * n) * get(p + 2 * j, dd);   // α + nδ
                        rhs += 2 * Rational(-(p - 2 * j) + k * n) * get(p - 2 * j, dd);  // -α + nδ
                        rhs += 2 * Rational(k * n) * get(p, dd);                         // nδ
                    }
                Rational q = rhs / denom;
                if (!ack::is_integer(q)) throw std::logic_error("affine Freudenthal produced a fraction");
                m = q.get_num();
            }
            if (m != 0) {
                mult[{static_cast<int>(p), d}] = m;
                graded[d] += m;
            }
        }
    }
    return graded;
}

std::vector<Integer> partitions_bruteforce(int n)
{
    std::function<long(int, int)> count = [&](int rest, int max_part) -> long {
        if (rest == 0) return 1;
        long s = 0;
        for (int part = std::min(rest, max_part); part >= 1; --part) s += count(rest - part, part);
        return s;
    };
    std::vector<Integer> out;
    for (int t = 0; t <= n; ++t) out.push_back(count(t, t));
    return out;
}

std::vector<Integer> fermion_product(int power, int order)
{
    const int len = 2 * order + 1;
    std::vector<Integer> p(len);
    p[0] = 1;
    for (int e = 1; e < len; e += 2)
        for (int r = 0; r < power; ++r)
            for (int t = len - 1; t >= e; --t) p[t] += p[t - e];
    return p;
}

std::map<Rational, Integer> theta_bruteforce(const std::vector<std::vector<Rational>>& gram,
                                             const std::vector<Rational>& shift, const Rational& order, long radius)
{
    const std::size_t d = shift.size();
    std::map<Rational, Integer> out;
    std::vector<long> m(d, -radius);
    while (true) {
        Rational e = 0;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) e += (shift[i] + m[i]) * gram[i][j] * (shift[j] + m[j]);
        e /= 2;
        if (e <= order) out[e] += 1;
        std::size_t i = 0;
        while (i < d && m[i] == radius) m[i++] = -radius;
        if (i == d) break;
        ++m[i];
    }
    return out;
}

}  // namespace oracle
