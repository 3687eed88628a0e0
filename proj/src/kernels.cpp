#include "ack/kernels.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ack::kernels {

namespace {

constexpr std::size_t kParallelThreshold = 256;

// Q(x) = Σ_a diag[a]·(x_a + Σ_{b<a} coef[a][b]·x_b)², so fixing x_0, x_1, ...
// in turn gives exact partial sums that only grow.
struct Completion {
    std::vector<Rational> diag;
    std::vector<std::vector<Rational>> coef;
};

Completion complete_squares(const Matrix& gram)
{
    const std::size_t d = gram.rows();
    std::vector<std::vector<Rational>> g(d, std::vector<Rational>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) g[i][j] = gram(i, j);
    Completion c{std::vector<Rational>(d), std::vector<std::vector<Rational>>(d, std::vector<Rational>(d))};
    // eliminate the last variable first
    for (std::size_t a = d; a-- > 0;) {
        c.diag[a] = g[a][a];
        if (c.diag[a] <= 0) throw std::invalid_argument("theta kernel: form is not positive definite");
        for (std::size_t b = 0; b < a; ++b) c.coef[a][b] = g[a][b] / g[a][a];
        for (std::size_t i = 0; i < a; ++i)
            for (std::size_t j = 0; j < a; ++j) g[i][j] -= g[i][a] * g[a][j] / g[a][a];
    }
    return c;
}

struct SliceWalk {
    const Completion& sq;
    const std::vector<Rational>& shift;
    const Box& box;
    Rational bound;  // 2·max_exponent
    ThetaTerms& out;
    std::vector<Rational> x;

    void visit(std::size_t a, const Rational& partial)
    {
        const std::size_t d = shift.size();
        if (a == d) {
            out[partial / 2] += 1;
            return;
        }
        Rational offset = 0;
        for (std::size_t b = 0; b < a; ++b) offset += sq.coef[a][b] * x[b];
        // |x_a + offset| <= sqrt((bound - partial)/diag)
        const Integer r = ceil_sqrt((bound - partial) / sq.diag[a]);
        long lo = to_long(ceil_of(Rational(-r) - offset - shift[a]));
        long hi = to_long(floor_of(Rational(r) - offset - shift[a]));
        lo = std::max(lo, box.lo[a]);
        hi = std::min(hi, box.hi[a]);
        for (long m = lo; m <= hi; ++m) {
            x[a] = shift[a] + m;
            const Rational y = x[a] + offset;
            const Rational next = partial + sq.diag[a] * y * y;
            if (next <= bound) visit(a + 1, next);
        }
    }
};

// Tally one slice of the box with the first coordinate fixed at m0.
void theta_slice(const Completion& sq, const std::vector<Rational>& shift, const Box& box, long m0,
                 const Rational& max_exponent, ThetaTerms& out)
{
    const std::size_t d = shift.size();
    for (std::size_t i = 0; i < d; ++i)
        if (box.lo[i] > box.hi[i]) return;
    SliceWalk walk{sq, shift, box, 2 * max_exponent, out, std::vector<Rational>(d)};
    walk.x[0] = shift[0] + m0;
    const Rational next = sq.diag[0] * walk.x[0] * walk.x[0];
    if (next <= walk.bound) walk.visit(1, next);
}

void check_box(const Matrix& gram, const std::vector<Rational>& shift, const Box& box)
{
    const std::size_t d = shift.size();
    if (d == 0 || gram.rows() != d || gram.cols() != d || box.lo.size() != d || box.hi.size() != d)
        throw std::invalid_argument("theta kernel: dimension mismatch");
}

}  // namespace

std::vector<Integer> convolve_serial(std::span<const Integer> a, std::span<const Integer> b, std::size_t out_len)
{
    std::vector<Integer> c(out_len);
    for (std::size_t s = 0; s < a.size() && s < out_len; ++s) {
        if (a[s] == 0) continue;
        for (std::size_t t = 0; t < b.size() && s + t < out_len; ++t)
            if (b[t] != 0) c[s + t] += a[s] * b[t];
    }
    return c;
}

std::vector<Integer> convolve_parallel(std::span<const Integer> a, std::span<const Integer> b, std::size_t out_len)
{
    std::vector<Integer> c(out_len);
    const long n = static_cast<long>(out_len);
    const long na = static_cast<long>(a.size());
    const long nb = static_cast<long>(b.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (long t = 0; t < n; ++t) {
        Integer acc = 0;
        const long s_lo = std::max(0L, t - nb + 1);
        const long s_hi = std::min(t, na - 1);
        for (long s = s_lo; s <= s_hi; ++s)
            if (a[s] != 0 && b[t - s] != 0) acc += a[s] * b[t - s];
        c[t] = std::move(acc);
    }
    return c;
}

std::vector<Integer> convolve(std::span<const Integer> a, std::span<const Integer> b, std::size_t out_len)
{
    if (out_len >= kParallelThreshold && max_threads() > 1) return convolve_parallel(a, b, out_len);
    return convolve_serial(a, b, out_len);
}

ThetaTerms theta_serial(const Matrix& gram, const std::vector<Rational>& shift, const Box& box,
                        const Rational& max_exponent)
{
    check_box(gram, shift, box);
    ThetaTerms out;
    if (max_exponent < 0) return out;
    const auto sq = complete_squares(gram);
    for (long m0 = box.lo[0]; m0 <= box.hi[0]; ++m0) theta_slice(sq, shift, box, m0, max_exponent, out);
    return out;
}

ThetaTerms theta_parallel(const Matrix& gram, const std::vector<Rational>& shift, const Box& box,
                          const Rational& max_exponent)
{
    check_box(gram, shift, box);
    const long lo = box.lo[0];
    const long count = box.hi[0] - box.lo[0] + 1;
    if (count <= 0 || max_exponent < 0) return {};
    const auto sq = complete_squares(gram);
    std::vector<ThetaTerms> slices(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (long s = 0; s < count; ++s) theta_slice(sq, shift, box, lo + s, max_exponent, slices[s]);
    ThetaTerms out;
    for (const auto& slice : slices)
        for (const auto& [e, c] : slice) out[e] += c;
    return out;
}

int max_threads()
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace ack::kernels
