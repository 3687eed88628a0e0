#pragma once

// Data-parallel inner loops. Each kernel has a serial reference version kept
// for testing and benchmarking; the parallel versions must return identical
// results regardless of thread count or schedule.

#include "ack/rational.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace ack::kernels {

/// c[t] = Σ_s a[s]·b[t-s] for t < out_len (truncated Cauchy product).
std::vector<Integer> convolve_serial(std::span<const Integer> a, std::span<const Integer> b, std::size_t out_len);
/// Same contract; one output coefficient per loop iteration.
std::vector<Integer> convolve_parallel(std::span<const Integer> a, std::span<const Integer> b, std::size_t out_len);
/// Picks the parallel kernel for large products.
std::vector<Integer> convolve(std::span<const Integer> a, std::span<const Integer> b, std::size_t out_len);

/// Integer box lo[i] <= m[i] <= hi[i].
struct Box {
    std::vector<long> lo;
    std::vector<long> hi;
};

using ThetaTerms = std::map<Rational, Integer>;

/// Counts x = shift + m (m in the box) by ½·xᵀGx, keeping values <= max_exponent.
/// G must be positive definite; branches are cut by completing squares.
ThetaTerms theta_serial(const Matrix& gram, const std::vector<Rational>& shift, const Box& box,
                        const Rational& max_exponent);
/// Same contract; the first coordinate's range is split across threads and
/// the per-slice tallies are merged in slice order.
ThetaTerms theta_parallel(const Matrix& gram, const std::vector<Rational>& shift, const Box& box,
                          const Rational& max_exponent);

int max_threads();

}  // namespace ack::kernels
