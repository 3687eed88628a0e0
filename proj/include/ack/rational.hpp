#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ack {

using Rational = mpq_class;
using Integer = mpz_class;

/// Thrown for invalid user-facing input (bad type/rank, out-of-range labels,
/// failed hypotheses). The CLI maps it to exit status 2.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Rational frac(long num, long den);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& r);
Integer floor_of(const Rational& r);
Integer ceil_of(const Rational& r);
long to_long(const Integer& z);

/// Smallest nonnegative integer t with t*t >= r (r >= 0).
Integer ceil_sqrt(const Rational& r);

Integer lcm(const Integer& a, const Integer& b);

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const;
    Matrix operator*(const Matrix& other) const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    bool symmetric() const;
    Rational determinant() const;
    /// Throws std::domain_error if singular.
    Matrix inverse() const;
    /// det of the top-left i×i block for i = 1..n.
    std::vector<Rational> leading_minors() const;
    bool positive_definite() const;
    std::size_t rank() const;

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);
/// a^T G b
Rational quadratic(const Matrix& g, const std::vector<Rational>& a, const std::vector<Rational>& b);

}  // namespace ack
