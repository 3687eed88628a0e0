#include "ack/rational.hpp"

#include <algorithm>
#include <utility>

namespace ack {

Rational frac(long num, long den)
{
    if (den == 0) throw std::domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r)
{
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            if (s.empty()) throw std::invalid_argument("empty");
            return Rational(Integer(s, 10));
        }
        Integer num(s.substr(0, slash), 10);
        Integer den(s.substr(slash + 1), 10);
        if (den == 0) throw std::invalid_argument("zero denominator");
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ValidationError("not a rational number: '" + s + "'");
    }
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Integer floor_of(const Rational& r)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Integer ceil_of(const Rational& r)
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

long to_long(const Integer& z)
{
    if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in long: " + z.get_str());
    return z.get_si();
}

Integer ceil_sqrt(const Rational& r)
{
    if (r < 0) throw std::domain_error("ceil_sqrt of negative value");
    Integer c = ceil_of(r);
    Integer t = sqrt(c);
    if (t * t < c) ++t;
    // t*t >= ceil(r) >= r; step down while still valid
    while (t > 0 && Rational((t - 1) * (t - 1)) >= r) --t;
    return t;
}

Integer lcm(const Integer& a, const Integer& b)
{
    Integer out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows)
{
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
        if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& other) const
{
    if (cols_ != other.rows_) throw std::invalid_argument("matrix dimension mismatch");
    Matrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if ((*this)(i, k) == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += (*this)(i, k) * other(k, j);
        }
    return out;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const
{
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

bool Matrix::symmetric() const
{
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

namespace {

// Fraction-based elimination; returns the determinant and leaves `a` in row echelon form.
Rational eliminate(Matrix& a, std::size_t& rank)
{
    Rational det = 1;
    rank = 0;
    const std::size_t n = a.rows(), m = a.cols();
    for (std::size_t col = 0; col < m && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && a(pivot, col) == 0) ++pivot;
        if (pivot == n) {
            det = 0;
            continue;
        }
        if (pivot != rank) {
            for (std::size_t j = 0; j < m; ++j) std::swap(a(pivot, j), a(rank, j));
            det = -det;
        }
        det *= a(rank, col);
        for (std::size_t i = rank + 1; i < n; ++i) {
            if (a(i, col) == 0) continue;
            Rational f = a(i, col) / a(rank, col);
            for (std::size_t j = col; j < m; ++j) a(i, j) -= f * a(rank, j);
        }
        ++rank;
    }
    if (rank < n) det = 0;
    return det;
}

}  // namespace

Rational Matrix::determinant() const
{
    if (!square()) throw std::invalid_argument("determinant of non-square matrix");
    if (rows_ == 0) return 1;
    Matrix a = *this;
    std::size_t r = 0;
    return eliminate(a, r);
}

std::size_t Matrix::rank() const
{
    Matrix a = *this;
    std::size_t r = 0;
    eliminate(a, r);
    return r;
}

Matrix Matrix::inverse() const
{
    if (!square()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = rows_;
    Matrix a = *this;
    Matrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col) == 0) ++pivot;
        if (pivot == n) throw std::domain_error("singular matrix");
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        Rational p = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            Rational f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

std::vector<Rational> Matrix::leading_minors() const
{
    if (!square()) throw std::invalid_argument("leading minors of non-square matrix");
    std::vector<Rational> out;
    for (std::size_t k = 1; k <= rows_; ++k) {
        Matrix block(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) block(i, j) = (*this)(i, j);
        out.push_back(block.determinant());
    }
    return out;
}

bool Matrix::positive_definite() const
{
    if (!symmetric()) return false;
    auto minors = leading_minors();
    return std::all_of(minors.begin(), minors.end(), [](const Rational& d) { return d > 0; });
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational quadratic(const Matrix& g, const std::vector<Rational>& a, const std::vector<Rational>& b)
{
    return dot(a, g.apply(b));
}

}  // namespace ack
