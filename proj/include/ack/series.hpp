#pragma once

#include "ack/rational.hpp"

#include <map>
#include <string>

namespace ack {

/// Truncated q-series Σ c_e q^e with exact rational exponents e <= order and
/// nonnegative integer coefficients (graded dimensions). Zero coefficients
/// are never stored.
class CharSeries {
public:
    explicit CharSeries(Rational order = 0) : order_(std::move(order)) {}

    static CharSeries one(const Rational& order);
    static CharSeries monomial(const Rational& exponent, const Integer& coeff, const Rational& order);

    const Rational& order() const { return order_; }
    const std::map<Rational, Integer>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    /// Adds c·q^e; terms above the truncation order are dropped.
    void add_term(const Rational& exponent, const Integer& coeff);
    Integer coefficient(const Rational& exponent) const;
    /// Lowest exponent with a nonzero coefficient; throws if empty.
    Rational leading_exponent() const;

    CharSeries truncated(const Rational& order) const;
    /// q^offset·(this); the truncation order is kept.
    CharSeries shifted(const Rational& offset) const;

    /// "1 + 2q^(1/2) + q + ... (through q^N)"-style expansion.
    std::string to_text() const;

    bool operator==(const CharSeries&) const = default;

private:
    Rational order_;
    std::map<Rational, Integer> terms_;
};

/// Sum; truncation = min of the operands'.
CharSeries series_add(const CharSeries& a, const CharSeries& b);
/// Cauchy product; truncation = min of the operands'. Exponents must be >= 0.
CharSeries series_mul(const CharSeries& a, const CharSeries& b);
CharSeries series_mul_serial(const CharSeries& a, const CharSeries& b);

inline CharSeries operator+(const CharSeries& a, const CharSeries& b) { return series_add(a, b); }
inline CharSeries operator*(const CharSeries& a, const CharSeries& b) { return series_mul(a, b); }

}  // namespace ack
