#include "ack/series.hpp"

#include "ack/kernels.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace ack {

CharSeries CharSeries::one(const Rational& order) { return monomial(0, 1, order); }

CharSeries CharSeries::monomial(const Rational& exponent, const Integer& coeff, const Rational& order)
{
    CharSeries s(order);
    s.add_term(exponent, coeff);
    return s;
}

void CharSeries::add_term(const Rational& exponent, const Integer& coeff)
{
    if (coeff < 0) throw std::domain_error("graded dimensions cannot be negative");
    if (coeff == 0 || exponent > order_) return;
    terms_[exponent] += coeff;
}

Integer CharSeries::coefficient(const Rational& exponent) const
{
    if (exponent > order_) throw std::out_of_range("coefficient above truncation order " + to_string(order_));
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Integer(0) : it->second;
}

Rational CharSeries::leading_exponent() const
{
    if (terms_.empty()) throw std::domain_error("leading exponent of zero series");
    return terms_.begin()->first;
}

CharSeries CharSeries::truncated(const Rational& order) const
{
    CharSeries s(std::min(order, order_));
    for (const auto& [e, c] : terms_) s.add_term(e, c);
    return s;
}

CharSeries CharSeries::shifted(const Rational& offset) const
{
    CharSeries s(order_);
    for (const auto& [e, c] : terms_) s.add_term(e + offset, c);
    return s;
}

std::string CharSeries::to_text() const
{
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string mono;
        if (e == 0)
            mono = "";
        else if (e == 1)
            mono = "q";
        else if (is_integer(e) && e > 0)
            mono = "q^" + to_string(e);
        else
            mono = "q^(" + to_string(e) + ")";
        if (mono.empty())
            out += c.get_str();
        else if (c == 1)
            out += mono;
        else
            out += c.get_str() + mono;
    }
    if (out.empty()) out = "0";
    std::string tail = is_integer(order_) && order_ >= 0 ? to_string(order_) : "(" + to_string(order_) + ")";
    return out + " + ... (through q^" + tail + ")";
}

CharSeries series_add(const CharSeries& a, const CharSeries& b)
{
    CharSeries s(std::min(a.order(), b.order()));
    for (const auto& [e, c] : a.terms()) s.add_term(e, c);
    for (const auto& [e, c] : b.terms()) s.add_term(e, c);
    return s;
}

namespace {

struct Grid {
    Integer denom = 1;
    std::size_t len = 0;
};

// Common grid of step 1/denom covering [0, order].
Grid common_grid(const CharSeries& a, const CharSeries& b, const Rational& order)
{
    Grid g;
    for (const auto* s : {&a, &b})
        for (const auto& [e, c] : s->terms()) {
            if (e < 0) throw std::domain_error("series_mul requires nonnegative exponents");
            g.denom = lcm(g.denom, e.get_den());
        }
    if (order < 0) return g;
    g.len = static_cast<std::size_t>(to_long(floor_of(order * Rational(g.denom)))) + 1;
    return g;
}

std::vector<Integer> dense(const CharSeries& s, const Grid& g)
{
    std::vector<Integer> v(g.len);
    for (const auto& [e, c] : s.terms()) {
        Rational scaled = e * Rational(g.denom);
        long idx = to_long(scaled.get_num());
        if (idx < static_cast<long>(g.len)) v[idx] = c;
    }
    return v;
}

template <class Kernel>
CharSeries multiply_with(const CharSeries& a, const CharSeries& b, Kernel kernel)
{
    const Rational order = std::min(a.order(), b.order());
    Grid g = common_grid(a, b, order);
    CharSeries out(order);
    if (g.len == 0) return out;
    auto da = dense(a, g), db = dense(b, g);
    auto dc = kernel(std::span<const Integer>(da), std::span<const Integer>(db), g.len);
    for (std::size_t i = 0; i < dc.size(); ++i)
        if (dc[i] != 0) {
            Rational e(Integer(static_cast<long>(i)), g.denom);
            e.canonicalize();
            out.add_term(e, dc[i]);
        }
    return out;
}

}  // namespace

CharSeries series_mul(const CharSeries& a, const CharSeries& b) { return multiply_with(a, b, kernels::convolve); }

CharSeries series_mul_serial(const CharSeries& a, const CharSeries& b)
{
    return multiply_with(a, b, kernels::convolve_serial);
}

}  // namespace ack
