#include "ack/series.hpp"

#include <doctest.h>

using namespace ack;

TEST_CASE("products and sums")
{
    CharSeries a(4);
    a.add_term(0, 1);
    a.add_term(1, 1);
    auto sq = a * a;
    CHECK(sq.coefficient(0) == 1);
    CHECK(sq.coefficient(1) == 2);
    CHECK(sq.coefficient(2) == 1);
    CHECK(sq.coefficient(3) == 0);
    CHECK(a * CharSeries::one(4) == a);
    CHECK((a + a).coefficient(1) == 2);
}

TEST_CASE("truncation is the smaller order")
{
    auto a = CharSeries::monomial(frac(1, 2), 3, 5);
    auto b = CharSeries::monomial(0, 1, 2);
    CHECK((a * b).order() == 2);
    CHECK((a + b).order() == 2);
    CHECK_THROWS(b.coefficient(3));
    auto big = CharSeries::monomial(frac(5, 2), 1, 2);
    CHECK(big.empty());
}

TEST_CASE("fractional exponents on a common grid")
{
    CharSeries a(3), b(3);
    a.add_term(frac(1, 2), 1);
    a.add_term(0, 1);
    b.add_term(frac(1, 3), 2);
    auto c = a * b;
    CHECK(c.coefficient(frac(1, 3)) == 2);
    CHECK(c.coefficient(frac(5, 6)) == 2);
    CHECK(c.leading_exponent() == frac(1, 3));
    CHECK(c == series_mul_serial(a, b));
}

TEST_CASE("negative coefficients are rejected")
{
    CharSeries a(2);
    CHECK_THROWS(a.add_term(1, -1));
}

TEST_CASE("shift and text")
{
    CharSeries a(2);
    a.add_term(0, 1);
    a.add_term(1, 2);
    auto s = a.shifted(frac(1, 2));
    CHECK(s.coefficient(frac(1, 2)) == 1);
    CHECK(s.coefficient(frac(3, 2)) == 2);
    CHECK(a.to_text() == "1 + 2q + ... (through q^2)");
}
