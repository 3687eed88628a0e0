#include "ack/fusion.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace ack;

namespace {

RootSystem rs_of(Family f, int n) { return build_root_system(LieType::make(f, n)); }

}  // namespace

TEST_CASE("level sets")
{
    CHECK(level_weights(rs_of(Family::A, 1), 3).weights.size() == 4);
    CHECK(level_weights(rs_of(Family::A, 2), 2).weights.size() == 6);
    // comarks (1,2,1) for B3: level 1 gives 0, λ1, λ3
    auto b3 = level_weights(rs_of(Family::B, 3), 1);
    CHECK(b3.weights.size() == 3);
    CHECK(b3.contains({{0, 0, 1}}));
    CHECK_FALSE(b3.contains({{0, 1, 0}}));
    CHECK(level_weights(rs_of(Family::E, 8), 1).weights.size() == 1);
    CHECK(level_weights(rs_of(Family::G, 2), 1).weights.size() == 2);
    CHECK_THROWS_AS(level_weights(rs_of(Family::A, 1), 0), ValidationError);
}

TEST_CASE("conformal weights")
{
    auto a1 = rs_of(Family::A, 1);
    CHECK(conformal_weight(a1, 1, {{1}}) == frac(1, 4));
    CHECK(conformal_weight(a1, 2, {{1}}) == frac(3, 16));
    CHECK(conformal_weight(a1, 2, {{2}}) == frac(1, 2));
    CHECK(conformal_weight(rs_of(Family::E, 6), 1, {{1, 0, 0, 0, 0, 0}}) == frac(2, 3));
    CHECK(conformal_weight(rs_of(Family::E, 7), 1, {{0, 0, 0, 0, 0, 1, 0}}) == frac(3, 4));
    CHECK_THROWS_AS(conformal_weight(a1, 1, {{2}}), ValidationError);
}

TEST_CASE("simple-current conformal weight is k<h,h>/2")
{
    for (auto [f, n] : std::vector<std::pair<Family, int>>{
             {Family::A, 3}, {Family::B, 3}, {Family::C, 3}, {Family::D, 5}, {Family::D, 6}, {Family::E, 6}, {Family::E, 7}})
        for (int k = 1; k <= 3; ++k) {
            auto rs = rs_of(f, n);
            SimpleCurrentGroup g(rs, k);
            for (int e : g.elements()) {
                if (!e) continue;
                auto h = fundamental_coweight(rs, e);
                CHECK(conformal_weight(rs, k, g.current(e)) == k * bilinear(rs, h, h) / 2);
            }
        }
}

TEST_CASE("sl(2) fusion matches the Verlinde formula")
{
    for (int k = 1; k <= 4; ++k)
        for (int a = 0; a <= k; ++a)
            for (int b = 0; b <= k; ++b) {
                auto f = sl2_fusion(k, a, b);
                for (int c = 0; c <= k; ++c) {
                    auto it = f.find({{c}});
                    Integer n = it == f.end() ? Integer(0) : it->second;
                    CHECK(Rational(n) == oracle::verlinde_sl2(k, a, b, c));
                }
            }
    CHECK_THROWS_AS(sl2_fusion(2, 3, 0), ValidationError);
}

TEST_CASE("sl(2) fusion by hand")
{
    auto f = sl2_fusion(2, 1, 1);
    CHECK(f.size() == 2);
    CHECK(f.count({{0}}));
    CHECK(f.count({{2}}));
    CHECK(sl2_fusion(2, 2, 2).begin()->first == DominantWeight{{0}});
    CHECK(sl2_fusion(3, 2, 2).size() == 2);  // 0 and 2; 4 exceeds the level
}

TEST_CASE("simple-current action")
{
    auto a1 = rs_of(Family::A, 1);
    SimpleCurrentGroup g(a1, 3);
    for (int i = 0; i <= 3; ++i) CHECK(g.act(1, {{i}}) == DominantWeight{{3 - i}});

    // agrees with sl(2) fusion by the current L(k,k)
    for (int k = 1; k <= 5; ++k) {
        SimpleCurrentGroup gk(a1, k);
        for (int i = 0; i <= k; ++i) {
            auto f = sl2_fusion(k, i, k);
            REQUIRE(f.size() == 1);
            CHECK(f.begin()->first == gk.act(1, {{i}}));
        }
    }

    auto d5 = rs_of(Family::D, 5);
    SimpleCurrentGroup gd(d5, 2);
    CHECK(gd.act(5, DominantWeight::zero(5)) == gd.current(5));
    CHECK(gd.act(1, gd.act(1, {{1, 0, 0, 0, 1}})) == DominantWeight{{1, 0, 0, 0, 1}});
}

TEST_CASE("current action is a group action and preserves P_k")
{
    for (auto [f, n] : std::vector<std::pair<Family, int>>{
             {Family::A, 2}, {Family::B, 3}, {Family::C, 3}, {Family::D, 4}, {Family::D, 5}, {Family::E, 6}, {Family::E, 7}}) {
        auto rs = rs_of(f, n);
        SimpleCurrentGroup g(rs, 2);
        auto set = level_weights(rs, 2);
        for (int a : g.elements())
            for (int b : g.elements())
                for (const auto& w : set.weights) {
                    auto moved = g.act(a, g.act(b, w));
                    CHECK(set.contains(moved));
                    CHECK(moved == g.act(g.multiply(a, b), w));
                }
    }
}
