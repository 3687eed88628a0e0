#include "ack/modrep.hpp"

#include <doctest.h>

using namespace ack;

namespace {

ExtensionData sl2(int k) { return build_extension(build_root_system(LieType::make(Family::A, 1)), k); }

ModuleLabel w(const ExtensionData& ext, int i, long j) { return module_from_integer_label(ext, {{i}}, {Rational(j)}); }

}  // namespace

TEST_CASE("untwisted condition")
{
    auto ext = sl2(3);
    CHECK(untwisted_condition(ext, w(ext, 0, 0)));
    for (int i = 0; i <= 3; ++i)
        for (long j = -4; j <= 6; ++j) CHECK(untwisted_condition(ext, w(ext, i, j)) == ((i + j) % 2 == 0));

    // sl(3), k = 1, λ = λ1: untwisted iff j ≡ 1 (mod 3)
    auto a2 = build_extension(build_root_system(LieType::make(Family::A, 2)), 1);
    for (long j = -3; j <= 6; ++j)
        CHECK(untwisted_condition(a2, module_from_integer_label(a2, {{1, 0}}, {Rational(j)})) == (((j % 3) + 3) % 3 == 1));
}

TEST_CASE("sigma order")
{
    auto ext = sl2(2);
    CHECK(sigma_order(ext, w(ext, 0, 0)).order == 1);
    auto t = sigma_order(ext, w(ext, 1, 0));
    CHECK(t.order == 2);
    CHECK_FALSE(t.untwisted);
    CHECK(sigma_order(ext, w(ext, 1, 1)).untwisted);
    ModuleLabel odd{{{0}}, {frac(1, 5)}};
    CHECK(sigma_order(ext, odd).order == 5);
}

TEST_CASE("shifts")
{
    auto ext = sl2(4);
    auto a = w(ext, 1, 3);
    std::vector<long> one{1}, minus{-1}, two{2}, zero{0};
    CHECK(shift_module(ext, a, zero) == a);
    CHECK(shift_module(ext, a, one) == w(ext, 3, 7));
    CHECK(shift_module(ext, a, two) == w(ext, 1, 11));
    CHECK(shift_module(ext, shift_module(ext, a, one), minus) == a);
    // σ is constant on orbits
    auto b = w(ext, 1, 0);
    CHECK(sigma_order(ext, shift_module(ext, b, one)).order == sigma_order(ext, b).order);
}

TEST_CASE("classification of sl(2) extensions")
{
    const std::size_t counts[] = {1, 3, 6, 10, 15, 21};
    for (int k = 1; k <= 6; ++k) {
        auto ext = sl2(k);
        auto c = classify(ext);
        CHECK(c.size() == counts[k - 1]);
        CHECK(c.size() == static_cast<std::size_t>(k * (k + 1) / 2));
        for (const auto& x : c) {
            CHECK(untwisted_condition(ext, x.rep));
            CHECK(canonical(ext, x.rep) == x);
            auto j = integer_label_of(ext, x.rep)[0];
            CHECK(is_integer(j));
            CHECK(j >= 0);
            CHECK(j < k);
        }
        // every untwisted label lands in exactly one class
        for (int i = 0; i <= k; ++i)
            for (long j = -2 * k; j <= 2 * k; ++j) {
                auto l = w(ext, i, j);
                if (!untwisted_condition(ext, l)) continue;
                auto cl = canonical(ext, l);
                CHECK(std::count(c.begin(), c.end(), cl) == 1);
            }
    }
    auto k2 = classify(sl2(2));
    CHECK(std::find(k2.begin(), k2.end(), ExtModuleLabel{w(sl2(2), 1, 1)}) != k2.end());
}

TEST_CASE("classification refuses h' = 0")
{
    auto b = build_extension(build_root_system(LieType::make(Family::B, 3)), 1);
    CHECK_THROWS_AS(classify(b), ValidationError);
}

TEST_CASE("classification for other types is an orbit partition")
{
    for (auto [f, n, k] : std::vector<std::tuple<Family, int, int>>{
             {Family::A, 2, 2}, {Family::C, 2, 1}, {Family::D, 5, 1}, {Family::D, 4, 1}, {Family::E, 6, 1}, {Family::E, 7, 1}}) {
        auto ext = build_extension(build_root_system(LieType::make(f, n)), k);
        auto c = classify(ext);
        CAPTURE(ext.rs.type.name());
        CHECK_FALSE(c.empty());
        for (const auto& x : c) {
            CHECK(untwisted_condition(ext, x.rep));
            CHECK(canonical(ext, x.rep) == x);
            std::vector<long> m(ext.generator_count(), 1);
            CHECK(canonical(ext, shift_module(ext, x.rep, m)) == x);
        }
        CHECK(std::adjacent_find(c.begin(), c.end()) == c.end());
    }
    // E6 and E7 at level 1 give holomorphic E7 and E8 level-one type counts
    CHECK(classify(build_extension(build_root_system(LieType::make(Family::E, 7)), 1)).size() == 1);
}

TEST_CASE("lowest weights of modules")
{
    auto ext = sl2(1);
    CHECK(module_lowest_weight(ext, w(ext, 0, 0)) == 0);
    auto e2 = sl2(2);
    CHECK(module_lowest_weight(e2, w(e2, 1, 1)) == frac(5, 16));
    CHECK(module_lowest_weight(e2, w(e2, 2, 0)) == frac(1, 2));
    // shifting does not change the module
    std::vector<long> m{3};
    CHECK(module_lowest_weight(e2, shift_module(e2, w(e2, 1, 1), m)) == frac(5, 16));
}

TEST_CASE("extended fusion")
{
    auto ext = sl2(2);
    auto c = classify(ext);
    ExtModuleLabel vac{w(ext, 0, 0)}, v11{w(ext, 1, 1)}, v20{w(ext, 2, 0)};
    for (const auto& x : c) {
        auto f = ext_fusion_sl2(ext, vac, x);
        CHECK(f.size() == 1);
        CHECK(f.begin()->first == x);
    }
    auto sq = ext_fusion_sl2(ext, v11, v11);
    CHECK(sq.size() == 2);
    CHECK(sq[vac] == 1);
    CHECK(sq[v20] == 1);
    for (int k = 1; k <= 5; ++k) {
        auto e = sl2(k);
        auto cl = classify(e);
        for (const auto& a : cl)
            for (const auto& b : cl) CHECK(ext_fusion_sl2(e, a, b) == ext_fusion_sl2(e, b, a));
    }
}

TEST_CASE("fusion lift")
{
    auto ext = sl2(3);
    auto base = sl2_base_fusion(3);
    auto c = classify(ext);
    for (const auto& a : c)
        for (const auto& b : c) CHECK(fusion_lift(ext, base, w(ext, 0, 0), a.rep, b.rep) == (a == b ? 1 : 0));
    // momentum mismatch
    CHECK(fusion_lift(ext, base, w(ext, 1, 1), w(ext, 1, 1), w(ext, 0, 0)) == 0);
    CHECK_THROWS_AS(fusion_lift(ext, base, w(ext, 1, 0), w(ext, 0, 0), w(ext, 1, 0)), ValidationError);
}

TEST_CASE("three routes to the extended fusion agree")
{
    for (int k = 1; k <= 4; ++k) {
        auto ext = sl2(k);
        auto base = sl2_base_fusion(k);
        auto q = verlinde_quotient(ext, base);
        for (std::size_t a = 0; a < q.classes.size(); ++a)
            for (std::size_t b = 0; b < q.classes.size(); ++b) {
                auto direct = ext_fusion_sl2(ext, q.classes[a], q.classes[b]);
                CHECK(q.products[{a, b}] == direct);
                for (const auto& c : q.classes) {
                    auto it = direct.find(c);
                    Integer n = it == direct.end() ? Integer(0) : it->second;
                    CHECK(fusion_lift(ext, base, q.classes[a].rep, q.classes[b].rep, c.rep) == n);
                }
            }
    }
}

TEST_CASE("quotient reports a base table that leaves the untwisted classes")
{
    auto ext = sl2(2);
    BaseFusion broken = [](const DominantWeight&, const DominantWeight&) { return FusionVector{{DominantWeight{{1}}, 1}}; };
    CHECK_THROWS_AS(verlinde_quotient(ext, broken), ValidationError);
}
