#include "ack/extension.hpp"

#include <doctest.h>

using namespace ack;

namespace {

ExtensionData ext_of(Family f, int n, int k) { return build_extension(build_root_system(LieType::make(f, n)), k); }

}  // namespace

TEST_CASE("generator norms B(α,α)")
{
    for (int k = 1; k <= 4; ++k) {
        for (int n = 1; n <= 5; ++n) CHECK(ext_of(Family::A, n, k).lattice.gram(0, 0) == k);
        for (int n : {3, 5, 7}) CHECK(ext_of(Family::D, n, k).lattice.gram(0, 0) == n * k);
        for (int n = 2; n <= 5; ++n) CHECK(ext_of(Family::C, n, k).lattice.gram(0, 0) == n * k);
        CHECK(ext_of(Family::E, 6, k).lattice.gram(0, 0) == 2 * k);
        CHECK(ext_of(Family::E, 7, k).lattice.gram(0, 0) == 2 * k);
        CHECK(ext_of(Family::B, 3, k).lattice.gram(0, 0) == k);
    }
}

TEST_CASE("D even lattice")
{
    auto ext = ext_of(Family::D, 6, 2);
    CHECK(ext.generator_nodes == std::vector<int>{5, 6});
    // k·n/4 + 3nk/4 on the diagonal, k(n-2)/4 + k(n-2)/4 off it
    CHECK(ext.lattice.gram == Matrix::from_rows({{12, 4}, {4, 12}}));
    CHECK(check_hypotheses(ext).ok());
    CHECK_THROWS_AS(generator_spec(ext), ValidationError);
}

TEST_CASE("types without simple currents are refused")
{
    for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::E, 8}, {Family::F, 4}, {Family::G, 2}}) {
        try {
            ext_of(f, n, 1);
            FAIL("expected a refusal");
        } catch (const ValidationError& e) {
            CHECK(std::string(e.what()).find("no nontrivial simple current") != std::string::npos);
        }
    }
}

TEST_CASE("hypothesis checks")
{
    auto ok = ext_of(Family::A, 2, 3);
    auto r = check_hypotheses(ok);
    CHECK(r.ok());
    CHECK(r.checks.size() == 5);
    for (const auto& c : r.checks) CHECK(c.status == HypothesisReport::Status::pass);

    auto b = ext_of(Family::B, 3, 1);
    r = check_hypotheses(b);
    CHECK(r.ok());
    CHECK(r.checks[2].status == HypothesisReport::Status::skipped);

    auto bad = build_extension(build_root_system(LieType::make(Family::A, 1)), 2, Matrix::from_rows({{frac(1, 3)}}));
    r = check_hypotheses(bad);
    CHECK_FALSE(r.ok());
    CHECK(r.failures() == "integral_lattice");
    CHECK_THROWS_AS(parity(bad), ValidationError);

    auto neg = build_extension(build_root_system(LieType::make(Family::A, 1)), 2, Matrix::from_rows({{-1}}));
    r = check_hypotheses(neg);
    CHECK(r.failures().find("heisenberg_positive_definite") != std::string::npos);

    CHECK_THROWS_AS(build_extension(build_root_system(LieType::make(Family::B, 3)), 1, Matrix::from_rows({{1}})),
                    ValidationError);
    CHECK_THROWS_AS(build_extension(build_root_system(LieType::make(Family::A, 1)), 0), ValidationError);
}

TEST_CASE("parity")
{
    for (int k = 1; k <= 6; ++k) {
        auto p = parity(ext_of(Family::A, 1, k));
        CHECK(p.is_super == (k % 2 == 1));
        CHECK(p.even_sublattice_index == (k % 2 ? 2 : 1));
    }
    CHECK_FALSE(parity(ext_of(Family::E, 7, 1)).is_super);
    CHECK(parity(ext_of(Family::D, 3, 1)).is_super);
}

TEST_CASE("component lowest weights")
{
    // A_n basic components have weight k/2
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 4; ++k) {
            auto ext = ext_of(Family::A, n, k);
            CHECK(component_lowest_weight(ext, std::vector<long>{1}) == frac(k, 2));
            CHECK(component_lowest_weight(ext, std::vector<long>{-1}) == frac(k, 2));
            CHECK(component_affine_weight(ext, std::vector<long>{1}) == DominantWeight::fundamental(n, 1, k));
            CHECK(component_lowest_weight(ext, std::vector<long>{0}) == 0);
        }
    // E6: V^(α) has weight k, V^(2α) has weight 2k
    for (int k = 1; k <= 3; ++k) {
        auto e6 = ext_of(Family::E, 6, k);
        CHECK(component_lowest_weight(e6, std::vector<long>{1}) == k);
        CHECK(component_lowest_weight(e6, std::vector<long>{2}) == 2 * k);
        CHECK(component_affine_weight(e6, std::vector<long>{2}) == DominantWeight::fundamental(6, 5, k));
    }
    auto e7 = ext_of(Family::E, 7, 2);
    CHECK(component_lowest_weight(e7, std::vector<long>{1}) == 2);
    CHECK(component_lowest_weight(e7, std::vector<long>{2}) == 2);
    CHECK(component_affine_weight(e7, std::vector<long>{2}) == DominantWeight::zero(7));
}

TEST_CASE("generating spaces and locality orders")
{
    for (int k = 1; k <= 4; ++k) {
        auto a = generator_spec(ext_of(Family::A, 3, k));
        CHECK(a.spaces.size() == 2);
        CHECK(a.locality_order == k);
        auto e7 = generator_spec(ext_of(Family::E, 7, k));
        CHECK(e7.spaces.size() == 4);
        CHECK(e7.locality_order == 2 * k);
        auto e6 = generator_spec(ext_of(Family::E, 6, k));
        CHECK(e6.spaces.size() == 2);
        CHECK(e6.locality_order == 2 * k);
    }
    auto a1 = generator_spec(ext_of(Family::A, 1, 2));
    CHECK(a1.spaces[0].label == "L(2λ1)⊗e^{-α'}");
    CHECK(a1.spaces[0].dim == 3);
    auto b = generator_spec(ext_of(Family::B, 3, 2));
    CHECK(b.spaces.size() == 1);
    CHECK(b.spaces[0].label == "L(2λ1)");
    CHECK(b.spaces[0].weight == 1);
}
