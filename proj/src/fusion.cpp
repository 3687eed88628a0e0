#include "ack/fusion.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ack {

bool LevelWeightSet::contains(const DominantWeight& w) const
{
    return std::binary_search(weights.begin(), weights.end(), w);
}

int theta_pairing(const RootSystem& rs, const DominantWeight& lambda)
{
    if (static_cast<int>(lambda.labels.size()) != rs.rank()) throw ValidationError("weight has wrong rank");
    int s = 0;
    for (int i = 0; i < rs.rank(); ++i) s += rs.comarks[i] * lambda.labels[i];
    return s;
}

bool in_level_set(const RootSystem& rs, int level, const DominantWeight& lambda)
{
    if (static_cast<int>(lambda.labels.size()) != rs.rank()) return false;
    if (std::any_of(lambda.labels.begin(), lambda.labels.end(), [](int l) { return l < 0; })) return false;
    return theta_pairing(rs, lambda) <= level;
}

LevelWeightSet level_weights(const RootSystem& rs, int level)
{
    if (level < 1) throw ValidationError("level must be a positive integer");
    LevelWeightSet set{rs.type, level, {}};
    const int n = rs.rank();
    std::vector<int> labels(n, 0);
    std::function<void(int, int)> rec = [&](int i, int budget) {
        if (i == n) {
            set.weights.push_back({labels});
            return;
        }
        for (int l = 0; l * rs.comarks[i] <= budget; ++l) {
            labels[i] = l;
            rec(i + 1, budget - l * rs.comarks[i]);
        }
        labels[i] = 0;
    };
    rec(0, level);
    std::sort(set.weights.begin(), set.weights.end());
    return set;
}

Rational conformal_weight(const RootSystem& rs, int level, const DominantWeight& lambda)
{
    if (!in_level_set(rs, level, lambda))
        throw ValidationError("weight (" + lambda.to_string() + ") is not in P_" + std::to_string(level));
    // λ+2ρ has labels λ_i + 2
    DominantWeight plus2rho = lambda;
    for (int& l : plus2rho.labels) l += 2;
    return weight_form(rs, lambda, plus2rho) / (2 * (level + rs.dual_coxeter));
}

FusionVector sl2_fusion(int level, int i, int j)
{
    if (level < 1) throw ValidationError("level must be a positive integer");
    if (i < 0 || i > level || j < 0 || j > level) throw ValidationError("sl(2) label out of range [0, level]");
    FusionVector out;
    const int lo = std::abs(i - j);
    const int hi = std::min(i + j, 2 * level - i - j);
    for (int r = lo; r <= hi; r += 2) out[{{r}}] = 1;
    return out;
}

namespace {

// Cartan matrix of the untwisted affine diagram, node 0 first.
std::vector<std::vector<Rational>> affine_cartan(const RootSystem& rs)
{
    const int n = rs.rank();
    Matrix s(n + 1, n + 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s(i + 1, j + 1) = rs.root_form(i, j);
    s(0, 0) = 2;
    for (int j = 0; j < n; ++j) {
        Rational v = 0;
        for (int i = 0; i < n; ++i) v -= rs.marks[i] * rs.root_form(i, j);
        s(0, j + 1) = v;
        s(j + 1, 0) = v;
    }
    std::vector<std::vector<Rational>> a(n + 1, std::vector<Rational>(n + 1));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) a[i][j] = 2 * s(i, j) / s(i, i);
    return a;
}

// Root-lattice test for Λ_a - Λ_b - c·Λ_i (Λ_0 = 0).
bool in_root_lattice(const RootSystem& rs, int a, int b, int c, int i)
{
    const int n = rs.rank();
    for (int col = 0; col < n; ++col) {
        Rational v = 0;
        if (a > 0) v += rs.weight_coeffs(a - 1, col);
        if (b > 0) v -= rs.weight_coeffs(b - 1, col);
        if (i > 0) v -= c * rs.weight_coeffs(i - 1, col);
        if (!is_integer(v)) return false;
    }
    return true;
}

std::vector<std::vector<int>> automorphisms_from(const std::vector<std::vector<Rational>>& a, int target)
{
    const int m = static_cast<int>(a.size());
    std::vector<std::vector<int>> found;
    std::vector<int> perm(m, -1);
    std::vector<bool> used(m, false);
    std::function<void(int)> rec = [&](int node) {
        if (node == m) {
            found.push_back(perm);
            return;
        }
        for (int img = 0; img < m; ++img) {
            if (used[img]) continue;
            if (node == 0 && img != target) continue;
            bool ok = a[img][img] == a[node][node];
            for (int prev = 0; ok && prev < node; ++prev)
                ok = a[img][perm[prev]] == a[node][prev] && a[perm[prev]][img] == a[prev][node];
            if (!ok) continue;
            perm[node] = img;
            used[img] = true;
            rec(node + 1);
            used[img] = false;
            perm[node] = -1;
        }
    };
    rec(0);
    return found;
}

}  // namespace

SimpleCurrentGroup::SimpleCurrentGroup(RootSystem rs, int level)
    : rs_(std::move(rs)), level_(level), center_(center_group(rs_))
{
    if (level < 1) throw ValidationError("level must be a positive integer");
    const int n = rs_.rank();
    auto a = affine_cartan(rs_);
    for (int element : center_.elements) {
        std::vector<std::vector<int>> matches;
        for (auto& perm : automorphisms_from(a, element)) {
            bool ok = true;
            for (int j = 1; ok && j <= n; ++j) ok = in_root_lattice(rs_, perm[j], j, rs_.comarks[j - 1], element);
            if (ok) matches.push_back(perm);
        }
        if (matches.size() != 1)
            throw std::logic_error("expected a unique diagram automorphism for the simple current of node " +
                                   std::to_string(element));
        perms_[element] = matches.front();
    }
}

DominantWeight SimpleCurrentGroup::current(int element) const
{
    center_.index_of(element);
    if (element == 0) return DominantWeight::zero(rs_.rank());
    return DominantWeight::fundamental(rs_.rank(), element, level_);
}

const std::vector<int>& SimpleCurrentGroup::permutation(int element) const
{
    auto it = perms_.find(element);
    if (it == perms_.end()) throw ValidationError("not a simple-current element: " + std::to_string(element));
    return it->second;
}

DominantWeight SimpleCurrentGroup::act(int element, const DominantWeight& lambda) const
{
    if (!in_level_set(rs_, level_, lambda))
        throw ValidationError("weight (" + lambda.to_string() + ") is not in P_" + std::to_string(level_));
    const auto& perm = permutation(element);
    const int n = rs_.rank();
    std::vector<int> ext(n + 1);
    ext[0] = level_ - theta_pairing(rs_, lambda);
    for (int j = 1; j <= n; ++j) ext[j] = lambda.labels[j - 1];
    std::vector<int> moved(n + 1);
    for (int j = 0; j <= n; ++j) moved[perm[j]] = ext[j];
    return DominantWeight{std::vector<int>(moved.begin() + 1, moved.end())};
}

int SimpleCurrentGroup::element_for(const CoweightVector& h) const { return coweight_class(rs_, h); }

SimpleCurrentGroup simple_current_group(const RootSystem& rs, int level) { return SimpleCurrentGroup(rs, level); }

DominantWeight current_action(const SimpleCurrentGroup& group, int element, const DominantWeight& lambda)
{
    return group.act(element, lambda);
}

}  // namespace ack
