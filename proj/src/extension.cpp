#include "ack/extension.hpp"

#include <algorithm>
#include <sstream>

namespace ack {

CoweightVector ExtensionData::coweight_of(std::span<const long> m) const
{
    if (static_cast<int>(m.size()) != generator_count()) throw ValidationError("lattice vector has wrong length");
    CoweightVector h{std::vector<Rational>(rs.rank())};
    for (std::size_t i = 0; i < m.size(); ++i) h = h + coweight_parts[i] * Rational(m[i]);
    return h;
}

int ExtensionData::current_of(std::span<const long> m) const { return currents.element_for(coweight_of(m)); }

namespace {

struct Recipe {
    std::vector<int> nodes;
    Matrix heis;
    Rational gamma_scale;
};

Recipe default_recipe(const RootSystem& rs, int k)
{
    const int n = rs.rank();
    auto one = [](const Rational& x) { return Matrix::from_rows({{x}}); };
    switch (rs.type.family) {
    case Family::A: return {{1}, one(frac(k, n + 1)), frac(1, k)};
    case Family::B: return {{1}, Matrix(0, 0), 1};
    case Family::C: return {{n}, one(frac(n * k, 2)), frac(1, n * k)};
    case Family::D:
        if (n % 2) return {{n}, one(frac(3 * n * k, 4)), frac(1, 3 * n * k)};
        return {{n - 1, n},
                Matrix::from_rows({{frac(3 * n * k, 4), frac(k * (n - 2), 4)}, {frac(k * (n - 2), 4), frac(3 * n * k, 4)}}),
                1};
    case Family::E:
        if (n == 6) return {{1}, one(frac(2 * k, 3)), frac(1, 2 * k)};
        if (n == 7) return {{6}, one(frac(k, 2)), frac(1, k)};
        break;
    default: break;
    }
    throw ValidationError("type " + rs.type.name() + " has no nontrivial simple current; extension refused");
}

std::string node_name(int node) { return "h^(" + std::to_string(node) + ")"; }

}  // namespace

ExtensionData build_extension(const RootSystem& rs, int level, std::optional<Matrix> heis_override)
{
    if (level < 1) throw ValidationError("level must be a positive integer");
    Recipe recipe = default_recipe(rs, level);
    if (heis_override) {
        if (recipe.heis.rows() == 0) throw ValidationError("type " + rs.type.name() + " has no Heisenberg part to override");
        if (heis_override->rows() != recipe.heis.rows() || !heis_override->symmetric())
            throw ValidationError("Heisenberg Gram override must be symmetric of size " + std::to_string(recipe.heis.rows()));
        recipe.heis = *heis_override;
    }

    ExtensionData ext{rs, level, SimpleCurrentGroup(rs, level), recipe.nodes, {}, recipe.heis, {}, recipe.gamma_scale};
    const std::size_t d = recipe.nodes.size();
    std::vector<std::string> names;
    for (int node : recipe.nodes) {
        ext.coweight_parts.push_back(fundamental_coweight(rs, node));
        names.push_back(node_name(node) + (ext.heis_dim() ? "+alpha'" + std::to_string(names.size() + 1) : ""));
    }
    Matrix b(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            b(i, j) = level * bilinear(rs, ext.coweight_parts[i], ext.coweight_parts[j]);
            if (ext.heis_dim()) b(i, j) += ext.heis_gram(i, j);
        }
    ext.lattice = IntegralLattice::make(std::move(names), std::move(b));
    return ext;
}

bool HypothesisReport::ok() const
{
    return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::fail; });
}

std::string HypothesisReport::failures() const
{
    std::string out;
    for (const auto& c : checks)
        if (c.status == Status::fail) out += (out.empty() ? "" : ", ") + c.name;
    return out;
}

const char* status_name(HypothesisReport::Status s)
{
    switch (s) {
    case HypothesisReport::Status::pass: return "pass";
    case HypothesisReport::Status::fail: return "fail";
    case HypothesisReport::Status::skipped: return "skipped";
    }
    return "?";
}

HypothesisReport check_hypotheses(const ExtensionData& ext)
{
    using S = HypothesisReport::Status;
    HypothesisReport r;
    auto lat = validate(ext.lattice);

    std::string bad;
    for (std::size_t i = 0; i < ext.lattice.rank(); ++i)
        for (std::size_t j = 0; j < ext.lattice.rank(); ++j)
            if (!is_integer(ext.lattice.gram(i, j)))
                bad = "B(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " + to_string(ext.lattice.gram(i, j));
    r.checks.push_back({"integral_lattice", lat.integral ? S::pass : S::fail, lat.integral ? "" : bad + " is not an integer"});

    bool inside = std::all_of(ext.coweight_parts.begin(), ext.coweight_parts.end(),
                              [&](const CoweightVector& h) { return in_coweight_lattice(ext.rs, h); });
    r.checks.push_back({"coweight_inclusion", inside ? S::pass : S::fail, inside ? "" : "L'' is not inside P∨"});

    if (ext.heis_dim() == 0) {
        r.checks.push_back({"heisenberg_positive_definite", S::skipped, "h' = 0"});
        r.checks.push_back({"projection_injective", S::skipped, "h' = 0"});
        r.checks.push_back({"heisenberg_rank", S::skipped, "h' = 0"});
        return r;
    }
    bool pd = ext.heis_gram.positive_definite();
    r.checks.push_back({"heisenberg_positive_definite", pd ? S::pass : S::fail, pd ? "" : "L' is not positive definite"});
    // L → L' sends α_i to α'_i; injective iff the α'_i are independent.
    bool injective = ext.heis_gram.rank() == static_cast<std::size_t>(ext.generator_count());
    r.checks.push_back({"projection_injective", injective ? S::pass : S::fail, injective ? "" : "α'_i are dependent"});
    bool full = ext.heis_gram.rank() == static_cast<std::size_t>(ext.heis_dim());
    r.checks.push_back({"heisenberg_rank", full ? S::pass : S::fail, full ? "" : "dim h' exceeds rank L'"});
    return r;
}

ParityReport parity(const ExtensionData& ext)
{
    auto report = check_hypotheses(ext);
    if (!report.ok()) throw ValidationError("hypotheses failed: " + report.failures());
    auto v = validate(ext.lattice);
    return {!v.even, v.even_sublattice_index, v.even_sublattice_basis};
}

Rational heis_norm(const ExtensionData& ext, const std::vector<Rational>& gamma)
{
    if (static_cast<int>(gamma.size()) != ext.heis_dim()) throw ValidationError("Heisenberg vector has wrong length");
    if (gamma.empty()) return 0;
    return quadratic(ext.heis_gram, gamma, gamma);
}

Rational heis_norm(const ExtensionData& ext, std::span<const long> m)
{
    if (ext.heis_dim() == 0) return 0;
    return heis_norm(ext, std::vector<Rational>(m.begin(), m.end()));
}

DominantWeight component_affine_weight(const ExtensionData& ext, std::span<const long> m)
{
    return ext.currents.act(ext.current_of(m), DominantWeight::zero(ext.rs.rank()));
}

Rational component_lowest_weight(const ExtensionData& ext, std::span<const long> m)
{
    DominantWeight mu = component_affine_weight(ext, m);
    return conformal_weight(ext.rs, ext.level, mu) + heis_norm(ext, m) / 2;
}

namespace {

std::string affine_label(const DominantWeight& mu)
{
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < mu.labels.size(); ++i) {
        if (!mu.labels[i]) continue;
        if (any) os << "+";
        if (mu.labels[i] != 1) os << mu.labels[i];
        os << "λ" << (i + 1);
        any = true;
    }
    return any ? "L(" + os.str() + ")" : "C";
}

std::string heis_label(std::span<const long> m)
{
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i]) continue;
        if (m[i] < 0) os << "-";
        else if (any) os << "+";
        if (std::abs(m[i]) != 1) os << std::abs(m[i]);
        os << "α'";
        if (m.size() > 1) os << (i + 1);
        any = true;
    }
    return "e^{" + (any ? os.str() : std::string("0")) + "}";
}

}  // namespace

GeneratorSpec generator_spec(const ExtensionData& ext)
{
    auto report = check_hypotheses(ext);
    if (!report.ok()) throw ValidationError("hypotheses failed: " + report.failures());
    if (ext.generator_count() != 1)
        throw ValidationError("generators and relations for " + ext.rs.type.name() + " are not specified");

    auto make_space = [&](long m) {
        std::vector<long> mv{m};
        DominantWeight mu = component_affine_weight(ext, mv);
        std::string label = affine_label(mu);
        if (ext.heis_dim()) label += "⊗" + heis_label(mv);
        return GeneratorSpec::Space{mv, mu, component_lowest_weight(ext, mv), weyl_dim(ext.rs, mu), label};
    };

    GeneratorSpec spec;
    if (ext.heis_dim() == 0) {
        // Components only depend on m through the simple current; one space.
        spec.spaces.push_back(make_space(1));
    } else {
        const Rational top = std::max(component_lowest_weight(ext, std::vector<long>{1}),
                                      component_lowest_weight(ext, std::vector<long>{-1}));
        // Any component whose lowest weight does not exceed the basic ones is
        // needed; the Heisenberg term ½m²⟨α',α'⟩ bounds the search.
        for (long m = 1; heis_norm(ext, std::vector<long>{m}) / 2 <= top; ++m)
            for (long s : {-m, m}) {
                auto space = make_space(s);
                if (space.weight <= top) spec.spaces.push_back(space);
            }
        std::sort(spec.spaces.begin(), spec.spaces.end(), [](const auto& a, const auto& b) { return a.m < b.m; });
    }

    Rational order = 0;
    for (const auto& u : spec.spaces)
        for (const auto& v : spec.spaces)
            if (ext.heis_dim() == 0 || u.m[0] == -v.m[0]) order = std::max(order, Rational(u.weight + v.weight));
    if (!is_integer(order)) throw std::logic_error("non-integral locality order");
    spec.locality_order = to_long(order.get_num());
    return spec;
}

}  // namespace ack
