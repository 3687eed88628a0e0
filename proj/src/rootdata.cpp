#include "ack/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ack {

LieType LieType::make(Family family, int rank)
{
    bool ok = false;
    switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 3; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
    }
    LieType t{family, rank};
    if (!ok) throw ValidationError("invalid rank " + std::to_string(rank) + " for type " + std::string(1, t.letter()));
    return t;
}

LieType LieType::parse(char family, int rank)
{
    switch (family) {
    case 'A': case 'a': return make(Family::A, rank);
    case 'B': case 'b': return make(Family::B, rank);
    case 'C': case 'c': return make(Family::C, rank);
    case 'D': case 'd': return make(Family::D, rank);
    case 'E': case 'e': return make(Family::E, rank);
    case 'F': case 'f': return make(Family::F, rank);
    case 'G': case 'g': return make(Family::G, rank);
    default: throw ValidationError(std::string("unknown Lie type family '") + family + "'");
    }
}

char LieType::letter() const { return "ABCDEFG"[static_cast<int>(family)]; }

std::string LieType::name() const { return std::string(1, letter()) + std::to_string(rank); }

bool LieType::simply_laced() const
{
    return family == Family::A || family == Family::D || family == Family::E;
}

CoweightVector CoweightVector::operator+(const CoweightVector& o) const
{
    if (coords.size() != o.coords.size()) throw std::invalid_argument("coweight rank mismatch");
    CoweightVector r = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
    return r;
}

CoweightVector CoweightVector::operator-(const CoweightVector& o) const { return *this + o * Rational(-1); }

CoweightVector CoweightVector::operator*(const Rational& s) const
{
    CoweightVector r = *this;
    for (auto& c : r.coords) c *= s;
    return r;
}

DominantWeight DominantWeight::fundamental(int rank, int node, int multiple)
{
    if (node < 1 || node > rank) throw ValidationError("node index out of range");
    DominantWeight w = zero(rank);
    w.labels[node - 1] = multiple;
    return w;
}

int DominantWeight::total() const { return std::accumulate(labels.begin(), labels.end(), 0); }

std::string DominantWeight::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(labels[i]);
    }
    return s;
}

namespace {

struct Diagram {
    std::vector<Rational> norms;
    std::vector<std::pair<int, int>> edges;  // 1-based
};

Diagram chain(int n)
{
    Diagram d;
    for (int i = 1; i < n; ++i) d.edges.emplace_back(i, i + 1);
    return d;
}

Diagram diagram_for(const LieType& t)
{
    const int n = t.rank;
    Diagram d;
    switch (t.family) {
    case Family::A:
        d = chain(n);
        d.norms.assign(n, 2);
        break;
    case Family::B:
        d = chain(n);
        d.norms.assign(n, 2);
        d.norms[n - 1] = 1;
        break;
    case Family::C:
        d = chain(n);
        d.norms.assign(n, 1);
        d.norms[n - 1] = 2;
        break;
    case Family::D:
        d = chain(n - 1);
        d.edges.emplace_back(n - 2, n);
        d.norms.assign(n, 2);
        break;
    case Family::E:
        // Kac numbering: branch node is the last one
        d = chain(n - 1);
        d.edges.emplace_back(n == 8 ? 5 : 3, n);
        d.norms.assign(n, 2);
        break;
    case Family::F:
        d = chain(4);
        d.norms = {2, 2, 1, 1};
        break;
    case Family::G:
        d = chain(2);
        d.norms = {2, frac(2, 3)};
        break;
    }
    return d;
}

}  // namespace

RootSystem build_root_system(LieType type)
{
    type = LieType::make(type.family, type.rank);
    const int n = type.rank;
    Diagram d = diagram_for(type);

    RootSystem rs{type, {}, d.norms, Matrix(n, n), {}, {}, 0, {}, {}};
    for (int i = 0; i < n; ++i) rs.root_form(i, i) = d.norms[i];
    for (auto [a, b] : d.edges) {
        Rational v = -std::max(d.norms[a - 1], d.norms[b - 1]) / 2;
        rs.root_form(a - 1, b - 1) = v;
        rs.root_form(b - 1, a - 1) = v;
    }

    rs.cartan.assign(n, std::vector<int>(n, 0));
    Matrix cartan(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational a = 2 * rs.root_form(i, j) / rs.root_form(i, i);
            if (!is_integer(a)) throw std::logic_error("non-integral Cartan entry");
            rs.cartan[i][j] = static_cast<int>(a.get_num().get_si());
            cartan(i, j) = a;
        }

    // Positive roots, grown one height at a time through simple-root strings.
    std::set<std::vector<int>> known;
    std::vector<std::vector<int>> layer;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        layer.push_back(e);
        known.insert(e);
    }
    while (!layer.empty()) {
        rs.positive_roots.insert(rs.positive_roots.end(), layer.begin(), layer.end());
        std::set<std::vector<int>> next;
        for (const auto& beta : layer) {
            for (int i = 0; i < n; ++i) {
                int p = 0;
                std::vector<int> down = beta;
                while (true) {
                    down[i] -= 1;
                    if (!known.count(down)) break;
                    ++p;
                }
                int pairing = 0;
                for (int j = 0; j < n; ++j) pairing += beta[j] * rs.cartan[i][j];
                if (p - pairing > 0) {
                    std::vector<int> up = beta;
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        layer.assign(next.begin(), next.end());
        for (const auto& r : layer) known.insert(r);
    }

    rs.marks = rs.positive_roots.back();
    rs.comarks.resize(n);
    rs.dual_coxeter = 1;
    for (int i = 0; i < n; ++i) {
        Rational c = rs.marks[i] * rs.root_norms[i] / 2;
        if (!is_integer(c)) throw std::logic_error("non-integral comark");
        rs.comarks[i] = static_cast<int>(c.get_num().get_si());
        rs.dual_coxeter += rs.comarks[i];
    }

    rs.weight_coeffs = cartan.transpose().inverse();
    return rs;
}

CoweightVector fundamental_coweight(const RootSystem& rs, int node)
{
    const int n = rs.rank();
    if (node < 1 || node > n) throw ValidationError("coweight index out of range");
    CoweightVector h{std::vector<Rational>(n)};
    for (int j = 0; j < n; ++j) h.coords[j] = rs.weight_coeffs(j, node - 1);
    return h;
}

CoweightVector simple_coroot(const RootSystem& rs, int node)
{
    const int n = rs.rank();
    if (node < 1 || node > n) throw ValidationError("coroot index out of range");
    CoweightVector h{std::vector<Rational>(n)};
    h.coords[node - 1] = 1;
    return h;
}

Rational bilinear(const RootSystem& rs, const CoweightVector& x, const CoweightVector& y)
{
    const std::size_t n = rs.rank();
    if (x.coords.size() != n || y.coords.size() != n) throw std::invalid_argument("bilinear: rank mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (x.coords[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y.coords[j] == 0 || rs.root_form(i, j) == 0) continue;
            s += x.coords[i] * y.coords[j] * 4 * rs.root_form(i, j) / (rs.root_norms[i] * rs.root_norms[j]);
        }
    }
    return s;
}

std::vector<Rational> root_pairings(const RootSystem& rs, const CoweightVector& h)
{
    const int n = rs.rank();
    if (static_cast<int>(h.coords.size()) != n) throw std::invalid_argument("root_pairings: rank mismatch");
    std::vector<Rational> out(n);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) out[k] += h.coords[j] * rs.cartan[j][k];
    return out;
}

Rational weight_pairing(const RootSystem& rs, const DominantWeight& lambda, const CoweightVector& h)
{
    const std::size_t n = rs.rank();
    if (lambda.labels.size() != n || h.coords.size() != n) throw std::invalid_argument("weight_pairing: rank mismatch");
    Rational s = 0;
    for (std::size_t j = 0; j < n; ++j) s += h.coords[j] * lambda.labels[j];
    return s;
}

bool in_coroot_lattice(const CoweightVector& h)
{
    return std::all_of(h.coords.begin(), h.coords.end(), [](const Rational& c) { return is_integer(c); });
}

bool in_coweight_lattice(const RootSystem& rs, const CoweightVector& h)
{
    auto p = root_pairings(rs, h);
    return std::all_of(p.begin(), p.end(), [](const Rational& c) { return is_integer(c); });
}

std::vector<int> cominimal_indices(const RootSystem& rs)
{
    std::vector<int> out;
    for (int i = 0; i < rs.rank(); ++i)
        if (rs.marks[i] == 1) out.push_back(i + 1);
    return out;
}

Rational weight_form(const RootSystem& rs, const std::vector<Rational>& lambda, const std::vector<Rational>& mu)
{
    const std::size_t n = rs.rank();
    if (lambda.size() != n || mu.size() != n) throw std::invalid_argument("weight_form: rank mismatch");
    // ⟨λ_i,λ_j⟩ = weight_coeffs(i,j)·⟨α_j,α_j⟩/2
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (lambda[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (mu[j] != 0) s += lambda[i] * mu[j] * rs.weight_coeffs(i, j) * rs.root_norms[j] / 2;
    }
    return s;
}

Rational weight_form(const RootSystem& rs, const DominantWeight& lambda, const DominantWeight& mu)
{
    std::vector<Rational> a(lambda.labels.begin(), lambda.labels.end());
    std::vector<Rational> b(mu.labels.begin(), mu.labels.end());
    return weight_form(rs, a, b);
}

Integer weyl_dim(const RootSystem& rs, const DominantWeight& lambda)
{
    const int n = rs.rank();
    if (static_cast<int>(lambda.labels.size()) != n) throw std::invalid_argument("weyl_dim: rank mismatch");
    for (int l : lambda.labels)
        if (l < 0) throw ValidationError("weyl_dim: weight is not dominant");
    Rational prod = 1;
    for (const auto& root : rs.positive_roots) {
        // ⟨μ,α∨⟩ = Σ c_i μ(α_i∨)⟨α_i,α_i⟩/⟨α,α⟩; the ⟨α,α⟩ cancels in the ratio
        Rational num = 0, den = 0;
        for (int i = 0; i < n; ++i) {
            num += root[i] * (lambda.labels[i] + 1) * rs.root_norms[i];
            den += root[i] * rs.root_norms[i];
        }
        prod *= num / den;
    }
    if (!is_integer(prod)) throw std::logic_error("Weyl dimension is not an integer");
    return prod.get_num();
}

int lie_algebra_dim(const RootSystem& rs) { return rs.rank() + 2 * static_cast<int>(rs.positive_roots.size()); }

int AbelianGroupPresentation::index_of(int node) const
{
    auto it = std::find(elements.begin(), elements.end(), node);
    if (it == elements.end()) throw ValidationError("h^(" + std::to_string(node) + ") does not name a class of P∨/Q∨");
    return static_cast<int>(it - elements.begin());
}

int AbelianGroupPresentation::multiply(int a, int b) const { return elements[table[index_of(a)][index_of(b)]]; }

int AbelianGroupPresentation::power(int a, long m) const
{
    long ord = element_order(a);
    long e = ((m % ord) + ord) % ord;
    int out = 0;
    for (long i = 0; i < e; ++i) out = multiply(out, a);
    return out;
}

int AbelianGroupPresentation::inverse(int a) const { return power(a, -1); }

int AbelianGroupPresentation::element_order(int a) const
{
    int x = a, ord = 1;
    while (x != 0) {
        x = multiply(x, a);
        ++ord;
    }
    return ord;
}

std::string AbelianGroupPresentation::structure() const
{
    if (invariant_factors.empty()) return "trivial";
    std::string s;
    for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
        if (i) s += " x ";
        s += "Z/" + std::to_string(invariant_factors[i]);
    }
    return s;
}

int coweight_class(const RootSystem& rs, const CoweightVector& h)
{
    if (!in_coweight_lattice(rs, h)) throw ValidationError("element is not in the coweight lattice");
    if (in_coroot_lattice(h)) return 0;
    for (int node : cominimal_indices(rs))
        if (in_coroot_lattice(h - fundamental_coweight(rs, node))) return node;
    throw std::logic_error("coweight class not represented by a cominimal coweight");
}

namespace {

std::vector<int> preferred_generators(const LieType& t)
{
    const int n = t.rank;
    switch (t.family) {
    case Family::A: return {1};
    case Family::B: return {1};
    case Family::C: return {n};
    case Family::D: return n % 2 ? std::vector<int>{n} : std::vector<int>{n - 1, n};
    case Family::E:
        if (n == 6) return {1};
        if (n == 7) return {6};
        return {};
    default: return {};
    }
}

}  // namespace

AbelianGroupPresentation center_group(const RootSystem& rs)
{
    AbelianGroupPresentation g;
    g.elements.push_back(0);
    for (int node : cominimal_indices(rs)) g.elements.push_back(node);

    auto rep = [&](int node) {
        return node == 0 ? CoweightVector{std::vector<Rational>(rs.rank())} : fundamental_coweight(rs, node);
    };
    const std::size_t m = g.elements.size();
    g.table.assign(m, std::vector<int>(m, 0));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            g.table[a][b] = g.index_of(coweight_class(rs, rep(g.elements[a]) + rep(g.elements[b])));

    if (m == 1) return g;

    g.generators = preferred_generators(rs.type);
    int max_order = 1;
    for (int e : g.elements) max_order = std::max(max_order, g.element_order(e));
    if (max_order == g.order()) {
        g.invariant_factors = {g.order()};
        const int gen = g.generators.at(0);
        for (int k = 2; k <= g.order(); ++k) g.relations.push_back({{k}, g.power(gen, k)});
    } else {
        g.invariant_factors = {max_order, g.order() / max_order};
        const int a = g.generators.at(0), b = g.generators.at(1);
        g.relations.push_back({{2, 0}, g.power(a, 2)});
        g.relations.push_back({{0, 2}, g.power(b, 2)});
        g.relations.push_back({{1, 1}, g.multiply(a, b)});
    }
    return g;
}

}  // namespace ack
