#include "ack/modrep.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace ack {

std::string ModuleLabel::to_string() const
{
    std::ostringstream os;
    os << "W(" << lambda.to_string() << ";";
    for (std::size_t i = 0; i < gamma.size(); ++i) os << (i ? "," : "") << ack::to_string(gamma[i]);
    os << ")";
    return os.str();
}

namespace {

void check_label(const ExtensionData& ext, const ModuleLabel& label)
{
    if (!in_level_set(ext.rs, ext.level, label.lambda))
        throw ValidationError("weight (" + label.lambda.to_string() + ") is not in P_" + std::to_string(ext.level));
    if (static_cast<int>(label.gamma.size()) != ext.heis_dim())
        throw ValidationError("momentum has " + std::to_string(label.gamma.size()) + " coordinates, expected " +
                              std::to_string(ext.heis_dim()));
}

void require_heisenberg(const ExtensionData& ext)
{
    if (ext.heis_dim() == 0)
        throw ValidationError("module classification for " + ext.rs.type.name() + " (h' = 0) is not supported");
}

// Calls f on every integer vector of the box, last coordinate fastest.
template <class F>
void for_each_in_box(const kernels::Box& box, F&& f)
{
    const std::size_t d = box.lo.size();
    for (std::size_t i = 0; i < d; ++i)
        if (box.lo[i] > box.hi[i]) return;
    std::vector<long> v = box.lo;
    while (true) {
        f(std::as_const(v));
        std::size_t i = d;
        while (i > 0) {
            --i;
            if (v[i] < box.hi[i]) {
                ++v[i];
                break;
            }
            v[i] = box.lo[i];
            if (i == 0) return;
        }
        if (d == 0) return;
    }
}

}  // namespace

ModuleLabel module_from_integer_label(const ExtensionData& ext, const DominantWeight& lambda,
                                      const std::vector<Rational>& j)
{
    ModuleLabel label{lambda, {}};
    for (const auto& x : j) label.gamma.push_back(x * ext.gamma_scale);
    check_label(ext, label);
    return label;
}

std::vector<Rational> integer_label_of(const ExtensionData& ext, const ModuleLabel& label)
{
    std::vector<Rational> j;
    for (const auto& g : label.gamma) j.push_back(g / ext.gamma_scale);
    return j;
}

std::vector<Rational> generator_pairings(const ExtensionData& ext, const ModuleLabel& label)
{
    check_label(ext, label);
    std::vector<Rational> out;
    for (int i = 0; i < ext.generator_count(); ++i) {
        Rational v = weight_pairing(ext.rs, label.lambda, ext.coweight_parts[i]);
        for (int j = 0; j < ext.heis_dim(); ++j) v += ext.heis_gram(i, j) * label.gamma[j];
        out.push_back(v);
    }
    return out;
}

bool untwisted_condition(const ExtensionData& ext, const ModuleLabel& label)
{
    auto p = generator_pairings(ext, label);
    return std::all_of(p.begin(), p.end(), [](const Rational& x) { return is_integer(x); });
}

TwistInfo sigma_order(const ExtensionData& ext, const ModuleLabel& label)
{
    Integer order = 1;
    for (const auto& x : generator_pairings(ext, label)) order = lcm(order, x.get_den());
    return {order, order == 1};
}

ModuleLabel shift_module(const ExtensionData& ext, const ModuleLabel& label, std::span<const long> m)
{
    check_label(ext, label);
    ModuleLabel out{ext.currents.act(ext.current_of(m), label.lambda), label.gamma};
    for (int j = 0; j < ext.heis_dim(); ++j) out.gamma[j] += Rational(m[j]);
    return out;
}

ExtModuleLabel canonical(const ExtensionData& ext, const ModuleLabel& label)
{
    require_heisenberg(ext);
    check_label(ext, label);
    // α'_i are independent, so exactly one orbit member has γ in [0,1)^d.
    std::vector<long> m;
    for (const auto& g : label.gamma) m.push_back(-to_long(floor_of(g)));
    return {shift_module(ext, label, m)};
}

std::vector<ExtModuleLabel> classify(const ExtensionData& ext)
{
    require_heisenberg(ext);
    auto report = check_hypotheses(ext);
    if (!report.ok()) throw ValidationError("hypotheses failed: " + report.failures());
    const int d = ext.heis_dim();
    const Matrix& g = ext.heis_gram;
    const Matrix ginv = g.inverse();

    // For γ in [0,1)^d, each (Gγ)_i lies in [lo_i, hi_i].
    std::vector<Rational> lo(d), hi(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) (g(i, j) < 0 ? lo[i] : hi[i]) += g(i, j);

    std::vector<ExtModuleLabel> out;
    for (const auto& lambda : level_weights(ext.rs, ext.level).weights) {
        // Untwisted: Gγ = z - λ(h'') with z integral.
        std::vector<Rational> lp(d);
        for (int i = 0; i < d; ++i) lp[i] = weight_pairing(ext.rs, lambda, ext.coweight_parts[i]);
        kernels::Box box{std::vector<long>(d), std::vector<long>(d)};
        for (int i = 0; i < d; ++i) {
            box.lo[i] = to_long(ceil_of(lo[i] + lp[i]));
            box.hi[i] = to_long(floor_of(hi[i] + lp[i]));
        }
        for_each_in_box(box, [&](const std::vector<long>& z) {
            std::vector<Rational> rhs(d);
            for (int i = 0; i < d; ++i) rhs[i] = Rational(z[i]) - lp[i];
            auto gamma = ginv.apply(rhs);
            for (const auto& x : gamma)
                if (x < 0 || x >= 1) return;
            out.push_back({ModuleLabel{lambda, gamma}});
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rational module_lowest_weight(const ExtensionData& ext, const ModuleLabel& label)
{
    require_heisenberg(ext);
    check_label(ext, label);
    auto weight = [&](const ModuleLabel& w) {
        return Rational(conformal_weight(ext.rs, ext.level, w.lambda) + heis_norm(ext, w.gamma) / 2);
    };
    Rational best = weight(label);
    // The affine part is nonnegative, so only shifts with ½|γ+m|² <= best matter.
    auto box = enumeration_box(ext.heis_gram, label.gamma, best);
    for_each_in_box(box, [&](const std::vector<long>& m) { best = std::min(best, weight(shift_module(ext, label, m))); });
    return best;
}

ExtFusionVector ext_fusion_sl2(const ExtensionData& ext, const ExtModuleLabel& a, const ExtModuleLabel& b)
{
    if (ext.rs.type.family != Family::A || ext.rs.rank() != 1)
        throw ValidationError("closed-form extended fusion is only available for A_1");
    const int k = ext.level;
    auto ij = [&](const ExtModuleLabel& w) {
        if (!untwisted_condition(ext, w.rep)) throw ValidationError(w.rep.to_string() + " is twisted");
        Rational j = integer_label_of(ext, w.rep)[0];
        if (!is_integer(j) || j < 0 || j >= k) throw ValidationError(w.rep.to_string() + " is not a canonical label");
        return std::pair{w.rep.lambda.labels[0], static_cast<int>(to_long(j.get_num()))};
    };
    auto [i1, j1] = ij(a);
    auto [i2, j2] = ij(b);
    ExtFusionVector out;
    for (const auto& [r, mult] : sl2_fusion(k, i1, i2)) {
        int i = r.labels[0];
        int j = j1 + j2;
        if (j >= k) {
            i = k - i;
            j -= k;
        }
        ExtModuleLabel w{ModuleLabel{DominantWeight{{i}}, {Rational(j) * ext.gamma_scale}}};
        out[w] += mult;
    }
    return out;
}

BaseFusion sl2_base_fusion(int level)
{
    return [level](const DominantWeight& a, const DominantWeight& b) {
        if (a.labels.size() != 1 || b.labels.size() != 1) throw ValidationError("sl(2) fusion needs rank-one weights");
        return sl2_fusion(level, a.labels[0], b.labels[0]);
    };
}

Integer fusion_lift(const ExtensionData& ext, const BaseFusion& base, const ModuleLabel& w1, const ModuleLabel& w2,
                    const ModuleLabel& w3)
{
    require_heisenberg(ext);
    for (const auto* w : {&w1, &w2, &w3})
        if (!untwisted_condition(ext, *w)) throw ValidationError(w->to_string() + " is twisted");
    // Heisenberg fusion is momentum conservation: only α with
    // γ3 + α' = γ1 + γ2 contributes.
    std::vector<long> m;
    for (int j = 0; j < ext.heis_dim(); ++j) {
        Rational diff = w1.gamma[j] + w2.gamma[j] - w3.gamma[j];
        if (!is_integer(diff)) return 0;
        m.push_back(to_long(diff.get_num()));
    }
    auto target = shift_module(ext, w3, m);
    auto table = base(w1.lambda, w2.lambda);
    auto it = table.find(target.lambda);
    return it == table.end() ? Integer(0) : it->second;
}

QuotientTable verlinde_quotient(const ExtensionData& ext, const BaseFusion& base)
{
    QuotientTable q;
    q.classes = classify(ext);
    auto index = [&](const ExtModuleLabel& w) {
        auto it = std::lower_bound(q.classes.begin(), q.classes.end(), w);
        if (it == q.classes.end() || !(*it == w))
            throw ValidationError("base fusion leaves the untwisted classes at " + w.rep.to_string());
        return static_cast<std::size_t>(it - q.classes.begin());
    };
    for (std::size_t a = 0; a < q.classes.size(); ++a)
        for (std::size_t b = 0; b < q.classes.size(); ++b) {
            const auto& wa = q.classes[a].rep;
            const auto& wb = q.classes[b].rep;
            std::vector<Rational> gamma(wa.gamma.size());
            for (std::size_t j = 0; j < gamma.size(); ++j) gamma[j] = wa.gamma[j] + wb.gamma[j];
            ExtFusionVector row;
            for (const auto& [lambda, mult] : base(wa.lambda, wb.lambda)) {
                if (mult == 0) continue;
                ModuleLabel w{lambda, gamma};
                if (!untwisted_condition(ext, w))
                    throw ValidationError("base fusion leaves the untwisted classes at " + w.to_string());
                auto c = canonical(ext, w);
                index(c);
                row[c] += mult;
            }
            q.products[{a, b}] = std::move(row);
        }
    return q;
}

}  // namespace ack
