#include "ack/json_io.hpp"

#include <sstream>

namespace ack::io {

Json rational_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j)
{
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ValidationError("expected a rational as \"p/q\" string, got " + j.dump());
}

Json integer_json(const Integer& z)
{
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

namespace {

Integer integer_from_json(const Json& j)
{
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw ValidationError("expected an integer, got " + j.dump());
}

}  // namespace

std::string emit(Json doc)
{
    doc["schema"] = schema_tag;
    return doc.dump(2) + "\n";
}

Json lie_type_json(const LieType& t)
{
    return Json{{"family", std::string(1, t.letter())}, {"rank", t.rank}};
}

Json series_json(const CharSeries& s)
{
    Json terms = Json::array();
    for (const auto& [e, c] : s.terms()) terms.push_back(Json::array({rational_json(e), integer_json(c)}));
    return Json{{"order", rational_json(s.order())}, {"terms", terms}};
}

std::string ext_label_name(const ExtensionData& ext, const ModuleLabel& label)
{
    std::ostringstream os;
    os << "W(" << label.lambda.to_string();
    for (const auto& j : integer_label_of(ext, label)) os << ";" << to_string(j);
    os << ")";
    return os.str();
}

Json module_json(const ExtensionData& ext, const ModuleLabel& label)
{
    Json gamma = Json::array();
    for (const auto& g : label.gamma) gamma.push_back(rational_json(g));
    Json j = Json::array();
    for (const auto& x : integer_label_of(ext, label)) j.push_back(rational_json(x));
    return Json{{"lambda_labels", label.lambda.labels},
                {"gamma", gamma},
                {"integer_label", j},
                {"name", ext_label_name(ext, label)},
                {"conformal_weight", rational_json(module_lowest_weight(ext, label))}};
}

FusionTable sl2_table(int level)
{
    FusionTable t{"affine", "A1", level, {}, {}};
    auto name = [](int i) { return "L(" + std::to_string(i) + ")"; };
    for (int i = 0; i <= level; ++i) t.labels.push_back(name(i));
    for (int a = 0; a <= level; ++a)
        for (int b = 0; b <= level; ++b) {
            auto& row = t.products[{name(a), name(b)}];
            for (const auto& [r, m] : sl2_fusion(level, a, b)) row[name(r.labels[0])] = m;
        }
    return t;
}

FusionTable ext_sl2_table(const ExtensionData& ext)
{
    FusionTable t{"extended", ext.rs.type.name(), ext.level, {}, {}};
    auto classes = classify(ext);
    for (const auto& c : classes) t.labels.push_back(ext_label_name(ext, c.rep));
    for (const auto& a : classes)
        for (const auto& b : classes) {
            auto& row = t.products[{ext_label_name(ext, a.rep), ext_label_name(ext, b.rep)}];
            for (const auto& [w, m] : ext_fusion_sl2(ext, a, b)) row[ext_label_name(ext, w.rep)] = m;
        }
    return t;
}

Json table_json(const FusionTable& t)
{
    Json products = Json::array();
    for (const auto& [key, row] : t.products) {
        Json r = Json::object();
        for (const auto& [label, m] : row) r[label] = integer_json(m);
        products.push_back(Json{{"a", key.first}, {"b", key.second}, {"product", r}});
    }
    return Json{{"kind", t.kind}, {"type", t.type}, {"level", t.level}, {"labels", t.labels}, {"products", products}};
}

FusionTable table_from_json(const Json& j)
{
    try {
        FusionTable t;
        t.kind = j.at("kind").get<std::string>();
        t.type = j.at("type").get<std::string>();
        t.level = j.at("level").get<int>();
        t.labels = j.at("labels").get<std::vector<std::string>>();
        for (const auto& p : j.at("products")) {
            auto& row = t.products[{p.at("a").get<std::string>(), p.at("b").get<std::string>()}];
            for (const auto& [label, m] : p.at("product").items()) row[label] = integer_from_json(m);
        }
        return t;
    } catch (const Json::exception& e) {
        throw ValidationError(std::string("malformed fusion table: ") + e.what());
    }
}

}  // namespace ack::io
