// ackit: command-line front end for the affine simple-current toolkit.

#include "ack/extension.hpp"
#include "ack/fusion.hpp"
#include "ack/json_io.hpp"
#include "ack/modrep.hpp"
#include "ack/qchar.hpp"
#include "ack/rootdata.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace ack;
using io::Json;

namespace {

struct Common {
    std::string type;
    int rank = 0;
    int level = 0;
    bool json = false;
};

void add_type_options(CLI::App* cmd, Common& c, bool need_level, bool need_type = true)
{
    cmd->add_option("--type", c.type, "Lie type letter A-G")->required(need_type);
    cmd->add_option("--rank", c.rank, "rank")->required(need_type);
    auto* lvl = cmd->add_option("--level", c.level, "positive integer level");
    if (need_level) lvl->required();
    cmd->add_flag("--json", c.json, "emit one JSON document");
}

RootSystem root_system_of(const Common& c)
{
    if (c.type.size() != 1) throw ValidationError("type must be a single letter A-G, got '" + c.type + "'");
    return build_root_system(LieType::parse(c.type[0], c.rank));
}

std::optional<Matrix> heis_override(const std::string& text)
{
    if (text.empty()) return std::nullopt;
    // "a" for rank one, or "a,b;b,c" rows
    std::vector<std::vector<Rational>> rows;
    std::stringstream rs(text);
    std::string row;
    while (std::getline(rs, row, ';')) {
        std::vector<Rational> r;
        std::stringstream cs(row);
        std::string cell;
        while (std::getline(cs, cell, ',')) r.push_back(parse_rational(cell));
        rows.push_back(r);
    }
    for (const auto& r : rows)
        if (r.size() != rows.size()) throw ValidationError("--heis-norm must be a square matrix");
    return Matrix::from_rows(rows);
}

std::string weight_name(const DominantWeight& w)
{
    std::string out;
    for (std::size_t i = 0; i < w.labels.size(); ++i) {
        if (!w.labels[i]) continue;
        if (!out.empty()) out += "+";
        if (w.labels[i] != 1) out += std::to_string(w.labels[i]);
        out += "λ" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

std::string current_name(const SimpleCurrentGroup& g, int element)
{
    return "[L(" + std::to_string(g.level()) + "," + weight_name(g.current(element)) + ")]";
}

int describe(const Common& c)
{
    auto rs = root_system_of(c);
    Json doc;
    doc["type"] = io::lie_type_json(rs.type);
    doc["cartan"] = rs.cartan;
    Json norms = Json::array();
    for (const auto& n : rs.root_norms) norms.push_back(io::rational_json(n));
    doc["root_norms"] = norms;
    doc["marks"] = rs.marks;
    doc["comarks"] = rs.comarks;
    doc["dual_coxeter"] = rs.dual_coxeter;
    doc["positive_roots"] = rs.positive_roots.size();
    doc["dimension"] = lie_algebra_dim(rs);
    Json cominimal = Json::array();
    for (int i : cominimal_indices(rs)) {
        auto h = fundamental_coweight(rs, i);
        cominimal.push_back(Json{{"node", i}, {"coweight_norm", io::rational_json(bilinear(rs, h, h))}});
    }
    doc["cominimal_nodes"] = cominimal;
    if (c.level > 0) doc["level_weights"] = level_weights(rs, c.level).weights.size();

    if (c.json) {
        std::cout << io::emit(doc);
        return 0;
    }
    std::cout << "type            " << rs.type.name() << "\n"
              << "dimension       " << lie_algebra_dim(rs) << "\n"
              << "positive roots  " << rs.positive_roots.size() << "\n"
              << "dual Coxeter    " << rs.dual_coxeter << "\n"
              << "marks          ";
    for (int m : rs.marks) std::cout << " " << m;
    std::cout << "\ncomarks        ";
    for (int m : rs.comarks) std::cout << " " << m;
    std::cout << "\ncartan\n";
    for (const auto& row : rs.cartan) {
        std::cout << " ";
        for (int x : row) std::cout << " " << (x >= 0 ? " " : "") << x;
        std::cout << "\n";
    }
    for (const auto& n : cominimal)
        std::cout << "<h^(" << n["node"].get<int>() << "),h^(" << n["node"].get<int>()
                  << ")> = " << n["coweight_norm"].get<std::string>() << "\n";
    if (c.level > 0) std::cout << "|P_" << c.level << "|  " << doc["level_weights"].get<std::size_t>() << "\n";
    return 0;
}

int currents(const Common& c)
{
    auto rs = root_system_of(c);
    SimpleCurrentGroup g(rs, c.level);
    const auto& z = g.center();
    Json doc;
    doc["type"] = io::lie_type_json(rs.type);
    doc["level"] = c.level;
    doc["order"] = z.order();
    doc["structure"] = z.structure();
    Json gens = Json::array();
    for (int gen : z.generators) gens.push_back(current_name(g, gen));
    doc["generators"] = gens;
    Json rels = Json::array();
    for (const auto& r : z.relations) {
        std::string lhs;
        for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
            if (!r.coeffs[i]) continue;
            if (!lhs.empty()) lhs += " + ";
            lhs += (r.coeffs[i] != 1 ? std::to_string(r.coeffs[i]) : "") + "h^(" + std::to_string(z.generators[i]) + ")";
        }
        rels.push_back(lhs + " = " + (r.result ? "h^(" + std::to_string(r.result) + ")" : std::string("0")) + " mod Q∨");
    }
    doc["relations"] = rels;
    Json elems = Json::array();
    for (int e : g.elements())
        elems.push_back(Json{{"node", e}, {"current", current_name(g, e)}, {"order", z.element_order(e)},
                             {"permutation", g.permutation(e)}});
    doc["elements"] = elems;

    if (c.json) {
        std::cout << io::emit(doc);
        return 0;
    }
    std::cout << "P∨/Q∨ for " << rs.type.name() << ": " << z.structure() << " (order " << z.order() << ")\n";
    std::cout << "generators:";
    for (const auto& s : gens) std::cout << " " << s.get<std::string>();
    std::cout << "\nrelations:\n";
    for (const auto& r : rels) std::cout << "  " << r.get<std::string>() << "\n";
    std::cout << "currents:\n";
    for (const auto& e : elems) {
        std::cout << "  " << e["current"].get<std::string>() << "  order " << e["order"].get<int>() << "  nodes";
        for (int p : e["permutation"]) std::cout << " " << p;
        std::cout << "\n";
    }
    return 0;
}

void print_table(const io::FusionTable& t)
{
    std::cout << t.kind << " fusion for " << t.type << " at level " << t.level << "\n";
    for (const auto& [key, row] : t.products) {
        if (key.first > key.second) continue;
        std::cout << key.first << " x " << key.second << " =";
        bool first = true;
        for (const auto& [label, m] : row) {
            std::cout << (first ? " " : " + ") << (m != 1 ? m.get_str() : "") << label;
            first = false;
        }
        if (first) std::cout << " 0";
        std::cout << "\n";
    }
}

int fusion(const Common& c, bool ext, const std::string& from)
{
    io::FusionTable t;
    if (!from.empty()) {
        std::ifstream in(from);
        if (!in) throw ValidationError("cannot read " + from);
        Json j;
        try {
            j = Json::parse(in);
        } catch (const Json::exception& e) {
            throw ValidationError(std::string("invalid JSON: ") + e.what());
        }
        t = io::table_from_json(j);
    } else {
        // the tables only exist for A1, so that is the default
        auto rs = c.type.empty() ? build_root_system(LieType::make(Family::A, 1)) : root_system_of(c);
        if (rs.type.family != Family::A || rs.rank() != 1)
            throw ValidationError("fusion tables are available for type A rank 1 only");
        if (c.level < 1) throw ValidationError("--level is required");
        t = ext ? io::ext_sl2_table(build_extension(rs, c.level)) : io::sl2_table(c.level);
    }
    if (c.json) std::cout << io::emit(io::table_json(t));
    else print_table(t);
    return 0;
}

int extension(const Common& c, const std::string& heis)
{
    auto rs = root_system_of(c);
    auto ext = build_extension(rs, c.level, heis_override(heis));
    auto report = check_hypotheses(ext);
    Json doc;
    doc["type"] = io::lie_type_json(rs.type);
    doc["level"] = c.level;
    doc["generator_nodes"] = ext.generator_nodes;
    doc["heis_dim"] = ext.heis_dim();
    Json gram = Json::array();
    for (std::size_t i = 0; i < ext.lattice.rank(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < ext.lattice.rank(); ++j) row.push_back(io::rational_json(ext.lattice.gram(i, j)));
        gram.push_back(row);
    }
    doc["lattice_basis"] = ext.lattice.basis_names;
    doc["lattice_gram"] = gram;
    Json checks = Json::array();
    for (const auto& ch : report.checks)
        checks.push_back(Json{{"name", ch.name}, {"status", status_name(ch.status)}, {"detail", ch.detail}});
    doc["hypotheses"] = checks;
    if (report.ok()) {
        auto p = parity(ext);
        doc["super"] = p.is_super;
        doc["even_sublattice_index"] = p.even_sublattice_index;
        doc["weight_one_dim"] = io::integer_json(weight_one_dim(ext));
        if (ext.generator_count() == 1) {
            auto spec = generator_spec(ext);
            Json spaces = Json::array();
            for (const auto& s : spec.spaces)
                spaces.push_back(Json{{"m", s.m},
                                      {"label", s.label},
                                      {"weight", io::rational_json(s.weight)},
                                      {"dim", io::integer_json(s.dim)}});
            doc["generators"] = spaces;
            doc["locality_order"] = spec.locality_order;
        }
    }

    if (c.json) std::cout << io::emit(doc);
    else {
        std::cout << "V[L] for " << rs.type.name() << " at level " << c.level << "\n";
        std::cout << "lattice basis:";
        for (const auto& n : ext.lattice.basis_names) std::cout << " " << n;
        std::cout << "\nGram:\n";
        for (const auto& row : gram) {
            std::cout << " ";
            for (const auto& x : row) std::cout << " " << x.get<std::string>();
            std::cout << "\n";
        }
        for (const auto& ch : report.checks)
            std::cout << ch.name << ": " << status_name(ch.status) << (ch.detail.empty() ? "" : " (" + ch.detail + ")")
                      << "\n";
        if (report.ok()) {
            std::cout << (doc["super"].get<bool>() ? "vertex operator superalgebra" : "vertex operator algebra")
                      << "\nweight-one dimension " << doc["weight_one_dim"].dump() << "\n";
            if (doc.contains("generators")) {
                std::cout << "generating spaces besides g + h':\n";
                for (const auto& s : doc["generators"])
                    std::cout << "  " << s["label"].get<std::string>() << "  weight " << s["weight"].get<std::string>()
                              << "  dim " << s["dim"].dump() << "\n";
                std::cout << "locality order " << doc["locality_order"].get<long>() << "\n";
            }
        }
    }
    if (!report.ok()) throw ValidationError("hypotheses failed: " + report.failures());
    return 0;
}


int classify_cmd(const Common& c, const std::string& heis)
{
    auto ext = build_extension(root_system_of(c), c.level, heis_override(heis));
    auto classes = classify(ext);
    Json mods = Json::array();
    for (const auto& w : classes) mods.push_back(io::module_json(ext, w.rep));
    if (c.json) {
        Json doc;
        doc["type"] = io::lie_type_json(ext.rs.type);
        doc["level"] = c.level;
        doc["count"] = classes.size();
        doc["modules"] = mods;
        std::cout << io::emit(doc);
        return 0;
    }
    std::cout << classes.size() << " irreducible modules of V[L] for " << ext.rs.type.name() << " at level " << c.level
              << "\n";
    for (const auto& m : mods)
        std::cout << "  " << m["name"].get<std::string>() << "  lowest weight " << m["conformal_weight"].get<std::string>()
                  << "\n";
    return 0;
}

// "λ_1,...,λ_n,j_1,...,j_d" with j in the integer-label convention.
ModuleLabel parse_module(const ExtensionData& ext, const std::string& text)
{
    if (text.empty()) return ModuleLabel{DominantWeight::zero(ext.rs.rank()), std::vector<Rational>(ext.heis_dim())};
    std::vector<std::string> cells;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    const std::size_t n = ext.rs.rank();
    if (cells.size() != n + ext.heis_dim())
        throw ValidationError("--module needs " + std::to_string(n) + " Dynkin labels and " +
                              std::to_string(ext.heis_dim()) + " momentum labels");
    DominantWeight lambda;
    for (std::size_t i = 0; i < n; ++i) {
        Rational x = parse_rational(cells[i]);
        if (!is_integer(x)) throw ValidationError("Dynkin labels must be integers");
        lambda.labels.push_back(static_cast<int>(to_long(x.get_num())));
    }
    std::vector<Rational> j;
    for (std::size_t i = n; i < cells.size(); ++i) j.push_back(parse_rational(cells[i]));
    return module_from_integer_label(ext, lambda, j);
}

int char_cmd(const Common& c, const std::string& module, const std::string& order_text, bool text)
{
    auto ext = build_extension(root_system_of(c), c.level);
    const Rational order = parse_rational(order_text);
    if (order < 0) throw ValidationError("--order must be nonnegative");
    auto label = parse_module(ext, module);
    if (!untwisted_condition(ext, label))
        throw ValidationError(io::ext_label_name(ext, label) + " is twisted (σ_W of order " +
                              sigma_order(ext, label).order.get_str() + ")");
    auto rep = canonical(ext, label);
    const bool rank_one = ext.rs.type.family == Family::A && ext.rs.rank() == 1;
    auto series = rank_one ? ext_module_char(ext, rep, order) : component_sum_char(ext, rep.rep, order);
    if (text) {
        std::cout << "char " << io::ext_label_name(ext, rep.rep) << " = " << series.to_text() << "\n";
        return 0;
    }
    Json doc = io::series_json(series);
    doc["type"] = io::lie_type_json(ext.rs.type);
    doc["level"] = c.level;
    doc["module"] = io::module_json(ext, rep.rep);
    doc["method"] = rank_one ? "theta_decomposition" : "component_sum";
    std::cout << io::emit(doc);
    return 0;
}

int check_cmd(const Common& c, const std::string& heis)
{
    auto ext = build_extension(root_system_of(c), c.level, heis_override(heis));
    auto report = check_hypotheses(ext);
    if (c.json) {
        Json checks = Json::array();
        for (const auto& ch : report.checks)
            checks.push_back(Json{{"name", ch.name}, {"status", status_name(ch.status)}, {"detail", ch.detail}});
        std::cout << io::emit(Json{{"type", io::lie_type_json(ext.rs.type)},
                                   {"level", c.level},
                                   {"ok", report.ok()},
                                   {"hypotheses", checks}});
    } else {
        for (const auto& ch : report.checks)
            std::cout << ch.name << ": " << status_name(ch.status) << (ch.detail.empty() ? "" : " (" + ch.detail + ")")
                      << "\n";
    }
    if (!report.ok()) throw ValidationError("hypotheses failed: " + report.failures());
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"ackit: simple currents, lattice extensions and characters of affine vertex algebras"};
    app.require_subcommand(1);

    Common c;
    bool ext_flag = false;
    bool text = false;
    std::string from, heis, module, order = "4";

    auto* describe_cmd = app.add_subcommand("describe", "root system data");
    add_type_options(describe_cmd, c, false);
    auto* currents_cmd = app.add_subcommand("currents", "simple-current group and its action");
    add_type_options(currents_cmd, c, true);
    auto* fusion_cmd = app.add_subcommand("fusion", "fusion table (A1), affine or extended");
    add_type_options(fusion_cmd, c, false, false);
    fusion_cmd->add_flag("--ext", ext_flag, "fusion of the extended algebra");
    fusion_cmd->add_option("--from", from, "re-emit a fusion table read from a JSON file");
    auto* extension_cmd = app.add_subcommand("extension", "lattice, hypotheses, parity and generators of V[L]");
    add_type_options(extension_cmd, c, true);
    extension_cmd->add_option("--heis-norm", heis, "override <α',α'> (\"a\" or \"a,b;b,c\")");
    auto* classify_cmd_ = app.add_subcommand("classify", "irreducible V[L]-modules");
    add_type_options(classify_cmd_, c, true);
    classify_cmd_->add_option("--heis-norm", heis, "override <α',α'>");
    auto* char_cmd_ = app.add_subcommand("char", "truncated character of a V[L]-module");
    add_type_options(char_cmd_, c, true);
    char_cmd_->add_option("--module", module, "Dynkin labels then integer momentum labels, comma separated");
    char_cmd_->add_option("--order", order, "truncation order (rational)");
    char_cmd_->add_flag("--text", text, "plain q-expansion instead of JSON");
    auto* check_cmd_ = app.add_subcommand("check", "extension hypotheses only");
    add_type_options(check_cmd_, c, true);
    check_cmd_->add_option("--heis-norm", heis, "override <α',α'>");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*describe_cmd) return describe(c);
        if (*currents_cmd) return currents(c);
        if (*fusion_cmd) return fusion(c, ext_flag, from);
        if (*extension_cmd) return extension(c, heis);
        if (*classify_cmd_) return classify_cmd(c, heis);
        if (*char_cmd_) return char_cmd(c, module, order, text);
        if (*check_cmd_) return check_cmd(c, heis);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
