#include "gausslink/carter.hpp"
#include "gausslink/codec.hpp"
#include "gausslink/errors.hpp"
#include "gausslink/grouptools.hpp"
#include "gausslink/invariants.hpp"
#include "gausslink/wirtinger.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;
using namespace gausslink;

// INPUT is inline text, a file path, or '-' for stdin.
std::string read_input(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream file(arg);
        std::ostringstream buffer;
        buffer << file.rdbuf();
        return buffer.str();
    }
    return arg;
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{';
    }
    return false;
}

struct ParagraphInput {
    GaussParagraph paragraph;
    std::vector<long long> relabeling;
    bool relabeled = false;
};

ParagraphInput load_paragraph(const std::string& text) {
    if (looks_like_json(text))
        return {paragraph_from_json(json::parse(text, nullptr, true, true)), {}, false};
    ParagraphParse parsed = parse_paragraph(text);
    return {std::move(parsed.paragraph), std::move(parsed.relabeling), parsed.relabeled};
}

struct CodeInput {
    GaussCode code;
    std::vector<long long> relabeling;
    bool relabeled = false;
};

CodeInput load_code(const std::string& text) {
    if (looks_like_json(text))
        return {code_from_json(json::parse(text, nullptr, true, true)), {}, false};
    CodeParse parsed = parse_code(text);
    return {std::move(parsed.code), std::move(parsed.relabeling), parsed.relabeled};
}

WirtingerPresentation load_presentation(const std::string& text) {
    if (looks_like_json(text))
        return presentation_from_json(json::parse(text, nullptr, true, true));
    return parse_presentation(text);
}

void print_relabeling(const std::vector<long long>& map) {
    std::cout << "relabeling (new -> original):";
    for (size_t i = 0; i < map.size(); ++i)
        std::cout << ' ' << (i + 1) << "->" << map[i];
    std::cout << '\n';
}

json relabeling_json(const std::vector<long long>& map) {
    json out = json::array();
    for (long long label : map) out.push_back(label);
    return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

struct Options {
    std::string input = "-";
    bool json_output = false;
    bool verbose = false;
    bool all_merges = false;
    std::string format;
    std::string group = "S3";
    unsigned long long seed = 0; // reserved for property-test replay
};

int cmd_parse(const Options& opt) {
    const std::string text = read_input(opt.input);
    json out;
    std::string canonical;
    if (opt.format == "code") {
        const CodeInput in = load_code(text);
        canonical = serialize(in.code);
        out = json{{"ok", true}, {"value", to_json(in.code)}};
        if (in.relabeled) out["relabeling"] = relabeling_json(in.relabeling);
        if (!opt.json_output) {
            std::cout << "ok: gauss code, " << in.code.index_count() << " crossings\n"
                      << canonical << '\n';
            if (opt.verbose && in.relabeled) print_relabeling(in.relabeling);
        }
    } else if (opt.format == "presentation") {
        const WirtingerPresentation p = load_presentation(text);
        canonical = serialize(p);
        out = json{{"ok", true}, {"value", to_json(p)}};
        if (!opt.json_output) {
            std::cout << "ok: wirtinger presentation, " << p.generator_count() << " generators, "
                      << p.relator_count() << " relators\n"
                      << canonical;
        }
    } else {
        const ParagraphInput in = load_paragraph(text);
        canonical = serialize(in.paragraph);
        out = json{{"ok", true}, {"value", to_json(in.paragraph)}};
        if (in.relabeled) out["relabeling"] = relabeling_json(in.relabeling);
        if (!opt.json_output) {
            std::cout << "ok: gauss paragraph, n=" << in.paragraph.crossing_count()
                      << " crossings, k=" << in.paragraph.word_count() << " words\n"
                      << canonical << '\n';
            if (opt.verbose && in.relabeled) print_relabeling(in.relabeling);
        }
    }
    if (opt.json_output) std::cout << out.dump(2) << '\n';
    return 0;
}

json genus_component_json(const GenusComponent& gc, bool with_faces) {
    json faces = json::array();
    if (with_faces)
        for (const auto& face : gc.complex.faces)
            faces.push_back(face_cycle_text(gc.component.paragraph, face));
    json out{{"paragraph", serialize(gc.component.paragraph)},
             {"crossings", gc.component.paragraph.crossing_count()},
             {"euler_characteristic", gc.complex.euler_characteristic},
             {"faces", static_cast<int>(gc.complex.faces.size())},
             {"genus", gc.complex.genus}};
    if (with_faces) out["face_cycles"] = std::move(faces);
    return out;
}

int cmd_genus(const Options& opt, bool with_faces) {
    const ParagraphInput in = load_paragraph(read_input(opt.input));
    const GenusReport report = genus_report(in.paragraph);
    if (opt.json_output) {
        json components = json::array();
        for (const auto& gc : report.components)
            components.push_back(genus_component_json(gc, with_faces || opt.verbose));
        std::cout << json{{"components", std::move(components)},
                          {"total_genus", report.total_genus},
                          {"planar", report.planar}}
                         .dump(2)
                  << '\n';
        return 0;
    }
    for (size_t c = 0; c < report.components.size(); ++c) {
        const GenusComponent& gc = report.components[c];
        std::cout << "component " << (c + 1) << ": " << serialize(gc.component.paragraph)
                  << "  [genus " << gc.complex.genus << ", chi " << gc.complex.euler_characteristic
                  << ", " << gc.complex.faces.size() << " faces]\n";
        if (with_faces || opt.verbose)
            for (const auto& face : gc.complex.faces)
                std::cout << "  face: " << face_cycle_text(gc.component.paragraph, face) << '\n';
    }
    std::cout << "total genus: " << report.total_genus << '\n'
              << "planar: " << yes_no(report.planar) << '\n';
    return 0;
}

int cmd_planar(const Options& opt) {
    const std::string text = read_input(opt.input);
    if (opt.format == "code") {
        const CodeInput in = load_code(text);
        const bool planar = is_planar_code(in.code);
        if (opt.json_output)
            std::cout << json{{"planar", planar}}.dump(2) << '\n';
        else
            std::cout << "planar: " << yes_no(planar) << '\n';
        return 0;
    }

    const ParagraphInput in = load_paragraph(text);
    const GenusReport carter = genus_report(in.paragraph);
    const CriterionReport criterion = criterion_report(in.paragraph);

    bool agree = carter.planar == criterion.planar && carter.components.size() == criterion.components.size();
    json components = json::array();
    for (size_t c = 0; c < carter.components.size() && c < criterion.components.size(); ++c) {
        const bool surface_planar = carter.components[c].complex.genus == 0;
        const bool code_planar = criterion.components[c].planar;
        agree = agree && surface_planar == code_planar;
        if (opt.all_merges)
            for (const GaussCode& code : all_merge_codes(criterion.components[c].component.paragraph))
                agree = agree && is_planar_code(code) == code_planar;
        components.push_back(json{{"paragraph", serialize(carter.components[c].component.paragraph)},
                                  {"genus", carter.components[c].complex.genus},
                                  {"surface_planar", surface_planar},
                                  {"criterion_planar", code_planar}});
        if (!opt.json_output)
            std::cout << "component " << (c + 1) << ": genus " << carter.components[c].complex.genus
                      << ", surface " << (surface_planar ? "planar" : "non-planar") << ", criterion "
                      << (code_planar ? "planar" : "non-planar") << '\n';
    }
    if (opt.json_output)
        std::cout << json{{"components", std::move(components)},
                          {"total_genus", carter.total_genus},
                          {"planar", carter.planar},
                          {"criteria_agree", agree}}
                         .dump(2)
                  << '\n';
    else
        std::cout << "total genus: " << carter.total_genus << '\n'
                  << "planar: " << yes_no(carter.planar) << '\n'
                  << "criteria agree: " << yes_no(agree) << '\n';
    if (!agree) {
        std::cerr << "error: the surface genus and the alpha/beta criterion disagree on this input; "
                     "this indicates a defect in one of the two algorithms\n";
        return 1;
    }
    return 0;
}

int cmd_to_code(const Options& opt) {
    const ParagraphInput in = load_paragraph(read_input(opt.input));
    const std::vector<ParagraphComponent> parts = split_components(in.paragraph);
    if (parts.size() > 1)
        throw SplittableInputError("paragraph splits into " + std::to_string(parts.size()) +
                                   " components; merge each separately");
    if (opt.all_merges) {
        json codes = json::array();
        for (const GaussCode& code : all_merge_codes(in.paragraph)) {
            if (opt.json_output)
                codes.push_back(serialize(code));
            else
                std::cout << serialize(code) << '\n';
        }
        if (opt.json_output) std::cout << json{{"codes", std::move(codes)}}.dump(2) << '\n';
        return 0;
    }
    const GaussCode code = paragraph_to_code(in.paragraph);
    if (opt.json_output)
        std::cout << to_json(code).dump(2) << '\n';
    else
        std::cout << serialize(code) << '\n';
    return 0;
}

int cmd_invariants(const Options& opt) {
    const std::string text = read_input(opt.input);
    GaussCode code;
    if (opt.format == "paragraph") {
        const ParagraphInput in = load_paragraph(text);
        code = paragraph_to_code(in.paragraph);
    } else {
        code = load_code(text).code;
    }
    const InvariantTable table = invariant_table(code);
    const bool planar = is_planar_code(code);
    if (opt.json_output) {
        json beta_rows = json::array();
        for (int i = 0; i < table.index_count; ++i) {
            json row = json::array();
            for (int j = 0; j < table.index_count; ++j)
                row.push_back(table.beta[static_cast<size_t>(i * table.index_count + j)]);
            beta_rows.push_back(std::move(row));
        }
        std::cout << json{{"code", serialize(code)},
                          {"alpha", table.alpha},
                          {"beta", std::move(beta_rows)},
                          {"planar", planar}}
                         .dump(2)
                  << '\n';
        return 0;
    }
    std::cout << "code: " << serialize(code) << '\n';
    for (int i = 0; i < table.index_count; ++i)
        std::cout << "alpha_" << (i + 1) << " = " << table.alpha[static_cast<size_t>(i)] << '\n';
    for (int i = 0; i < table.index_count; ++i) {
        std::cout << "beta_" << (i + 1) << "j =";
        for (int j = 0; j < table.index_count; ++j)
            std::cout << ' ' << table.beta[static_cast<size_t>(i * table.index_count + j)];
        std::cout << '\n';
    }
    std::cout << "planar: " << yes_no(planar) << '\n';
    return 0;
}

int cmd_group(const Options& opt) {
    const ParagraphInput in = load_paragraph(read_input(opt.input));
    const WirtingerPresentation p = group_of_diagram(paragraph_to_diagram(in.paragraph));
    if (opt.json_output)
        std::cout << to_json(p).dump(2) << '\n';
    else
        std::cout << serialize(p);
    return 0;
}

int cmd_graph(const Options& opt) {
    const WirtingerPresentation p = load_presentation(read_input(opt.input));
    const PresentationGraph g = build_graph(p);
    const bool realizable = is_realizable(p);
    const bool more_relators = p.relator_count() > p.generator_count();
    if (opt.json_output) {
        json components = json::array();
        for (int c = 0; c < g.component_count; ++c)
            components.push_back(json{{"vertices", g.component_vertices[static_cast<size_t>(c)]},
                                      {"edges", g.component_edges[static_cast<size_t>(c)]},
                                      {"euler_characteristic", g.component_chi[static_cast<size_t>(c)]}});
        json out{{"components", std::move(components)},
                 {"component_count", g.component_count},
                 {"abelianization_rank", abelianization_rank(p)},
                 {"realizable", realizable}};
        if (more_relators) out["warnings"] = json::array({"more relators than generators"});
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    for (int c = 0; c < g.component_count; ++c)
        std::cout << "component " << (c + 1) << ": vertices " << g.component_vertices[static_cast<size_t>(c)]
                  << ", edges " << g.component_edges[static_cast<size_t>(c)] << ", chi "
                  << g.component_chi[static_cast<size_t>(c)] << '\n';
    std::cout << "conjugacy classes (abelianization rank): " << abelianization_rank(p) << '\n'
              << "realizable: " << yes_no(realizable) << '\n';
    if (more_relators)
        std::cerr << "warning: more relators than generators\n";
    return 0;
}

int cmd_realize(const Options& opt) {
    const WirtingerPresentation p = load_presentation(read_input(opt.input));
    std::vector<std::string> trace;
    const GaussDiagram d = realize(p, opt.verbose ? &trace : nullptr);
    const GaussParagraph out = diagram_to_paragraph(d);
    if (opt.verbose && !opt.json_output)
        for (const std::string& step : trace)
            std::cerr << "step: " << step << '\n';
    if (opt.json_output)
        std::cout << json{{"paragraph", to_json(out)},
                          {"circles", d.circle_count()},
                          {"arrows", d.arrow_count()}}
                         .dump(2)
                  << '\n';
    else
        std::cout << serialize(out) << '\n';
    return 0;
}

int cmd_reduce(const Options& opt) {
    const WirtingerPresentation p = load_presentation(read_input(opt.input));
    std::vector<std::string> trace;
    const WirtingerPresentation cyclic = to_cyclic_form(p, &trace);
    const CanonicalForm simple = to_simple_form(cyclic, &trace);
    if (opt.json_output) {
        std::cout << json{{"cyclic", to_json(cyclic)},
                          {"simple", to_json(simple.presentation)},
                          {"classes", simple.classes},
                          {"steps", trace}}
                         .dump(2)
                  << '\n';
        return 0;
    }
    if (opt.verbose)
        for (const std::string& step : trace)
            std::cout << "step: " << step << '\n';
    std::cout << "cyclic form:\n" << serialize(cyclic) << "simple form:\n" << serialize(simple.presentation);
    return 0;
}

FiniteGroupTable group_by_name(const std::string& name) {
    if (name.size() >= 2 && (name[0] == 'S' || name[0] == 'Z')) {
        bool numeric = true;
        for (size_t i = 1; i < name.size(); ++i)
            numeric = numeric && std::isdigit(static_cast<unsigned char>(name[i]));
        if (numeric) {
            const int n = std::stoi(name.substr(1));
            if (name[0] == 'S') return FiniteGroupTable::symmetric(n);
            if (n < 2 || n > 6)
                throw ParseError({{ParseErrorKind::malformed_input,
                                   "cyclic groups are provided for orders 2..6"}});
            return FiniteGroupTable::cyclic(n);
        }
    }
    std::error_code ec;
    if (std::filesystem::is_regular_file(name, ec)) {
        std::ifstream file(name);
        json j = json::parse(file, nullptr, true, true);
        if (!j.is_object() || !j.contains("order") || !j.contains("product"))
            throw ParseError({{ParseErrorKind::malformed_input,
                               "group file needs 'order' and a flat or nested 'product' table"}});
        std::vector<int> product;
        for (const auto& row : j["product"]) {
            if (row.is_array())
                for (const auto& x : row) product.push_back(x.get<int>());
            else
                product.push_back(row.get<int>());
        }
        return FiniteGroupTable(j.value("name", name), j["order"].get<int>(), std::move(product));
    }
    throw ParseError({{ParseErrorKind::malformed_input,
                       "unknown group '" + name + "' (use S1..S5, Z2..Z6, or a JSON table file)"}});
}

int cmd_homcount(const Options& opt) {
    const WirtingerPresentation p = load_presentation(read_input(opt.input));
    const FiniteGroupTable g = group_by_name(opt.group);
    const std::uint64_t count = count_homomorphisms(p, g);
    if (opt.json_output)
        std::cout << json{{"group", g.name()}, {"order", g.order()}, {"count", count}}.dump(2) << '\n';
    else
        std::cout << count << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gauss paragraph planarity and virtual link group toolkit"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json_output, "structured JSON output");
    app.add_flag("-v,--verbose", opt.verbose, "extra detail (relabelings, faces, reduction steps)");
    app.add_option("--seed", opt.seed, "reserved: replay seed for randomized test harnesses");

    const auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", opt.input, "inline text, a file path, or '-' for stdin");
    };

    auto* parse_cmd = app.add_subcommand("parse", "validate input and print its canonical form");
    add_input(parse_cmd);
    parse_cmd->add_option("-f,--format", opt.format, "paragraph (default), code, or presentation")
        ->check(CLI::IsMember({"paragraph", "code", "presentation"}));

    auto* genus_cmd = app.add_subcommand("genus", "least genus of the surface carrying a paragraph");
    add_input(genus_cmd);
    bool with_faces = false;
    genus_cmd->add_flag("--faces", with_faces, "print the face cycles");

    auto* planar_cmd = app.add_subcommand("planar", "run both planarity criteria and compare them");
    add_input(planar_cmd);
    planar_cmd->add_option("-f,--format", opt.format, "paragraph (default) or code")
        ->check(CLI::IsMember({"paragraph", "code"}));
    planar_cmd->add_flag("--all-merges", opt.all_merges, "check every merge order of each component");

    auto* tocode_cmd = app.add_subcommand("to-code", "merge a non-splittable paragraph into a Gauss code");
    add_input(tocode_cmd);
    tocode_cmd->add_flag("--all-merges", opt.all_merges, "emit the code of every merge order");

    auto* inv_cmd = app.add_subcommand("invariants", "alpha/beta table of a Gauss code");
    add_input(inv_cmd);
    inv_cmd->add_option("-f,--format", opt.format, "code (default) or paragraph")
        ->check(CLI::IsMember({"paragraph", "code"}));

    auto* group_cmd = app.add_subcommand("group", "Wirtinger presentation of a paragraph's link group");
    add_input(group_cmd);

    auto* graph_cmd = app.add_subcommand("graph", "presentation graph summary and realizability");
    add_input(graph_cmd);

    auto* realize_cmd = app.add_subcommand("realize", "realize a presentation as a Gauss paragraph");
    add_input(realize_cmd);

    auto* reduce_cmd = app.add_subcommand("reduce", "cyclic and simple forms of a presentation");
    add_input(reduce_cmd);

    auto* hom_cmd = app.add_subcommand("homcount", "count homomorphisms into a finite group");
    add_input(hom_cmd);
    hom_cmd->add_option("-g,--group", opt.group, "S1..S5, Z2..Z6, or a JSON table file (default S3)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (parse_cmd->parsed()) return cmd_parse(opt);
        if (genus_cmd->parsed()) return cmd_genus(opt, with_faces);
        if (planar_cmd->parsed()) return cmd_planar(opt);
        if (tocode_cmd->parsed()) return cmd_to_code(opt);
        if (inv_cmd->parsed()) return cmd_invariants(opt);
        if (group_cmd->parsed()) return cmd_group(opt);
        if (graph_cmd->parsed()) return cmd_graph(opt);
        if (realize_cmd->parsed()) return cmd_realize(opt);
        if (reduce_cmd->parsed()) return cmd_reduce(opt);
        if (hom_cmd->parsed()) return cmd_homcount(opt);
    } catch (const ParseError& e) {
        for (const Diagnostic& d : e.diagnostics())
            std::cerr << "error: " << to_string(d.kind) << ": " << d.message << '\n';
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: MalformedInput: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
