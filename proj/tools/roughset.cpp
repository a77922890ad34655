#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rough/approximation.hpp"
#include "rough/descriptor.hpp"
#include "rough/errors.hpp"
#include "rough/fca.hpp"
#include "rough/formula.hpp"
#include "rough/information_system.hpp"
#include "rough/s5.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    if (s.empty()) return out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = s.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, comma - start));
        start = comma + 1;
    }
}

ordered_json name_array(const std::vector<std::string>& names, const rough::BitSet& set) {
    ordered_json arr = ordered_json::array();
    set.for_each([&](std::size_t i) { arr.push_back(names[i]); });
    return arr;
}

void emit(const ordered_json& record) { std::cout << record.dump() << "\n"; }

struct Options {
    std::string input;
    std::string format = "plain";
    std::string attrs;
    std::string set_literal;
    std::string formula;
    std::string mode = "lower";
    bool scale = false;
    std::size_t max_properties = 24;
};

void cmd_partition(const Options& opt) {
    const auto sys = rough::load_table_file(opt.input);
    const auto attrs = split_list(opt.attrs);
    const auto space = rough::indiscernibility(sys, attrs);
    if (opt.format == "plain") {
        for (const auto& block : rough::elementary_sets(space))
            std::cout << rough::format_set(space.ids(), block) << "\n";
        return;
    }
    ordered_json record{{"command", "partition"}};
    ordered_json blocks = ordered_json::array();
    for (const auto& block : rough::elementary_sets(space))
        blocks.push_back(name_array(space.ids(), block));
    record["blocks"] = std::move(blocks);
    emit(record);
}

void cmd_approx(const Options& opt) {
    const auto sys = rough::load_table_file(opt.input);
    const auto space = rough::indiscernibility(sys, split_list(opt.attrs));
    const auto x = sys.object_set(split_list(opt.set_literal));
    const auto r = rough::regions(space, x);
    const bool exact = r.lower == r.upper;
    if (opt.format == "plain") {
        std::cout << "lower: " << rough::format_set(space.ids(), r.lower) << "\n";
        std::cout << "upper: " << rough::format_set(space.ids(), r.upper) << "\n";
        std::cout << "boundary: " << rough::format_set(space.ids(), r.boundary) << "\n";
        std::cout << "outside: " << rough::format_set(space.ids(), r.outside) << "\n";
        std::cout << "exact: " << (exact ? "true" : "false") << "\n";
        return;
    }
    ordered_json record{{"command", "approx"}};
    record["lower"] = name_array(space.ids(), r.lower);
    record["upper"] = name_array(space.ids(), r.upper);
    record["boundary"] = name_array(space.ids(), r.boundary);
    record["outside"] = name_array(space.ids(), r.outside);
    record["exact"] = exact;
    emit(record);
}

void cmd_describe(const Options& opt) {
    const auto sys = rough::load_table_file(opt.input);
    const auto attrs = split_list(opt.attrs);
    const auto x = sys.object_set(split_list(opt.set_literal));
    const auto mode =
        opt.mode == "lower" ? rough::ApproxMode::lower : rough::ApproxMode::upper;
    const auto formula = rough::describe_set(sys, attrs, x, mode);
    const std::string text = rough::to_dnf_string(formula);
    if (opt.format == "plain") {
        std::cout << text << "\n";
        return;
    }
    ordered_json record{{"command", "describe"}};
    record["mode"] = opt.mode;
    record["formula"] = text;
    emit(record);
}

void cmd_query(const Options& opt) {
    const auto sys = rough::load_table_file(opt.input);
    const auto formula = rough::parse_formula(opt.formula);
    const auto result = rough::meaning(sys, formula);
    if (opt.format == "plain") {
        std::cout << rough::format_set(sys.objects(), result) << "\n";
        return;
    }
    ordered_json record{{"command", "query"}};
    record["objects"] = name_array(sys.objects(), result);
    emit(record);
}

void cmd_lattice(const Options& opt) {
    const auto ctx = opt.scale
                         ? rough::context_from_information_system(
                               rough::load_table_file(opt.input))
                         : rough::load_context_file(opt.input);
    const auto lattice = rough::all_concepts(ctx, opt.max_properties);
    if (opt.format == "plain") {
        rough::write_dot(std::cout, ctx, lattice);
        return;
    }
    ordered_json record{{"command", "lattice"}};
    ordered_json concepts = ordered_json::array();
    for (const auto& c : lattice.concepts) {
        ordered_json entry;
        entry["extent"] = name_array(ctx.objects(), c.extent);
        entry["intent"] = name_array(ctx.properties(), c.intent);
        concepts.push_back(std::move(entry));
    }
    record["concepts"] = std::move(concepts);
    ordered_json covers = ordered_json::array();
    for (const auto& [below, above] : lattice.covers)
        covers.push_back(ordered_json::array({below, above}));
    record["covers"] = std::move(covers);
    emit(record);
}

void cmd_modal(const Options& opt) {
    const auto sys = rough::load_table_file(opt.input);
    const auto model = rough::KripkeModel::build(sys, split_list(opt.attrs));
    const auto formula = rough::parse_modal_formula(opt.formula);
    const auto ext = rough::extension(model, formula);
    if (opt.format == "plain") {
        std::cout << "extension: " << rough::format_set(model.worlds(), ext) << "\n";
        for (std::size_t w = 0; w < model.world_count(); ++w)
            std::cout << model.worlds()[w] << ": " << (ext.test(w) ? "true" : "false")
                      << "\n";
        return;
    }
    ordered_json record{{"command", "modal"}};
    record["extension"] = name_array(model.worlds(), ext);
    ordered_json worlds;
    for (std::size_t w = 0; w < model.world_count(); ++w)
        worlds[model.worlds()[w]] = ext.test(w);
    record["worlds"] = std::move(worlds);
    emit(record);
}

void add_format_option(CLI::App* cmd, Options& opt) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"plain", "structured"}))
        ->capture_default_str();
}

void add_input_option(CLI::App* cmd, Options& opt) {
    cmd->add_option("--input", opt.input, "Input file path")->required();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rough set analysis toolkit: indiscernibility partitions, set "
                 "approximations, descriptions, concept lattices and S5 model checking "
                 "over attribute-value tables"};
    app.require_subcommand(1);
    Options opt;

    auto* partition =
        app.add_subcommand("partition", "List the elementary sets of an indiscernibility "
                                        "partition");
    add_input_option(partition, opt);
    partition->add_option("--attrs", opt.attrs, "Comma-separated attribute names")->required();
    add_format_option(partition, opt);
    partition->callback([&] { cmd_partition(opt); });

    auto* approx = app.add_subcommand(
        "approx", "Lower/upper approximations and rough regions of an object set");
    add_input_option(approx, opt);
    approx->add_option("--attrs", opt.attrs, "Comma-separated attribute names")->required();
    approx->add_option("--set", opt.set_literal,
                       "Comma-separated object ids (empty string for the empty set)")
        ->required();
    add_format_option(approx, opt);
    approx->callback([&] { cmd_approx(opt); });

    auto* describe = app.add_subcommand(
        "describe", "Synthesize the lower or upper description formula of an object set");
    add_input_option(describe, opt);
    describe->add_option("--attrs", opt.attrs, "Comma-separated attribute names")->required();
    describe->add_option("--set", opt.set_literal,
                         "Comma-separated object ids (empty string for the empty set)")
        ->required();
    describe->add_option("--mode", opt.mode, "Which description to synthesize")
        ->check(CLI::IsMember({"lower", "upper"}))
        ->required();
    add_format_option(describe, opt);
    describe->callback([&] { cmd_describe(opt); });

    auto* query =
        app.add_subcommand("query", "Evaluate a descriptor formula against the table");
    add_input_option(query, opt);
    query->add_option("--formula", opt.formula, "Descriptor formula text")->required();
    add_format_option(query, opt);
    query->callback([&] { cmd_query(opt); });

    auto* lattice = app.add_subcommand(
        "lattice", "Emit the concept lattice of a binary context as a DOT graph");
    add_input_option(lattice, opt);
    lattice->add_flag("--scale", opt.scale,
                      "Treat the input as an attribute-value table and scale it to a "
                      "binary context (one property per attribute=value pair)");
    lattice->add_option("--max-properties", opt.max_properties,
                        "Refuse contexts with more properties than this")
        ->capture_default_str();
    add_format_option(lattice, opt);
    lattice->callback([&] { cmd_lattice(opt); });

    auto* modal = app.add_subcommand(
        "modal", "Evaluate a modal formula over the indiscernibility frame");
    add_input_option(modal, opt);
    modal->add_option("--attrs", opt.attrs, "Comma-separated attribute names")->required();
    modal->add_option("--formula", opt.formula, "Modal formula text (box/dia prefixes)")
        ->required();
    add_format_option(modal, opt);
    modal->callback([&] { cmd_modal(opt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const rough::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rough::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
