#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "flatcomp/json_io.hpp"
#include "flatcomp/suites.hpp"

namespace {

using flatcomp::Json;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitSuiteFailure = 2;
constexpr int kExitPrecondition = 3;

std::string output_path;  // empty means stdout

void emit(const Json& doc) {
    if (output_path.empty()) {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw flatcomp::parse_error("cannot write \"" + output_path + "\"");
    out << doc.dump(2) << "\n";
}

Json load_input(const std::string& path) { return flatcomp::load_json_file(path); }

std::filesystem::path dir_of(const std::string& path) {
    return std::filesystem::path(path).parent_path();
}

std::string violation_kind(const flatcomp::AxiomViolation& v) {
    return v.kind == flatcomp::AxiomViolation::Kind::ZeroDiagonal ? "zero-diagonal" : "triangle";
}

int cmd_validate(const std::string& input) {
    const Json doc = load_input(input);
    auto objects_json = doc.at("objects");
    std::vector<std::string> objects;
    for (const auto& o : objects_json) objects.push_back(o.get<std::string>());
    std::vector<std::vector<flatcomp::Cost>> dist;
    for (const auto& row : doc.at("dist")) {
        std::vector<flatcomp::Cost> cells;
        for (const auto& cell : row) cells.push_back(flatcomp::parse_cost(cell.get<std::string>()));
        dist.push_back(std::move(cells));
    }
    const auto validation = flatcomp::validate_space(std::move(objects), std::move(dist));
    Json report;
    report["valid"] = validation.ok();
    if (!validation.ok()) {
        Json violations = Json::array();
        for (const auto& v : validation.violations) {
            Json entry;
            entry["kind"] = violation_kind(v);
            const auto& names = doc.at("objects");
            if (v.kind == flatcomp::AxiomViolation::Kind::ZeroDiagonal) {
                entry["object"] = names.at(v.x);
                entry["value"] = to_string(v.d_xz);
            } else {
                entry["x"] = names.at(v.x);
                entry["y"] = names.at(v.y);
                entry["z"] = names.at(v.z);
                entry["d_xz"] = to_string(v.d_xz);
                entry["d_xy"] = to_string(v.d_xy);
                entry["d_yz"] = to_string(v.d_yz);
            }
            violations.push_back(std::move(entry));
        }
        report["violations"] = std::move(violations);
    }
    emit(report);
    return validation.ok() ? kExitOk : kExitInputError;
}

int cmd_classify(const std::string& input) {
    const auto filter = flatcomp::filter_from_json(load_input(input), dir_of(input));
    const auto c = flatcomp::classify(filter);
    Json report;
    report["cauchy"] = c.cauchy ? 1 : 0;
    report["flat"] = c.flat ? 1 : 0;
    report["weakly_flat"] = c.weakly_flat ? 1 : 0;
    emit(report);
    return kExitOk;
}

int cmd_flat_check(const std::string& input, const std::string& base) {
    const Json doc = load_input(input);
    Json report;
    if (base == "bool") {
        const auto [preorder, members] = flatcomp::bool_module_from_json(doc, dir_of(input));
        const auto r = flatcomp::bool_flat_check(*preorder, members);
        report["module_ok"] = r.module_ok ? 1 : 0;
        report["p1"] = r.p1 ? 1 : 0;
        report["p2"] = r.p2 ? 1 : 0;
    } else {
        const auto m = flatcomp::left_module_from_json(doc, dir_of(input));
        report["p1"] = flatcomp::is_p1_flat(m) ? 1 : 0;
        report["p2"] = flatcomp::is_p2_flat(m) ? 1 : 0;
    }
    emit(report);
    return kExitOk;
}

int cmd_complete(const std::string& input, const std::string& base, const std::string& mode) {
    const Json doc = load_input(input);
    if (base == "bool") {
        const auto parsed_mode = flatcomp::preorder_mode_from_string(mode);
        if (!parsed_mode) throw flatcomp::parse_error("unknown bool completion mode \"" + mode + "\"");
        const auto preorder = flatcomp::preorder_from_json(doc, dir_of(input));
        emit(to_json(flatcomp::complete_preorder(preorder, *parsed_mode)));
    } else {
        const auto parsed_mode = flatcomp::completion_mode_from_string(mode);
        if (!parsed_mode) throw flatcomp::parse_error("unknown completion mode \"" + mode + "\"");
        const auto space = flatcomp::space_from_json(doc, dir_of(input));
        emit(to_json(flatcomp::complete(space, *parsed_mode)));
    }
    return kExitOk;
}

int cmd_extend(const std::string& input, const std::string& base, const std::string& mode) {
    const Json doc = load_input(input);
    if (base == "bool") {
        flatcomp::BoolExtendMode parsed_mode;
        if (mode == "p1")
            parsed_mode = flatcomp::BoolExtendMode::P1;
        else if (mode == "ideal")
            parsed_mode = flatcomp::BoolExtendMode::Ideal;
        else
            throw flatcomp::parse_error("unknown bool extension mode \"" + mode + "\"");
        const auto f = flatcomp::monotone_map_from_json(doc, dir_of(input));
        const auto ext = flatcomp::extend_monotone(f, parsed_mode);
        Json report;
        report["mode"] = mode;
        Json points = Json::array(), values = Json::array();
        for (std::size_t i = 0; i < ext.completion.points.size(); ++i) {
            Json members = Json::array();
            for (int x : ext.completion.points[i]) members.push_back(f.source->objects[x]);
            points.push_back(std::move(members));
            values.push_back(f.target->objects[ext.values[i]]);
        }
        report["points"] = std::move(points);
        report["values"] = std::move(values);
        emit(report);
    } else {
        const auto parsed_mode = flatcomp::completion_mode_from_string(mode);
        if (!parsed_mode) throw flatcomp::parse_error("unknown completion mode \"" + mode + "\"");
        const auto f = flatcomp::map_from_json(doc, dir_of(input));
        const auto ext = flatcomp::extend(f, *parsed_mode);
        Json report;
        report["mode"] = mode;
        Json points = Json::array(), values = Json::array();
        for (std::size_t i = 0; i < ext.completion.points.size(); ++i) {
            Json members = Json::array();
            for (int x : ext.completion.points[i].base) members.push_back(f.source->objects[x]);
            points.push_back(std::move(members));
            values.push_back(f.target->objects[ext.values[i]]);
        }
        report["points"] = std::move(points);
        report["values"] = std::move(values);
        emit(report);
    }
    return kExitOk;
}

int cmd_rep(const std::string& input) {
    const auto filter = flatcomp::filter_from_json(load_input(input), dir_of(input));
    const auto rep = flatcomp::representative(filter);
    Json report;
    if (rep)
        report["representative"] = filter.space->objects[*rep];
    else
        report["representative"] = nullptr;
    emit(report);
    return kExitOk;
}

int cmd_verify(const std::string& suite, bool list, const std::string& grid_values,
               int max_objects) {
    if (list) {
        Json names = Json::array();
        for (const auto& name : flatcomp::suite_names()) names.push_back(name);
        emit(names);
        return kExitOk;
    }
    flatcomp::SuiteReport report;
    if (grid_values.empty() && max_objects < 0) {
        report = flatcomp::run_suite(suite);
    } else {
        auto grid = flatcomp::default_grid();
        if (!grid_values.empty()) {
            std::vector<flatcomp::Cost> values;
            std::size_t start = 0;
            while (start <= grid_values.size()) {
                const auto comma = grid_values.find(',', start);
                const auto end = comma == std::string::npos ? grid_values.size() : comma;
                values.push_back(flatcomp::parse_cost(grid_values.substr(start, end - start)));
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
            grid.values = std::move(values);
        }
        if (max_objects >= 0) grid.max_objects = max_objects;
        grid = flatcomp::make_grid(grid.max_objects, grid.values);
        report = flatcomp::run_suite(suite, grid);
    }
    emit(to_json(report));
    return report.passed() ? kExitOk : kExitSuiteFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact completions of finite generalized metric spaces and preorders"};
    app.require_subcommand(1);

    std::string input, mode, base = "cost", suite, grid_values;
    bool list_suites = false;
    int max_objects = -1;

    auto* validate = app.add_subcommand("validate", "check the space axioms on a space document");
    validate->add_option("-i,--input", input, "space document")->required();

    auto* classify = app.add_subcommand("classify", "classify a filter document");
    classify->add_option("-i,--input", input, "filter document")->required();

    auto* flat = app.add_subcommand("flat-check", "flatness flags of a module document");
    flat->add_option("-i,--input", input, "module document")->required();
    flat->add_option("--base", base, "quantale: cost (default) or bool");

    auto* complete = app.add_subcommand("complete", "build a completion");
    complete->add_option("-i,--input", input, "space or preorder document")->required();
    complete->add_option("--mode", mode, "cauchy|p1|p2 (cost) or down|p1|ideal|dm (bool)")
        ->required();
    complete->add_option("--base", base, "quantale: cost (default) or bool");

    auto* extend = app.add_subcommand("extend", "extend a map along the completion of its source");
    extend->add_option("-i,--input", input, "map document")->required();
    extend->add_option("--mode", mode, "cauchy|p1|p2 (cost) or p1|ideal (bool)")->required();
    extend->add_option("--base", base, "quantale: cost (default) or bool");

    auto* rep = app.add_subcommand("rep", "representative of a filter document");
    rep->add_option("-i,--input", input, "filter document")->required();

    auto* verify = app.add_subcommand("verify", "run a law-checking suite");
    verify->add_option("--suite", suite, "suite name (see --list)");
    verify->add_flag("--list", list_suites, "list registered suites");
    verify->add_option("--grid", grid_values, "comma-separated cost values, e.g. 0,1/2,1,inf");
    verify->add_option("--max-objects", max_objects, "object cap for enumerated instances");

    for (auto* sub : {validate, classify, flat, complete, extend, rep, verify})
        sub->add_option("-o,--output", output_path, "write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (validate->parsed()) return cmd_validate(input);
        if (classify->parsed()) return cmd_classify(input);
        if (flat->parsed()) return cmd_flat_check(input, base);
        if (complete->parsed()) return cmd_complete(input, base, mode);
        if (extend->parsed()) return cmd_extend(input, base, mode);
        if (rep->parsed()) return cmd_rep(input);
        if (verify->parsed()) {
            if (!list_suites && suite.empty()) {
                std::cerr << "verify: provide --suite NAME or --list\n";
                return kExitInputError;
            }
            return cmd_verify(suite, list_suites, grid_values, max_objects);
        }
    } catch (const flatcomp::target_not_complete& e) {
        Json err;
        err["error"] = "target-not-complete";
        err["witness"] = e.witness;
        emit(err);
        return kExitPrecondition;
    } catch (const flatcomp::target_lacks_lub& e) {
        Json err;
        err["error"] = "target-lacks-lub";
        err["witness"] = e.witness;
        emit(err);
        return kExitPrecondition;
    } catch (const flatcomp::unknown_suite& e) {
        std::cerr << e.what() << "\n";
        return kExitInputError;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
