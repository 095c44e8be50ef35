#include "flatcomp/json_io.hpp"

#include <algorithm>
#include <fstream>

namespace flatcomp {

namespace {

Json resolve(const Json& field, const std::filesystem::path& base_dir) {
    if (field.is_string())
        return load_json_file(base_dir / field.get<std::string>());
    return field;
}

std::vector<std::string> string_list(const Json& arr, const char* what) {
    if (!arr.is_array()) throw parse_error(std::string(what) + ": expected an array");
    std::vector<std::string> out;
    for (const auto& item : arr) {
        if (!item.is_string()) throw parse_error(std::string(what) + ": expected strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

const Json& field(const Json& doc, const char* name) {
    if (!doc.is_object() || !doc.contains(name))
        throw parse_error(std::string("document is missing field \"") + name + "\"");
    return doc.at(name);
}

}  // namespace

Json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open \"" + path.string() + "\"");
    return Json::parse(in);  // nlohmann reports the byte position on failure
}

SpacePtr space_from_json(const Json& doc, const std::filesystem::path& base_dir) {
    const Json resolved = resolve(doc, base_dir);
    auto objects = string_list(field(resolved, "objects"), "objects");
    const Json& rows = field(resolved, "dist");
    if (!rows.is_array()) throw parse_error("dist: expected an array of rows");
    std::vector<std::vector<Cost>> dist;
    for (const auto& row : rows) {
        std::vector<Cost> out;
        for (const auto& cell : row) {
            if (!cell.is_string()) throw parse_error("dist: entries must be cost strings");
            out.push_back(parse_cost(cell.get<std::string>()));
        }
        dist.push_back(std::move(out));
    }
    auto validation = validate_space(std::move(objects), std::move(dist));
    if (!validation.ok()) {
        const auto& v = validation.violations.front();
        if (v.kind == AxiomViolation::Kind::ZeroDiagonal)
            throw parse_error("space: nonzero self-distance at object " + std::to_string(v.x));
        throw parse_error("space: triangle violation at objects (" + std::to_string(v.x) + "," +
                          std::to_string(v.y) + "," + std::to_string(v.z) + ")");
    }
    return validation.space;
}

PreorderPtr preorder_from_json(const Json& doc, const std::filesystem::path& base_dir) {
    const Json resolved = resolve(doc, base_dir);
    auto objects = string_list(field(resolved, "objects"), "objects");
    const Json& pairs = field(resolved, "le");
    if (!pairs.is_array()) throw parse_error("le: expected an array of pairs");
    std::vector<std::pair<std::string, std::string>> generators;
    for (const auto& pair : pairs) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
            throw parse_error("le: entries must be [from, to] pairs");
        generators.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
    return validate_preorder(std::move(objects), generators);
}

LeftModule left_module_from_json(const Json& doc, const std::filesystem::path& base_dir) {
    SpacePtr space = space_from_json(field(doc, "space"), base_dir);
    const Json& values = field(doc, "values");
    if (!values.is_object()) throw parse_error("values: expected an object");
    std::vector<Cost> costs(space->size(), Cost::zero());
    std::vector<bool> present(space->size(), false);
    for (const auto& [name, value] : values.items()) {
        const int i = space->require(name);
        if (!value.is_string()) throw parse_error("values: entries must be cost strings");
        costs[i] = parse_cost(value.get<std::string>());
        present[i] = true;
    }
    for (int i = 0; i < space->size(); ++i)
        if (!present[i]) throw parse_error("values: missing object \"" + space->objects[i] + "\"");
    return make_left_module(std::move(space), std::move(costs));
}

PrincipalFilter filter_from_json(const Json& doc, const std::filesystem::path& base_dir) {
    SpacePtr space = space_from_json(field(doc, "space"), base_dir);
    return make_filter(space, string_list(field(doc, "base"), "base"));
}

FwdSeq seq_from_json(const Json& doc, const std::filesystem::path& base_dir) {
    SpacePtr space = space_from_json(field(doc, "space"), base_dir);
    std::vector<int> prefix, cycle;
    for (const auto& name : string_list(field(doc, "prefix"), "prefix"))
        prefix.push_back(space->require(name));
    for (const auto& name : string_list(field(doc, "cycle"), "cycle"))
        cycle.push_back(space->require(name));
    return make_seq(std::move(space), std::move(prefix), std::move(cycle));
}

NonexpansiveMap map_from_json(const Json& doc, const std::filesystem::path& base_dir) {
    SpacePtr source = space_from_json(field(doc, "source"), base_dir);
    SpacePtr target = space_from_json(field(doc, "target"), base_dir);
    const Json& entries = field(doc, "map");
    if (!entries.is_object()) throw parse_error("map: expected an object");
    std::vector<int> assignment(source->size(), -1);
    for (const auto& [from, to] : entries.items()) {
        if (!to.is_string()) throw parse_error("map: values must be object names");
        assignment[source->require(from)] = target->require(to.get<std::string>());
    }
    for (int i = 0; i < source->size(); ++i)
        if (assignment[i] < 0)
            throw parse_error("map: missing object \"" + source->objects[i] + "\"");
    try {
        return make_nonexpansive(std::move(source), std::move(target), std::move(assignment));
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("map: ") + e.what());
    }
}

MonotoneMap monotone_map_from_json(const Json& doc, const std::filesystem::path& base_dir) {
    PreorderPtr source = preorder_from_json(field(doc, "source"), base_dir);
    PreorderPtr target = preorder_from_json(field(doc, "target"), base_dir);
    const Json& entries = field(doc, "map");
    if (!entries.is_object()) throw parse_error("map: expected an object");
    std::vector<int> assignment(source->size(), -1);
    for (const auto& [from, to] : entries.items()) {
        if (!to.is_string()) throw parse_error("map: values must be object names");
        assignment[source->require(from)] = target->require(to.get<std::string>());
    }
    for (int i = 0; i < source->size(); ++i)
        if (assignment[i] < 0)
            throw parse_error("map: missing object \"" + source->objects[i] + "\"");
    try {
        return make_monotone(std::move(source), std::move(target), std::move(assignment));
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("map: ") + e.what());
    }
}

std::pair<PreorderPtr, std::vector<int>> bool_module_from_json(
    const Json& doc, const std::filesystem::path& base_dir) {
    PreorderPtr preorder = preorder_from_json(field(doc, "preorder"), base_dir);
    std::vector<int> members;
    for (const auto& name : string_list(field(doc, "members"), "members"))
        members.push_back(preorder->require(name));
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return {std::move(preorder), std::move(members)};
}

Json to_json(const QuasiMetricSpace& space) {
    Json doc;
    doc["objects"] = space.objects;
    Json rows = Json::array();
    for (const auto& row : space.dist) {
        Json cells = Json::array();
        for (const Cost& c : row) cells.push_back(to_string(c));
        rows.push_back(std::move(cells));
    }
    doc["dist"] = std::move(rows);
    return doc;
}

Json to_json(const Preorder& preorder) {
    Json doc;
    doc["objects"] = preorder.objects;
    Json pairs = Json::array();
    for (int x = 0; x < preorder.size(); ++x)
        for (int y = 0; y < preorder.size(); ++y)
            if (x != y && preorder.leq(x, y))
                pairs.push_back(Json::array({preorder.objects[x], preorder.objects[y]}));
    doc["le"] = std::move(pairs);
    return doc;
}

Json to_json(const PrincipalFilter& filter) {
    Json doc;
    doc["space"] = to_json(*filter.space);
    Json base = Json::array();
    for (int x : filter.base) base.push_back(filter.space->objects[x]);
    doc["base"] = std::move(base);
    return doc;
}

Json to_json(const LeftModule& m) {
    Json doc;
    doc["space"] = to_json(*m.space);
    Json values = Json::object();
    for (int x = 0; x < m.space->size(); ++x)
        values[m.space->objects[x]] = to_string(m.values[x]);
    doc["values"] = std::move(values);
    return doc;
}

Json to_json(const FwdSeq& seq) {
    Json doc;
    doc["space"] = to_json(*seq.space);
    Json prefix = Json::array(), cycle = Json::array();
    for (int x : seq.prefix) prefix.push_back(seq.space->objects[x]);
    for (int x : seq.cycle) cycle.push_back(seq.space->objects[x]);
    doc["prefix"] = std::move(prefix);
    doc["cycle"] = std::move(cycle);
    return doc;
}

Json to_json(const CompletedSpace& completion) {
    Json doc;
    doc["mode"] = to_string(completion.mode);
    Json points = Json::array();
    for (const auto& point : completion.points) {
        Json members = Json::array();
        for (int x : point.base) members.push_back(completion.base_space->objects[x]);
        points.push_back(std::move(members));
    }
    doc["points"] = std::move(points);
    Json rows = Json::array();
    for (const auto& row : completion.space->dist) {
        Json cells = Json::array();
        for (const Cost& c : row) cells.push_back(to_string(c));
        rows.push_back(std::move(cells));
    }
    doc["dist"] = std::move(rows);
    return doc;
}

Json to_json(const CompletedPreorder& completion) {
    Json doc;
    doc["mode"] = to_string(completion.mode);
    Json points = Json::array();
    for (const auto& point : completion.points) {
        Json members = Json::array();
        for (int x : point) members.push_back(completion.base->objects[x]);
        points.push_back(std::move(members));
    }
    doc["points"] = std::move(points);
    Json rows = Json::array();
    for (const auto& row : completion.preorder->le) {
        Json cells = Json::array();
        for (auto bit : row) cells.push_back(static_cast<int>(bit));
        rows.push_back(std::move(cells));
    }
    doc["le"] = std::move(rows);
    return doc;
}

}  // namespace flatcomp
