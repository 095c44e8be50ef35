#pragma once

#include <filesystem>

#include <json.hpp>

#include "flatcomp/completion.hpp"
#include "flatcomp/preorder.hpp"

namespace flatcomp {

using Json = nlohmann::ordered_json;

/// Parsers for the document formats. A "space"/"preorder" field may be the
/// inline document or a string holding a path, resolved against base_dir.
SpacePtr space_from_json(const Json& doc, const std::filesystem::path& base_dir = {});
PreorderPtr preorder_from_json(const Json& doc, const std::filesystem::path& base_dir = {});
LeftModule left_module_from_json(const Json& doc, const std::filesystem::path& base_dir = {});
PrincipalFilter filter_from_json(const Json& doc, const std::filesystem::path& base_dir = {});
FwdSeq seq_from_json(const Json& doc, const std::filesystem::path& base_dir = {});
NonexpansiveMap map_from_json(const Json& doc, const std::filesystem::path& base_dir = {});
MonotoneMap monotone_map_from_json(const Json& doc, const std::filesystem::path& base_dir = {});

/// Bool-side module document: {"preorder": ..., "members": [...]}.
std::pair<PreorderPtr, std::vector<int>> bool_module_from_json(
    const Json& doc, const std::filesystem::path& base_dir = {});

Json to_json(const QuasiMetricSpace& space);
Json to_json(const Preorder& preorder);
Json to_json(const PrincipalFilter& filter);
Json to_json(const LeftModule& m);
Json to_json(const FwdSeq& seq);
Json to_json(const CompletedSpace& completion);
Json to_json(const CompletedPreorder& completion);

Json load_json_file(const std::filesystem::path& path);

}  // namespace flatcomp
