#pragma once

// JSON and DOT serialization for ids, objects, rank vectors, regions,
// posets and subspace configurations.

#include <string>
#include <vector>

#include "json.hpp"

#include "flagdeg/bracket.hpp"
#include "flagdeg/oracle.hpp"
#include "flagdeg/order.hpp"
#include "flagdeg/quiver.hpp"
#include "flagdeg/regions.hpp"

namespace flagdeg {

using Json = nlohmann::ordered_json;

Json to_json(const QuiverShape& shape);
QuiverShape shape_from_json(const Json& j);

/// {"kind":"pair|plus|minus","i":..,"j":int|"inf"}; "j" only for pairs.
Json to_json(const QuiverShape& shape, const IndecId& id);
IndecId id_from_json(const QuiverShape& shape, const Json& j);

/// {"shape":{...},"summands":[{"id":{...},"mult":m},...]}
Json to_json(const FlagObject& f);
FlagObject object_from_json(const Json& j);

Json to_json(const RankVector& rv);
Json to_json(const Region& r);

/// {"n","a","q","U","W"} for type D; {"n","a","b","q","second_flag"} for type A.
/// An optional "flag" (n x n, first a_m rows span V_m) is normalized away on input.
Json to_json(const SubspaceConfig& c);
SubspaceConfig config_from_json(const Json& j);

std::string base64_encode(const std::vector<unsigned char>& bytes);
/// Relation rows packed little-endian bitwise, one base64 string per row.
std::vector<std::string> relation_rows_base64(const Relation& r);

/// Hasse data: nodes, edges and relation. `edges` are pairs into nodes.
/// Labels are region kinds when the edge list is the raw move list.
struct HasseDiagram {
  const OrbitPoset* poset = nullptr;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;  // empty, or one per edge
};

/// The raw move graph (labeled, parallel edges kept).
HasseDiagram move_graph(const OrbitPoset& poset);
/// The cover relation of the poset's relation (unlabeled).
HasseDiagram cover_graph(const OrbitPoset& poset);
/// Deduplicated move edges (unlabeled).
HasseDiagram reduced_move_graph(const OrbitPoset& poset);

std::string to_dot(const HasseDiagram& h);
Json to_json(const HasseDiagram& h);

}  // namespace flagdeg
