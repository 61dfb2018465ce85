#pragma once

// Regions of the AR-quiver and elementary moves.
//
// A region has two initial vertices (a source and a sink, the source lying
// strictly to the left) and up to three terminal vertices. An elementary move
// replaces one copy of each initial summand by the terminal summands. Index
// names follow the catalog convention: pair vertices I(i',j') (source) and
// I(i,j) (sink) with unprimed indices on the right-hand side of the quiver.

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flagdeg/quiver.hpp"

namespace flagdeg {

enum class RegionKind {
  RectA,
  Ia,
  IbPlus,   // terminals I(i,j'), I+(j), I-(i')
  IbMinus,  // terminals I(i,j'), I-(j), I+(i')
  IcPlus,   // sink I+(i)
  IcMinus,
  IdPlus,  // source I+(j')
  IdMinus,
  IePlus,  // sink I+(i), source I-(i')
  IeMinus,
  II,
};

const char* to_string(RegionKind kind);
std::optional<RegionKind> parse_region_kind(const std::string& text);
bool is_type_two(RegionKind kind);

/// Index parameters; -1 when the kind does not use the slot. `ip`/`jp` are
/// the primed indices. Infinity is encoded as p+1.
struct RegionParams {
  int i = -1;
  int j = -1;
  int ip = -1;
  int jp = -1;

  bool operator==(const RegionParams&) const = default;
};

struct Region {
  QuiverShape shape;
  RegionKind kind = RegionKind::Ia;
  RegionParams params;
  IndecId source;
  IndecId sink;
  std::vector<IndecId> term;     // fake vertex removed
  std::vector<IndecId> members;  // printed set formula, canonical order, fake vertex removed
  // Vertices that must be absent from F for the region to be minimal.
  std::vector<IndecId> blockers;

  std::array<IndecId, 2> init() const { return {source, sink}; }
  bool operator==(const Region& other) const {
    return shape == other.shape && kind == other.kind && params == other.params;
  }
};

std::string to_string(const Region& r);

/// Every region of a shape, generated once and shared.
class RegionCatalog {
 public:
  static std::shared_ptr<const RegionCatalog> of(const QuiverShape& shape);
  explicit RegionCatalog(const QuiverShape& shape);

  const std::vector<Region>& all() const { return regions_; }
  /// Regions with the given source and sink (indices into Quiver::ids()).
  std::span<const int> between(int source, int sink) const;
  std::span<const int> with_sink(int sink) const;

 private:
  std::shared_ptr<const Quiver> quiver_;
  std::vector<Region> regions_;
  std::vector<std::vector<int>> by_pair_;
  std::vector<std::vector<int>> by_sink_;
};

/// All regions whose initial set is {a, b}, in either orientation.
std::vector<Region> regions_between(const QuiverShape& shape, const IndecId& a, const IndecId& b);

/// Vertices on oriented paths from `from` to `to` in the AR-quiver, fake
/// vertex excluded, canonical order.
std::vector<IndecId> path_vertices(const QuiverShape& shape, const IndecId& from, const IndecId& to);

bool is_admissible(const Region& r, const FlagObject& f);
bool is_minimal_admissible(const Region& r, const FlagObject& f);

/// Throws Error if the region is not minimal admissible for f.
FlagObject apply_move(const FlagObject& f, const Region& r);

/// Rank drop of the move at every id: sum over init minus sum over terms of
/// <I, .>, aligned with Quiver::ids().
std::vector<int> move_drop(const Region& r);
std::vector<IndecId> interior(const Region& r);
std::vector<IndecId> nucleus(const Region& r);

/// (r, s): the move's curve is E + tau*E_{rs}. std::nullopt for kinds I.b
/// and for perturbation indices outside [1, p]. Throws on type A.
std::optional<std::pair<int, int>> weak_move_roads(const Region& r);
bool is_weak_move(const Region& r);

}  // namespace flagdeg
