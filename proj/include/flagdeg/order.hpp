#pragma once

// Orbit posets for one dimension vector: enumeration of all objects, the
// move / rank / weak orders, Hasse diagrams, and the constructive chain of
// elementary moves between rank-comparable objects.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "flagdeg/bracket.hpp"
#include "flagdeg/quiver.hpp"
#include "flagdeg/regions.hpp"

namespace flagdeg {

/// Square boolean matrix with 64-bit packed rows.
class Relation {
 public:
  Relation() = default;
  explicit Relation(int size);

  int size() const { return size_; }
  bool test(int x, int y) const { return (rows_[index(x, y)] >> (y & 63)) & 1U; }
  void set(int x, int y) { rows_[index(x, y)] |= std::uint64_t{1} << (y & 63); }
  std::span<const std::uint64_t> row(int x) const {
    return std::span<const std::uint64_t>(rows_).subspan(static_cast<std::size_t>(x) * words_,
                                                         words_);
  }

  /// Reflexive-transitive closure of a directed edge list.
  static Relation closure(int size, std::span<const std::pair<int, int>> edges);

  int count() const;         // set cells
  int strict_count() const;  // set cells off the diagonal
  bool operator==(const Relation& other) const = default;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(x) * words_ + static_cast<std::size_t>(y >> 6);
  }
  std::uint64_t* row_data(int x) { return rows_.data() + static_cast<std::size_t>(x) * words_; }

  int size_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

struct MoveEdge {
  int from = 0;
  int to = 0;
  Region region;
};

enum class OrderKind { Move, Rank, Weak };
const char* to_string(OrderKind kind);

struct OrbitPoset {
  QuiverShape shape;
  DimVector dv;
  OrderKind order = OrderKind::Move;
  std::vector<FlagObject> nodes;  // canonical order
  std::vector<MoveEdge> edges;    // empty for the rank order
  Relation relation;              // relation.test(x, y) means nodes[x] <= nodes[y]

  std::optional<int> find(const FlagObject& f) const;
  /// Edge endpoints with parallel edges collapsed, sorted.
  std::vector<std::pair<int, int>> distinct_edges() const;
  /// Nodes with nothing strictly above them.
  std::vector<int> maximal() const;
};

/// All objects of dimension vector dv in canonical order. Empty if dv is not
/// a valid dimension vector.
std::vector<FlagObject> enumerate_objects(const DimVector& dv);

OrbitPoset move_poset(const DimVector& dv);
OrbitPoset rank_poset(const DimVector& dv);
/// Throws Error for type A.
OrbitPoset weak_poset(const DimVector& dv);
/// Restricts a move poset to its weak edges and recloses.
OrbitPoset weak_poset_from(const OrbitPoset& moves);

/// Cover pairs (x, y) of a partial order, sorted. Throws Error if the
/// relation is not antisymmetric.
std::vector<std::pair<int, int>> transitive_reduction(const Relation& relation);

struct DominantMove {
  Region region;
  FlagObject result;
};

/// Index of the rightmost id where the rank vectors differ (max column,
/// ties by canonical order), or std::nullopt if they agree.
std::optional<int> rightmost_difference(const RankVector& lower, const RankVector& upper);

/// True if rank(f) - rank(target) >= drop of the region at every id.
bool is_dominant(const Region& r, const RankVector& f, const RankVector& target);

/// One step of the rank-to-move construction. Requires f <=rk target and
/// f != target; throws Error if no dominant minimal admissible region with
/// the rightmost differing sink exists.
DominantMove find_dominant_move(const FlagObject& f, const FlagObject& target);

struct ChainStep {
  Region region;
  FlagObject object;  // object after the move
};

/// Elementary moves leading from f to target. Requires f <=rk target.
std::vector<ChainStep> move_chain(const FlagObject& f, const FlagObject& target);

}  // namespace flagdeg
