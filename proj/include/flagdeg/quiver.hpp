#pragma once

// Quiver shapes, the catalog of indecomposable injective representations,
// dimension vectors and objects (direct sums of indecomposables).
//
// Type A is the linear quiver Q_{p,q,1}: indecomposables I(i,j), 1<=i<=p,
// 1<=j<=q, all one-dimensional. Type D is Q_{p,2,2} (a flag plus two
// subspaces U, W). Its indecomposables are I+(i), I-(i) and the pair family
// I(i,j) with 0<=i<j<=p+1, where index 0 and index p+1 ("inf") give the
// one-dimensional series I(0,j) and I(i,inf). I(0,inf) is the zero object
// ("fake vertex"); it exists as an id but never occurs as a summand.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace flagdeg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class QuiverType : std::uint8_t { A, D };

struct QuiverShape {
  QuiverType type = QuiverType::D;
  int p = 1;
  int q = 0;  // second arm, type A only

  static QuiverShape typeA(int p, int q);
  static QuiverShape typeD(int p);

  bool is_a() const { return type == QuiverType::A; }
  bool is_d() const { return type == QuiverType::D; }
  // Encoding of the index "infinity" for type D.
  int inf() const { return p + 1; }

  bool operator==(const QuiverShape&) const = default;
  auto operator<=>(const QuiverShape&) const = default;
};

std::string to_string(const QuiverShape& shape);

enum class IdKind : std::uint8_t { Pair, Plus, Minus };

/// One vertex of the AR-quiver. Pair covers both type A cells and the type D
/// I(i,j) family; Plus/Minus only use `i`.
struct IndecId {
  IdKind kind = IdKind::Pair;
  int i = 0;
  int j = 0;

  static constexpr IndecId pair(int i, int j) { return {IdKind::Pair, i, j}; }
  static constexpr IndecId plus(int i) { return {IdKind::Plus, i, 0}; }
  static constexpr IndecId minus(int i) { return {IdKind::Minus, i, 0}; }

  bool is_pair() const { return kind == IdKind::Pair; }
  bool is_zigzag() const { return kind != IdKind::Pair; }

  bool operator==(const IndecId&) const = default;
  auto operator<=>(const IndecId&) const = default;
};

/// "I(1,2)", "I(2,inf)", "I+(3)", "I-(1)".
std::string to_string(const QuiverShape& shape, const IndecId& id);

/// Dimension vector stored flat: type A is (a_1..a_p, b_1..b_q), type D is
/// (a_1..a_p, k, l).
class DimVector {
 public:
  DimVector() = default;
  DimVector(QuiverShape shape, std::vector<int> entries);

  static DimVector zero(const QuiverShape& shape);
  static DimVector typeA(std::vector<int> a, std::vector<int> b);
  static DimVector typeD(std::vector<int> a, int k, int l);

  const QuiverShape& shape() const { return shape_; }
  std::span<const int> entries() const { return entries_; }

  // Flag dimensions, 1-based; a(0) == 0.
  int a(int m) const;
  int b(int m) const;
  int k() const;
  int l() const;
  int n() const;

  /// Reason the vector is not a valid dimension vector, if any.
  std::optional<std::string> defect() const;
  bool is_valid() const { return !defect().has_value(); }

  DimVector& add(const DimVector& other, int times = 1);

  bool operator==(const DimVector&) const = default;

 private:
  QuiverShape shape_;
  std::vector<int> entries_;
};

/// "1,2;1;1" (type D) or "1,2,3;1,2,3" (type A).
std::string to_string(const DimVector& dv);

/// Parses the CLI syntax. Two semicolons means type D, one means type A.
/// Throws Error on malformed input; does not check validity.
DimVector parse_dim_vector(const std::string& text);

/// Immutable per-shape catalog: ids in canonical order, their dimension
/// vectors, grid columns, and AR arrows. Instances are shared and cached.
class Quiver {
 public:
  static std::shared_ptr<const Quiver> of(const QuiverShape& shape);

  const QuiverShape& shape() const { return shape_; }

  /// Non-fake ids in canonical order: descending column, then ascending i,
  /// then pair < plus < minus.
  const std::vector<IndecId>& ids() const { return ids_; }
  int size() const { return static_cast<int>(ids_.size()); }

  /// Index into ids(); std::nullopt for the fake vertex or foreign ids.
  std::optional<int> find(const IndecId& id) const;
  /// Index into ids(); throws for anything that is not a non-fake id.
  int index_of(const IndecId& id) const;

  bool contains(const IndecId& id) const;  // fake included
  bool is_fake(const IndecId& id) const;
  IndecId fake() const;  // type D only

  int col(const IndecId& id) const;
  const DimVector& dim(int index) const { return dims_[index]; }
  DimVector dim(const IndecId& id) const;

  /// AR-arrow targets of a vertex; the fake vertex takes part in arrows.
  std::vector<IndecId> successors(const IndecId& id) const;

  /// Roads (type D) through a vertex, ascending.
  std::vector<int> roads(const IndecId& id) const;

  explicit Quiver(const QuiverShape& shape);

 private:
  void check_member(const IndecId& id) const;

  QuiverShape shape_;
  std::vector<IndecId> ids_;
  std::vector<DimVector> dims_;
  std::vector<int> pair_index_;  // (i,j) -> index or -1
  std::vector<int> plus_index_;
  std::vector<int> minus_index_;
};

/// A direct sum of indecomposables, stored as a dense multiplicity vector
/// aligned with Quiver::ids().
class FlagObject {
 public:
  FlagObject() = default;
  explicit FlagObject(const QuiverShape& shape);
  FlagObject(const QuiverShape& shape,
             std::initializer_list<std::pair<IndecId, int>> summands);

  const QuiverShape& shape() const { return quiver_->shape(); }
  const Quiver& quiver() const { return *quiver_; }

  int mult(const IndecId& id) const;
  int mult_at(int index) const { return mult_[index]; }
  std::span<const int> multiplicities() const { return mult_; }

  /// Adds `count` copies (count may be negative). The fake id is ignored.
  void add(const IndecId& id, int count = 1);
  void add_at(int index, int count = 1);

  /// (id, multiplicity) pairs in canonical order, multiplicity >= 1.
  std::vector<std::pair<IndecId, int>> summands() const;
  int summand_count() const;
  bool empty() const { return summand_count() == 0; }

  bool operator==(const FlagObject& other) const;
  /// Lexicographic order on the canonical summand sequence.
  bool operator<(const FlagObject& other) const;

 private:
  std::shared_ptr<const Quiver> quiver_;
  std::vector<int> mult_;
};

/// "I(0,1) + I(2,inf)", "2*I(1,1)", "0" for the empty object.
std::string to_string(const FlagObject& f);

std::vector<IndecId> list_indecomposables(const QuiverShape& shape);
DimVector indec_dim(const QuiverShape& shape, const IndecId& id);
DimVector object_dim(const FlagObject& f);
std::vector<int> roads_of(const QuiverShape& shape, const IndecId& id);
int col(const QuiverShape& shape, const IndecId& id);

struct ValidationReport {
  bool ok = true;
  // Type D: summands per road, index t-1 for road t. Type A: per row i.
  std::vector<int> path_counts;
  // Type A: per column j. Empty for type D.
  std::vector<int> column_counts;
  // Type D: summands contributing to k and to l.
  int k_count = 0;
  int l_count = 0;
  std::vector<std::string> violations;
};

/// Checks object_dim(f) == dv and reports road/path counts. Throws on a
/// shape mismatch.
ValidationReport validate(const FlagObject& f, const DimVector& dv);

}  // namespace flagdeg
