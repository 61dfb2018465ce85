#pragma once

// Hom-dimensions <I,J> between indecomposables, rank vectors of objects and
// the rank order.
//
// The rank order is reversed with respect to the rank numbers:
//   F <=rk F'  iff  <I,F> >= <I,F'> for every indecomposable I.

#include <memory>
#include <span>
#include <vector>

#include "flagdeg/quiver.hpp"

namespace flagdeg {

/// <I,J> from closed forms. Fake on either side gives 0.
int bracket(const QuiverShape& shape, const IndecId& I, const IndecId& J);

/// <I,J> over all non-fake ids of one shape, indexed by Quiver::ids(), plus
/// the exact inverse used to recover multiplicities from rank numbers.
class BracketTable {
 public:
  static std::shared_ptr<const BracketTable> of(const QuiverShape& shape);

  explicit BracketTable(const QuiverShape& shape);

  const Quiver& quiver() const { return *quiver_; }
  int size() const { return size_; }
  int at(int row, int column) const { return table_[row * size_ + column]; }
  std::span<const int> row(int index) const {
    return std::span<const int>(table_).subspan(static_cast<std::size_t>(index * size_),
                                                static_cast<std::size_t>(size_));
  }

  /// Solves table * mult = ranks exactly. Returns false if the solution is
  /// not a vector of nonnegative integers.
  bool solve(std::span<const int> ranks, std::vector<int>& mult) const;

 private:
  std::shared_ptr<const Quiver> quiver_;
  int size_ = 0;
  std::vector<int> table_;
  // Inverse of the table as exact fractions, row-major.
  std::vector<long long> inverse_num_;
  std::vector<long long> inverse_den_;
};

class RankVector {
 public:
  RankVector() = default;
  RankVector(const QuiverShape& shape, std::vector<int> values);

  const QuiverShape& shape() const { return quiver_->shape(); }
  const Quiver& quiver() const { return *quiver_; }
  std::span<const int> values() const { return values_; }
  int operator[](int index) const { return values_[index]; }
  int at(const IndecId& id) const;  // 0 for the fake vertex

  bool operator==(const RankVector& other) const {
    return quiver_ == other.quiver_ && values_ == other.values_;
  }

 private:
  std::shared_ptr<const Quiver> quiver_;
  std::vector<int> values_;
};

RankVector rank_vector(const FlagObject& f);

enum class Comparison { Equal, Less, Greater, Incomparable };

const char* to_string(Comparison c);

/// Throws Error unless both objects share shape and dimension vector.
bool rank_leq(const FlagObject& f, const FlagObject& g);
Comparison rank_compare(const FlagObject& f, const FlagObject& g);

/// Entrywise >=, the rank order on rank vectors.
bool dominates(const RankVector& lower, const RankVector& upper);

/// The unique object with the given rank numbers. Throws Error("not a rank
/// vector of any object") when no nonnegative integral solution exists.
FlagObject object_from_ranks(const QuiverShape& shape, const RankVector& ranks);

}  // namespace flagdeg
