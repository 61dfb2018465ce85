#include "flagdeg/bracket.hpp"

#include <boost/rational.hpp>
#include <map>
#include <mutex>

namespace flagdeg {

namespace {

using Fraction = boost::rational<long long>;

int ind(bool b) { return b ? 1 : 0; }

// Intersection dimensions of the standard representative of a type D
// indecomposable J. `m` and `mm` are flag indices in [1, p].
struct DConfigOf {
  IndecId J;
  int p;

  bool finite_pair() const { return J.is_pair() && J.i >= 1 && J.j <= p; }
  bool zero_pair() const { return J.is_pair() && J.i == 0; }

  int flag(int m) const {  // dim V_m
    if (J.is_zigzag()) return ind(m >= J.i);
    return ind(J.i >= 1 && m >= J.i) + ind(J.j <= p && m >= J.j);
  }
  int with_u(int m) const {  // dim V_m ∩ U
    if (J.kind == IdKind::Plus) return ind(m >= J.i);
    if (J.kind == IdKind::Minus) return 0;
    return ind(J.j <= p && m >= J.j);
  }
  int with_w(int m) const {  // dim V_m ∩ W
    if (J.kind == IdKind::Minus) return ind(m >= J.i);
    if (J.kind == IdKind::Plus) return 0;
    return ind(J.j <= p && m >= J.j);
  }
  int with_uw(int m) const {  // dim V_m ∩ U ∩ W
    return zero_pair() ? ind(m >= J.j) : 0;
  }
  // dim V_m ∩ ((V_mm ∩ U) + (V_mm ∩ W)), m < mm.
  int with_sum(int m, int mm) const {
    if (J.is_zigzag()) return ind(m >= J.i);
    if (J.j > p) return 0;
    if (zero_pair()) return ind(m >= J.j);
    return mm >= J.j ? flag(m) : 0;
  }
};

}  // namespace

int bracket(const QuiverShape& shape, const IndecId& I, const IndecId& J) {
  auto quiver = Quiver::of(shape);
  if (!quiver->contains(I) || !quiver->contains(J)) throw Error("bracket: id not in shape");
  if (quiver->is_fake(I) || quiver->is_fake(J)) return 0;
  if (shape.is_a()) return ind(I.i >= J.i) * ind(I.j >= J.j);

  DConfigOf c{J, shape.p};
  if (I.kind == IdKind::Plus) return c.with_u(I.i);
  if (I.kind == IdKind::Minus) return c.with_w(I.i);
  if (I.j == shape.inf()) return c.flag(I.i);
  if (I.i == 0) return c.with_uw(I.j);
  return c.with_uw(I.j) + c.with_sum(I.i, I.j);
}

// ---------------------------------------------------------------------------

std::shared_ptr<const BracketTable> BracketTable::of(const QuiverShape& shape) {
  static std::mutex mutex;
  static std::map<QuiverShape, std::shared_ptr<const BracketTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[shape];
  if (!slot) slot = std::make_shared<const BracketTable>(shape);
  return slot;
}

BracketTable::BracketTable(const QuiverShape& shape)
    : quiver_(Quiver::of(shape)), size_(quiver_->size()) {
  const auto& ids = quiver_->ids();
  const auto n = static_cast<std::size_t>(size_);
  table_.resize(n * n);
  for (int r = 0; r < size_; ++r)
    for (int c = 0; c < size_; ++c) table_[r * size_ + c] = bracket(shape, ids[r], ids[c]);

  // Gauss-Jordan over the rationals on [table | identity].
  std::vector<Fraction> left(n * n), right(n * n, Fraction(0));
  for (std::size_t x = 0; x < n * n; ++x) left[x] = Fraction(table_[x]);
  for (std::size_t d = 0; d < n; ++d) right[d * n + d] = Fraction(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && left[pivot * n + c].numerator() == 0) ++pivot;
    if (pivot == n) throw Error("bracket table is singular for shape " + to_string(shape));
    if (pivot != c) {
      for (std::size_t x = 0; x < n; ++x) {
        std::swap(left[pivot * n + x], left[c * n + x]);
        std::swap(right[pivot * n + x], right[c * n + x]);
      }
    }
    Fraction inv = Fraction(1) / left[c * n + c];
    for (std::size_t x = 0; x < n; ++x) {
      left[c * n + x] *= inv;
      right[c * n + x] *= inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || left[r * n + c].numerator() == 0) continue;
      Fraction factor = left[r * n + c];
      for (std::size_t x = 0; x < n; ++x) {
        left[r * n + x] -= factor * left[c * n + x];
        right[r * n + x] -= factor * right[c * n + x];
      }
    }
  }
  inverse_num_.resize(n * n);
  inverse_den_.resize(n * n);
  for (std::size_t x = 0; x < n * n; ++x) {
    inverse_num_[x] = right[x].numerator();
    inverse_den_[x] = right[x].denominator();
  }
}

bool BracketTable::solve(std::span<const int> ranks, std::vector<int>& mult) const {
  if (static_cast<int>(ranks.size()) != size_) throw Error("rank vector has the wrong length");
  mult.assign(static_cast<std::size_t>(size_), 0);
  for (int r = 0; r < size_; ++r) {
    Fraction value(0);
    for (int c = 0; c < size_; ++c) {
      long long num = inverse_num_[r * size_ + c];
      if (num == 0 || ranks[c] == 0) continue;
      value += Fraction(num * ranks[c], inverse_den_[r * size_ + c]);
    }
    if (value.denominator() != 1 || value.numerator() < 0) return false;
    mult[r] = static_cast<int>(value.numerator());
  }
  return true;
}

// ---------------------------------------------------------------------------

RankVector::RankVector(const QuiverShape& shape, std::vector<int> values)
    : quiver_(Quiver::of(shape)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != quiver_->size()) {
    throw Error("rank vector must have one entry per indecomposable");
  }
}

int RankVector::at(const IndecId& id) const {
  if (quiver_->is_fake(id)) return 0;
  return values_[quiver_->index_of(id)];
}

RankVector rank_vector(const FlagObject& f) {
  auto table = BracketTable::of(f.shape());
  const int n = table->size();
  std::vector<int> values(static_cast<std::size_t>(n), 0);
  for (int c = 0; c < n; ++c) {
    int m = f.mult_at(c);
    if (m == 0) continue;
    for (int r = 0; r < n; ++r) values[r] += m * table->at(r, c);
  }
  return RankVector(f.shape(), std::move(values));
}

const char* to_string(Comparison c) {
  switch (c) {
    case Comparison::Equal:
      return "eq";
    case Comparison::Less:
      return "lt";
    case Comparison::Greater:
      return "gt";
    case Comparison::Incomparable:
      return "incomparable";
  }
  return "?";
}

bool dominates(const RankVector& lower, const RankVector& upper) {
  if (lower.shape() != upper.shape()) throw Error("rank vectors of different shapes");
  auto x = lower.values();
  auto y = upper.values();
  for (std::size_t m = 0; m < x.size(); ++m)
    if (x[m] < y[m]) return false;
  return true;
}

namespace {

void require_same_dim(const FlagObject& f, const FlagObject& g) {
  if (f.shape() != g.shape()) throw Error("objects live on different quivers");
  if (object_dim(f) != object_dim(g)) {
    throw Error("dimension-vector mismatch: " + to_string(object_dim(f)) + " vs " +
                to_string(object_dim(g)));
  }
}

}  // namespace

bool rank_leq(const FlagObject& f, const FlagObject& g) {
  require_same_dim(f, g);
  return dominates(rank_vector(f), rank_vector(g));
}

Comparison rank_compare(const FlagObject& f, const FlagObject& g) {
  require_same_dim(f, g);
  auto rf = rank_vector(f);
  auto rg = rank_vector(g);
  bool le = dominates(rf, rg);
  bool ge = dominates(rg, rf);
  if (le && ge) return Comparison::Equal;
  if (le) return Comparison::Less;
  if (ge) return Comparison::Greater;
  return Comparison::Incomparable;
}

FlagObject object_from_ranks(const QuiverShape& shape, const RankVector& ranks) {
  if (ranks.shape() != shape) throw Error("rank vector belongs to another shape");
  auto table = BracketTable::of(shape);
  std::vector<int> mult;
  if (!table->solve(ranks.values(), mult)) throw Error("not a rank vector of any object");
  FlagObject f(shape);
  for (int idx = 0; idx < table->size(); ++idx)
    if (mult[idx]) f.add_at(idx, mult[idx]);
  if (!(rank_vector(f) == ranks)) throw Error("not a rank vector of any object");
  return f;
}

}  // namespace flagdeg
