#include "flagdeg/quiver.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace flagdeg {

QuiverShape QuiverShape::typeA(int p, int q) {
  if (p < 1 || q < 1) throw Error("type A arms must have length >= 1");
  return {QuiverType::A, p, q};
}

QuiverShape QuiverShape::typeD(int p) {
  if (p < 1) throw Error("type D long arm must have length >= 1");
  return {QuiverType::D, p, 0};
}

std::string to_string(const QuiverShape& shape) {
  if (shape.is_a()) {
    return "A(" + std::to_string(shape.p) + "," + std::to_string(shape.q) + ")";
  }
  return "D(" + std::to_string(shape.p) + ")";
}

std::string to_string(const QuiverShape& shape, const IndecId& id) {
  switch (id.kind) {
    case IdKind::Plus:
      return "I+(" + std::to_string(id.i) + ")";
    case IdKind::Minus:
      return "I-(" + std::to_string(id.i) + ")";
    case IdKind::Pair:
      break;
  }
  std::string j = (shape.is_d() && id.j == shape.inf()) ? "inf" : std::to_string(id.j);
  return "I(" + std::to_string(id.i) + "," + j + ")";
}

// ---------------------------------------------------------------------------
// DimVector

namespace {

std::size_t flat_size(const QuiverShape& shape) {
  return shape.is_a() ? static_cast<std::size_t>(shape.p + shape.q)
                      : static_cast<std::size_t>(shape.p + 2);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw Error("not an integer: '" + item + "'");
    }
    while (pos < item.size() && item[pos] == ' ') ++pos;
    if (pos != item.size()) throw Error("not an integer: '" + item + "'");
    out.push_back(value);
  }
  if (out.empty()) throw Error("empty list in dimension vector");
  return out;
}

std::string join(std::span<const int> values) {
  std::string out;
  for (std::size_t m = 0; m < values.size(); ++m) {
    if (m) out += ',';
    out += std::to_string(values[m]);
  }
  return out;
}

}  // namespace

DimVector::DimVector(QuiverShape shape, std::vector<int> entries)
    : shape_(shape), entries_(std::move(entries)) {
  if (entries_.size() != flat_size(shape_)) {
    throw Error("dimension vector has " + std::to_string(entries_.size()) +
                " entries, shape " + to_string(shape_) + " needs " +
                std::to_string(flat_size(shape_)));
  }
}

DimVector DimVector::zero(const QuiverShape& shape) {
  return DimVector(shape, std::vector<int>(flat_size(shape), 0));
}

DimVector DimVector::typeA(std::vector<int> a, std::vector<int> b) {
  auto shape = QuiverShape::typeA(static_cast<int>(a.size()), static_cast<int>(b.size()));
  a.insert(a.end(), b.begin(), b.end());
  return DimVector(shape, std::move(a));
}

DimVector DimVector::typeD(std::vector<int> a, int k, int l) {
  auto shape = QuiverShape::typeD(static_cast<int>(a.size()));
  a.push_back(k);
  a.push_back(l);
  return DimVector(shape, std::move(a));
}

int DimVector::a(int m) const {
  if (m == 0) return 0;
  if (m < 0 || m > shape_.p) throw Error("flag index out of range");
  return entries_[m - 1];
}

int DimVector::b(int m) const {
  if (!shape_.is_a()) throw Error("b() is only defined for type A");
  if (m == 0) return 0;
  if (m < 0 || m > shape_.q) throw Error("flag index out of range");
  return entries_[shape_.p + m - 1];
}

int DimVector::k() const {
  if (!shape_.is_d()) throw Error("k() is only defined for type D");
  return entries_[shape_.p];
}

int DimVector::l() const {
  if (!shape_.is_d()) throw Error("l() is only defined for type D");
  return entries_[shape_.p + 1];
}

int DimVector::n() const { return entries_.empty() ? 0 : entries_[shape_.p - 1]; }

std::optional<std::string> DimVector::defect() const {
  auto check_arm = [](std::span<const int> arm, const char* name) -> std::optional<std::string> {
    int prev = 0;
    for (std::size_t m = 0; m < arm.size(); ++m) {
      if (arm[m] < prev) {
        return std::string(name) + " must be nonnegative and nondecreasing";
      }
      prev = arm[m];
    }
    return std::nullopt;
  };
  std::span<const int> all(entries_);
  if (auto bad = check_arm(all.first(shape_.p), "a")) return bad;
  if (shape_.is_a()) {
    if (auto bad = check_arm(all.subspan(shape_.p), "b")) return bad;
    if (a(shape_.p) != b(shape_.q)) return std::string("a_p must equal b_q");
    return std::nullopt;
  }
  if (k() < 0 || k() > n()) return std::string("k must lie in [0, n]");
  if (l() < 0 || l() > n()) return std::string("l must lie in [0, n]");
  return std::nullopt;
}

DimVector& DimVector::add(const DimVector& other, int times) {
  if (other.shape_ != shape_) throw Error("dimension vectors of different shapes");
  for (std::size_t m = 0; m < entries_.size(); ++m) entries_[m] += times * other.entries_[m];
  return *this;
}

std::string to_string(const DimVector& dv) {
  std::span<const int> all = dv.entries();
  const auto& shape = dv.shape();
  if (shape.is_a()) return join(all.first(shape.p)) + ";" + join(all.subspan(shape.p));
  return join(all.first(shape.p)) + ";" + std::to_string(dv.k()) + ";" + std::to_string(dv.l());
}

DimVector parse_dim_vector(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) parts.push_back(part);
  if (!text.empty() && text.back() == ';') parts.emplace_back();
  if (parts.size() == 3) {
    auto k = parse_int_list(parts[1]);
    auto l = parse_int_list(parts[2]);
    if (k.size() != 1 || l.size() != 1) throw Error("k and l must be single integers");
    return DimVector::typeD(parse_int_list(parts[0]), k[0], l[0]);
  }
  if (parts.size() == 2) return DimVector::typeA(parse_int_list(parts[0]), parse_int_list(parts[1]));
  throw Error("dimension vector must look like 'a1,..,ap;k;l' or 'a1,..,ap;b1,..,bq'");
}

// ---------------------------------------------------------------------------
// Quiver

std::shared_ptr<const Quiver> Quiver::of(const QuiverShape& shape) {
  static std::mutex mutex;
  static std::map<QuiverShape, std::shared_ptr<const Quiver>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[shape];
  if (!slot) slot = std::make_shared<const Quiver>(shape);
  return slot;
}

Quiver::Quiver(const QuiverShape& shape) : shape_(shape) {
  if (shape.p < 1 || (shape.is_a() && shape.q < 1)) throw Error("invalid quiver shape");
  const int p = shape.p;
  if (shape.is_a()) {
    for (int i = 1; i <= p; ++i)
      for (int j = 1; j <= shape.q; ++j) ids_.push_back(IndecId::pair(i, j));
  } else {
    for (int i = 1; i <= p; ++i) {
      ids_.push_back(IndecId::plus(i));
      ids_.push_back(IndecId::minus(i));
    }
    for (int i = 0; i <= p; ++i)
      for (int j = i + 1; j <= p + 1; ++j)
        if (!(i == 0 && j == p + 1)) ids_.push_back(IndecId::pair(i, j));
  }
  std::stable_sort(ids_.begin(), ids_.end(), [this](const IndecId& x, const IndecId& y) {
    int cx = col(x), cy = col(y);
    if (cx != cy) return cx > cy;
    if (x.i != y.i) return x.i < y.i;
    return x.kind < y.kind;
  });

  const int rows = p + 2;
  const int cols = shape.is_a() ? shape.q + 1 : p + 2;
  pair_index_.assign(static_cast<std::size_t>(rows * cols), -1);
  plus_index_.assign(static_cast<std::size_t>(p + 1), -1);
  minus_index_.assign(static_cast<std::size_t>(p + 1), -1);
  for (int idx = 0; idx < size(); ++idx) {
    const auto& id = ids_[idx];
    switch (id.kind) {
      case IdKind::Pair:
        pair_index_[id.i * cols + id.j] = idx;
        break;
      case IdKind::Plus:
        plus_index_[id.i] = idx;
        break;
      case IdKind::Minus:
        minus_index_[id.i] = idx;
        break;
    }
  }

  for (const auto& id : ids_) {
    std::vector<int> e(flat_size(shape), 0);
    if (shape.is_a()) {
      for (int m = id.i; m <= p; ++m) e[m - 1] = 1;
      for (int m = id.j; m <= shape.q; ++m) e[p + m - 1] = 1;
    } else if (id.is_pair()) {
      for (int m = 1; m <= p; ++m) e[m - 1] = (id.i >= 1 && m >= id.i) + (id.j <= p && m >= id.j);
      e[p] = e[p + 1] = id.j <= p ? 1 : 0;
    } else {
      for (int m = id.i; m <= p; ++m) e[m - 1] = 1;
      e[p] = id.kind == IdKind::Plus;
      e[p + 1] = id.kind == IdKind::Minus;
    }
    dims_.emplace_back(shape, std::move(e));
  }
}

bool Quiver::contains(const IndecId& id) const {
  const int p = shape_.p;
  if (shape_.is_a()) return id.is_pair() && id.i >= 1 && id.i <= p && id.j >= 1 && id.j <= shape_.q;
  if (id.is_zigzag()) return id.i >= 1 && id.i <= p && id.j == 0;
  return id.i >= 0 && id.i < id.j && id.j <= p + 1;
}

bool Quiver::is_fake(const IndecId& id) const {
  return shape_.is_d() && id.is_pair() && id.i == 0 && id.j == shape_.inf();
}

IndecId Quiver::fake() const {
  if (!shape_.is_d()) throw Error("the fake vertex exists only in type D");
  return IndecId::pair(0, shape_.inf());
}

void Quiver::check_member(const IndecId& id) const {
  if (!contains(id)) {
    throw Error("id " + to_string(shape_, id) + " does not belong to shape " + to_string(shape_));
  }
}

std::optional<int> Quiver::find(const IndecId& id) const {
  if (!contains(id) || is_fake(id)) return std::nullopt;
  const int cols = shape_.is_a() ? shape_.q + 1 : shape_.p + 2;
  switch (id.kind) {
    case IdKind::Pair:
      return pair_index_[id.i * cols + id.j];
    case IdKind::Plus:
      return plus_index_[id.i];
    case IdKind::Minus:
      return minus_index_[id.i];
  }
  return std::nullopt;
}

int Quiver::index_of(const IndecId& id) const {
  check_member(id);
  auto idx = find(id);
  if (!idx) throw Error("the fake vertex has no index");
  return *idx;
}

int Quiver::col(const IndecId& id) const {
  check_member(id);
  if (shape_.is_a()) return (shape_.p - id.i) + (shape_.q - id.j);
  const int base = 2 * shape_.p + 1;
  if (id.is_pair()) return base - id.i - id.j;
  return base - 2 * id.i;
}

DimVector Quiver::dim(const IndecId& id) const {
  check_member(id);
  if (is_fake(id)) return DimVector::zero(shape_);
  return dims_[*find(id)];
}

std::vector<IndecId> Quiver::successors(const IndecId& id) const {
  check_member(id);
  std::vector<IndecId> out;
  if (shape_.is_a()) {
    if (id.i >= 2) out.push_back(IndecId::pair(id.i - 1, id.j));
    if (id.j >= 2) out.push_back(IndecId::pair(id.i, id.j - 1));
    return out;
  }
  if (id.is_zigzag()) {
    out.push_back(IndecId::pair(id.i - 1, id.i));
    return out;
  }
  if (id.i >= 1) out.push_back(IndecId::pair(id.i - 1, id.j));
  if (id.j - 1 > id.i) {
    out.push_back(IndecId::pair(id.i, id.j - 1));
  } else if (id.i >= 1) {
    out.push_back(IndecId::plus(id.i));
    out.push_back(IndecId::minus(id.i));
  }
  return out;
}

std::vector<int> Quiver::roads(const IndecId& id) const {
  if (!shape_.is_d()) throw Error("roads are defined for type D only");
  check_member(id);
  if (id.is_zigzag()) return {id.i};
  std::vector<int> out;
  if (id.i >= 1) out.push_back(id.i);
  if (id.j <= shape_.p) out.push_back(id.j);
  return out;
}

// ---------------------------------------------------------------------------
// FlagObject

FlagObject::FlagObject(const QuiverShape& shape)
    : quiver_(Quiver::of(shape)), mult_(static_cast<std::size_t>(quiver_->size()), 0) {}

FlagObject::FlagObject(const QuiverShape& shape,
                       std::initializer_list<std::pair<IndecId, int>> summands)
    : FlagObject(shape) {
  for (const auto& [id, count] : summands) add(id, count);
}

int FlagObject::mult(const IndecId& id) const {
  auto idx = quiver_->find(id);
  return idx ? mult_[*idx] : 0;
}

void FlagObject::add(const IndecId& id, int count) {
  if (!quiver_->contains(id)) {
    throw Error("id " + to_string(shape(), id) + " does not belong to shape " + to_string(shape()));
  }
  if (quiver_->is_fake(id)) return;
  add_at(*quiver_->find(id), count);
}

void FlagObject::add_at(int index, int count) {
  int& slot = mult_[index];
  if (slot + count < 0) {
    throw Error("negative multiplicity for " + to_string(shape(), quiver_->ids()[index]));
  }
  slot += count;
}

std::vector<std::pair<IndecId, int>> FlagObject::summands() const {
  std::vector<std::pair<IndecId, int>> out;
  for (std::size_t idx = 0; idx < mult_.size(); ++idx)
    if (mult_[idx] > 0) out.emplace_back(quiver_->ids()[idx], mult_[idx]);
  return out;
}

int FlagObject::summand_count() const { return std::accumulate(mult_.begin(), mult_.end(), 0); }

bool FlagObject::operator==(const FlagObject& other) const {
  return quiver_ == other.quiver_ && mult_ == other.mult_;
}

namespace {

std::vector<int> expanded(std::span<const int> mult) {
  std::vector<int> out;
  for (std::size_t idx = 0; idx < mult.size(); ++idx)
    out.insert(out.end(), static_cast<std::size_t>(mult[idx]), static_cast<int>(idx));
  return out;
}

}  // namespace

bool FlagObject::operator<(const FlagObject& other) const {
  if (quiver_ != other.quiver_) return quiver_->shape() < other.quiver_->shape();
  auto x = expanded(mult_);
  auto y = expanded(other.mult_);
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

std::string to_string(const FlagObject& f) {
  auto parts = f.summands();
  if (parts.empty()) return "0";
  std::string out;
  for (const auto& [id, m] : parts) {
    if (!out.empty()) out += " + ";
    if (m > 1) out += std::to_string(m) + "*";
    out += to_string(f.shape(), id);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Free functions

std::vector<IndecId> list_indecomposables(const QuiverShape& shape) {
  return Quiver::of(shape)->ids();
}

DimVector indec_dim(const QuiverShape& shape, const IndecId& id) {
  return Quiver::of(shape)->dim(id);
}

DimVector object_dim(const FlagObject& f) {
  DimVector out = DimVector::zero(f.shape());
  for (int idx = 0; idx < f.quiver().size(); ++idx)
    if (f.mult_at(idx)) out.add(f.quiver().dim(idx), f.mult_at(idx));
  return out;
}

std::vector<int> roads_of(const QuiverShape& shape, const IndecId& id) {
  return Quiver::of(shape)->roads(id);
}

int col(const QuiverShape& shape, const IndecId& id) { return Quiver::of(shape)->col(id); }

ValidationReport validate(const FlagObject& f, const DimVector& dv) {
  if (f.shape() != dv.shape()) {
    throw Error("shape mismatch: object on " + to_string(f.shape()) + ", dimension vector on " +
                to_string(dv.shape()));
  }
  const auto& shape = f.shape();
  const int p = shape.p;
  ValidationReport report;
  report.path_counts.assign(static_cast<std::size_t>(p), 0);
  if (shape.is_a()) report.column_counts.assign(static_cast<std::size_t>(shape.q), 0);

  for (const auto& [id, m] : f.summands()) {
    if (shape.is_a()) {
      report.path_counts[id.i - 1] += m;
      report.column_counts[id.j - 1] += m;
      continue;
    }
    for (int road : f.quiver().roads(id)) report.path_counts[road - 1] += m;
    const auto& d = f.quiver().dim(id);
    report.k_count += m * d.k();
    report.l_count += m * d.l();
  }

  auto complain = [&report](std::string message) {
    report.ok = false;
    report.violations.push_back(std::move(message));
  };
  const char* path_word = shape.is_a() ? "row " : "road ";
  for (int t = 1; t <= p; ++t) {
    int want = dv.a(t) - dv.a(t - 1);
    int got = report.path_counts[t - 1];
    if (got != want) {
      complain(path_word + std::to_string(t) + " carries " + std::to_string(got) +
               " != a_" + std::to_string(t) + "-a_" + std::to_string(t - 1) + "=" +
               std::to_string(want));
    }
  }
  if (shape.is_a()) {
    for (int t = 1; t <= shape.q; ++t) {
      int want = dv.b(t) - dv.b(t - 1);
      int got = report.column_counts[t - 1];
      if (got != want) {
        complain("column " + std::to_string(t) + " carries " + std::to_string(got) + " != b_" +
                 std::to_string(t) + "-b_" + std::to_string(t - 1) + "=" + std::to_string(want));
      }
    }
  } else {
    if (report.k_count != dv.k())
      complain("k-count " + std::to_string(report.k_count) + " != k=" + std::to_string(dv.k()));
    if (report.l_count != dv.l())
      complain("l-count " + std::to_string(report.l_count) + " != l=" + std::to_string(dv.l()));
  }
  bool dims_match = object_dim(f) == dv;
  if (report.ok != dims_match) {
    // The count checks and the dimension sum must agree; anything else is a
    // catalog bug.
    throw Error("road counts disagree with the dimension sum for " + to_string(f));
  }
  return report;
}

}  // namespace flagdeg
