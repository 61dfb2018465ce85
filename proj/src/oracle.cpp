#include "flagdeg/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace flagdeg {

PrimeField::PrimeField(int q) : q_(q) {
  if (q < 2) throw Error("field modulus must be a prime >= 2");
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) throw Error("field modulus " + std::to_string(q) + " is not prime");
}

int PrimeField::reduce(long long v) const {
  long long r = v % q_;
  return static_cast<int>(r < 0 ? r + q_ : r);
}

int PrimeField::inv(int x) const {
  if (x % q_ == 0) throw Error("division by zero in GF(" + std::to_string(q_) + ")");
  // Fermat: x^(q-2).
  long long result = 1, base = x, e = q_ - 2;
  while (e > 0) {
    if (e & 1) result = result * base % q_;
    base = base * base % q_;
    e >>= 1;
  }
  return static_cast<int>(result);
}

// ---------------------------------------------------------------------------

Matrix row_basis(const PrimeField& f, Matrix m, int n) {
  std::size_t row = 0;
  for (int col = 0; col < n && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[row]);
    int scale = f.inv(m[row][col]);
    for (int c = 0; c < n; ++c) m[row][c] = f.mul(m[row][c], scale);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      int factor = m[r][col];
      for (int c = 0; c < n; ++c) m[r][c] = f.sub(m[r][c], f.mul(factor, m[row][c]));
    }
    ++row;
  }
  m.resize(row);
  return m;
}

int rank(const PrimeField& f, const Matrix& m, int n) {
  return static_cast<int>(row_basis(f, m, n).size());
}

Matrix span_sum(const PrimeField& f, const Matrix& a, const Matrix& b, int n) {
  Matrix m = a;
  m.insert(m.end(), b.begin(), b.end());
  return row_basis(f, std::move(m), n);
}

Matrix intersect(const PrimeField& f, const Matrix& a, const Matrix& b, int n) {
  Matrix ba = row_basis(f, a, n);
  Matrix bb = row_basis(f, b, n);
  const int ra = static_cast<int>(ba.size());
  const int rb = static_cast<int>(bb.size());
  // Rows [v | coefficient tag]; a row whose vector part vanishes after
  // elimination is a relation x.A = y.B, and x.A lies in the intersection.
  const int width = n + ra + rb;
  Matrix m;
  for (int r = 0; r < ra; ++r) {
    std::vector<int> row(width, 0);
    std::copy(ba[r].begin(), ba[r].end(), row.begin());
    row[n + r] = 1;
    m.push_back(std::move(row));
  }
  for (int r = 0; r < rb; ++r) {
    std::vector<int> row(width, 0);
    std::copy(bb[r].begin(), bb[r].end(), row.begin());
    row[n + ra + r] = 1;
    m.push_back(std::move(row));
  }
  m = row_basis(f, std::move(m), width);
  Matrix out;
  for (const auto& row : m) {
    if (std::any_of(row.begin(), row.begin() + n, [](int v) { return v != 0; })) continue;
    std::vector<int> v(n, 0);
    for (int r = 0; r < ra; ++r) {
      if (row[n + r] == 0) continue;
      for (int c = 0; c < n; ++c) v[c] = f.add(v[c], f.mul(row[n + r], ba[r][c]));
    }
    out.push_back(std::move(v));
  }
  return row_basis(f, std::move(out), n);
}

Matrix invert(const PrimeField& f, const Matrix& m) {
  const int n = static_cast<int>(m.size());
  Matrix aug;
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(m[r].size()) != n) throw Error("invert: matrix is not square");
    std::vector<int> row(m[r]);
    row.resize(2 * n, 0);
    row[n + r] = 1;
    aug.push_back(std::move(row));
  }
  aug = row_basis(f, std::move(aug), 2 * n);
  for (int r = 0; r < n; ++r)
    if (static_cast<int>(aug.size()) <= r || aug[r][r] != 1) throw Error("invert: matrix is singular");
  Matrix out;
  for (const auto& row : aug) out.emplace_back(row.begin() + n, row.end());
  return out;
}

Matrix multiply(const PrimeField& f, const Matrix& rows, const Matrix& m) {
  const int n = static_cast<int>(m.size());
  Matrix out;
  for (const auto& v : rows) {
    std::vector<int> w(m.empty() ? 0 : m[0].size(), 0);
    for (int r = 0; r < n; ++r) {
      if (v[r] == 0) continue;
      for (std::size_t c = 0; c < w.size(); ++c) w[c] = f.add(w[c], f.mul(v[r], m[r][c]));
    }
    out.push_back(std::move(w));
  }
  return out;
}

Matrix coordinate_subspace(int dim, int n) {
  Matrix m(static_cast<std::size_t>(dim), std::vector<int>(n, 0));
  for (int r = 0; r < dim; ++r) m[r][r] = 1;
  return m;
}

// ---------------------------------------------------------------------------

void check_config(const SubspaceConfig& c) {
  PrimeField f(c.q);
  const int p = c.shape.p;
  if (static_cast<int>(c.a.size()) != p) throw Error("config: flag needs " + std::to_string(p) + " dimensions");
  for (int m = 0; m < p; ++m) {
    if (c.a[m] < 0 || c.a[m] > c.n || (m > 0 && c.a[m] < c.a[m - 1])) {
      throw Error("config: flag dimensions must be nondecreasing within [0, n]");
    }
  }
  if (p > 0 && c.a[p - 1] != c.n) throw Error("config: the last flag space must be the whole space");
  auto check_rows = [&](const Matrix& m, const char* name) {
    for (const auto& row : m) {
      if (static_cast<int>(row.size()) != c.n) throw Error(std::string("config: row of ") + name + " has wrong length");
      for (int v : row)
        if (v < 0 || v >= c.q) throw Error(std::string("config: entry of ") + name + " not reduced mod q");
    }
    if (rank(f, m, c.n) != static_cast<int>(m.size())) {
      throw Error(std::string("config: rows of ") + name + " are linearly dependent");
    }
  };
  if (c.shape.is_a()) {
    if (static_cast<int>(c.b.size()) != c.shape.q) throw Error("config: second flag has the wrong length");
    if (c.shape.q > 0 && c.b.back() != c.n) throw Error("config: second flag must end in the whole space");
    if (static_cast<int>(c.second_flag.size()) != c.n) throw Error("config: second flag basis must be n x n");
    check_rows(c.second_flag, "second_flag");
  } else {
    check_rows(c.U, "U");
    check_rows(c.W, "W");
  }
}

namespace {

struct Vec {
  int step;   // first flag index containing the vector
  int step2;  // type A: second flag index
  int block;
  int slot;   // 0 = first, 1 = second
};

std::vector<int> unit(int coord, int n) {
  std::vector<int> v(n, 0);
  v[coord] = 1;
  return v;
}

}  // namespace

SubspaceConfig std_config(const FlagObject& obj, int q) {
  PrimeField f(q);
  const auto& shape = obj.shape();
  const int p = shape.p;
  const int inf = shape.inf();
  SubspaceConfig c;
  c.shape = shape;
  c.q = q;

  std::vector<Vec> vecs;
  for (const auto& [id, mult] : obj.summands()) {
    for (int copy = 0; copy < mult; ++copy) {
      int block = static_cast<int>(c.blocks.size());
      c.blocks.push_back({id});
      if (shape.is_a()) {
        vecs.push_back({id.i, id.j, block, 0});
      } else if (id.is_zigzag()) {
        vecs.push_back({id.i, 0, block, 0});
      } else {
        if (id.i >= 1) vecs.push_back({id.i, 0, block, 0});
        if (id.j <= p) vecs.push_back({id.j, 0, block, 1});
      }
    }
  }
  std::stable_sort(vecs.begin(), vecs.end(), [](const Vec& x, const Vec& y) { return x.step < y.step; });
  c.n = static_cast<int>(vecs.size());
  for (int coord = 0; coord < c.n; ++coord) {
    auto& b = c.blocks[vecs[coord].block];
    (vecs[coord].slot == 0 ? b.first : b.second) = coord;
  }
  c.a.assign(p, 0);
  for (const auto& v : vecs)
    for (int m = v.step; m <= p; ++m) ++c.a[m - 1];

  if (shape.is_a()) {
    c.b.assign(shape.q, 0);
    for (const auto& v : vecs)
      for (int m = v.step2; m <= shape.q; ++m) ++c.b[m - 1];
    std::vector<int> order(c.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return vecs[x].step2 < vecs[y].step2; });
    for (int coord : order) c.second_flag.push_back(unit(coord, c.n));
    return c;
  }

  for (auto& b : c.blocks) {
    const auto& id = b.id;
    if (id.kind == IdKind::Plus) {
      b.u_row = static_cast<int>(c.U.size());
      c.U.push_back(unit(b.first, c.n));
    } else if (id.kind == IdKind::Minus) {
      b.w_row = static_cast<int>(c.W.size());
      c.W.push_back(unit(b.first, c.n));
    } else if (id.j != inf) {
      // U = <e_j>, W = <e_i + e_j>; e_0 is deleted.
      b.u_row = static_cast<int>(c.U.size());
      c.U.push_back(unit(b.second, c.n));
      auto w = unit(b.second, c.n);
      if (b.first >= 0) w[b.first] = 1;
      b.w_row = static_cast<int>(c.W.size());
      c.W.push_back(std::move(w));
    }
  }
  return c;
}

RankVector config_ranks(const SubspaceConfig& c) {
  check_config(c);
  PrimeField f(c.q);
  const int n = c.n;
  auto quiver = Quiver::of(c.shape);
  std::vector<int> values(static_cast<std::size_t>(quiver->size()), 0);
  auto V = [&](int m) { return coordinate_subspace(c.a[m - 1], n); };

  if (c.shape.is_a()) {
    for (int x = 0; x < quiver->size(); ++x) {
      const auto& id = quiver->ids()[x];
      Matrix second(c.second_flag.begin(), c.second_flag.begin() + c.b[id.j - 1]);
      values[x] = static_cast<int>(intersect(f, V(id.i), second, n).size());
    }
    return RankVector(c.shape, std::move(values));
  }

  const int inf = c.shape.inf();
  for (int x = 0; x < quiver->size(); ++x) {
    const auto& id = quiver->ids()[x];
    if (quiver->is_fake(id)) continue;
    if (id.kind == IdKind::Plus) {
      values[x] = static_cast<int>(intersect(f, V(id.i), c.U, n).size());
    } else if (id.kind == IdKind::Minus) {
      values[x] = static_cast<int>(intersect(f, V(id.i), c.W, n).size());
    } else if (id.j == inf) {
      values[x] = c.a[id.i - 1];
    } else {
      auto vj = V(id.j);
      auto u = intersect(f, vj, c.U, n);
      auto w = intersect(f, vj, c.W, n);
      int value = static_cast<int>(intersect(f, u, w, n).size());
      if (id.i >= 1) value += static_cast<int>(intersect(f, V(id.i), span_sum(f, u, w, n), n).size());
      values[x] = value;
    }
  }
  return RankVector(c.shape, std::move(values));
}

int phi_kernel_dim(const SubspaceConfig& c, int i, int j) {
  check_config(c);
  if (!c.shape.is_d()) throw Error("phi is defined for type D configurations");
  if (i < 1 || j > c.shape.p || i >= j) throw Error("phi needs 1 <= i < j <= p");
  PrimeField f(c.q);
  const int n = c.n;
  auto vj = coordinate_subspace(c.a[j - 1], n);
  Matrix domain = intersect(f, vj, c.U, n);
  auto w = intersect(f, vj, c.W, n);
  domain.insert(domain.end(), w.begin(), w.end());
  // Images in V_{a_j} / V_{a_i}: keep coordinates a_i .. a_j - 1.
  const int lo = c.a[i - 1];
  const int hi = c.a[j - 1];
  Matrix image;
  for (const auto& v : domain) image.emplace_back(v.begin() + lo, v.begin() + hi);
  return static_cast<int>(domain.size()) - rank(f, image, hi - lo);
}

FlagObject classify(const SubspaceConfig& c) {
  return object_from_ranks(c.shape, config_ranks(c));
}

// ---------------------------------------------------------------------------

namespace {

const Block& block_of(const SubspaceConfig& c, const IndecId& id) {
  for (const auto& b : c.blocks)
    if (b.id == id) return b;
  throw Error("curve: summand missing from the configuration");
}

void add_term(const PrimeField& f, Matrix& m, int row, int coord, int tau) {
  if (row < 0) throw UnsupportedCurve("curve: the perturbed generator was deleted (index at infinity)");
  if (coord < 0) throw UnsupportedCurve("curve: perturbation along e_inf");
  m[row][coord] = f.add(m[row][coord], f.reduce(tau));
}

}  // namespace

SubspaceConfig curve(const FlagObject& obj, const Region& r, int tau, int q) {
  if (!obj.shape().is_d()) throw Error("curves are implemented for type D");
  if (!is_minimal_admissible(r, obj)) throw Error("curve: region is not minimal admissible");
  PrimeField f(q);
  SubspaceConfig c = std_config(obj, q);
  const Block& src = block_of(c, r.source);
  const Block& snk = block_of(c, r.sink);
  // The source vector used by the perturbation: e_{i'} for pair sources in
  // kinds Ib, Ic, II; e_{j'} for Ia; the only vector for zigzag sources.
  switch (r.kind) {
    case RegionKind::Ia:
      add_term(f, c.W, snk.w_row, src.second, tau);
      break;
    case RegionKind::IbPlus:
      add_term(f, c.W, snk.w_row, src.first, tau);
      break;
    case RegionKind::IbMinus:
      add_term(f, c.U, snk.u_row, src.first, tau);
      break;
    case RegionKind::IcPlus:
      add_term(f, c.U, snk.u_row, src.first, tau);
      break;
    case RegionKind::IcMinus:
      add_term(f, c.W, snk.w_row, src.first, tau);
      break;
    case RegionKind::IdPlus:
      add_term(f, c.W, snk.w_row, src.first, tau);
      break;
    case RegionKind::IdMinus:
      add_term(f, c.U, snk.u_row, src.first, tau);
      break;
    case RegionKind::IePlus:
      add_term(f, c.U, snk.u_row, src.first, tau);
      break;
    case RegionKind::IeMinus:
      add_term(f, c.W, snk.w_row, src.first, tau);
      break;
    case RegionKind::II:
      add_term(f, c.U, snk.u_row, src.first, tau);
      add_term(f, c.W, snk.w_row, src.first, tau);
      break;
    case RegionKind::RectA:
      throw Error("curves are implemented for type D");
  }
  return c;
}

// ---------------------------------------------------------------------------

namespace {

Matrix random_full_rank(const PrimeField& f, int rows, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(0, f.q() - 1);
  while (true) {
    Matrix m(static_cast<std::size_t>(rows), std::vector<int>(n));
    for (auto& row : m)
      for (auto& v : row) v = entry(rng);
    if (rank(f, m, n) == rows) return m;
  }
}

}  // namespace

SubspaceConfig random_config(int n, int k, int l, const std::vector<int>& a, int q,
                             std::uint64_t seed) {
  if (k < 0 || l < 0 || k > n || l > n) throw Error("random_config: need 0 <= k, l <= n");
  PrimeField f(q);
  SubspaceConfig c;
  c.shape = QuiverShape::typeD(static_cast<int>(a.size()));
  c.q = q;
  c.n = n;
  c.a = a;
  std::mt19937_64 rng(seed);
  c.U = random_full_rank(f, k, n, rng);
  c.W = random_full_rank(f, l, n, rng);
  check_config(c);
  return c;
}

SubspaceConfig random_flag_action(const SubspaceConfig& c, std::uint64_t seed) {
  check_config(c);
  PrimeField f(c.q);
  const int n = c.n;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(0, c.q - 1);
  // Row r of g is the image of e_r; it must stay inside the smallest flag
  // space containing e_r.
  std::vector<int> limit(n, n);
  for (int r = 0; r < n; ++r)
    for (int m = 0; m < static_cast<int>(c.a.size()); ++m)
      if (r < c.a[m]) {
        limit[r] = c.a[m];
        break;
      }
  Matrix g;
  do {
    g.assign(n, std::vector<int>(n, 0));
    for (int r = 0; r < n; ++r)
      for (int col = 0; col < limit[r]; ++col) g[r][col] = entry(rng);
  } while (rank(f, g, n) != n);
  SubspaceConfig out = c;
  out.U = multiply(f, c.U, g);
  out.W = multiply(f, c.W, g);
  out.blocks.clear();
  return out;
}

}  // namespace flagdeg
