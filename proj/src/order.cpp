#include "flagdeg/order.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace flagdeg {

Relation::Relation(int size)
    : size_(size),
      words_(static_cast<std::size_t>((size + 63) / 64)),
      rows_(static_cast<std::size_t>(size) * words_, 0) {}

Relation Relation::closure(int size, std::span<const std::pair<int, int>> edges) {
  Relation r(size);
  for (int x = 0; x < size; ++x) r.set(x, x);
  for (const auto& [x, y] : edges) r.set(x, y);
  // Warshall on packed rows.
  for (int k = 0; k < size; ++k) {
    const std::uint64_t* through = r.row_data(k);
    for (int x = 0; x < size; ++x) {
      if (x == k || !r.test(x, k)) continue;
      std::uint64_t* target = r.row_data(x);
      for (std::size_t w = 0; w < r.words_; ++w) target[w] |= through[w];
    }
  }
  return r;
}

int Relation::count() const {
  int total = 0;
  for (auto word : rows_) total += std::popcount(word);
  return total;
}

int Relation::strict_count() const {
  int diagonal = 0;
  for (int x = 0; x < size_; ++x) diagonal += test(x, x);
  return count() - diagonal;
}

const char* to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::Move:
      return "move";
    case OrderKind::Rank:
      return "rank";
    case OrderKind::Weak:
      return "weak";
  }
  return "?";
}

std::optional<int> OrbitPoset::find(const FlagObject& f) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), f);
  if (it == nodes.end() || !(*it == f)) return std::nullopt;
  return static_cast<int>(it - nodes.begin());
}

std::vector<std::pair<int, int>> OrbitPoset::distinct_edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.emplace_back(e.from, e.to);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> OrbitPoset::maximal() const {
  std::vector<int> out;
  for (int x = 0; x < relation.size(); ++x) {
    bool top = true;
    for (int y = 0; y < relation.size() && top; ++y)
      if (y != x && relation.test(x, y)) top = false;
    if (top) out.push_back(x);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<FlagObject> enumerate_objects(const DimVector& dv) {
  if (!dv.is_valid()) return {};
  const auto& shape = dv.shape();
  auto quiver = Quiver::of(shape);
  const int n_ids = quiver->size();
  std::vector<int> remainder(dv.entries().begin(), dv.entries().end());
  std::vector<int> mult(static_cast<std::size_t>(n_ids), 0);
  std::vector<FlagObject> out;

  auto fits = [&](int idx, int times) {
    auto d = quiver->dim(idx).entries();
    for (std::size_t m = 0; m < d.size(); ++m)
      if (d[m] * times > remainder[m]) return false;
    return true;
  };
  auto take = [&](int idx, int times) {
    auto d = quiver->dim(idx).entries();
    for (std::size_t m = 0; m < d.size(); ++m) remainder[m] -= d[m] * times;
  };

  auto dfs = [&](auto&& self, int idx) -> void {
    if (idx == n_ids) {
      if (std::all_of(remainder.begin(), remainder.end(), [](int v) { return v == 0; })) {
        FlagObject f(shape);
        for (int x = 0; x < n_ids; ++x)
          if (mult[x]) f.add_at(x, mult[x]);
        out.push_back(std::move(f));
      }
      return;
    }
    int most = 0;
    while (fits(idx, most + 1)) ++most;
    for (int times = most; times >= 0; --times) {
      take(idx, times);
      mult[idx] = times;
      self(self, idx + 1);
      take(idx, -times);
    }
    mult[idx] = 0;
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

OrbitPoset with_nodes(const DimVector& dv, OrderKind order) {
  OrbitPoset poset;
  poset.shape = dv.shape();
  poset.dv = dv;
  poset.order = order;
  poset.nodes = enumerate_objects(dv);
  return poset;
}

void close(OrbitPoset& poset) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(poset.edges.size());
  for (const auto& e : poset.edges) pairs.emplace_back(e.from, e.to);
  poset.relation = Relation::closure(static_cast<int>(poset.nodes.size()), pairs);
}

}  // namespace

OrbitPoset move_poset(const DimVector& dv) {
  OrbitPoset poset = with_nodes(dv, OrderKind::Move);
  auto catalog = RegionCatalog::of(poset.shape);
  std::map<std::vector<int>, int> lookup;
  for (std::size_t x = 0; x < poset.nodes.size(); ++x) {
    auto m = poset.nodes[x].multiplicities();
    lookup.emplace(std::vector<int>(m.begin(), m.end()), static_cast<int>(x));
  }
  for (std::size_t x = 0; x < poset.nodes.size(); ++x) {
    const auto& f = poset.nodes[x];
    std::vector<int> present;
    for (int idx = 0; idx < f.quiver().size(); ++idx)
      if (f.mult_at(idx)) present.push_back(idx);
    for (int source : present)
      for (int sink : present)
        for (int r : catalog->between(source, sink)) {
          const auto& region = catalog->all()[r];
          if (!is_minimal_admissible(region, f)) continue;
          auto g = apply_move(f, region);
          auto m = g.multiplicities();
          auto it = lookup.find(std::vector<int>(m.begin(), m.end()));
          if (it == lookup.end()) throw Error("move leaves the dimension vector: " + to_string(region));
          poset.edges.push_back({static_cast<int>(x), it->second, region});
        }
  }
  std::stable_sort(poset.edges.begin(), poset.edges.end(), [](const MoveEdge& a, const MoveEdge& b) {
    return std::pair(a.from, a.to) < std::pair(b.from, b.to);
  });
  close(poset);
  return poset;
}

OrbitPoset rank_poset(const DimVector& dv) {
  OrbitPoset poset = with_nodes(dv, OrderKind::Rank);
  const int n = static_cast<int>(poset.nodes.size());
  std::vector<RankVector> ranks;
  ranks.reserve(poset.nodes.size());
  for (const auto& f : poset.nodes) ranks.push_back(rank_vector(f));
  poset.relation = Relation(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (dominates(ranks[x], ranks[y])) poset.relation.set(x, y);
  return poset;
}

OrbitPoset weak_poset_from(const OrbitPoset& moves) {
  if (moves.shape.is_a()) throw Error("the weak order is defined for type D only");
  OrbitPoset poset;
  poset.shape = moves.shape;
  poset.dv = moves.dv;
  poset.order = OrderKind::Weak;
  poset.nodes = moves.nodes;
  for (const auto& e : moves.edges)
    if (is_weak_move(e.region)) poset.edges.push_back(e);
  close(poset);
  return poset;
}

OrbitPoset weak_poset(const DimVector& dv) {
  if (dv.shape().is_a()) throw Error("the weak order is defined for type D only");
  return weak_poset_from(move_poset(dv));
}

std::vector<std::pair<int, int>> transitive_reduction(const Relation& relation) {
  const int n = relation.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (relation.test(x, y) && relation.test(y, x)) {
        throw Error("cyclic relation between nodes " + std::to_string(x) + " and " +
                    std::to_string(y));
      }
  // Strict down-sets as packed columns.
  Relation below(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && relation.test(x, y)) below.set(y, x);
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n; ++x) {
    auto up = relation.row(x);
    for (int y = 0; y < n; ++y) {
      if (x == y || !relation.test(x, y)) continue;
      // x < z < y for some z?  z ranges over up(x) ∩ below(y), minus x and y.
      auto down = below.row(y);
      bool covered = true;
      for (std::size_t w = 0; w < up.size() && covered; ++w) {
        std::uint64_t between = up[w] & down[w];
        if (w == static_cast<std::size_t>(x >> 6)) between &= ~(std::uint64_t{1} << (x & 63));
        if (between) covered = false;
      }
      if (covered) out.emplace_back(x, y);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

std::optional<int> rightmost_difference(const RankVector& lower, const RankVector& upper) {
  auto x = lower.values();
  auto y = upper.values();
  for (std::size_t m = 0; m < x.size(); ++m)
    if (x[m] != y[m]) return static_cast<int>(m);
  return std::nullopt;
}

bool is_dominant(const Region& r, const RankVector& f, const RankVector& target) {
  auto drop = move_drop(r);
  for (std::size_t m = 0; m < drop.size(); ++m)
    if (f[static_cast<int>(m)] - target[static_cast<int>(m)] < drop[m]) return false;
  return true;
}

DominantMove find_dominant_move(const FlagObject& f, const FlagObject& target) {
  if (!rank_leq(f, target)) throw Error("find_dominant_move: objects are not rank-comparable");
  auto rf = rank_vector(f);
  auto rt = rank_vector(target);
  auto sink = rightmost_difference(rf, rt);
  if (!sink) throw Error("find_dominant_move: rank vectors already coincide");
  auto catalog = RegionCatalog::of(f.shape());
  for (int r : catalog->with_sink(*sink)) {
    const auto& region = catalog->all()[r];
    if (!is_minimal_admissible(region, f) || !is_dominant(region, rf, rt)) continue;
    return {region, apply_move(f, region)};
  }
  throw Error("no dominant move from " + to_string(f) + " towards " + to_string(target) +
              " with sink " + to_string(f.shape(), f.quiver().ids()[*sink]));
}

std::vector<ChainStep> move_chain(const FlagObject& f, const FlagObject& target) {
  if (!rank_leq(f, target)) throw Error("move_chain: objects are not rank-comparable");
  std::vector<ChainStep> chain;
  FlagObject current = f;
  while (!(rank_vector(current) == rank_vector(target))) {
    auto step = find_dominant_move(current, target);
    current = step.result;
    chain.push_back({std::move(step.region), current});
  }
  if (!(current == target)) throw Error("move_chain: equal rank vectors but different objects");
  return chain;
}

}  // namespace flagdeg
