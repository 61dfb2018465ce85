#include "flagdeg/regions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "flagdeg/bracket.hpp"

namespace flagdeg {

const char* to_string(RegionKind kind) {
  switch (kind) {
    case RegionKind::RectA:
      return "RectA";
    case RegionKind::Ia:
      return "Ia";
    case RegionKind::IbPlus:
      return "Ib+";
    case RegionKind::IbMinus:
      return "Ib-";
    case RegionKind::IcPlus:
      return "Ic+";
    case RegionKind::IcMinus:
      return "Ic-";
    case RegionKind::IdPlus:
      return "Id+";
    case RegionKind::IdMinus:
      return "Id-";
    case RegionKind::IePlus:
      return "Ie+";
    case RegionKind::IeMinus:
      return "Ie-";
    case RegionKind::II:
      return "II";
  }
  return "?";
}

std::optional<RegionKind> parse_region_kind(const std::string& text) {
  for (int k = 0; k <= static_cast<int>(RegionKind::II); ++k) {
    auto kind = static_cast<RegionKind>(k);
    if (text == to_string(kind)) return kind;
  }
  return std::nullopt;
}

bool is_type_two(RegionKind kind) { return kind == RegionKind::II; }

std::string to_string(const Region& r) {
  std::string out = std::string(to_string(r.kind)) + "[" + to_string(r.shape, r.source) + " -> " +
                    to_string(r.shape, r.sink) + " => ";
  for (std::size_t t = 0; t < r.term.size(); ++t) {
    if (t) out += ", ";
    out += to_string(r.shape, r.term[t]);
  }
  if (r.term.empty()) out += "0";
  return out + "]";
}

std::vector<IndecId> path_vertices(const QuiverShape& shape, const IndecId& from, const IndecId& to) {
  auto quiver = Quiver::of(shape);
  const int target_col = quiver->col(to);
  // Forward closure from `from`, pruned by column; then keep the vertices
  // that reach `to`.
  std::set<IndecId> forward{from};
  std::vector<IndecId> stack{from};
  while (!stack.empty()) {
    IndecId v = stack.back();
    stack.pop_back();
    for (const auto& w : quiver->successors(v)) {
      if (quiver->col(w) > target_col) continue;
      if (forward.insert(w).second) stack.push_back(w);
    }
  }
  if (!forward.count(to)) return {};
  std::map<IndecId, bool> reaches;
  // Process by descending column so successors are decided first.
  std::vector<IndecId> order(forward.begin(), forward.end());
  std::sort(order.begin(), order.end(), [&](const IndecId& x, const IndecId& y) {
    return quiver->col(x) > quiver->col(y);
  });
  for (const auto& v : order) {
    bool ok = v == to;
    for (const auto& w : quiver->successors(v)) {
      auto it = reaches.find(w);
      if (it != reaches.end() && it->second) ok = true;
    }
    reaches[v] = ok;
  }
  std::vector<IndecId> out;
  for (const auto& v : quiver->ids())
    if (forward.count(v) && reaches[v]) out.push_back(v);
  return out;
}

namespace {

// Member sets as printed for each kind: pair vertices I(a,b) in an index
// box, zigzag vertices of both signs in an index range, plus the initial
// vertices themselves.
bool in_formula(RegionKind kind, const RegionParams& x, const IndecId& v) {
  const int i = x.i, j = x.j, ip = x.ip, jp = x.jp;
  if (v.is_pair()) {
    const int a = v.i, b = v.j;
    switch (kind) {
      case RegionKind::RectA:
        return ip <= a && a <= i && jp <= b && b <= j;
      case RegionKind::Ia:
      case RegionKind::IbPlus:
      case RegionKind::IbMinus:
      case RegionKind::II:
        return i <= a && a <= ip && j <= b && b <= jp;
      case RegionKind::IcPlus:
      case RegionKind::IcMinus:
        return i <= a && a <= ip && b <= jp;
      case RegionKind::IdPlus:
      case RegionKind::IdMinus:
        return i <= a && j <= b && b <= jp;  // b == j keeps the sink itself
      case RegionKind::IePlus:
      case RegionKind::IeMinus:
        return i <= a && b <= ip;
    }
    return false;
  }
  const int g = v.i;
  switch (kind) {
    case RegionKind::IbPlus:
    case RegionKind::IbMinus:
    case RegionKind::II:
      return j <= g && g <= ip;
    case RegionKind::IcPlus:
    case RegionKind::IcMinus:
      return i <= g && g <= ip;
    case RegionKind::IdPlus:
    case RegionKind::IdMinus:
      return j <= g && g <= jp;
    case RegionKind::IePlus:
    case RegionKind::IeMinus:
      return i < g && g < ip;
    default:
      return false;
  }
}

Region make_region(const QuiverShape& shape, RegionKind kind, RegionParams params, IndecId source,
                   IndecId sink, std::vector<IndecId> term) {
  auto quiver = Quiver::of(shape);
  Region r;
  r.shape = shape;
  r.kind = kind;
  r.params = params;
  r.source = source;
  r.sink = sink;
  for (const auto& t : term)
    if (!quiver->is_fake(t)) r.term.push_back(t);
  for (const auto& v : quiver->ids()) {
    if (quiver->is_fake(v)) continue;
    if (v == source || v == sink || in_formula(kind, params, v)) r.members.push_back(v);
  }
  if (shape.is_a()) {
    // Every occupied cell of the closed rectangle other than its four
    // corners blocks it, edges included.
    for (const auto& v : r.members) {
      if (v == source || v == sink) continue;
      if (std::find(r.term.begin(), r.term.end(), v) == r.term.end()) r.blockers.push_back(v);
    }
  } else {
    for (const auto& v : r.members)
      if (v != source && v != sink) r.blockers.push_back(v);
  }
  return r;
}

IndecId zig(bool plus, int i) { return plus ? IndecId::plus(i) : IndecId::minus(i); }

std::vector<Region> generate(const QuiverShape& shape) {
  std::vector<Region> out;
  const int p = shape.p;
  if (shape.is_a()) {
    for (int i = 1; i <= p; ++i)
      for (int j = 1; j <= shape.q; ++j)
        for (int ip = 1; ip < i; ++ip)
          for (int jp = 1; jp < j; ++jp) {
            out.push_back(make_region(shape, RegionKind::RectA, {i, j, ip, jp}, IndecId::pair(i, j),
                                      IndecId::pair(ip, jp),
                                      {IndecId::pair(i, jp), IndecId::pair(ip, j)}));
          }
    return out;
  }

  const int inf = shape.inf();
  auto pr = [](int a, int b) { return IndecId::pair(a, b); };
  // Pairs of pair-vertices: I.a, I.b, II.
  for (int i = 0; i <= inf; ++i)
    for (int j = i + 1; j <= p; ++j)
      for (int ip = std::max(i + 1, 1); ip <= p; ++ip)
        for (int jp = ip + 1; jp <= inf; ++jp) {
          if (jp <= j) continue;
          RegionParams params{i, j, ip, jp};
          auto source = pr(ip, jp);
          auto sink = pr(i, j);
          if (ip < j) {
            out.push_back(make_region(shape, RegionKind::Ia, params, source, sink,
                                      {pr(i, jp), pr(ip, j)}));
          } else {
            out.push_back(make_region(shape, RegionKind::IbPlus, params, source, sink,
                                      {pr(i, jp), IndecId::plus(j), IndecId::minus(ip)}));
            out.push_back(make_region(shape, RegionKind::IbMinus, params, source, sink,
                                      {pr(i, jp), IndecId::minus(j), IndecId::plus(ip)}));
            if (j < ip) {
              out.push_back(
                  make_region(shape, RegionKind::II, params, source, sink, {pr(i, ip), pr(j, jp)}));
            }
          }
        }
  // I.c: source I(i',j'), sink zigzag at i < i'.
  for (int i = 1; i <= p; ++i)
    for (int ip = i + 1; ip <= p; ++ip)
      for (int jp = ip + 1; jp <= inf; ++jp)
        for (bool plus : {true, false}) {
          out.push_back(make_region(shape, plus ? RegionKind::IcPlus : RegionKind::IcMinus,
                                    {i, -1, ip, jp}, pr(ip, jp), zig(plus, i),
                                    {zig(plus, ip), pr(i, jp)}));
        }
  // I.d: source zigzag at j', sink I(i,j), j < j'.
  for (int i = 0; i <= p; ++i)
    for (int j = i + 1; j <= p; ++j)
      for (int jp = j + 1; jp <= p; ++jp)
        for (bool plus : {true, false}) {
          out.push_back(make_region(shape, plus ? RegionKind::IdPlus : RegionKind::IdMinus,
                                    {i, j, -1, jp}, zig(plus, jp), pr(i, j),
                                    {zig(plus, j), pr(i, jp)}));
        }
  // I.e: zigzag vertices of opposite signs.
  for (int i = 1; i <= p; ++i)
    for (int ip = i + 1; ip <= p; ++ip)
      for (bool plus : {true, false}) {
        out.push_back(make_region(shape, plus ? RegionKind::IePlus : RegionKind::IeMinus,
                                  {i, -1, ip, -1}, zig(!plus, ip), zig(plus, i), {pr(i, ip)}));
      }
  return out;
}

}  // namespace

std::shared_ptr<const RegionCatalog> RegionCatalog::of(const QuiverShape& shape) {
  static std::mutex mutex;
  static std::map<QuiverShape, std::shared_ptr<const RegionCatalog>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[shape];
  if (!slot) slot = std::make_shared<const RegionCatalog>(shape);
  return slot;
}

RegionCatalog::RegionCatalog(const QuiverShape& shape)
    : quiver_(Quiver::of(shape)), regions_(generate(shape)) {
  const auto n = static_cast<std::size_t>(quiver_->size());
  by_pair_.resize(n * n);
  by_sink_.resize(n);
  for (std::size_t r = 0; r < regions_.size(); ++r) {
    int source = quiver_->index_of(regions_[r].source);
    int sink = quiver_->index_of(regions_[r].sink);
    by_pair_[source * n + sink].push_back(static_cast<int>(r));
    by_sink_[sink].push_back(static_cast<int>(r));
  }
}

std::span<const int> RegionCatalog::between(int source, int sink) const {
  return by_pair_[static_cast<std::size_t>(source) * by_sink_.size() + sink];
}

std::span<const int> RegionCatalog::with_sink(int sink) const { return by_sink_[sink]; }

std::vector<Region> regions_between(const QuiverShape& shape, const IndecId& a, const IndecId& b) {
  auto quiver = Quiver::of(shape);
  auto catalog = RegionCatalog::of(shape);
  int x = quiver->index_of(a);
  int y = quiver->index_of(b);
  std::vector<Region> out;
  for (int r : catalog->between(x, y)) out.push_back(catalog->all()[r]);
  for (int r : catalog->between(y, x)) out.push_back(catalog->all()[r]);
  return out;
}

bool is_admissible(const Region& r, const FlagObject& f) {
  if (r.shape != f.shape()) throw Error("region and object on different shapes");
  return f.mult(r.source) >= 1 && f.mult(r.sink) >= 1;
}

bool is_minimal_admissible(const Region& r, const FlagObject& f) {
  if (!is_admissible(r, f)) return false;
  return std::none_of(r.blockers.begin(), r.blockers.end(),
                      [&](const IndecId& v) { return f.mult(v) > 0; });
}

FlagObject apply_move(const FlagObject& f, const Region& r) {
  if (!is_minimal_admissible(r, f)) {
    throw Error("region " + to_string(r) + " is not minimal admissible for " + to_string(f));
  }
  FlagObject g = f;
  g.add(r.source, -1);
  g.add(r.sink, -1);
  for (const auto& t : r.term) g.add(t, 1);
  return g;
}

std::vector<int> move_drop(const Region& r) {
  auto table = BracketTable::of(r.shape);
  const auto& quiver = table->quiver();
  std::vector<int> drop(static_cast<std::size_t>(table->size()), 0);
  auto accumulate = [&](const IndecId& id, int sign) {
    auto column = quiver.find(id);
    if (!column) return;
    for (int row = 0; row < table->size(); ++row) drop[row] += sign * table->at(row, *column);
  };
  accumulate(r.source, 1);
  accumulate(r.sink, 1);
  for (const auto& t : r.term) accumulate(t, -1);
  return drop;
}

std::vector<IndecId> interior(const Region& r) {
  auto drop = move_drop(r);
  const auto& ids = Quiver::of(r.shape)->ids();
  std::vector<IndecId> out;
  for (std::size_t x = 0; x < drop.size(); ++x)
    if (drop[x] > 0) out.push_back(ids[x]);
  return out;
}

std::vector<IndecId> nucleus(const Region& r) {
  auto drop = move_drop(r);
  const auto& ids = Quiver::of(r.shape)->ids();
  std::vector<IndecId> out;
  for (std::size_t x = 0; x < drop.size(); ++x)
    if (drop[x] == 2) out.push_back(ids[x]);
  return out;
}

std::optional<std::pair<int, int>> weak_move_roads(const Region& r) {
  if (r.shape.is_a()) throw Error("weak moves are defined for type D only");
  const auto& x = r.params;
  std::pair<int, int> rs;
  switch (r.kind) {
    case RegionKind::IbPlus:
    case RegionKind::IbMinus:
    case RegionKind::RectA:
      return std::nullopt;
    case RegionKind::Ia:
    case RegionKind::IdPlus:
    case RegionKind::IdMinus:
      rs = {x.jp, x.j};
      break;
    case RegionKind::IcPlus:
    case RegionKind::IcMinus:
    case RegionKind::IePlus:
    case RegionKind::IeMinus:
      rs = {x.ip, x.i};
      break;
    case RegionKind::II:
      rs = {x.ip, x.j};
      break;
  }
  auto in_range = [&](int v) { return v >= 1 && v <= r.shape.p; };
  if (!in_range(rs.first) || !in_range(rs.second)) return std::nullopt;
  return rs;
}

bool is_weak_move(const Region& r) {
  auto rs = weak_move_roads(r);
  return rs && rs->first == rs->second + 1;
}

}  // namespace flagdeg
