// Acceptance checks. `acceptance N` runs criterion N, `acceptance` runs all.
// Each criterion prints one PASS/FAIL line; the exit code is nonzero if any
// selected criterion fails.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "flagdeg/checks.hpp"
#include "flagdeg/io.hpp"
#include "flagdeg/oracle.hpp"
#include "flagdeg/order.hpp"
#include "support.hpp"

using namespace flagdeg;
using namespace testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int jobs() { return static_cast<int>(std::max(1U, std::thread::hardware_concurrency())); }

std::vector<int> iota_vec(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return v;
}

// Collects failures from worker threads; keeps the first example.
struct Failures {
  std::mutex mutex;
  long count = 0;
  std::string first;

  void add(const std::string& what) {
    std::lock_guard lock(mutex);
    if (count++ == 0) first = what;
  }
  std::string summary() const { return count ? "; first: " + first : ""; }
};

const std::vector<DimVector>& sweep() {
  static const auto dims = type_d_dims(1, 3, 4);
  return dims;
}

// --- 1 ------------------------------------------------------------------

Outcome orbit_counts() {
  Outcome o;
  std::ostringstream d;
  long fact = 1;
  for (int n = 2; n <= 5; ++n) {
    fact *= n;
    auto count = static_cast<long>(enumerate_objects(DimVector::typeA(iota_vec(n), iota_vec(n))).size());
    d << (n > 2 ? ", " : "") << "n=" << n << ": " << count;
    o.pass = o.pass && count == fact;
  }
  o.detail = "full-flag object counts " + d.str();
  return o;
}

// --- 2 ------------------------------------------------------------------

// Triples (V_1, U, W) of lines in GF(2)^2, vectors coded as 1, 2, 3.
struct Triple {
  int v, u, w;
  auto operator<=>(const Triple&) const = default;
};

int apply(int g, int x) {
  // g encodes the images of e_1 and e_2 (two nonzero vectors).
  int e1 = g & 3, e2 = g >> 2;
  return ((x & 1) ? e1 : 0) ^ ((x & 2) ? e2 : 0);
}

Outcome worked_instance() {
  // Independent count: orbits of GL_2(F_2) on line triples.
  std::vector<int> group;
  for (int e1 = 1; e1 <= 3; ++e1)
    for (int e2 = 1; e2 <= 3; ++e2)
      if (e1 != e2) group.push_back(e1 | (e2 << 2));
  std::set<Triple> seen;
  std::vector<Triple> reps;
  for (int v = 1; v <= 3; ++v)
    for (int u = 1; u <= 3; ++u)
      for (int w = 1; w <= 3; ++w) {
        Triple t{v, u, w};
        if (seen.count(t)) continue;
        for (int g : group) seen.insert({apply(g, v), apply(g, u), apply(g, w)});
        reps.push_back(t);
      }
  // Degeneration by incidence: (U=V_1, W=V_1, U=W), bigger is more special.
  auto inc = [](const Triple& t) { return std::array<int, 3>{t.u == t.v, t.w == t.v, t.u == t.w}; };
  int covers = 0;
  const auto m = reps.size();
  auto below = [&](std::size_t x, std::size_t y) {
    auto a = inc(reps[x]), b = inc(reps[y]);
    return x != y && a[0] >= b[0] && a[1] >= b[1] && a[2] >= b[2];
  };
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      if (!below(x, y)) continue;
      bool cover = true;
      for (std::size_t z = 0; z < m; ++z) cover = cover && !(below(x, z) && below(z, y));
      covers += cover;
    }

  auto s = D(2);
  auto dv = DimVector::typeD({1, 2}, 1, 1);
  auto moves = move_poset(dv);
  auto weak = weak_poset_from(moves);
  auto bottom = obj(s, {P(0, 1), P(2, 3)});
  auto top = obj(s, {P(1, 2)});
  auto bx = moves.find(bottom), tx = moves.find(top);
  bool ends = bx && tx;
  for (std::size_t x = 0; ends && x < moves.nodes.size(); ++x)
    ends = moves.relation.test(*bx, static_cast<int>(x)) && moves.relation.test(static_cast<int>(x), *tx);

  Outcome o;
  std::ostringstream d;
  d << "objects " << moves.nodes.size() << " (GF(2) orbits " << reps.size() << "), move edges "
    << moves.edges.size() << " (GF(2) covers " << covers << "), bottom/top " << (ends ? "ok" : "wrong")
    << ", weak edges " << weak.edges.size() << " (want 1), weak maximal " << weak.maximal().size()
    << " (want 2)";
  o.detail = d.str();
  o.pass = moves.nodes.size() == 5 && reps.size() == 5 && moves.edges.size() == 6 && covers == 6 && ends &&
           weak.edges.size() == 1 && weak.maximal().size() == 2;
  return o;
}

// --- 3 ------------------------------------------------------------------

Outcome order_equivalence() {
  const auto& dims = sweep();
  Failures relation, covers;
  std::atomic<long> objects{0};
  parallel_for(static_cast<int>(dims.size()), jobs(), [&](int x) {
    auto moves = move_poset(dims[x]);
    auto ranks = rank_poset(dims[x]);
    objects += static_cast<long>(moves.nodes.size());
    if (!(moves.relation == ranks.relation)) relation.add(to_string(dims[x]));
    if (transitive_reduction(ranks.relation) != moves.distinct_edges()) covers.add(to_string(dims[x]));
  });
  Outcome o;
  o.pass = relation.count == 0 && covers.count == 0;
  std::ostringstream d;
  d << dims.size() << " dimension vectors, " << objects << " objects; relation mismatches " << relation.count
    << relation.summary() << "; cover mismatches " << covers.count << covers.summary();
  o.detail = d.str();
  return o;
}

// --- 4 ------------------------------------------------------------------

Outcome rank_ground_truth() {
  const auto& dims = sweep();
  Failures formula, phi;
  std::atomic<long> checked{0};
  parallel_for(static_cast<int>(dims.size()), jobs(), [&](int x) {
    for (const auto& f : enumerate_objects(dims[x]))
      for (int q : {2, 5}) {
        ++checked;
        if (!(config_ranks(std_config(f, q)) == rank_vector(f))) formula.add(to_string(f));
      }
  });
  std::atomic<long> configs{0};
  std::vector<std::array<int, 3>> shapes;
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= std::min(n, 2); ++k)
      for (int l = 0; l <= std::min(n, 2); ++l) shapes.push_back({n, k, l});
  parallel_for(static_cast<int>(shapes.size()), jobs(), [&](int x) {
    auto [n, k, l] = shapes[x];
    for (int seed = 0; seed < 100; ++seed) {
      std::mt19937 rng(static_cast<unsigned>(1000 * x + seed));
      std::vector<int> a(3);
      std::uniform_int_distribution<int> pick(0, n);
      for (auto& v : a) v = pick(rng);
      std::sort(a.begin(), a.end());
      a.back() = n;
      auto c = random_config(n, k, l, a, 5, static_cast<std::uint64_t>(rng()));
      auto ranks = config_ranks(c);
      ++configs;
      for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
          if (phi_kernel_dim(c, i, j) != ranks.at(P(i, j))) phi.add(to_json(c).dump());
    }
  });
  Outcome o;
  o.pass = formula.count == 0 && phi.count == 0;
  std::ostringstream d;
  d << checked << " standard configurations (q=2,5), formula mismatches " << formula.count << formula.summary()
    << "; " << configs << " random configurations, kernel mismatches " << phi.count << phi.summary();
  o.detail = d.str();
  return o;
}

// --- 5 ------------------------------------------------------------------

Outcome degeneration_witnesses() {
  const auto& dims = sweep();
  Failures bad;
  std::atomic<long> supported{0}, unsupported{0};
  parallel_for(static_cast<int>(dims.size()), jobs(), [&](int x) {
    auto moves = move_poset(dims[x]);
    for (const auto& e : moves.edges) {
      const auto& f = moves.nodes[e.from];
      const auto& g = moves.nodes[e.to];
      try {
        bool ok = classify(curve(f, e.region, 0, 5)) == f;
        for (int tau = 1; tau <= 4; ++tau) ok = ok && classify(curve(f, e.region, tau, 5)) == g;
        ++supported;
        if (!ok) bad.add(to_string(f) + " via " + to_string(e.region));
      } catch (const UnsupportedCurve&) {
        ++unsupported;
        if (!rank_leq(f, g)) bad.add("unsupported " + to_string(f) + " via " + to_string(e.region));
      }
    }
  });
  Outcome o;
  o.pass = bad.count == 0;
  std::ostringstream d;
  d << supported << " supported curves, " << unsupported << " unsupported (rank-checked), failures " << bad.count
    << bad.summary();
  o.detail = d.str();
  return o;
}

// --- 6 ------------------------------------------------------------------

Outcome move_monotonicity() {
  const auto& dims = sweep();
  Failures bad;
  std::atomic<long> moves_seen{0}, twos{0};
  parallel_for(static_cast<int>(dims.size()), jobs(), [&](int x) {
    auto moves = move_poset(dims[x]);
    const auto& q = *Quiver::of(dims[x].shape());
    for (const auto& e : moves.edges) {
      ++moves_seen;
      // Rank numbers straight from the standard representatives.
      auto rf = config_ranks(std_config(moves.nodes[e.from], 5));
      auto rg = config_ranks(std_config(moves.nodes[e.to], 5));
      auto in = interior(e.region), nuc = nucleus(e.region);
      bool ok = true;
      for (int y = 0; y < q.size(); ++y) {
        const auto& id = q.ids()[y];
        int want = int(std::count(in.begin(), in.end(), id)) + int(std::count(nuc.begin(), nuc.end(), id));
        int drop = rf[y] - rg[y];
        ok = ok && drop == want;
        if (drop == 2) {
          ++twos;
          ok = ok && e.region.kind == RegionKind::II;
        }
      }
      if (!ok) bad.add(to_string(moves.nodes[e.from]) + " via " + to_string(e.region));
    }
  });
  Outcome o;
  o.pass = bad.count == 0;
  std::ostringstream d;
  d << moves_seen << " moves, " << twos << " entries dropping by 2, failures " << bad.count << bad.summary();
  o.detail = d.str();
  return o;
}

// --- 7 ------------------------------------------------------------------

Outcome chain_construction() {
  const auto& dims = sweep();
  Failures bad;
  std::atomic<long> pairs{0};
  parallel_for(static_cast<int>(dims.size()), jobs(), [&](int x) {
    auto ranks = rank_poset(dims[x]);
    const auto& nodes = ranks.nodes;
    for (std::size_t a = 0; a < nodes.size(); ++a)
      for (std::size_t b = 0; b < nodes.size(); ++b) {
        if (!ranks.relation.test(static_cast<int>(a), static_cast<int>(b))) continue;
        ++pairs;
        const auto& f = nodes[a];
        const auto& target = nodes[b];
        auto rt = rank_vector(target);
        auto label = to_string(f) + " -> " + to_string(target);
        try {
          auto chain = move_chain(f, target);
          long budget = 0;
          auto rf = rank_vector(f);
          for (std::size_t y = 0; y < rf.values().size(); ++y) budget += rf[int(y)] - rt[int(y)];
          bool ok = static_cast<long>(chain.size()) <= budget;
          FlagObject at = f;
          for (const auto& step : chain) {
            ok = ok && is_minimal_admissible(step.region, at) && is_dominant(step.region, rank_vector(at), rt);
            at = apply_move(at, step.region);
            ok = ok && at == step.object;
          }
          ok = ok && at == target;
          if (!ok) bad.add(label);
        } catch (const Error& e) {
          bad.add(label + " (" + e.what() + ")");
        }
      }
  });
  Outcome o;
  o.pass = bad.count == 0;
  std::ostringstream d;
  d << pairs << " rank-comparable pairs, failures " << bad.count << bad.summary();
  o.detail = d.str();
  return o;
}

// --- 8 ------------------------------------------------------------------

Outcome bruhat_regression() {
  Outcome o;
  std::ostringstream d;
  for (int n = 1; n <= 5; ++n) {
    auto dv = DimVector::typeA(iota_vec(n), iota_vec(n));
    auto b = bruhat(n);
    auto moves = move_poset(dv);
    auto ranks = rank_poset(dv);
    bool ok = moves.relation == ranks.relation && moves.nodes.size() == b.perms.size();
    std::vector<int> where;
    for (const auto& w : b.perms) {
      auto at = moves.find(rooks(w));
      ok = ok && at.has_value();
      where.push_back(at.value_or(0));
    }
    for (std::size_t x = 0; ok && x < b.perms.size(); ++x)
      for (std::size_t y = 0; ok && y < b.perms.size(); ++y)
        ok = bool(b.leq[x][y]) == moves.relation.test(where[x], where[y]);
    d << (n > 1 ? ", " : "") << "n=" << n << (ok ? " ok" : " mismatch");
    o.pass = o.pass && ok;
  }
  o.detail = "move and rank posets against permutation Bruhat order: " + d.str();
  return o;
}

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

const std::map<int, Criterion>& criteria() {
  static const std::map<int, Criterion> table{
      {1, {"orbit counts", 5, orbit_counts}},
      {2, {"worked instance", 1, worked_instance}},
      {3, {"move order equals rank order", 600, order_equivalence}},
      {4, {"rank formulas", 300, rank_ground_truth}},
      {5, {"degeneration curves", 300, degeneration_witnesses}},
      {6, {"move monotonicity", 600, move_monotonicity}},
      {7, {"chain construction", 600, chain_construction}},
      {8, {"type A Bruhat order", 30, bruhat_regression}},
  };
  return table;
}

bool run_one(int number) {
  const auto& c = criteria().at(number);
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o = {false, std::string("error: ") + e.what()};
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_time = seconds <= c.limit_seconds;
  bool pass = o.pass && in_time;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", seconds, c.limit_seconds);
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << " (" << c.name << "): " << o.detail << " ["
            << timing << (in_time ? "" : ", too slow") << "]" << std::endl;
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int x = 1; x < argc; ++x) {
    int number = std::atoi(argv[x]);
    if (!criteria().count(number)) {
      std::cerr << "usage: acceptance [1-8]...\n";
      return 2;
    }
    selected.push_back(number);
  }
  if (selected.empty())
    for (const auto& [number, c] : criteria()) selected.push_back(number);
  bool all = true;
  for (int number : selected) all = run_one(number) && all;
  return all ? 0 : 1;
}
