#pragma once

// Small helpers shared by the unit tests.

#include <algorithm>
#include <numeric>
#include <vector>

#include "flagdeg/quiver.hpp"

namespace testing {

using flagdeg::IndecId;
using flagdeg::QuiverShape;

inline QuiverShape D(int p) { return QuiverShape::typeD(p); }
inline IndecId P(int i, int j) { return IndecId::pair(i, j); }
inline IndecId Plus(int i) { return IndecId::plus(i); }
inline IndecId Minus(int i) { return IndecId::minus(i); }

inline flagdeg::FlagObject obj(const QuiverShape& s, std::initializer_list<IndecId> ids) {
  flagdeg::FlagObject f(s);
  for (const auto& id : ids) f.add(id);
  return f;
}

// Rook placement of a permutation: sigma[i-1] = column of row i.
inline flagdeg::FlagObject rooks(const std::vector<int>& sigma) {
  int n = static_cast<int>(sigma.size());
  flagdeg::FlagObject f(QuiverShape::typeA(n, n));
  for (int i = 1; i <= n; ++i) f.add(IndecId::pair(i, sigma[i - 1]));
  return f;
}

inline int inversions(const std::vector<int>& w) {
  int c = 0;
  for (std::size_t x = 0; x < w.size(); ++x)
    for (std::size_t y = x + 1; y < w.size(); ++y) c += w[x] > w[y];
  return c;
}

// Bruhat order on S_n from scratch: u < u*t whenever right multiplication by
// a transposition raises the inversion count; closed under transitivity.
// Returns perms (lexicographic) and less[x][y] meaning perms[x] <= perms[y].
struct Bruhat {
  std::vector<std::vector<int>> perms;
  std::vector<std::vector<char>> leq;
};

inline Bruhat bruhat(int n) {
  Bruhat b;
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do b.perms.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  std::size_t m = b.perms.size();
  b.leq.assign(m, std::vector<char>(m, 0));
  auto index = [&](const std::vector<int>& v) {
    return static_cast<std::size_t>(std::lower_bound(b.perms.begin(), b.perms.end(), v) - b.perms.begin());
  };
  for (std::size_t x = 0; x < m; ++x) {
    b.leq[x][x] = 1;
    for (int s = 0; s < n; ++s)
      for (int t = s + 1; t < n; ++t) {
        auto v = b.perms[x];
        std::swap(v[s], v[t]);
        if (inversions(v) > inversions(b.perms[x])) b.leq[x][index(v)] = 1;
      }
  }
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t x = 0; x < m; ++x)
      if (b.leq[x][k])
        for (std::size_t y = 0; y < m; ++y)
          if (b.leq[k][y]) b.leq[x][y] = 1;
  return b;
}

}  // namespace testing
