#include "doctest.h"
#include "flagdeg/bracket.hpp"
#include "flagdeg/checks.hpp"
#include "flagdeg/oracle.hpp"
#include "flagdeg/order.hpp"
#include "support.hpp"

using namespace flagdeg;
using namespace testing;

TEST_CASE("spot values") {
  CHECK(bracket(D(2), P(2, 3), P(1, 2)) == 2);
  CHECK(bracket(D(2), Plus(1), Minus(2)) == 0);
  CHECK(bracket(D(2), P(0, 3), Plus(1)) == 0);
  CHECK(bracket(D(2), Plus(1), P(0, 3)) == 0);
  // Type A closed form.
  auto a = QuiverShape::typeA(3, 3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int m = 1; m <= 3; ++m)
        for (int mp = 1; mp <= 3; ++mp) CHECK(bracket(a, P(i, j), P(m, mp)) == int(i >= m && j >= mp));
}

// Brackets vanish when J lies left of I; the column order makes the table
// triangular.
TEST_CASE("triangular with unit diagonal") {
  for (int p = 1; p <= 6; ++p) {
    auto ids = list_indecomposables(D(p));
    for (const auto& I : ids) {
      CHECK(bracket(D(p), I, I) == 1);
      for (const auto& J : ids)
        if (col(D(p), J) < col(D(p), I)) CHECK(bracket(D(p), I, J) == 0);
    }
  }
}

TEST_CASE("closed forms match the linear-algebra oracle") {
  for (int p = 1; p <= 5; ++p) {
    auto ids = list_indecomposables(D(p));
    for (const auto& J : ids) {
      auto ranks = config_ranks(std_config(obj(D(p), {J}), 5));
      for (const auto& I : ids) CHECK(bracket(D(p), I, J) == ranks.at(I));
    }
  }
}

TEST_CASE("rank vectors") {
  auto s = D(2);
  auto bottom = rank_vector(obj(s, {P(0, 1), P(2, 3)}));
  for (const auto& id : {Plus(1), Plus(2), Minus(1), Minus(2), P(0, 1), P(0, 2)}) CHECK(bottom.at(id) == 1);
  auto top = rank_vector(obj(s, {P(1, 2)}));
  CHECK(top.at(P(0, 2)) == 0);
  CHECK(top.at(P(1, 2)) == 1);
  auto zero = rank_vector(FlagObject(s));
  for (int v : zero.values()) CHECK(v == 0);
}

TEST_CASE("rank comparisons") {
  auto s = D(2);
  auto bottom = obj(s, {P(0, 1), P(2, 3)});
  CHECK(rank_compare(bottom, bottom) == Comparison::Equal);
  CHECK(rank_leq(bottom, obj(s, {P(1, 2)})));
  CHECK(rank_compare(bottom, obj(s, {P(1, 2)})) == Comparison::Less);
  CHECK(rank_compare(obj(s, {Plus(1), Minus(2)}), obj(s, {Plus(2), Minus(1)})) == Comparison::Incomparable);
  CHECK_THROWS_AS(rank_leq(bottom, obj(s, {P(0, 1)})), Error);
}

TEST_CASE("bilinear and injective, with exact inversion") {
  for (const auto& dv : type_d_dims(1, 3, 4)) {
    auto objects = enumerate_objects(dv);
    std::vector<RankVector> seen;
    for (const auto& f : objects) {
      auto rv = rank_vector(f);
      // Sum of the rank vectors of the summands.
      std::vector<int> sum(rv.values().size(), 0);
      for (const auto& [id, m] : f.summands()) {
        auto part = rank_vector(obj(f.shape(), {id}));
        for (std::size_t x = 0; x < sum.size(); ++x) sum[x] += m * part[static_cast<int>(x)];
      }
      CHECK(std::equal(sum.begin(), sum.end(), rv.values().begin()));
      CHECK(object_from_ranks(f.shape(), rv) == f);
      for (const auto& other : seen) CHECK_FALSE(other == rv);
      seen.push_back(rv);
    }
  }
}

TEST_CASE("inversion rejects non-rank vectors") {
  auto s = D(2);
  int size = Quiver::of(s)->size();
  CHECK(object_from_ranks(s, RankVector(s, std::vector<int>(size, 0))).empty());
  CHECK(object_from_ranks(s, rank_vector(obj(s, {P(1, 2)}))) == obj(s, {P(1, 2)}));
  // Unit vectors: each either inverts consistently or is rejected.
  int rejected = 0;
  for (int x = 0; x < size; ++x) {
    std::vector<int> unit(static_cast<std::size_t>(size), 0);
    unit[x] = 1;
    RankVector rv(s, unit);
    FlagObject f;
    try {
      f = object_from_ranks(s, rv);
    } catch (const Error&) {
      ++rejected;
      continue;
    }
    CHECK(rank_vector(f) == rv);
  }
  CHECK(rejected > 0);
}
