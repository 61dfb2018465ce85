#include <set>

#include "doctest.h"
#include "flagdeg/checks.hpp"
#include "flagdeg/order.hpp"
#include "support.hpp"

using namespace flagdeg;
using namespace testing;

TEST_CASE("catalog sizes") {
  CHECK(list_indecomposables(QuiverShape::typeA(4, 3)).size() == 12);
  CHECK(list_indecomposables(D(5)).size() == 30);

  auto p1 = list_indecomposables(D(1));
  std::set<IndecId> got(p1.begin(), p1.end());
  CHECK(got == std::set<IndecId>{Plus(1), Minus(1), P(1, 2), P(0, 1)});

  for (int p = 1; p <= 8; ++p) {
    // Count straight from the id ranges, fake pair removed.
    int pairs = 0;
    for (int i = 0; i <= p + 1; ++i)
      for (int j = i + 1; j <= p + 1; ++j) pairs += !(i == 0 && j == p + 1);
    CHECK(static_cast<int>(list_indecomposables(D(p)).size()) == 2 * p + pairs);
    CHECK(static_cast<int>(list_indecomposables(D(p)).size()) == 4 * p + p * (p - 1) / 2);
    for (int q = 1; q <= 8; ++q) CHECK(static_cast<int>(list_indecomposables(QuiverShape::typeA(p, q)).size()) == p * q);
  }
}

TEST_CASE("canonical order is by descending column then ascending i") {
  for (int p = 1; p <= 6; ++p) {
    auto ids = list_indecomposables(D(p));
    for (std::size_t x = 1; x < ids.size(); ++x) {
      int c0 = col(D(p), ids[x - 1]), c1 = col(D(p), ids[x]);
      CHECK(c0 >= c1);
      if (c0 == c1) CHECK(ids[x - 1].i <= ids[x].i);
    }
  }
}

TEST_CASE("dimension vectors of indecomposables") {
  CHECK(indec_dim(D(3), P(1, 2)) == DimVector::typeD({1, 2, 2}, 1, 1));
  CHECK(indec_dim(D(3), P(2, 4)) == DimVector::typeD({0, 1, 1}, 0, 0));
  CHECK(indec_dim(D(3), P(0, 4)) == DimVector::zero(D(3)));
  CHECK(indec_dim(D(3), Plus(2)) == DimVector::typeD({0, 1, 1}, 1, 0));
  CHECK(indec_dim(D(3), Minus(3)) == DimVector::typeD({0, 0, 1}, 0, 1));
  CHECK(indec_dim(QuiverShape::typeA(3, 2), P(2, 1)) == DimVector::typeA({0, 1, 1}, {1, 1}));
  CHECK_THROWS_AS(indec_dim(D(2), Plus(3)), Error);
}

TEST_CASE("object dimension") {
  CHECK(object_dim(obj(D(2), {P(0, 1), P(2, 3)})) == DimVector::typeD({1, 2}, 1, 1));
  CHECK(object_dim(FlagObject(D(2))) == DimVector::zero(D(2)));
  FlagObject twice(QuiverShape::typeA(1, 1));
  twice.add(P(1, 1), 2);
  CHECK(object_dim(twice) == DimVector::typeA({2}, {2}));
}

TEST_CASE("roads") {
  CHECK(roads_of(D(5), P(2, 4)) == std::vector<int>{2, 4});
  CHECK(roads_of(D(5), Plus(3)) == std::vector<int>{3});
  CHECK(roads_of(D(5), P(0, 3)) == std::vector<int>{3});
  CHECK(roads_of(D(5), P(3, 6)) == std::vector<int>{3});
  CHECK(roads_of(D(5), P(0, 6)).empty());
  CHECK_THROWS_AS(roads_of(QuiverShape::typeA(2, 2), P(1, 1)), Error);
}

TEST_CASE("grid columns") {
  CHECK(col(D(5), P(4, 5)) == 2);
  CHECK(col(D(5), P(0, 1)) == 10);
  CHECK(col(D(5), P(5, 6)) == 0);
  CHECK(col(QuiverShape::typeA(4, 3), P(4, 3)) == 0);
  for (int p = 1; p <= 6; ++p) {
    int hi = 0;
    for (const auto& id : list_indecomposables(D(p))) hi = std::max(hi, col(D(p), id));
    CHECK(hi == 2 * p);
  }
}

TEST_CASE("every arrow raises the column by one") {
  for (int p = 1; p <= 6; ++p) {
    auto q = Quiver::of(D(p));
    auto ids = q->ids();
    ids.push_back(q->fake());
    for (const auto& id : ids)
      for (const auto& s : q->successors(id)) CHECK(q->col(s) == q->col(id) + 1);
  }
  for (int p = 1; p <= 4; ++p)
    for (int r = 1; r <= 4; ++r) {
      auto q = Quiver::of(QuiverShape::typeA(p, r));
      for (const auto& id : q->ids())
        for (const auto& s : q->successors(id)) CHECK(q->col(s) == q->col(id) + 1);
    }
}

TEST_CASE("validate") {
  auto dv = DimVector::typeD({1, 2}, 1, 1);
  CHECK(validate(obj(D(2), {P(1, 2)}), dv).ok);
  auto bad = validate(obj(D(2), {Plus(1), Minus(1)}), dv);
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.path_counts.size() == 2);
  CHECK(bad.path_counts[1] == 0);
  CHECK_FALSE(bad.violations.empty());
  CHECK(validate(FlagObject(D(2)), DimVector::zero(D(2))).ok);
  CHECK_THROWS_AS(validate(FlagObject(D(3)), dv), Error);
}

TEST_CASE("road counts agree with the dimension check") {
  auto dims = type_d_dims(1, 3, 4);
  for (const auto& dv : dims) {
    for (const auto& f : enumerate_objects(dv)) {
      auto r = validate(f, dv);
      CHECK(r.ok);
      for (int t = 1; t <= dv.shape().p; ++t) CHECK(r.path_counts[t - 1] == dv.a(t) - dv.a(t - 1));
      CHECK(r.k_count == dv.k());
      CHECK(r.l_count == dv.l());
    }
  }
  // Converse: a mismatched vector fails both the sum and some count.
  for (const auto& dv : dims) {
    if (dv.shape().p != 2 || dv.n() > 2) continue;
    for (const auto& other : dims) {
      if (other.shape() != dv.shape() || other == dv) continue;
      for (const auto& f : enumerate_objects(other)) {
        auto r = validate(f, dv);
        CHECK_FALSE(r.ok);
        bool counts = r.k_count == dv.k() && r.l_count == dv.l();
        for (int t = 1; t <= 2; ++t) counts = counts && r.path_counts[t - 1] == dv.a(t) - dv.a(t - 1);
        CHECK_FALSE(counts);
      }
    }
  }
}

TEST_CASE("full flags are permutations") {
  long fact = 1;
  for (int n = 1; n <= 5; ++n) {
    fact *= n;
    std::vector<int> a(static_cast<std::size_t>(n));
    std::iota(a.begin(), a.end(), 1);
    auto objects = enumerate_objects(DimVector::typeA(a, a));
    CHECK(static_cast<long>(objects.size()) == fact);
    for (const auto& f : objects) {
      std::set<int> rows, cols;
      for (const auto& [id, m] : f.summands()) {
        CHECK(m == 1);
        rows.insert(id.i);
        cols.insert(id.j);
      }
      CHECK(static_cast<int>(rows.size()) == n);
      CHECK(static_cast<int>(cols.size()) == n);
    }
  }
}

TEST_CASE("dimension vector syntax") {
  CHECK(parse_dim_vector("1,2;1;1") == DimVector::typeD({1, 2}, 1, 1));
  CHECK(parse_dim_vector("1,2,3;1,2,3") == DimVector::typeA({1, 2, 3}, {1, 2, 3}));
  CHECK(to_string(DimVector::typeD({1, 2}, 1, 1)) == "1,2;1;1");
  CHECK_THROWS_AS(parse_dim_vector("x"), Error);
  CHECK(parse_dim_vector("2,1;1;1").defect().has_value());
  CHECK(to_string(obj(D(2), {P(0, 1), P(2, 3)})) == "I(0,1) + I(2,inf)");
}
