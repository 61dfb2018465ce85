#pragma once

// Exact linear algebra over a prime field: standard representatives,
// rank numbers by elimination, classification of arbitrary configurations,
// and the one-parameter degeneration curves attached to regions.

#include <cstdint>
#include <optional>
#include <vector>

#include "flagdeg/bracket.hpp"
#include "flagdeg/quiver.hpp"
#include "flagdeg/regions.hpp"

namespace flagdeg {

/// Arithmetic modulo a prime q.
class PrimeField {
 public:
  explicit PrimeField(int q);
  int q() const { return q_; }
  int reduce(long long v) const;
  int add(int x, int y) const { return (x + y) % q_; }
  int sub(int x, int y) const { return (x - y + q_) % q_; }
  int mul(int x, int y) const { return static_cast<int>(static_cast<long long>(x) * y % q_); }
  int neg(int x) const { return x == 0 ? 0 : q_ - x; }
  int inv(int x) const;

 private:
  int q_;
};

/// Row-generator matrix; each row is a vector of length n.
using Matrix = std::vector<std::vector<int>>;

/// Reduced row echelon form basis of the row span.
Matrix row_basis(const PrimeField& f, Matrix m, int n);
int rank(const PrimeField& f, const Matrix& m, int n);
Matrix span_sum(const PrimeField& f, const Matrix& a, const Matrix& b, int n);
Matrix intersect(const PrimeField& f, const Matrix& a, const Matrix& b, int n);
/// Inverse of a square matrix; throws Error if singular.
Matrix invert(const PrimeField& f, const Matrix& m);
/// Row vectors times a square matrix.
Matrix multiply(const PrimeField& f, const Matrix& rows, const Matrix& m);
/// Span of the first `dim` coordinate vectors.
Matrix coordinate_subspace(int dim, int n);

/// Where one summand of a standard representative lives.
struct Block {
  IndecId id;
  int first = -1;   // coordinate of the vector at the smaller index (e_i), or -1
  int second = -1;  // coordinate of the vector at the larger index (e_j), or -1
  int u_row = -1;   // row of U contributed by this block, or -1
  int w_row = -1;
};

/// (U, W, V_.) with V_m spanned by the first a_m coordinates. For type A
/// the second flag is given by `second_flag`: its first b_m rows span V'_m.
struct SubspaceConfig {
  QuiverShape shape;
  int q = 5;
  int n = 0;
  std::vector<int> a;
  std::vector<int> b;  // type A only
  Matrix U;
  Matrix W;
  Matrix second_flag;        // type A only, n x n
  std::vector<Block> blocks; // filled by std_config
};

void check_config(const SubspaceConfig& c);

SubspaceConfig std_config(const FlagObject& f, int q);
RankVector config_ranks(const SubspaceConfig& c);
/// Kernel dimension of (u, w) -> u + w mod V_{a_i} on (U ∩ V_{a_j}) x (W ∩ V_{a_j}).
int phi_kernel_dim(const SubspaceConfig& c, int i, int j);
FlagObject classify(const SubspaceConfig& c);

/// Thrown when a curve would need a perturbation along the deleted e_inf.
struct UnsupportedCurve : Error {
  using Error::Error;
};

/// Standard representative of f with the region's tau-term inserted.
SubspaceConfig curve(const FlagObject& f, const Region& r, int tau, int q);

/// Uniformly random full-rank U (k x n) and W (l x n); type D, standard flag.
SubspaceConfig random_config(int n, int k, int l, const std::vector<int>& a, int q,
                             std::uint64_t seed);

/// Applies a random invertible flag-preserving change of basis to U and W.
SubspaceConfig random_flag_action(const SubspaceConfig& c, std::uint64_t seed);

}  // namespace flagdeg
