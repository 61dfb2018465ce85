#pragma once

// Dimension-vector sweeps and the oracle self-check suites behind
// `flagdeg oracle check`.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "flagdeg/io.hpp"
#include "flagdeg/quiver.hpp"

namespace flagdeg {

/// Every valid type D dimension vector with p in [pmin, pmax], n <= nmax and
/// 0 <= k, l <= n.
std::vector<DimVector> type_d_dims(int pmin, int pmax, int nmax);
/// Every valid type A dimension vector with p, q <= pmax and n <= nmax.
std::vector<DimVector> type_a_dims(int pmax, int nmax);

/// Runs fn(0..count-1) on up to `jobs` threads. Exceptions are rethrown.
void parallel_for(int count, int jobs, const std::function<void(int)>& fn);

/// Default seed, overridden by the FLAGDEG_SEED environment variable.
std::uint64_t default_seed();

struct SuiteResult {
  std::string name;
  long passed = 0;
  long failed = 0;
  std::vector<Json> failures;  // first few offenders
};

struct OracleOptions {
  int p = 3;
  int nmax = 4;
  int q = 5;
  int seeds = 100;
  int jobs = 1;
  std::uint64_t seed = 0;
};

/// Formula/oracle agreement, phi identity, curve endpoints and classification
/// invariance, over type D dimension vectors with p' <= p and n <= nmax.
std::vector<SuiteResult> run_oracle_checks(const OracleOptions& options);

}  // namespace flagdeg
