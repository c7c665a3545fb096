#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "drazin/matrix.hpp"

namespace drazin::harness {

struct GenerationError : Error {
  using Error::Error;
};

struct UnknownSuiteError : Error {
  using Error::Error;
};

// splitmix64: tiny, portable, and splittable into per-case streams.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next_u64();
  double uniform();           // [0, 1)
  double normal();            // standard normal (Box-Muller)
  Complex cnormal();          // standard complex normal
  std::uint64_t below(std::uint64_t bound);
};

// Derives the RNG stream for a case: parallel execution order cannot change
// the corpus because every case owns an independent stream.
std::uint64_t case_stream(std::uint64_t seed, std::uint64_t ordinal);

// S * diag(C, N) * S^{-1} with C random well-conditioned invertible and N a
// shuffled-block nilpotent of exact index `index_target` (0 = no nilpotent
// part). The true Drazin index of the result is index_target by construction.
Matrix gen_matrix(std::size_t n, std::size_t index_target, Rng& rng,
                  const ToleranceConfig& tol = {});

struct SuiteConfig {
  std::uint64_t seed = 1;
  std::vector<std::size_t> sizes = {2, 3, 4, 5, 6, 7, 8};
  std::size_t cases_per_size = 50;
  std::vector<std::size_t> index_targets = {0, 1, 2, 3, 4};
  ToleranceConfig tolerances;
  std::size_t lift_cap = 12;
  void validate() const;
};

struct CheckRecord {
  std::string name;
  bool pass = false;
  double residual = 0.0;
};

struct CaseRecord {
  std::size_t ordinal = 0;
  std::size_t dim = 0;
  std::size_t index_target = 0;
  std::uint64_t stream = 0;
  std::string matrix_hash;
  std::vector<CheckRecord> checks;
  bool pass = true;
};

struct Report {
  std::string suite;
  SuiteConfig config;
  std::vector<CaseRecord> cases;
  std::size_t total = 0;
  std::size_t failed = 0;
  double max_residual = 0.0;
  double wall_time_seconds = 0.0;

  // The body (include_wall_time = false) is byte-reproducible for a fixed
  // config; the wall-time field is the only nondeterministic part.
  std::string to_json(bool include_wall_time = true) const;
};

const std::vector<std::string>& suite_names();
Report run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace drazin::harness
