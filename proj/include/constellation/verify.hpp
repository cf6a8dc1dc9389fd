#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "constellation/complex.hpp"

namespace constellation {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  bool passed() const;
  std::size_t failures() const;
};

struct VerifyOptions {
  std::string corpus_dir;  // empty: the bundled corpus
  int threads = 0;
  std::uint64_t seed = 20240917;
  std::uint64_t fano_trials = 100'000;
  // Complexes on at most this many vertices are enumerated exhaustively in
  // the duality suites (at most 6); one more vertex is sampled.
  int exhaustive_max_m = 6;
  int samples = 400;
  // The xi criterion is exhaustive up to this m and sampled above it.
  int xi_exhaustive_max_m = 5;
  int xi_sample_max_m = 8;
  int xi_samples = 2000;
  bool verbose = false;
};

// Names of public library operations reached by the suites.
using OperationLog = std::set<std::string>;

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const VerifyOptions& options = {}, OperationLog* log = nullptr);

// Every public operation of the library; `verify all` must reach each one.
std::vector<std::string> public_operations();

// Recomputes derived expected values of the corpus and rewrites the files
// whose values changed. Returns the number of rewritten files.
int regenerate_oracles(const VerifyOptions& options = {});

// Random complex on m vertices: num_faces subsets, each vertex kept with
// probability density, taken as generating faces.
SimplicialComplex random_complex(int m, int num_faces, double density, std::mt19937_64& rng);

// Isomorphism up to relabeling of vertices, by brute force over permutations
// (m <= 9).
bool isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace constellation
