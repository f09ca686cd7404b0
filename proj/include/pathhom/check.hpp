#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "pathhom/homology.hpp"

namespace pathhom {

/// Hand-rolled generators shared by the check suites and the unit tests.
namespace gen {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
long long uniform(Rng& rng, long long lo, long long hi);
bool coin(Rng& rng, double p_true);

/// 1..max_vertices vertices named v0, v1, ...; each ordered pair is an edge
/// with probability edge_prob.
Digraph digraph(Rng& rng, std::size_t max_vertices, double edge_prob);

/// Nonzero small integer in [-bound, bound].
Scalar coefficient(Rng& rng, const Field& field, long long bound = 3);

/// Up to max_terms random monomials of the given degree on vertex_count
/// generators, with small integer coefficients. May be zero.
DiffElement element(Rng& rng, std::size_t vertex_count, int degree, const Field& field,
                    std::size_t max_terms = 4);

/// Up to max_terms elementary paths of the given length. Consecutive repeats
/// are forced with some probability so non-regular paths show up often.
PathChain chain(Rng& rng, std::size_t vertex_count, int length, const Field& field,
                std::size_t max_terms = 4);

/// Single elementary path of the given length, repeats allowed.
Path path(Rng& rng, std::size_t vertex_count, int length);

/// rows x cols with roughly density * rows * cols nonzeros; with
/// low_rank set it is a product through a thin middle dimension.
Matrix matrix(Rng& rng, std::size_t rows, std::size_t cols, const Field& field, double density,
              bool low_rank = false);

}  // namespace gen

using ApplyFn = std::function<PathChain(const DiffElement&, const PathChain&)>;

struct CheckOptions {
  std::uint64_t seed = 20240611;
  std::size_t trials = 500;
  /// Replaces apply() on the full path space; a test fixture injects faults here.
  ApplyFn apply;
  /// Counterexamples kept per suite.
  std::size_t max_counterexamples = 3;
};

struct SuiteReport {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;
  double seconds = 0;  // wall time; not part of the printed report
};

struct CheckReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<SuiteReport> suites;

  bool passed() const;
};

/// Runs every randomized suite. Each suite draws from its own stream derived
/// from the seed, so suites are reproducible in isolation.
CheckReport run_checks(const CheckOptions& opts = {});

void print_report(std::ostream& out, const CheckReport& report);

}  // namespace pathhom
