#pragma once

#include <optional>
#include <vector>

#include "pathhom/complexes.hpp"

namespace pathhom {

struct HomologyOptions {
  BuildOptions build;
  bool generators = false;
};

/// Homology of Omega_*(G, alpha, p) in degrees 0..max_n-1. The complex is
/// built through degree max_n so every reported degree sees its incoming
/// boundary.
struct HomologyResult {
  Field field = Field::rational();
  DegreeIndex index{1, 0};
  int max_n = 0;
  std::vector<long long> path_lengths;       // degrees 0..max_n
  std::vector<std::size_t> omega_dims;       // degrees 0..max_n
  std::vector<std::size_t> boundary_ranks;   // rank of alpha on Omega_n, degrees 0..max_n
  std::vector<std::size_t> betti;            // degrees 0..max_n-1
  /// Per degree, cycles in canonical RREF coordinates over allowed paths,
  /// independent modulo boundaries.
  std::optional<std::vector<std::vector<PathChain>>> generators;
  /// sum (-1)^n dim Omega_n over the reported degrees; empty when truncated.
  std::optional<long long> euler;
  /// Allowed paths exist at or beyond degree max_n, so Omega may be nonzero
  /// past the reported range.
  bool truncated = false;
};

HomologyResult homology(const OmegaComplex& cx, int max_n, bool want_generators,
                        const EliminationOptions& elim = {});
HomologyResult homology(const Digraph& g, const DiffElement& alpha, long long p, int max_n,
                        const HomologyOptions& opts = {});

/// Usual path homology: alpha = sum_v d/dv, p = 0.
HomologyResult classical_path_homology(const Digraph& g, int max_n, const HomologyOptions& opts = {});

/// sum_{n <= max_degree} (-1)^n dim Omega_n, or nullopt when the complex is
/// truncated (allowed paths exist past the built range).
std::optional<long long> euler_characteristic(const OmegaComplex& cx);

/// beta_*: H_n(G, alpha, p) -> H_n(G, alpha, p - deg beta) for n < max_n.
/// Both sides use the same complex degree n; their path lengths differ by
/// deg beta.
struct InducedMap {
  DegreeIndex source{1, 0};
  DegreeIndex target{1, 0};
  int beta_degree = 0;
  std::vector<std::size_t> source_betti;
  std::vector<std::size_t> target_betti;
  std::vector<std::size_t> ranks;
  /// Per degree: target_betti x source_betti matrix over the canonical
  /// generator bases of HomologyResult::generators.
  std::optional<std::vector<Matrix>> matrices;
};

InducedMap induced_map(const Digraph& g, const DiffElement& alpha, long long p,
                       const DiffElement& beta, int max_n, const HomologyOptions& opts = {},
                       bool want_matrices = false);

/// Cycle space of degree n in Omega coordinates and the boundary space of
/// degree n in allowed-path coordinates. Exposed for tests and checks.
struct CyclesAndBoundaries {
  Subspace cycles_omega;      // kernel of the boundary, Omega coordinates
  std::vector<SparseVector> cycles;  // the same cycles in allowed coordinates
  Subspace boundaries;        // image of degree n+1, allowed coordinates
};
CyclesAndBoundaries cycles_and_boundaries(const OmegaComplex& cx, int n,
                                          const EliminationOptions& elim = {});

}  // namespace pathhom
