#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pathhom/diff_algebra.hpp"
#include "pathhom/linalg.hpp"

namespace pathhom {

/// Degree bookkeeping for a boundary element of odd degree w = 2t+1 and an
/// integer parameter p = k*w + q with 0 <= q < w. Complex degree n sits at
/// path length (n + k) * w + q; a negative length means the zero space.
class DegreeIndex {
 public:
  DegreeIndex(int alpha_degree, long long p);

  int width() const noexcept { return width_; }
  int t() const noexcept { return (width_ - 1) / 2; }
  long long p() const noexcept { return p_; }
  long long k() const noexcept { return k_; }
  long long q() const noexcept { return q_; }
  long long path_length(long long n) const noexcept { return (n + k_) * width_ + q_; }

  friend bool operator==(const DegreeIndex&, const DegreeIndex&) = default;

 private:
  int width_;
  long long p_, k_, q_;
};

struct BuildOptions {
  Field field = Field::rational();
  std::size_t path_cap = kDefaultPathCap;
  EliminationOptions elimination;
};

/// Coordinates of c over a lexicographically sorted path basis, or nullopt
/// if c has a term outside the basis.
std::optional<SparseVector> coordinates_in(const PathChain& c, std::span<const Path> basis);

/// Chain sum_j v_j * basis[j] of the given path length.
PathChain chain_from(const SparseVector& v, std::span<const Path> basis, long long path_length);

/// Omega at one path length: allowed chains whose alpha-image is allowed.
struct OmegaSpace {
  long long path_length = 0;
  std::vector<Path> allowed;  // basis of A, lexicographic
  Subspace omega;             // coordinates over `allowed`

  PathChain basis_chain(std::size_t i) const;
};

/// Omega_L(G, alpha) = A_L intersected with alpha^{-1}(A_{L-deg alpha}),
/// computed as the kernel of the non-allowed block of alpha: A_L -> R_{L-deg}.
/// When L < deg alpha the image lies in a zero space and Omega_L = A_L.
OmegaSpace omega_basis(const Digraph& g, const DiffElement& alpha, long long path_length,
                       const BuildOptions& opts = {});

struct OmegaDegree : OmegaSpace {
  /// alpha on the Omega basis (columns) in allowed-path coordinates of
  /// degree n-1 (rows). Degree 0 maps to the zero space: no rows.
  Matrix boundary;
};

/// Truncated chain complex Omega_*(G, alpha, p) in degrees 0..max_degree.
class OmegaComplex {
 public:
  const Digraph& digraph() const noexcept { return graph_; }
  const DiffElement& alpha() const noexcept { return alpha_; }
  const DegreeIndex& index() const noexcept { return index_; }
  const Field& field() const noexcept { return field_; }
  int max_degree() const noexcept { return static_cast<int>(degrees_.size()) - 1; }
  const std::vector<OmegaDegree>& degrees() const noexcept { return degrees_; }
  const OmegaDegree& degree(int n) const { return degrees_.at(static_cast<std::size_t>(n)); }

  /// Allowed paths exist at the path length of degree max_degree + 1, so the
  /// complex may continue past what was built.
  bool truncated() const noexcept { return truncated_; }

 private:
  friend OmegaComplex build_omega_complex(const Digraph&, const DiffElement&, long long, int,
                                          const BuildOptions&);
  OmegaComplex(Digraph g, DiffElement alpha, DegreeIndex index, Field field)
      : graph_(std::move(g)), alpha_(std::move(alpha)), index_(index), field_(field) {}

  Digraph graph_;
  DiffElement alpha_;
  DegreeIndex index_;
  Field field_;
  std::vector<OmegaDegree> degrees_;
  bool truncated_ = false;
};

/// Throws InputError unless alpha has odd degree with coefficients in
/// opts.field; ResourceError when path enumeration exceeds opts.path_cap.
OmegaComplex build_omega_complex(const Digraph& g, const DiffElement& alpha, long long p, int max_n,
                                 const BuildOptions& opts = {});

enum class PathSpace { Elementary, Regular };

struct FullDegree {
  long long path_length = 0;
  std::vector<Path> basis;
  Matrix boundary;  // basis of degree n-1 (rows) x basis (cols)
};

/// Lambda_*(V, alpha, p) or R_*(V, alpha, p) on all (regular) paths.
/// Intended for small vertex counts only.
class FullComplex {
 public:
  PathSpace kind() const noexcept { return kind_; }
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  const DiffElement& alpha() const noexcept { return alpha_; }
  const DegreeIndex& index() const noexcept { return index_; }
  const Field& field() const noexcept { return field_; }
  int max_degree() const noexcept { return static_cast<int>(degrees_.size()) - 1; }
  const std::vector<FullDegree>& degrees() const noexcept { return degrees_; }
  const FullDegree& degree(int n) const { return degrees_.at(static_cast<std::size_t>(n)); }

 private:
  friend FullComplex build_full_complex(PathSpace, std::size_t, const DiffElement&, long long, int,
                                        const BuildOptions&);
  FullComplex(PathSpace kind, std::size_t vertex_count, DiffElement alpha, DegreeIndex index,
              Field field)
      : kind_(kind), vertex_count_(vertex_count), alpha_(std::move(alpha)), index_(index),
        field_(field) {}

  PathSpace kind_;
  std::size_t vertex_count_;
  DiffElement alpha_;
  DegreeIndex index_;
  Field field_;
  std::vector<FullDegree> degrees_;
};

FullComplex build_full_complex(PathSpace kind, std::size_t vertex_count, const DiffElement& alpha,
                               long long p, int max_n, const BuildOptions& opts = {});

/// Matrices of an even-degree beta between complexes built at p and p - deg beta.
struct ChainMap {
  DegreeIndex source;
  DegreeIndex target;
  int beta_degree;
  /// Per degree: target coordinates (rows) x source basis (cols). For Omega
  /// complexes rows are allowed-path coordinates and columns the Omega basis.
  std::vector<Matrix> matrices;
};

/// Throws InputError for odd beta or mismatched complexes, ChainMapEscape
/// when beta sends an Omega basis chain outside the target Omega, and
/// ConsistencyError if beta and alpha fail to commute.
ChainMap chain_map_matrix(const OmegaComplex& src, const OmegaComplex& dst, const DiffElement& beta);
ChainMap chain_map_matrix(const FullComplex& src, const FullComplex& dst, const DiffElement& beta);

/// Throws InputError unless every coefficient of e lies in `field`.
void require_field(const DiffElement& e, const Field& field, const char* what);

}  // namespace pathhom
