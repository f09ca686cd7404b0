#include "pathhom/homology.hpp"

#include "pathhom/errors.hpp"

namespace pathhom {

namespace {

SparseVector combine(const SparseVector& coeffs, const std::vector<SparseVector>& basis) {
  SparseVector out;
  for (const auto& [i, x] : coeffs) axpy(out, x, basis[i]);
  return out;
}

bool allowed_paths_at(const Digraph& g, long long length) {
  if (length < 0) return false;
  auto longest = g.longest_allowed_length();
  return !longest || *longest >= length;
}

// Canonical complement of the boundaries inside the cycles: every cycle
// reduced against the RREF boundary basis, then brought to RREF.
Subspace generator_space(const OmegaComplex& cx, int n, const EliminationOptions& elim) {
  CyclesAndBoundaries cb = cycles_and_boundaries(cx, n, elim);
  std::vector<SparseVector> reduced;
  reduced.reserve(cb.cycles.size());
  for (const auto& z : cb.cycles) reduced.push_back(cb.boundaries.reduce(z));
  return Subspace::span(cb.boundaries.ambient(), cx.field(), std::move(reduced), elim);
}

}  // namespace

CyclesAndBoundaries cycles_and_boundaries(const OmegaComplex& cx, int n,
                                          const EliminationOptions& elim) {
  const OmegaDegree& deg = cx.degree(n);
  CyclesAndBoundaries out{kernel(deg.boundary, elim), {}, Subspace(deg.allowed.size(), cx.field())};
  for (const auto& z : out.cycles_omega.basis()) out.cycles.push_back(combine(z, deg.omega.basis()));
  if (n + 1 <= cx.max_degree()) {
    const Matrix& up = cx.degree(n + 1).boundary;
    std::vector<SparseVector> cols;
    for (std::size_t j = 0; j < up.cols(); ++j) cols.push_back(up.column(j));
    out.boundaries = Subspace::span(deg.allowed.size(), cx.field(), std::move(cols), elim);
  }
  return out;
}

HomologyResult homology(const OmegaComplex& cx, int max_n, bool want_generators,
                        const EliminationOptions& elim) {
  if (max_n < 1) throw InputError("degree bound must be at least 1");
  if (cx.max_degree() < max_n)
    throw InputError("complex built only through degree " + std::to_string(cx.max_degree()));

  HomologyResult r;
  r.field = cx.field();
  r.index = cx.index();
  r.max_n = max_n;
  for (int n = 0; n <= max_n; ++n) {
    const OmegaDegree& deg = cx.degree(n);
    r.path_lengths.push_back(deg.path_length);
    r.omega_dims.push_back(deg.omega.dim());
    r.boundary_ranks.push_back(rank(deg.boundary, elim));
  }
  for (int n = 0; n < max_n; ++n) {
    std::size_t used = r.boundary_ranks[n] + r.boundary_ranks[n + 1];
    if (used > r.omega_dims[n])
      throw ConsistencyError("boundary ranks exceed dim Omega_" + std::to_string(n));
    r.betti.push_back(r.omega_dims[n] - used);
  }

  r.truncated = allowed_paths_at(cx.digraph(), cx.index().path_length(max_n));
  if (!r.truncated) {
    long long chi = 0;
    for (int n = 0; n < max_n; ++n)
      chi += (n % 2 ? -1 : 1) * static_cast<long long>(r.omega_dims[n]);
    r.euler = chi;
  }

  if (want_generators) {
    std::vector<std::vector<PathChain>> gens;
    for (int n = 0; n < max_n; ++n) {
      Subspace s = generator_space(cx, n, elim);
      if (s.dim() != r.betti[n])
        throw ConsistencyError("generator count " + std::to_string(s.dim()) + " != betti " +
                               std::to_string(r.betti[n]) + " in degree " + std::to_string(n));
      std::vector<PathChain> chains;
      for (const auto& v : s.basis())
        chains.push_back(chain_from(v, cx.degree(n).allowed, cx.degree(n).path_length));
      gens.push_back(std::move(chains));
    }
    r.generators = std::move(gens);
  }
  return r;
}

HomologyResult homology(const Digraph& g, const DiffElement& alpha, long long p, int max_n,
                        const HomologyOptions& opts) {
  if (max_n < 1) throw InputError("degree bound must be at least 1");
  OmegaComplex cx = build_omega_complex(g, alpha, p, max_n, opts.build);
  return homology(cx, max_n, opts.generators, opts.build.elimination);
}

HomologyResult classical_path_homology(const Digraph& g, int max_n, const HomologyOptions& opts) {
  std::vector<Scalar> ones(g.vertex_count(), opts.build.field.one());
  return homology(g, weighted_boundary(ones), 0, max_n, opts);
}

std::optional<long long> euler_characteristic(const OmegaComplex& cx) {
  if (cx.truncated()) return std::nullopt;
  long long chi = 0;
  for (int n = 0; n <= cx.max_degree(); ++n)
    chi += (n % 2 ? -1 : 1) * static_cast<long long>(cx.degree(n).omega.dim());
  return chi;
}

InducedMap induced_map(const Digraph& g, const DiffElement& alpha, long long p,
                       const DiffElement& beta, int max_n, const HomologyOptions& opts,
                       bool want_matrices) {
  if (max_n < 1) throw InputError("degree bound must be at least 1");
  if (beta.degree() % 2 != 0)
    throw InputError("beta must have even degree, got " + std::to_string(beta.degree()));
  const auto& elim = opts.build.elimination;
  OmegaComplex src = build_omega_complex(g, alpha, p, max_n, opts.build);
  OmegaComplex dst = build_omega_complex(g, alpha, p - beta.degree(), max_n, opts.build);
  ChainMap map = chain_map_matrix(src, dst, beta);

  HomologyResult hs = homology(src, max_n, false, elim);
  HomologyResult ht = homology(dst, max_n, false, elim);
  InducedMap out{src.index(), dst.index(), beta.degree(), hs.betti, ht.betti, {}, std::nullopt};
  if (want_matrices) out.matrices.emplace();

  for (int n = 0; n < max_n; ++n) {
    const Matrix& m = map.matrices[static_cast<std::size_t>(n)];
    CyclesAndBoundaries from = cycles_and_boundaries(src, n, elim);
    CyclesAndBoundaries to = cycles_and_boundaries(dst, n, elim);
    std::vector<SparseVector> images;
    for (const auto& z : from.cycles_omega.basis()) images.push_back(m.apply(z));
    std::size_t r = quotient_rank(images, to.boundaries, elim);
    if (r > std::min(hs.betti[n], ht.betti[n]))
      throw ConsistencyError("induced rank exceeds a Betti number in degree " + std::to_string(n));
    out.ranks.push_back(r);

    if (want_matrices) {
      Subspace src_gens = generator_space(src, n, elim);
      Subspace dst_gens = generator_space(dst, n, elim);
      Matrix mat(dst_gens.dim(), src_gens.dim(), dst.field());
      for (std::size_t j = 0; j < src_gens.dim(); ++j) {
        auto omega_coords = src.degree(n).omega.coordinates(src_gens.basis()[j]);
        if (!omega_coords) throw ConsistencyError("generator outside Omega");
        SparseVector oc;
        for (std::size_t i = 0; i < omega_coords->size(); ++i)
          if (!(*omega_coords)[i].is_zero()) oc.emplace_back(i, (*omega_coords)[i]);
        SparseVector image = to.boundaries.reduce(m.apply(oc));
        auto coords = dst_gens.coordinates(image);
        if (!coords) throw ConsistencyError("beta image of a cycle is not a cycle class");
        SparseVector col;
        for (std::size_t i = 0; i < coords->size(); ++i)
          if (!(*coords)[i].is_zero()) col.emplace_back(i, (*coords)[i]);
        mat.set_column(j, std::move(col));
      }
      out.matrices->push_back(std::move(mat));
    }
  }
  return out;
}

}  // namespace pathhom
