#include "pathhom/complexes.hpp"

#include <map>

#include "pathhom/errors.hpp"

namespace pathhom {

DegreeIndex::DegreeIndex(int alpha_degree, long long p) : width_(alpha_degree), p_(p) {
  if (alpha_degree < 1 || alpha_degree % 2 == 0)
    throw InputError("alpha must have odd degree, got " + std::to_string(alpha_degree));
  k_ = p >= 0 ? p / width_ : -((-p + width_ - 1) / width_);
  q_ = p - k_ * width_;
}

void require_field(const DiffElement& e, const Field& field, const char* what) {
  for (const auto& [m, c] : e.terms())
    if (c.field() != field)
      throw InputError(std::string(what) + " has coefficients in " + c.field().name() +
                       " but the computation runs over " + field.name());
}

std::optional<SparseVector> coordinates_in(const PathChain& c, std::span<const Path> basis) {
  SparseVector v;
  v.reserve(c.size());
  for (const auto& [p, x] : c) {
    auto idx = basis_index(basis, p);
    if (!idx) return std::nullopt;
    v.emplace_back(*idx, x);
  }
  // chain order and basis order are both lexicographic
  return v;
}

PathChain chain_from(const SparseVector& v, std::span<const Path> basis, long long path_length) {
  PathChain c(static_cast<int>(path_length));
  for (const auto& [i, x] : v) c.add(basis[i], x);
  return c;
}

PathChain OmegaSpace::basis_chain(std::size_t i) const {
  return chain_from(omega.basis().at(i), allowed, path_length);
}

namespace {

struct SpaceWithImages {
  OmegaSpace space;
  std::vector<PathChain> images;  // alpha(allowed[j]) in R
};

SpaceWithImages build_space(const Digraph& g, const DiffElement& alpha, long long length,
                            const BuildOptions& opts) {
  SpaceWithImages out{OmegaSpace{length, {}, Subspace(0, opts.field)}, {}};
  if (length < 0) return out;
  auto& space = out.space;
  space.allowed = enumerate_allowed(g, static_cast<int>(length), opts.path_cap);
  const std::size_t dim_a = space.allowed.size();
  if (length < alpha.degree()) {
    space.omega = Subspace::whole(dim_a, opts.field);
    return out;
  }

  out.images.reserve(dim_a);
  std::map<Path, std::size_t> bad_rows;
  for (const auto& path : space.allowed) {
    out.images.push_back(apply_regular(alpha, PathChain(path, opts.field.one())));
    for (const auto& [img, c] : out.images.back())
      if (!is_allowed(g, img)) bad_rows.emplace(img, 0);
  }
  std::size_t r = 0;
  for (auto& [p, row] : bad_rows) row = r++;

  Matrix block(bad_rows.size(), dim_a, opts.field);
  for (std::size_t j = 0; j < dim_a; ++j) {
    SparseVector col;
    for (const auto& [img, c] : out.images[j])
      if (auto it = bad_rows.find(img); it != bad_rows.end()) col.emplace_back(it->second, c);
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    block.set_column(j, std::move(col));
  }
  space.omega = kernel(block, opts.elimination);
  return out;
}

}  // namespace

OmegaSpace omega_basis(const Digraph& g, const DiffElement& alpha, long long path_length,
                       const BuildOptions& opts) {
  require_field(alpha, opts.field, "alpha");
  return build_space(g, alpha, path_length, opts).space;
}

OmegaComplex build_omega_complex(const Digraph& g, const DiffElement& alpha, long long p, int max_n,
                                 const BuildOptions& opts) {
  if (max_n < 0) throw InputError("degree bound must be non-negative");
  require_field(alpha, opts.field, "alpha");
  DegreeIndex index(alpha.degree(), p);
  OmegaComplex cx(g, alpha, index, opts.field);

  for (int n = 0; n <= max_n; ++n) {
    SpaceWithImages built = build_space(g, alpha, index.path_length(n), opts);
    OmegaDegree deg{std::move(built.space), Matrix(0, 0, opts.field)};
    const std::size_t dim = deg.omega.dim();
    if (n == 0) {
      deg.boundary = Matrix(0, dim, opts.field);
    } else {
      const auto& below = cx.degrees_.back().allowed;
      deg.boundary = Matrix(below.size(), dim, opts.field);
      for (std::size_t i = 0; i < dim && !built.images.empty(); ++i) {
        PathChain image(static_cast<int>(deg.path_length - index.width()));
        for (const auto& [j, x] : deg.omega.basis()[i]) image += x * built.images[j];
        auto coords = coordinates_in(image, below);
        if (!coords)
          throw ConsistencyError("alpha image of an Omega basis chain has a non-allowed term: " +
                                 image.to_string(g));
        deg.boundary.set_column(i, std::move(*coords));
      }
    }
    cx.degrees_.push_back(std::move(deg));
  }

  long long next = index.path_length(max_n + 1);
  auto longest = g.longest_allowed_length();
  cx.truncated_ = next >= 0 && (!longest || *longest >= next);
  return cx;
}

FullComplex build_full_complex(PathSpace kind, std::size_t vertex_count, const DiffElement& alpha,
                               long long p, int max_n, const BuildOptions& opts) {
  if (max_n < 0) throw InputError("degree bound must be non-negative");
  require_field(alpha, opts.field, "alpha");
  DegreeIndex index(alpha.degree(), p);
  FullComplex cx(kind, vertex_count, alpha, index, opts.field);

  for (int n = 0; n <= max_n; ++n) {
    FullDegree deg{index.path_length(n), {}, Matrix(0, 0, opts.field)};
    if (deg.path_length >= 0) {
      int len = static_cast<int>(deg.path_length);
      deg.basis = kind == PathSpace::Elementary ? enumerate_elementary(vertex_count, len, opts.path_cap)
                                                : enumerate_regular(vertex_count, len, opts.path_cap);
    }
    if (n == 0) {
      deg.boundary = Matrix(0, deg.basis.size(), opts.field);
    } else {
      const auto& below = cx.degrees_.back().basis;
      deg.boundary = Matrix(below.size(), deg.basis.size(), opts.field);
      for (std::size_t j = 0; j < deg.basis.size(); ++j) {
        PathChain x(deg.basis[j], opts.field.one());
        PathChain image = kind == PathSpace::Elementary ? apply(alpha, x) : apply_regular(alpha, x);
        if (image.is_zero()) continue;
        auto coords = coordinates_in(image, below);
        if (!coords) throw ConsistencyError("alpha image left the path space");
        deg.boundary.set_column(j, std::move(*coords));
      }
    }
    cx.degrees_.push_back(std::move(deg));
  }
  return cx;
}

namespace {

void check_beta(const DiffElement& beta, const DegreeIndex& src, const DegreeIndex& dst,
                int src_max, int dst_max, const Field& field) {
  if (beta.degree() % 2 != 0)
    throw InputError("beta must have even degree, got " + std::to_string(beta.degree()));
  require_field(beta, field, "beta");
  if (dst.width() != src.width() || dst.p() != src.p() - beta.degree())
    throw InputError("target complex must be built at p - deg(beta) = " +
                     std::to_string(src.p() - beta.degree()) + ", got " + std::to_string(dst.p()));
  if (src_max != dst_max) throw InputError("source and target complexes have different degree bounds");
}

}  // namespace

ChainMap chain_map_matrix(const OmegaComplex& src, const OmegaComplex& dst, const DiffElement& beta) {
  check_beta(beta, src.index(), dst.index(), src.max_degree(), dst.max_degree(), src.field());
  if (!(src.digraph() == dst.digraph()) || !(src.alpha() == dst.alpha()))
    throw InputError("source and target complexes use different digraphs or alpha");
  const Digraph& g = src.digraph();
  const DiffElement& alpha = src.alpha();

  ChainMap out{src.index(), dst.index(), beta.degree(), {}};
  for (int n = 0; n <= src.max_degree(); ++n) {
    const OmegaDegree& from = src.degree(n);
    const OmegaDegree& to = dst.degree(n);
    Matrix m(to.allowed.size(), from.omega.dim(), src.field());
    for (std::size_t i = 0; i < from.omega.dim(); ++i) {
      PathChain x = from.basis_chain(i);
      PathChain y = apply_regular(beta, x);
      if (apply_regular(beta, apply_regular(alpha, x)) != apply_regular(alpha, y))
        throw ConsistencyError("beta and alpha do not commute on " + x.to_string(g));
      if (y.is_zero()) continue;
      auto coords = coordinates_in(y, to.allowed);
      if (!coords || !to.omega.contains(*coords))
        throw ChainMapEscape("beta maps the Omega chain " + x.to_string(g) + " to " + y.to_string(g) +
                             ", which is not in the target Omega space at path length " +
                             std::to_string(to.path_length));
      m.set_column(i, std::move(*coords));
    }
    out.matrices.push_back(std::move(m));
  }
  return out;
}

ChainMap chain_map_matrix(const FullComplex& src, const FullComplex& dst, const DiffElement& beta) {
  check_beta(beta, src.index(), dst.index(), src.max_degree(), dst.max_degree(), src.field());
  if (src.kind() != dst.kind() || src.vertex_count() != dst.vertex_count() ||
      !(src.alpha() == dst.alpha()))
    throw InputError("source and target complexes differ in kind, vertex set or alpha");
  const bool regular = src.kind() == PathSpace::Regular;
  auto act = [&](const DiffElement& e, const PathChain& c) {
    return regular ? apply_regular(e, c) : apply(e, c);
  };

  ChainMap out{src.index(), dst.index(), beta.degree(), {}};
  for (int n = 0; n <= src.max_degree(); ++n) {
    const FullDegree& from = src.degree(n);
    const FullDegree& to = dst.degree(n);
    Matrix m(to.basis.size(), from.basis.size(), src.field());
    for (std::size_t j = 0; j < from.basis.size(); ++j) {
      PathChain x(from.basis[j], src.field().one());
      PathChain y = act(beta, x);
      if (act(beta, act(src.alpha(), x)) != act(src.alpha(), y))
        throw ConsistencyError("beta and alpha do not commute on a basis path");
      if (y.is_zero()) continue;
      auto coords = coordinates_in(y, to.basis);
      if (!coords) throw ConsistencyError("beta image left the path space");
      m.set_column(j, std::move(*coords));
    }
    out.matrices.push_back(std::move(m));
  }
  return out;
}

}  // namespace pathhom
