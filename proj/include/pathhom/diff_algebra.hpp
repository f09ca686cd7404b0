#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>

#include "pathhom/chain.hpp"

namespace pathhom {

/// Wedge product of distinct generators d/dv, stored with strictly
/// increasing vertex indices. The empty monomial is the unit of degree 0.
class WedgeMonomial {
 public:
  WedgeMonomial() = default;
  /// Throws std::invalid_argument unless `verts` is strictly increasing.
  explicit WedgeMonomial(std::span<const VertexId> verts);

  std::size_t degree() const noexcept { return verts_.size(); }
  const Path::Storage& vertices() const noexcept { return verts_; }

  friend bool operator==(const WedgeMonomial&, const WedgeMonomial&) = default;
  friend std::strong_ordering operator<=>(const WedgeMonomial& a, const WedgeMonomial& b);

 private:
  Path::Storage verts_;
};

struct SignedMonomial {
  WedgeMonomial monomial;
  int sign;
};

/// Sorts a raw product of generators. A repeated generator makes the product
/// zero (m = -m and 2 is invertible), reported as nullopt.
std::optional<SignedMonomial> normalize_monomial(std::span<const VertexId> raw);

/// Homogeneous element of the differential algebra E^k(V): a combination of
/// normalized wedge monomials of degree k. Degree 0 elements are scalars.
class DiffElement {
 public:
  using Terms = std::map<WedgeMonomial, Scalar>;

  explicit DiffElement(int degree);

  static DiffElement scalar(const Scalar& s);
  /// The generator d/dv scaled by coeff.
  static DiffElement generator(VertexId v, const Scalar& coeff);
  /// coeff * (d/dv1 ^ ... ^ d/dvk) for an unsorted product, normalized.
  static DiffElement monomial(std::span<const VertexId> raw, const Scalar& coeff);

  int degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds coeff * raw after normalizing; raw.size() must equal the degree.
  void add_term(std::span<const VertexId> raw, const Scalar& coeff);

  DiffElement& operator+=(const DiffElement& o);
  DiffElement& operator*=(const Scalar& s);
  friend DiffElement operator+(DiffElement a, const DiffElement& b) { return a += b; }
  friend DiffElement operator*(const Scalar& s, DiffElement a) { return a *= s; }
  friend bool operator==(const DiffElement&, const DiffElement&) = default;

  std::string to_string(const Digraph& g) const;

 private:
  void accumulate(const WedgeMonomial& m, const Scalar& coeff);

  int degree_;
  Terms terms_;
};

/// Exterior product; wedge(a, b) = (-1)^{deg a * deg b} wedge(b, a).
DiffElement wedge(const DiffElement& a, const DiffElement& b);

/// Partial derivative d/dv on elementary paths:
///   d/dv (v0...vn) = sum_i (-1)^i delta(v, vi) v0..^vi..vn,
/// extended linearly. Degree-0 chains map to the zero chain of degree -1.
PathChain partial(VertexId v, const PathChain& c);

/// Action on the full path space: d/dv1 ^ ... ^ d/dvk acts as the composite
/// d/dv1 o ... o d/dvk, rightmost factor first. Degree 0 acts by scalar
/// multiplication. The result has degree deg(c) - deg(a).
PathChain apply(const DiffElement& a, const PathChain& c);

/// Action on the regular-path quotient: apply() followed by dropping
/// non-regular terms. The non-regular span is stable under every d/dv, so
/// dropping once at the end equals dropping after each factor.
PathChain apply_regular(const DiffElement& a, const PathChain& c);

/// sum_v weights[v] * d/dv. With all weights 1 this is the usual path boundary.
DiffElement weighted_boundary(std::span<const Scalar> weights);

}  // namespace pathhom
