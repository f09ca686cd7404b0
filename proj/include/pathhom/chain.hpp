#pragma once

#include <map>
#include <string>

#include "pathhom/digraph.hpp"
#include "pathhom/scalar.hpp"

namespace pathhom {

/// Finite linear combination of elementary paths of one length (the
/// degree). Zero coefficients are never stored; iteration is in
/// lexicographic path order. Negative degrees hold only the zero chain.
class PathChain {
 public:
  using Terms = std::map<Path, Scalar>;

  explicit PathChain(int degree) : degree_(degree) {}
  PathChain(const Path& p, const Scalar& coeff);

  int degree() const noexcept { return degree_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Terms& terms() const noexcept { return terms_; }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }

  /// nullptr when the path has coefficient zero.
  const Scalar* coefficient(const Path& p) const;

  /// Adds coeff * p. Throws std::invalid_argument when p has the wrong length.
  void add(const Path& p, const Scalar& coeff);

  /// Drops every non-regular term: the image in the regular-path quotient.
  PathChain regular_part() const;

  PathChain& operator+=(const PathChain& o);
  PathChain& operator-=(const PathChain& o);
  PathChain& operator*=(const Scalar& s);
  PathChain operator-() const;

  friend PathChain operator+(PathChain a, const PathChain& b) { return a += b; }
  friend PathChain operator-(PathChain a, const PathChain& b) { return a -= b; }
  friend PathChain operator*(const Scalar& s, PathChain c) { return c *= s; }
  friend bool operator==(const PathChain&, const PathChain&) = default;

  std::string to_string(const Digraph& g) const;

 private:
  int degree_;
  Terms terms_;
};

}  // namespace pathhom
