#include "pathhom/diff_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace pathhom {

// ---- monomials ------------------------------------------------------------

WedgeMonomial::WedgeMonomial(std::span<const VertexId> verts) : verts_(verts.begin(), verts.end()) {
  for (std::size_t i = 1; i < verts_.size(); ++i)
    if (verts_[i - 1] >= verts_[i])
      throw std::invalid_argument("wedge monomial vertices must be strictly increasing");
}

std::strong_ordering operator<=>(const WedgeMonomial& a, const WedgeMonomial& b) {
  return std::lexicographical_compare_three_way(a.verts_.begin(), a.verts_.end(),
                                                b.verts_.begin(), b.verts_.end());
}

std::optional<SignedMonomial> normalize_monomial(std::span<const VertexId> raw) {
  Path::Storage v(raw.begin(), raw.end());
  int sign = 1;
  // insertion sort, counting transpositions
  for (std::size_t i = 1; i < v.size(); ++i) {
    for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
      std::swap(v[j - 1], v[j]);
      sign = -sign;
    }
  }
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) return std::nullopt;
  return SignedMonomial{WedgeMonomial(std::span<const VertexId>(v.data(), v.size())), sign};
}

// ---- DiffElement ----------------------------------------------------------

DiffElement::DiffElement(int degree) : degree_(degree) {
  if (degree < 0) throw std::invalid_argument("differential elements have degree >= 0");
}

DiffElement DiffElement::scalar(const Scalar& s) {
  DiffElement e(0);
  e.accumulate(WedgeMonomial(), s);
  return e;
}

DiffElement DiffElement::generator(VertexId v, const Scalar& coeff) {
  return monomial(std::span<const VertexId>(&v, 1), coeff);
}

DiffElement DiffElement::monomial(std::span<const VertexId> raw, const Scalar& coeff) {
  DiffElement e(static_cast<int>(raw.size()));
  e.add_term(raw, coeff);
  return e;
}

void DiffElement::add_term(std::span<const VertexId> raw, const Scalar& coeff) {
  if (static_cast<int>(raw.size()) != degree_)
    throw std::invalid_argument("monomial of degree " + std::to_string(raw.size()) +
                                " in an element of degree " + std::to_string(degree_));
  auto norm = normalize_monomial(raw);
  if (!norm) return;
  accumulate(norm->monomial, norm->sign < 0 ? -coeff : coeff);
}

void DiffElement::accumulate(const WedgeMonomial& m, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffElement& DiffElement::operator+=(const DiffElement& o) {
  if (o.degree_ != degree_) throw std::invalid_argument("adding elements of different degree");
  for (const auto& [m, c] : o.terms_) accumulate(m, c);
  return *this;
}

DiffElement& DiffElement::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

std::string DiffElement::to_string(const Digraph& g) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += "(" + c.to_string() + ")";
    for (std::size_t i = 0; i < m.degree(); ++i)
      s += (i ? "^d" : "d") + g.label(m.vertices()[i]);
  }
  return s;
}

DiffElement wedge(const DiffElement& a, const DiffElement& b) {
  DiffElement out(a.degree() + b.degree());
  Path::Storage raw;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      raw.assign(ma.vertices().begin(), ma.vertices().end());
      raw.insert(raw.end(), mb.vertices().begin(), mb.vertices().end());
      out.add_term(std::span<const VertexId>(raw.data(), raw.size()), ca * cb);
    }
  }
  return out;
}

// ---- action on chains -----------------------------------------------------

PathChain partial(VertexId v, const PathChain& c) {
  PathChain out(c.degree() - 1);
  if (c.degree() <= 0) return out;
  for (const auto& [p, coeff] : c) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] != v) continue;
      out.add(p.without(i), (i % 2 == 0) ? coeff : -coeff);
    }
  }
  return out;
}

namespace {

// Applies factors[depth-1], factors[depth-2], ..., factors[0] to the path held
// in `verts`, deleting matching entries in place.
void act(const Path::Storage& factors, std::size_t depth, Path::Storage& verts, bool negate,
         const Scalar& coeff, PathChain& out) {
  if (depth == 0) {
    out.add(Path(verts), negate ? -coeff : coeff);
    return;
  }
  VertexId v = factors[depth - 1];
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (verts[i] != v) continue;
    verts.erase(verts.begin() + static_cast<std::ptrdiff_t>(i));
    act(factors, depth - 1, verts, negate != (i % 2 == 1), coeff, out);
    verts.insert(verts.begin() + static_cast<std::ptrdiff_t>(i), v);
  }
}

}  // namespace

PathChain apply(const DiffElement& a, const PathChain& c) {
  PathChain out(c.degree() - a.degree());
  if (out.degree() < 0) return out;
  for (const auto& [m, ca] : a.terms()) {
    for (const auto& [p, cp] : c) {
      Path::Storage verts = p.vertices();
      act(m.vertices(), m.degree(), verts, false, ca * cp, out);
    }
  }
  return out;
}

PathChain apply_regular(const DiffElement& a, const PathChain& c) {
  return apply(a, c).regular_part();
}

DiffElement weighted_boundary(std::span<const Scalar> weights) {
  DiffElement out(1);
  for (std::size_t v = 0; v < weights.size(); ++v) {
    VertexId id = static_cast<VertexId>(v);
    out.add_term(std::span<const VertexId>(&id, 1), weights[v]);
  }
  return out;
}

}  // namespace pathhom
