#include "pathhom/chain.hpp"

#include <stdexcept>

namespace pathhom {

PathChain::PathChain(const Path& p, const Scalar& coeff) : degree_(p.length()) { add(p, coeff); }

const Scalar* PathChain::coefficient(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? nullptr : &it->second;
}

void PathChain::add(const Path& p, const Scalar& coeff) {
  if (p.length() != degree_)
    throw std::invalid_argument("path of length " + std::to_string(p.length()) +
                                " added to a chain of degree " + std::to_string(degree_));
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(p, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PathChain PathChain::regular_part() const {
  PathChain out(degree_);
  for (const auto& [p, c] : terms_)
    if (is_regular(p)) out.terms_.emplace_hint(out.terms_.end(), p, c);
  return out;
}

PathChain& PathChain::operator+=(const PathChain& o) {
  if (o.degree_ != degree_) throw std::invalid_argument("adding chains of different degree");
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

PathChain& PathChain::operator-=(const PathChain& o) {
  if (o.degree_ != degree_) throw std::invalid_argument("subtracting chains of different degree");
  for (const auto& [p, c] : o.terms_) add(p, -c);
  return *this;
}

PathChain& PathChain::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= s;
  return *this;
}

PathChain PathChain::operator-() const {
  PathChain out(*this);
  for (auto& [p, c] : out.terms_) c = -c;
  return out;
}

std::string PathChain::to_string(const Digraph& g) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += "(" + c.to_string() + ")" + g.format(p);
  }
  return s;
}

}  // namespace pathhom
