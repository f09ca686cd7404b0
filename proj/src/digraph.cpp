#include "pathhom/digraph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "pathhom/errors.hpp"

namespace pathhom {

// ---- Path -----------------------------------------------------------------

Path::Path(std::initializer_list<VertexId> verts) : verts_(verts.begin(), verts.end()) {
  if (verts_.empty()) throw std::invalid_argument("a path needs at least one vertex");
}

Path::Path(Storage verts) : verts_(std::move(verts)) {
  if (verts_.empty()) throw std::invalid_argument("a path needs at least one vertex");
}

Path::Path(std::span<const VertexId> verts) : verts_(verts.begin(), verts.end()) {
  if (verts_.empty()) throw std::invalid_argument("a path needs at least one vertex");
}

Path Path::without(std::size_t i) const {
  Storage out;
  out.reserve(verts_.size() - 1);
  for (std::size_t j = 0; j < verts_.size(); ++j)
    if (j != i) out.push_back(verts_[j]);
  return Path(std::move(out));
}

std::strong_ordering operator<=>(const Path& a, const Path& b) {
  return std::lexicographical_compare_three_way(a.verts_.begin(), a.verts_.end(),
                                                b.verts_.begin(), b.verts_.end());
}

// ---- Digraph --------------------------------------------------------------

Digraph::Digraph(std::vector<std::string> labels, const std::vector<Edge>& edges)
    : labels_(std::move(labels)), out_(labels_.size()) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], static_cast<VertexId>(i)).second)
      throw InputError("duplicate vertex label \"" + labels_[i] + "\"");
  }
  auto name = [&](VertexId v) {
    return v < labels_.size() ? labels_[v] : "#" + std::to_string(v);
  };
  for (auto [from, to] : edges) {
    if (from >= labels_.size() || to >= labels_.size())
      throw InputError("edge [" + name(from) + ", " + name(to) + "] references an unknown vertex");
    if (from == to)
      throw InputError("self-loop [" + name(from) + ", " + name(to) +
                       "] is not allowed in a digraph");
    auto& nbrs = out_[from];
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), to);
    if (it != nbrs.end() && *it == to)
      throw InputError("duplicate edge [" + name(from) + ", " + name(to) + "]");
    nbrs.insert(it, to);
    ++edge_count_;
  }
}

Digraph Digraph::from_labels(std::vector<std::string> labels,
                             const std::vector<std::pair<std::string, std::string>>& edges) {
  std::unordered_map<std::string, VertexId> idx;
  for (std::size_t i = 0; i < labels.size(); ++i) idx.emplace(labels[i], static_cast<VertexId>(i));
  std::vector<Edge> ids;
  ids.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = idx.find(a), ib = idx.find(b);
    if (ia == idx.end()) throw InputError("edge [" + a + ", " + b + "]: unknown vertex \"" + a + "\"");
    if (ib == idx.end()) throw InputError("edge [" + a + ", " + b + "]: unknown vertex \"" + b + "\"");
    ids.emplace_back(ia->second, ib->second);
  }
  return Digraph(std::move(labels), ids);
}

Digraph Digraph::numbered(std::size_t vertex_count, const std::vector<Edge>& edges) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < vertex_count; ++i) labels.push_back("v" + std::to_string(i));
  return Digraph(std::move(labels), edges);
}

std::optional<VertexId> Digraph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId Digraph::index_of(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw InputError("unknown vertex label \"" + std::string(label) + "\"");
}

bool Digraph::has_edge(VertexId from, VertexId to) const {
  if (from >= out_.size()) return false;
  const auto& nbrs = out_[from];
  return std::binary_search(nbrs.begin(), nbrs.end(), to);
}

std::vector<Digraph::Edge> Digraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId v = 0; v < out_.size(); ++v)
    for (VertexId w : out_[v]) out.emplace_back(v, w);
  return out;
}

std::optional<int> Digraph::longest_allowed_length() const {
  // 0 = unvisited, 1 = on stack, 2 = done
  std::vector<int> state(out_.size(), 0), longest(out_.size(), 0);
  bool cyclic = false;
  std::function<void(VertexId)> visit = [&](VertexId v) {
    state[v] = 1;
    for (VertexId w : out_[v]) {
      if (state[w] == 1) { cyclic = true; continue; }
      if (state[w] == 0) visit(w);
      longest[v] = std::max(longest[v], longest[w] + 1);
    }
    state[v] = 2;
  };
  int best = 0;
  for (VertexId v = 0; v < out_.size(); ++v) {
    if (state[v] == 0) visit(v);
    best = std::max(best, longest[v]);
  }
  if (cyclic) return std::nullopt;
  return best;
}

std::string Digraph::format(const Path& p) const {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ' ';
    s += label(p[i]);
  }
  return s + "]";
}

// ---- path predicates and enumeration --------------------------------------

bool is_regular(const Path& p) {
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i - 1] == p[i]) return false;
  return true;
}

bool is_allowed(const Digraph& g, const Path& p) {
  for (std::size_t i = 1; i < p.size(); ++i)
    if (!g.has_edge(p[i - 1], p[i])) return false;
  return true;
}

namespace {

[[noreturn]] void cap_exceeded(int n, std::size_t cap) {
  throw ResourceError("more than " + std::to_string(cap) + " paths of length " +
                      std::to_string(n) + "; raise the path cap or lower the degree bound");
}

// Depth-first extension in ascending neighbour order yields lexicographic output.
template <class Next>
std::vector<Path> enumerate_by_extension(std::size_t vertex_count, int n, std::size_t cap,
                                         Next&& next) {
  std::vector<Path> out;
  if (n < 0) return out;
  Path::Storage cur;
  std::function<void()> extend = [&]() {
    if (static_cast<int>(cur.size()) == n + 1) {
      if (out.size() >= cap) cap_exceeded(n, cap);
      out.emplace_back(cur);
      return;
    }
    next(cur.back(), [&](VertexId w) {
      cur.push_back(w);
      extend();
      cur.pop_back();
    });
  };
  for (VertexId v = 0; v < vertex_count; ++v) {
    cur.assign(1, v);
    extend();
  }
  return out;
}

// vertex_count * branching^n, or cap + 1 when that overflows the cap.
std::size_t bounded_count(std::size_t vertex_count, std::size_t branching, int n, std::size_t cap) {
  if (vertex_count == 0) return 0;
  std::size_t count = vertex_count;
  for (int i = 0; i < n; ++i) {
    if (branching == 0) return 0;
    if (count > (cap + 1) / branching + 1) return cap + 1;
    count *= branching;
  }
  return count;
}

}  // namespace

std::vector<Path> enumerate_allowed(const Digraph& g, int n, std::size_t cap) {
  return enumerate_by_extension(g.vertex_count(), n, cap, [&](VertexId last, auto&& emit) {
    for (VertexId w : g.out_neighbors(last)) emit(w);
  });
}

std::vector<Path> enumerate_regular(std::size_t vertex_count, int n, std::size_t cap) {
  if (n >= 0 && bounded_count(vertex_count, vertex_count ? vertex_count - 1 : 0, n, cap) > cap)
    cap_exceeded(n, cap);
  return enumerate_by_extension(vertex_count, n, cap, [&](VertexId last, auto&& emit) {
    for (VertexId w = 0; w < vertex_count; ++w)
      if (w != last) emit(w);
  });
}

std::vector<Path> enumerate_elementary(std::size_t vertex_count, int n, std::size_t cap) {
  if (n >= 0 && bounded_count(vertex_count, vertex_count, n, cap) > cap) cap_exceeded(n, cap);
  return enumerate_by_extension(vertex_count, n, cap, [&](VertexId, auto&& emit) {
    for (VertexId w = 0; w < vertex_count; ++w) emit(w);
  });
}

std::optional<std::size_t> basis_index(std::span<const Path> basis, const Path& p) {
  auto it = std::lower_bound(basis.begin(), basis.end(), p);
  if (it == basis.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - basis.begin());
}

}  // namespace pathhom
