#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pathhom {

using VertexId = std::uint32_t;

/// Default per-degree cap on enumerated paths.
inline constexpr std::size_t kDefaultPathCap = 1'000'000;

/// Elementary path v0 v1 ... vn (n >= 0), stored as vertex indices.
/// A path of length n has n + 1 entries; the empty sequence is not a path.
class Path {
 public:
  using Storage = boost::container::small_vector<VertexId, 8>;

  Path(std::initializer_list<VertexId> verts);
  explicit Path(Storage verts);
  explicit Path(std::span<const VertexId> verts);

  std::size_t size() const noexcept { return verts_.size(); }
  int length() const noexcept { return static_cast<int>(verts_.size()) - 1; }
  VertexId operator[](std::size_t i) const { return verts_[i]; }
  auto begin() const noexcept { return verts_.begin(); }
  auto end() const noexcept { return verts_.end(); }
  const Storage& vertices() const noexcept { return verts_; }

  /// Path with entry i removed. Requires size() >= 2.
  Path without(std::size_t i) const;

  friend bool operator==(const Path&, const Path&) = default;
  friend std::strong_ordering operator<=>(const Path& a, const Path& b);

 private:
  Storage verts_;
};

/// Finite loop-free digraph. Vertex order is fixed at construction and
/// defines every basis and sign convention downstream.
class Digraph {
 public:
  using Edge = std::pair<VertexId, VertexId>;

  /// Throws InputError on duplicate labels, self-loops, duplicate edges or
  /// out-of-range endpoints.
  Digraph(std::vector<std::string> labels, const std::vector<Edge>& edges);

  static Digraph from_labels(std::vector<std::string> labels,
                             const std::vector<std::pair<std::string, std::string>>& edges);

  /// Vertices v0..v{n-1} with the given edges.
  static Digraph numbered(std::size_t vertex_count, const std::vector<Edge>& edges);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  const std::string& label(VertexId v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<VertexId> find(std::string_view label) const;
  /// Throws InputError for unknown labels.
  VertexId index_of(std::string_view label) const;

  bool has_edge(VertexId from, VertexId to) const;
  /// Sorted ascending.
  std::span<const VertexId> out_neighbors(VertexId v) const { return out_.at(v); }
  std::vector<Edge> edges() const;

  /// Length of the longest allowed path, or nullopt when a directed cycle
  /// makes allowed paths of every length exist.
  std::optional<int> longest_allowed_length() const;

  std::string format(const Path& p) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.labels_ == b.labels_ && a.out_ == b.out_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::vector<VertexId>> out_;
  std::size_t edge_count_ = 0;
};

/// No two consecutive entries are equal.
bool is_regular(const Path& p);

/// Every consecutive pair is an edge of g. Single vertices are allowed.
bool is_allowed(const Digraph& g, const Path& p);

/// All allowed n-paths in lexicographic order of vertex indices. This order
/// is the canonical basis order of A_n. Throws ResourceError past `cap`.
std::vector<Path> enumerate_allowed(const Digraph& g, int n, std::size_t cap = kDefaultPathCap);

/// All regular n-paths on {0..vertex_count-1} in lexicographic order.
std::vector<Path> enumerate_regular(std::size_t vertex_count, int n,
                                    std::size_t cap = kDefaultPathCap);

/// All elementary n-paths on {0..vertex_count-1} in lexicographic order.
std::vector<Path> enumerate_elementary(std::size_t vertex_count, int n,
                                       std::size_t cap = kDefaultPathCap);

/// Position of p in a lexicographically sorted basis, if present.
std::optional<std::size_t> basis_index(std::span<const Path> basis, const Path& p);

}  // namespace pathhom
