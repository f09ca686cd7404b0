#include "pathhom/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "pathhom/errors.hpp"

namespace pathhom {

// ---- sparse vectors -------------------------------------------------------

void axpy(SparseVector& y, const Scalar& factor, const SparseVector& x) {
  if (factor.is_zero() || x.empty()) return;
  SparseVector out;
  out.reserve(y.size() + x.size());
  auto a = y.begin();
  auto b = x.begin();
  while (a != y.end() || b != x.end()) {
    if (b == x.end() || (a != y.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == y.end() || b->first < a->first) {
      out.emplace_back(b->first, factor * b->second);
      ++b;
    } else {
      Scalar s = a->second + factor * b->second;
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  y = std::move(out);
}

SparseVector scaled(const SparseVector& x, const Scalar& factor) {
  SparseVector out;
  if (factor.is_zero()) return out;
  out.reserve(x.size());
  for (const auto& [i, v] : x) out.emplace_back(i, v * factor);
  return out;
}

// ---- Matrix ---------------------------------------------------------------

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), field_(field), columns_(cols) {}

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<SparseVector>& rows) {
  Matrix m(rows.size(), cols, field);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& [j, v] : rows[i]) {
      if (j >= cols) throw std::out_of_range("row entry past the last column");
      if (!v.is_zero()) m.columns_[j].emplace_back(i, v);
    }
  }
  return m;
}

Matrix Matrix::from_ints(Field field, const std::vector<std::vector<long long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<SparseVector> sparse;
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("ragged integer matrix");
    SparseVector v;
    for (std::size_t j = 0; j < r.size(); ++j)
      if (r[j] != 0) v.emplace_back(j, field.from_int(r[j]));
    sparse.push_back(std::move(v));
  }
  return from_rows(field, cols, sparse);
}

Matrix Matrix::identity(std::size_t n, Field field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i].emplace_back(i, field.one());
  return m;
}

void Matrix::set_column(std::size_t j, SparseVector v) {
  for (const auto& [i, x] : v)
    if (i >= rows_) throw std::out_of_range("column entry past the last row");
  std::erase_if(v, [](const auto& e) { return e.second.is_zero(); });
  columns_.at(j) = std::move(v);
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& value) {
  if (i >= rows_) throw std::out_of_range("row index out of range");
  auto& col = columns_.at(j);
  auto it = std::lower_bound(col.begin(), col.end(), i,
                             [](const auto& e, std::size_t r) { return e.first < r; });
  if (it != col.end() && it->first == i) {
    if (value.is_zero())
      col.erase(it);
    else
      it->second = value;
  } else if (!value.is_zero()) {
    col.insert(it, {i, value});
  }
}

Scalar Matrix::at(std::size_t i, std::size_t j) const {
  const auto& col = columns_.at(j);
  auto it = std::lower_bound(col.begin(), col.end(), i,
                             [](const auto& e, std::size_t r) { return e.first < r; });
  if (it != col.end() && it->first == i) return it->second;
  return field_.zero();
}

std::vector<SparseVector> Matrix::row_vectors() const {
  std::vector<SparseVector> rows(rows_);
  for (std::size_t j = 0; j < columns_.size(); ++j)
    for (const auto& [i, v] : columns_[j]) rows[i].emplace_back(j, v);
  return rows;
}

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

bool Matrix::is_zero() const { return nonzeros() == 0; }

SparseVector Matrix::apply(const SparseVector& v) const {
  SparseVector out;
  for (const auto& [j, x] : v) axpy(out, x, columns_.at(j));
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
  Matrix out(a.rows(), b.cols(), a.field());
  for (std::size_t j = 0; j < b.cols(); ++j) out.columns_[j] = a.apply(b.columns_[j]);
  return out;
}

// ---- elimination ----------------------------------------------------------

namespace {

using RowsAndPivots = std::pair<std::vector<SparseVector>, std::vector<std::size_t>>;

// Index of the remaining row with a nonzero in column c and the smallest
// original index, or rows.size() when none.
template <class IsNonzero>
std::size_t choose_pivot(std::size_t from, std::size_t count, const std::vector<std::size_t>& orig,
                         IsNonzero&& nonzero) {
  std::size_t best = count;
  for (std::size_t i = from; i < count; ++i)
    if (nonzero(i) && (best == count || orig[i] < orig[best])) best = i;
  return best;
}

RowsAndPivots dense_rational(const std::vector<SparseVector>& rows, std::size_t cols) {
  const std::size_t n = rows.size();
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class lcm = 1;
    for (const auto& [j, v] : rows[i]) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.rational().get_den_mpz_t());
    for (const auto& [j, v] : rows[i]) a[i][j] = v.rational().get_num() * (lcm / v.rational().get_den());
  }

  std::vector<std::size_t> orig(n);
  std::iota(orig.begin(), orig.end(), 0);
  std::vector<std::size_t> pivots;
  mpz_class prev = 1, t, rem;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < n; ++c) {
    std::size_t p = choose_pivot(r, n, orig, [&](std::size_t i) { return sgn(a[i][c]) != 0; });
    if (p == n) continue;
    std::swap(a[r], a[p]);
    std::swap(orig[r], orig[p]);
    const mpz_class& piv = a[r][c];
    for (std::size_t i = r + 1; i < n; ++i) {
      const mpz_class& lead = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        t = piv * a[i][j] - lead * a[r][j];
        mpz_tdiv_qr(a[i][j].get_mpz_t(), rem.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        if (sgn(rem) != 0) throw ConsistencyError("fraction-free elimination lost exactness");
      }
      a[i][c] = 0;
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }

  // Back substitution over Q on the echelon rows.
  std::vector<std::vector<mpq_class>> q(r, std::vector<mpq_class>(cols));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = pivots[i]; j < cols; ++j) q[i][j] = a[i][j];
  for (std::size_t ii = r; ii-- > 0;) {
    const std::size_t pc = pivots[ii];
    mpq_class inv = mpq_class(1) / q[ii][pc];
    for (std::size_t j = pc; j < cols; ++j)
      if (sgn(q[ii][j]) != 0) q[ii][j] *= inv;
    for (std::size_t h = 0; h < ii; ++h) {
      if (sgn(q[h][pc]) == 0) continue;
      mpq_class f = q[h][pc];
      for (std::size_t j = pc; j < cols; ++j)
        if (sgn(q[ii][j]) != 0) q[h][j] -= f * q[ii][j];
    }
  }

  std::vector<SparseVector> out(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = pivots[i]; j < cols; ++j)
      if (sgn(q[i][j]) != 0) out[i].emplace_back(j, Scalar(q[i][j]));
  return {std::move(out), std::move(pivots)};
}

RowsAndPivots dense_modular(const std::vector<SparseVector>& rows, std::size_t cols,
                            std::uint64_t p) {
  const std::size_t n = rows.size();
  std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(cols, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [j, v] : rows[i]) a[i][j] = v.residue_value();

  std::vector<std::size_t> orig(n);
  std::iota(orig.begin(), orig.end(), 0);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < n; ++c) {
    std::size_t piv = choose_pivot(r, n, orig, [&](std::size_t i) { return a[i][c] != 0; });
    if (piv == n) continue;
    std::swap(a[r], a[piv]);
    std::swap(orig[r], orig[piv]);
    std::uint64_t inv = mod_inverse(a[r][c], p);
    for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv % p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][c] == 0) continue;
      std::uint64_t f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (a[r][j]) a[i][j] = (a[i][j] + (p - f) * a[r][j]) % p;
    }
    pivots.push_back(c);
    ++r;
  }

  std::vector<SparseVector> out(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = pivots[i]; j < cols; ++j)
      if (a[i][j]) out[i].emplace_back(j, Scalar::residue(a[i][j], p));
  return {std::move(out), std::move(pivots)};
}

// Incremental echelon insertion followed by back substitution. The final
// RREF is unique, so it matches the dense paths exactly.
RowsAndPivots sparse_generic(std::vector<SparseVector> rows) {
  std::map<std::size_t, SparseVector> echelon;
  for (auto& v : rows) {
    while (!v.empty()) {
      auto it = echelon.find(v.front().first);
      if (it == echelon.end()) {
        const std::size_t lead = v.front().first;
        Scalar inv = v.front().second.inverse();
        for (auto& e : v) e.second *= inv;
        echelon.emplace(lead, std::move(v));
        break;
      }
      Scalar f = -v.front().second;
      axpy(v, f, it->second);
    }
  }
  // Clear entries above each pivot, highest pivot first.
  for (auto it = echelon.rbegin(); it != echelon.rend(); ++it) {
    SparseVector& row = it->second;
    std::vector<std::pair<std::size_t, Scalar>> hits;
    for (std::size_t k = 1; k < row.size(); ++k)
      if (echelon.count(row[k].first)) hits.push_back(row[k]);
    for (const auto& [pc, coeff] : hits) axpy(row, -coeff, echelon.at(pc));
  }
  RowsAndPivots out;
  for (auto& [pc, row] : echelon) {
    out.second.push_back(pc);
    out.first.push_back(std::move(row));
  }
  return out;
}

}  // namespace

std::pair<std::vector<SparseVector>, std::vector<std::size_t>> reduce_rows(
    std::vector<SparseVector> rows, std::size_t cols, const Field& field,
    const EliminationOptions& opts) {
  std::erase_if(rows, [](const SparseVector& v) { return v.empty(); });
  if (rows.empty()) return {};
  bool dense = opts.strategy == EliminationOptions::Strategy::Dense ||
               (opts.strategy == EliminationOptions::Strategy::Auto &&
                rows.size() * cols <= opts.dense_threshold);
  if (!dense) return sparse_generic(std::move(rows));
  if (field.is_rational()) return dense_rational(rows, cols);
  return dense_modular(rows, cols, field.modulus());
}

RowEchelon rref(const Matrix& m, const EliminationOptions& opts) {
  auto [rows, pivots] = reduce_rows(m.row_vectors(), m.cols(), m.field(), opts);
  std::size_t r = rows.size();
  rows.resize(m.rows());
  return RowEchelon{Matrix::from_rows(m.field(), m.cols(), rows), r, std::move(pivots)};
}

std::size_t rank(const Matrix& m, const EliminationOptions& opts) {
  return reduce_rows(m.row_vectors(), m.cols(), m.field(), opts).first.size();
}

// ---- Subspace -------------------------------------------------------------

Subspace::Subspace(std::size_t ambient, Field field) : ambient_(ambient), field_(field) {}

Subspace Subspace::span(std::size_t ambient, Field field, std::vector<SparseVector> vectors,
                        const EliminationOptions& opts) {
  for (const auto& v : vectors)
    if (!v.empty() && v.back().first >= ambient)
      throw std::invalid_argument("vector longer than the ambient space");
  Subspace s(ambient, field);
  std::tie(s.basis_, s.pivots_) = reduce_rows(std::move(vectors), ambient, field, opts);
  return s;
}

Subspace Subspace::whole(std::size_t ambient, Field field) {
  Subspace s(ambient, field);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.basis_.push_back({{i, field.one()}});
    s.pivots_.push_back(i);
  }
  return s;
}

SparseVector Subspace::reduce(const SparseVector& v) const {
  SparseVector out = v;
  for (const auto& [i, x] : v) {
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), i);
    if (it == pivots_.end() || *it != i) continue;
    axpy(out, -x, basis_[static_cast<std::size_t>(it - pivots_.begin())]);
  }
  return out;
}

bool Subspace::contains(const SparseVector& v) const { return reduce(v).empty(); }

std::optional<std::vector<Scalar>> Subspace::coordinates(const SparseVector& v) const {
  if (!contains(v)) return std::nullopt;
  std::vector<Scalar> coords(basis_.size(), field_.zero());
  for (const auto& [i, x] : v) {
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), i);
    if (it != pivots_.end() && *it == i) coords[static_cast<std::size_t>(it - pivots_.begin())] = x;
  }
  return coords;
}

// ---- derived operations ---------------------------------------------------

Subspace kernel(const Matrix& m, const EliminationOptions& opts) {
  RowEchelon e = rref(m, opts);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t pc : e.pivots) is_pivot[pc] = true;
  std::vector<SparseVector> vectors;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    SparseVector v;
    for (const auto& [i, x] : e.reduced.column(j)) v.emplace_back(e.pivots[i], -x);
    v.emplace_back(j, m.field().one());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    vectors.push_back(std::move(v));
  }
  Subspace k = Subspace::span(m.cols(), m.field(), std::move(vectors), opts);
  if (e.rank + k.dim() != m.cols())
    throw ConsistencyError("rank-nullity violated: rank " + std::to_string(e.rank) + " + nullity " +
                           std::to_string(k.dim()) + " != " + std::to_string(m.cols()));
  return k;
}

std::size_t rank_of_restriction(const Matrix& m, const Subspace& s,
                                const EliminationOptions& opts) {
  if (s.ambient() != m.cols())
    throw std::invalid_argument("subspace ambient dimension " + std::to_string(s.ambient()) +
                                " does not match " + std::to_string(m.cols()) + " columns");
  std::vector<SparseVector> images;
  images.reserve(s.dim());
  for (const auto& b : s.basis()) images.push_back(m.apply(b));
  return reduce_rows(std::move(images), m.rows(), m.field(), opts).first.size();
}

std::size_t quotient_rank(const std::vector<SparseVector>& vectors, const Subspace& modulo,
                          const EliminationOptions& opts) {
  std::vector<SparseVector> all = vectors;
  for (const auto& v : all)
    if (!v.empty() && v.back().first >= modulo.ambient())
      throw std::invalid_argument("vector longer than the quotient's ambient space");
  all.insert(all.end(), modulo.basis().begin(), modulo.basis().end());
  return reduce_rows(std::move(all), modulo.ambient(), modulo.field(), opts).first.size() -
         modulo.dim();
}

}  // namespace pathhom
