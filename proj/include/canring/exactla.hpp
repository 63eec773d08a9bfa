#pragma once

// Exact linear algebra over the fields of field.hpp. Dense matrices for the
// public row-reduction / kernel / complement operations, and an incremental
// sparse echelon basis used by the presentation engine. Over Q elimination
// runs on integer rows.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "canring/errors.hpp"
#include "canring/field.hpp"

namespace canring {

template <ExactField F>
using Vec = std::vector<typename F::value_type>;

template <ExactField F>
class Matrix {
 public:
  using value_type = typename F::value_type;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix from_rows(F field, const std::vector<Vec<F>>& rows, std::size_t cols) {
    Matrix m(std::move(field), rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw InputError("ragged matrix rows");
      std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * cols));
    }
    return m;
  }

  static Matrix from_longs(F field, std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t cols = rows.size() ? rows.begin()->size() : 0;
    Matrix m(field, rows.size(), cols);
    std::size_t i = 0;
    for (const auto& r : rows) {
      if (r.size() != cols) throw InputError("ragged matrix rows");
      std::size_t j = 0;
      for (long v : r) m(i, j++) = field.from_long(v);
      ++i;
    }
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Vec<F> row(std::size_t i) const {
    return Vec<F>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> data_;
};

namespace detail {

// Working rows: primitive integer vectors with a positive leading entry over
// Q, monic rows over finite fields.
template <ExactField F, bool = F::fraction_free>
struct RowOps;

template <ExactField F>
struct RowOps<F, true> {
  using W = mpz_class;

  static std::vector<W> load(const Vec<F>& v) {
    mpz_class den = 1;
    for (const auto& x : v) {
      if (x.get_den() != 1) den = lcm(den, mpz_class(x.get_den()));
    }
    std::vector<W> out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x.get_num() * (den / x.get_den()));
    return out;
  }
  static bool is_zero(const F&, const W& x) { return sgn(x) == 0; }

  static void normalize(const F&, std::vector<W>& vals) {
    mpz_class g = 0;
    int lead = 0;
    for (const auto& x : vals) {
      if (sgn(x) == 0) continue;
      if (lead == 0) lead = sgn(x);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1 && lead > 0) return;
    }
    if (lead == 0) return;
    if (lead < 0) g = -g;
    if (g == 1) return;
    for (auto& x : vals) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }

  // (p, t) with p * target - t * pivot cancelling the entry
  static std::pair<W, W> factors(const F&, const W& pivot_entry, const W& target_entry) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), pivot_entry.get_mpz_t(), target_entry.get_mpz_t());
    return {pivot_entry / g, target_entry / g};
  }
  static W scale(const F&, const W& p, const W& x) { return p * x; }
  static W fma(const F&, const W& p, const W& x, const W& t, const W& y) { return p * x - t * y; }
  static W neg_scale(const F&, const W& t, const W& y) { return -(t * y); }
  static typename F::value_type store(const F&, const W& x, const W& pivot) {
    mpq_class q(x, pivot);
    q.canonicalize();
    return q;
  }
};

template <ExactField F>
struct RowOps<F, false> {
  using W = typename F::value_type;

  static std::vector<W> load(const Vec<F>& v) { return v; }
  static bool is_zero(const F& field, const W& x) { return field.is_zero(x); }

  static void normalize(const F& field, std::vector<W>& vals) {
    auto lead = std::find_if(vals.begin(), vals.end(), [&](const W& x) { return !field.is_zero(x); });
    if (lead == vals.end()) return;
    const W s = field.inv(*lead);
    for (auto& x : vals) x = field.mul(x, s);
  }

  static std::pair<W, W> factors(const F& field, const W& pivot_entry, const W& target_entry) {
    return {field.one(), field.mul(target_entry, field.inv(pivot_entry))};
  }
  static W scale(const F& field, const W& p, const W& x) { return field.mul(p, x); }
  static W fma(const F& field, const W& p, const W& x, const W& t, const W& y) {
    return field.sub(field.mul(p, x), field.mul(t, y));
  }
  static W neg_scale(const F& field, const W& t, const W& y) { return field.neg(field.mul(t, y)); }
  static typename F::value_type store(const F& field, const W& x, const W& pivot) {
    return field.mul(x, field.inv(pivot));
  }
};

}  // namespace detail

template <ExactField F>
struct RowEchelon {
  Matrix<F> rref;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form; pivot columns in increasing order.
template <ExactField F>
RowEchelon<F> row_reduce(const Matrix<F>& m) {
  using Ops = detail::RowOps<F>;
  const F& field = m.field();
  std::vector<std::vector<typename Ops::W>> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(Ops::load(m.row(i)));
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < rows.size(); ++col) {
    std::size_t sel = r;
    while (sel < rows.size() && Ops::is_zero(field, rows[sel][col])) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    Ops::normalize(field, rows[r]);
    const auto& piv = rows[r];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || Ops::is_zero(field, rows[i][col])) continue;
      auto& tgt = rows[i];
      const auto [p, t] = Ops::factors(field, piv[col], tgt[col]);
      for (std::size_t j = 0; j < tgt.size(); ++j) {
        if (!Ops::is_zero(field, piv[j])) {
          tgt[j] = Ops::fma(field, p, tgt[j], t, piv[j]);
        } else if constexpr (F::fraction_free) {
          if (p != 1) tgt[j] *= p;
        }
      }
      Ops::normalize(field, tgt);
    }
    pivots.push_back(col);
    ++r;
  }
  Matrix<F> out(field, m.rows(), m.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    const auto pivot = rows[k][pivots[k]];
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!Ops::is_zero(field, rows[k][j])) out(k, j) = Ops::store(field, rows[k][j], pivot);
    }
  }
  return {std::move(out), std::move(pivots)};
}

template <ExactField F>
std::size_t rank(const Matrix<F>& m) {
  return row_reduce(m).rank();
}

/// Basis of the right kernel {x : m x = 0}, one vector per free column.
template <ExactField F>
std::vector<Vec<F>> kernel_basis(const Matrix<F>& m) {
  const F& field = m.field();
  const auto ech = row_reduce(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto p : ech.pivots) is_pivot[p] = 1;
  std::vector<Vec<F>> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v(m.cols(), field.zero());
    v[free] = field.one();
    for (std::size_t k = 0; k < ech.pivots.size(); ++k) v[ech.pivots[k]] = field.neg(ech.rref(k, free));
    out.push_back(std::move(v));
  }
  return out;
}

template <ExactField F>
typename F::value_type determinant(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  const F& field = m.field();
  const std::size_t n = m.rows();
  std::vector<Vec<F>> a;
  for (std::size_t i = 0; i < n; ++i) a.push_back(m.row(i));
  auto det = field.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && field.is_zero(a[sel][col])) ++sel;
    if (sel == n) return field.zero();
    if (sel != col) {
      std::swap(a[sel], a[col]);
      det = field.neg(det);
    }
    det = field.mul(det, a[col][col]);
    const auto inv = field.inv(a[col][col]);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (field.is_zero(a[i][col])) continue;
      const auto f = field.mul(a[i][col], inv);
      for (std::size_t j = col; j < n; ++j) a[i][j] = field.sub(a[i][j], field.mul(f, a[col][j]));
    }
  }
  return det;
}

/// Inverse of a square matrix, or nullopt when singular.
template <ExactField F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw InputError("inverse of a non-square matrix");
  const F& field = m.field();
  const std::size_t n = m.rows();
  Matrix<F> aug(field, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = field.one();
  }
  const auto ech = row_reduce(aug);
  if (ech.rank() < n || ech.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<F> out(field, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = ech.rref(i, n + j);
  }
  return out;
}

/// Sparse vector with strictly increasing indices and nonzero values.
template <ExactField F>
struct SparseVec {
  std::vector<std::uint32_t> idx;
  Vec<F> val;

  bool empty() const { return idx.empty(); }
  std::size_t size() const { return idx.size(); }

  void push(std::uint32_t i, typename F::value_type v) {
    idx.push_back(i);
    val.push_back(std::move(v));
  }

  static SparseVec from_dense(const F& field, const Vec<F>& dense, std::uint32_t offset = 0) {
    SparseVec s;
    for (std::size_t i = 0; i < dense.size(); ++i) {
      if (!field.is_zero(dense[i])) s.push(offset + static_cast<std::uint32_t>(i), dense[i]);
    }
    return s;
  }

  Vec<F> to_dense(const F& field, std::size_t dim) const {
    Vec<F> out(dim, field.zero());
    for (std::size_t k = 0; k < idx.size(); ++k) out[idx[k]] = val[k];
    return out;
  }
};

/// Linear combination a*x + b*y of sparse vectors, dropping zeros.
template <ExactField F>
SparseVec<F> combine(const F& field, const typename F::value_type& a, const SparseVec<F>& x,
                     const typename F::value_type& b, const SparseVec<F>& y) {
  SparseVec<F> out;
  out.idx.reserve(x.size() + y.size());
  out.val.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x.idx[i] < y.idx[j])) {
      auto v = field.mul(a, x.val[i]);
      if (!field.is_zero(v)) out.push(x.idx[i], std::move(v));
      ++i;
    } else if (i == x.size() || y.idx[j] < x.idx[i]) {
      auto v = field.mul(b, y.val[j]);
      if (!field.is_zero(v)) out.push(y.idx[j], std::move(v));
      ++j;
    } else {
      auto v = field.add(field.mul(a, x.val[i]), field.mul(b, y.val[j]));
      if (!field.is_zero(v)) out.push(x.idx[i], std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

/// Incrementally built basis of a subspace of F^dim, stored as rows with
/// pairwise distinct leading indices. Membership is decided by repeatedly
/// cancelling the leading entry, which is exact because every nonzero vector
/// of the span leads at one of the pivot indices.
template <ExactField F>
class EchelonBasis {
  using Ops = detail::RowOps<F>;
  using W = typename Ops::W;

  struct Row {
    std::vector<std::uint32_t> idx;
    std::vector<W> val;
    bool empty() const { return idx.empty(); }
  };

 public:
  EchelonBasis(F field, std::size_t dim) : field_(std::move(field)), dim_(dim), pivot_row_(dim, -1) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == dim_; }
  const F& field() const { return field_; }

  /// Adds v to the spanning set; returns true iff the rank grew.
  bool insert(const SparseVec<F>& v) {
    Row row = reduce(load(v));
    if (row.empty()) return false;
    pivot_row_[row.idx.front()] = static_cast<long>(rows_.size());
    rows_.push_back(std::move(row));
    return true;
  }
  bool insert_dense(const Vec<F>& v) { return insert(SparseVec<F>::from_dense(field_, v)); }

  bool contains(const SparseVec<F>& v) const { return reduce(load(v)).empty(); }
  bool contains_dense(const Vec<F>& v) const { return contains(SparseVec<F>::from_dense(field_, v)); }

  /// Leading indices of the stored rows, sorted.
  std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < dim_; ++c) {
      if (pivot_row_[c] >= 0) out.push_back(c);
    }
    return out;
  }

 private:
  Row load(const SparseVec<F>& v) const {
    for (auto i : v.idx) {
      if (i >= dim_) throw InputError("vector index out of range");
    }
    Row row{v.idx, Ops::load(v.val)};
    Ops::normalize(field_, row.val);
    return row;
  }

  // p * x - t * y
  Row eliminate(const W& p, const Row& x, const W& t, const Row& y) const {
    Row out;
    out.idx.reserve(x.idx.size() + y.idx.size());
    out.val.reserve(x.idx.size() + y.idx.size());
    std::size_t i = 0, j = 0;
    auto emit = [&](std::uint32_t k, W v) {
      if (Ops::is_zero(field_, v)) return;
      out.idx.push_back(k);
      out.val.push_back(std::move(v));
    };
    while (i < x.idx.size() || j < y.idx.size()) {
      if (j == y.idx.size() || (i < x.idx.size() && x.idx[i] < y.idx[j])) {
        emit(x.idx[i], Ops::scale(field_, p, x.val[i]));
        ++i;
      } else if (i == x.idx.size() || y.idx[j] < x.idx[i]) {
        emit(y.idx[j], Ops::neg_scale(field_, t, y.val[j]));
        ++j;
      } else {
        emit(x.idx[i], Ops::fma(field_, p, x.val[i], t, y.val[j]));
        ++i;
        ++j;
      }
    }
    return out;
  }

  Row reduce(Row v) const {
    while (!v.empty()) {
      const long r = pivot_row_[v.idx.front()];
      if (r < 0) break;
      const auto& p = rows_[static_cast<std::size_t>(r)];
      const auto [a, b] = Ops::factors(field_, p.val.front(), v.val.front());
      v = eliminate(a, v, b, p);
      Ops::normalize(field_, v.val);
    }
    return v;
  }

  F field_;
  std::size_t dim_;
  std::vector<long> pivot_row_;
  std::vector<Row> rows_;
};

/// Indices of candidates that, taken greedily in the given order, extend the
/// row space of `subspace` to all of F^cols. Throws InputError when the
/// candidates do not complete the span.
template <ExactField F>
std::vector<std::size_t> quotient_complement(const Matrix<F>& subspace, const std::vector<Vec<F>>& candidates) {
  EchelonBasis<F> basis(subspace.field(), subspace.cols());
  for (std::size_t i = 0; i < subspace.rows(); ++i) basis.insert_dense(subspace.row(i));
  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < candidates.size() && !basis.full(); ++i) {
    if (candidates[i].size() != subspace.cols()) throw InputError("candidate has wrong length");
    if (basis.insert_dense(candidates[i])) picked.push_back(i);
  }
  if (!basis.full()) throw InputError("candidates do not complete the span of the ambient space");
  return picked;
}

}  // namespace canring
