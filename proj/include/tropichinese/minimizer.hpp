#pragma once

// Shrinking the representation to at most n(n+1)/2 blocks.
//
// The linear part of affine_of_rep(n) has full column rank n(n+1)/2, so
// some n(n+1)/2 of its rows are already independent, and the blocks
// holding those rows give a faithful representation on their own.
// Selection is greedy in block order with exact rational elimination.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"
#include "representation.hpp"
#include "words.hpp"

namespace tropichinese {

using Rational = boost::multiprecision::cpp_rational;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RationalMatrix from_int(IntMatrix const& m) {
    RationalMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
    return r;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational const& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

  /// Reduced row echelon form in place; returns the pivot column of each
  /// pivot row, in row order.
  std::vector<std::size_t> reduce() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && (*this)(p, c) == 0) ++p;
      if (p == rows_) continue;
      swap_rows(p, r);
      Rational const inv = 1 / (*this)(r, c);
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || (*this)(i, c) == 0) continue;
        Rational const f = (*this)(i, c);
        for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

 private:
  void swap_rows(std::size_t p, std::size_t q) {
    if (p == q) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(q, j));
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

/// Linear part of an affine map as an integer matrix (one row per entry).
inline IntMatrix linear_part(AffineExponentMap const& map) {
  std::size_t const cols = tuple_size(map.rank());
  IntMatrix m(map.rows().size(), cols);
  for (std::size_t r = 0; r < map.rows().size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = map.rows()[r].coeffs[c];
  return m;
}

/// Rank by fraction-free (Bareiss) elimination over arbitrary-precision
/// integers.
inline std::size_t bareiss_rank(IntMatrix const& m) {
  std::size_t const rows = m.rows(), cols = m.cols();
  std::vector<BigInt> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = m(i, j);
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return a[i * cols + j]; };

  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(p, j), at(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        at(i, j) = (at(r, c) * at(i, j) - at(i, c) * at(r, j)) / prev;
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
  }
  return r;
}

/// Exact column rank of the map's linear part.
inline std::size_t linear_rank(AffineExponentMap const& map) {
  return bareiss_rank(linear_part(map));
}

struct BlockSelection {
  std::vector<std::size_t> selected;  // block indices, increasing
  std::size_t rank = 0;
  // Certificate: rows of the full map (3*block + position) that are
  // linearly independent, and the column each one pivots on.
  std::vector<std::size_t> pivot_rows;
  std::vector<std::size_t> pivot_cols;

  friend bool operator==(BlockSelection const&, BlockSelection const&) = default;
};

/// Greedy pass over the blocks: keep a block iff one of its three rows is
/// independent of the rows kept so far; stop at full column rank.
inline BlockSelection select_blocks(AffineExponentMap const& map) {
  std::size_t const cols = tuple_size(map.rank());
  // Reduced basis rows with their pivot columns; each stays normalized so
  // a new row is reduced by a single sweep.
  std::vector<std::vector<Rational>> basis;
  std::vector<std::size_t> basis_pivot;
  BlockSelection sel;

  auto reduce_row = [&](std::vector<Rational> v) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      Rational const f = v[basis_pivot[b]];
      if (f == 0) continue;
      for (std::size_t c = 0; c < cols; ++c) v[c] -= f * basis[b][c];
    }
    return v;
  };

  for (std::size_t blk = 0; blk < map.block_count() && basis.size() < cols; ++blk) {
    bool kept = false;
    for (std::size_t p = 0; p < 3; ++p) {
      std::size_t const row = 3 * blk + p;
      std::vector<Rational> v(cols);
      for (std::size_t c = 0; c < cols; ++c) v[c] = map.rows()[row].coeffs[c];
      v = reduce_row(std::move(v));
      std::optional<std::size_t> piv;
      for (std::size_t c = 0; c < cols; ++c)
        if (v[c] != 0) {
          piv = c;
          break;
        }
      if (!piv) continue;
      Rational const inv = 1 / v[*piv];
      for (auto& x : v) x *= inv;
      for (std::size_t b = 0; b < basis.size(); ++b) {
        Rational const f = basis[b][*piv];
        if (f == 0) continue;
        for (std::size_t c = 0; c < cols; ++c) basis[b][c] -= f * v[c];
      }
      basis.push_back(std::move(v));
      basis_pivot.push_back(*piv);
      sel.pivot_rows.push_back(row);
      sel.pivot_cols.push_back(*piv);
      kept = true;
    }
    if (kept) sel.selected.push_back(blk);
  }
  sel.rank = basis.size();
  if (sel.rank != cols)
    throw InternalError("select_blocks: linear part has rank " + std::to_string(sel.rank) +
                        " < " + std::to_string(cols) + "; the map is not injective");
  return sel;
}

/// Independent check of a selection: at most n(n+1)/2 blocks, every pivot
/// row inside a selected block, and the square matrix of pivot rows
/// nonsingular (by a separate Bareiss elimination).
inline bool verify_certificate(BlockSelection const& sel, AffineExponentMap const& map) {
  std::size_t const cols = tuple_size(map.rank());
  if (sel.selected.size() > cols || sel.rank != cols || sel.pivot_rows.size() != cols ||
      sel.pivot_cols.size() != cols)
    return false;
  IntMatrix sub(cols, cols);
  for (std::size_t r = 0; r < cols; ++r) {
    std::size_t const row = sel.pivot_rows[r];
    if (row >= map.rows().size()) return false;
    bool in_selected = false;
    for (auto b : sel.selected) in_selected |= (b == row / 3);
    if (!in_selected) return false;
    for (std::size_t c = 0; c < cols; ++c) sub(r, c) = map.rows()[row].coeffs[c];
  }
  return bareiss_rank(sub) == cols;
}

struct MinimizedRep {
  Representation rep;          // build_rep(n) restricted to the selection
  BlockSelection selection;
  AffineExponentMap full_map;  // affine_of_rep(n)
};

/// Faithful representation of Ch_n on at most n(n+1)/2 blocks, i.e. inside
/// upper-triangular matrices of size n(n+1).
inline MinimizedRep minimized_rep(std::size_t n) {
  auto map = affine_of_rep(n);
  auto sel = select_blocks(map);
  auto rep = restrict_blocks(build_rep(n), sel.selected);
  return {std::move(rep), std::move(sel), std::move(map)};
}

/// Entries (three per selected block, in selection order) of the map at k.
inline std::vector<std::int64_t> selected_entries(BlockSelection const& sel,
                                                  AffineExponentMap const& map,
                                                  ExponentTuple const& k) {
  auto const all = affine_entries(map, k);
  std::vector<std::int64_t> out;
  for (auto b : sel.selected)
    for (std::size_t p = 0; p < 3; ++p) out.push_back(all[3 * b + p]);
  return out;
}

/// Solve for the tuple whose selected-block entries are `entries`, using
/// the pivot rows of the certificate, then check integrality,
/// non-negativity and every row of the selected blocks.
inline ExponentTuple recover_from_selected(BlockSelection const& sel, AffineExponentMap const& map,
                                           std::vector<std::int64_t> const& entries) {
  std::size_t const cols = tuple_size(map.rank());
  if (entries.size() != 3 * sel.selected.size())
    throw ShapeError("recover_from_selected: expected " + std::to_string(3 * sel.selected.size()) +
                     " entries, got " + std::to_string(entries.size()));
  if (sel.pivot_rows.size() != cols) throw DomainError("selection does not have full rank");

  // Position of each full-map row inside `entries`.
  auto entry_of = [&](std::size_t row) -> std::int64_t {
    for (std::size_t s = 0; s < sel.selected.size(); ++s)
      if (sel.selected[s] == row / 3) return entries[3 * s + row % 3];
    throw DomainError("pivot row outside the selected blocks");
  };

  RationalMatrix aug(cols, cols + 1);
  for (std::size_t r = 0; r < cols; ++r) {
    auto const& row = map.rows().at(sel.pivot_rows[r]);
    for (std::size_t c = 0; c < cols; ++c) aug(r, c) = row.coeffs[c];
    aug(r, cols) = Rational(entry_of(sel.pivot_rows[r])) - row.constant;
  }
  auto const piv = aug.reduce();
  if (piv.size() != cols || piv.back() != cols - 1)
    throw InternalError("recover_from_selected: pivot rows are singular");

  std::vector<std::int64_t> k(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    Rational const& x = aug(c, cols);
    if (denominator(x) != 1)
      throw InconsistentImage("recover_from_selected: non-integral exponent");
    if (x < 0) throw InconsistentImage("recover_from_selected: negative exponent");
    k[c] = static_cast<std::int64_t>(numerator(x));
  }
  ExponentTuple result(map.rank(), std::move(k));
  if (selected_entries(sel, map, result) != entries)
    throw InconsistentImage("recover_from_selected: entries are not the image of a canonical word");
  return result;
}

}  // namespace tropichinese
