#pragma once

// Exact max-plus arithmetic over Z u {-inf}.
//
// Scalars are checked 64-bit integers; any overflow raises OverflowError
// instead of wrapping. Matrices are small dense squares, and a
// BlockDiagMatrix is an ordered list of 2x2 upper-triangular blocks.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace tropichinese {

class TropScalar {
 public:
  /// Bottom (-inf), the tropical zero.
  constexpr TropScalar() noexcept = default;
  constexpr TropScalar(std::int64_t v) noexcept : value_(v), finite_(true) {}  // NOLINT

  static constexpr TropScalar bottom() noexcept { return TropScalar(); }
  static constexpr TropScalar unit() noexcept { return TropScalar(0); }

  constexpr bool is_bottom() const noexcept { return !finite_; }
  constexpr bool is_finite() const noexcept { return finite_; }

  /// Finite value. Throws DomainError on bottom.
  std::int64_t value() const {
    if (!finite_) throw DomainError("value() of -inf");
    return value_;
  }

  friend constexpr bool operator==(TropScalar x, TropScalar y) noexcept {
    return x.finite_ == y.finite_ && (!x.finite_ || x.value_ == y.value_);
  }

  /// Total order with bottom below every integer.
  friend constexpr bool operator<(TropScalar x, TropScalar y) noexcept {
    if (!y.finite_) return false;
    if (!x.finite_) return true;
    return x.value_ < y.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, TropScalar x) {
    if (x.is_bottom()) return os << "-inf";
    return os << x.value_;
  }

  std::string to_string() const {
    return finite_ ? std::to_string(value_) : std::string("-inf");
  }

 private:
  std::int64_t value_ = 0;
  bool finite_ = false;
};

inline constexpr TropScalar kBottom = TropScalar::bottom();

/// Tropical addition: max, with bottom neutral.
constexpr TropScalar trop_add(TropScalar x, TropScalar y) noexcept {
  return x < y ? y : x;
}

/// Tropical multiplication: ordinary sum, bottom absorbing.
inline TropScalar trop_mul(TropScalar x, TropScalar y) {
  if (x.is_bottom() || y.is_bottom()) return kBottom;
  std::int64_t r = 0;
  if (__builtin_add_overflow(x.value(), y.value(), &r)) {
    throw OverflowError("tropical product overflows int64: " + x.to_string() +
                        " + " + y.to_string());
  }
  return TropScalar(r);
}

class TropMatrix {
 public:
  TropMatrix() = default;

  /// dim x dim matrix filled with bottom.
  explicit TropMatrix(std::size_t dim, bool triangular = false)
      : dim_(dim), entries_(dim * dim), triangular_(triangular) {
    if (dim == 0) throw ShapeError("matrix dimension must be positive");
  }

  /// Row-major literal; the triangular flag is validated.
  TropMatrix(std::initializer_list<std::initializer_list<TropScalar>> rows,
             bool triangular)
      : TropMatrix(rows.size(), false) {
    std::size_t p = 0;
    for (auto const& row : rows) {
      if (row.size() != dim_) throw ShapeError("matrix literal is not square");
      std::copy(row.begin(), row.end(), entries_.begin() + p * dim_);
      ++p;
    }
    if (triangular) mark_triangular();
  }

  static TropMatrix identity(std::size_t dim) {
    TropMatrix m(dim, true);
    for (std::size_t p = 0; p < dim; ++p) m(p, p) = TropScalar::unit();
    return m;
  }

  /// 2x2 upper-triangular matrix [[a, b], [-inf, d]].
  static TropMatrix upper2(TropScalar a, TropScalar b, TropScalar d) {
    TropMatrix m(2, true);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 1) = d;
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }
  bool triangular() const noexcept { return triangular_; }

  /// Zero-based entry access.
  TropScalar operator()(std::size_t p, std::size_t q) const {
    return entries_[p * dim_ + q];
  }
  TropScalar& operator()(std::size_t p, std::size_t q) {
    return entries_[p * dim_ + q];
  }

  /// Set the triangular flag; throws DomainError if an entry below the
  /// diagonal is finite.
  void mark_triangular() {
    for (std::size_t p = 0; p < dim_; ++p)
      for (std::size_t q = 0; q < p; ++q)
        if ((*this)(p, q).is_finite())
          throw DomainError("matrix has a finite entry below the diagonal");
    triangular_ = true;
  }

  bool is_upper_triangular() const {
    for (std::size_t p = 0; p < dim_; ++p)
      for (std::size_t q = 0; q < p; ++q)
        if ((*this)(p, q).is_finite()) return false;
    return true;
  }

  // Equality compares entries only; the flag is derived information.
  friend bool operator==(TropMatrix const& a, TropMatrix const& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

  friend bool operator<(TropMatrix const& a, TropMatrix const& b) {
    if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
    return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(),
                                        b.entries_.begin(), b.entries_.end());
  }

  friend std::ostream& operator<<(std::ostream& os, TropMatrix const& m) {
    os << '[';
    for (std::size_t p = 0; p < m.dim_; ++p) {
      os << (p ? ", [" : "[");
      for (std::size_t q = 0; q < m.dim_; ++q) os << (q ? ", " : "") << m(p, q);
      os << ']';
    }
    return os << ']';
  }

 private:
  std::size_t dim_ = 0;
  std::vector<TropScalar> entries_;
  bool triangular_ = false;
};

/// (AB)_{pq} = max_r (A_{pr} + B_{rq}).
inline TropMatrix mat_mul(TropMatrix const& a, TropMatrix const& b) {
  if (a.dim() != b.dim()) {
    throw ShapeError("mat_mul: dimension mismatch " + std::to_string(a.dim()) +
                     " vs " + std::to_string(b.dim()));
  }
  std::size_t const d = a.dim();
  bool const tri = a.triangular() && b.triangular();
  TropMatrix c(d, tri);
  for (std::size_t p = 0; p < d; ++p) {
    for (std::size_t q = tri ? p : 0; q < d; ++q) {
      TropScalar acc = kBottom;
      std::size_t const lo = tri ? p : 0;
      std::size_t const hi = tri ? q + 1 : d;
      for (std::size_t r = lo; r < hi; ++r)
        acc = trop_add(acc, trop_mul(a(p, r), b(r, q)));
      c(p, q) = acc;
    }
  }
  return c;
}

/// k-fold product by repeated squaring; M^0 is the tropical identity.
inline TropMatrix mat_pow(TropMatrix base, std::uint64_t k) {
  TropMatrix result = TropMatrix::identity(base.dim());
  while (k > 0) {
    if (k & 1u) result = mat_mul(result, base);
    k >>= 1u;
    if (k > 0) base = mat_mul(base, base);
  }
  return result;
}

class BlockDiagMatrix {
 public:
  BlockDiagMatrix() = default;
  explicit BlockDiagMatrix(std::vector<TropMatrix> blocks)
      : blocks_(std::move(blocks)) {
    for (auto const& b : blocks_) check_block(b);
  }

  static BlockDiagMatrix identity(std::size_t block_count) {
    return BlockDiagMatrix(
        std::vector<TropMatrix>(block_count, TropMatrix::identity(2)));
  }

  std::size_t block_count() const noexcept { return blocks_.size(); }
  /// Size of the full square matrix the blocks are the diagonal of.
  std::size_t dim() const noexcept { return 2 * blocks_.size(); }

  TropMatrix const& block(std::size_t i) const { return blocks_.at(i); }
  std::vector<TropMatrix> const& blocks() const noexcept { return blocks_; }

  void push_back(TropMatrix b) {
    check_block(b);
    blocks_.push_back(std::move(b));
  }

  /// Dense embedding into a (2N)x(2N) matrix.
  TropMatrix to_dense() const {
    TropMatrix m(dim(), true);
    for (std::size_t b = 0; b < blocks_.size(); ++b)
      for (std::size_t p = 0; p < 2; ++p)
        for (std::size_t q = 0; q < 2; ++q) m(2 * b + p, 2 * b + q) = blocks_[b](p, q);
    return m;
  }

  friend bool operator==(BlockDiagMatrix const&, BlockDiagMatrix const&) = default;
  friend bool operator<(BlockDiagMatrix const& a, BlockDiagMatrix const& b) {
    return a.blocks_ < b.blocks_;
  }

  friend std::ostream& operator<<(std::ostream& os, BlockDiagMatrix const& m) {
    os << '{';
    for (std::size_t b = 0; b < m.blocks_.size(); ++b) os << (b ? ", " : "") << m.blocks_[b];
    return os << '}';
  }

 private:
  static void check_block(TropMatrix const& b) {
    if (b.dim() != 2) throw ShapeError("block must be 2x2");
    if (!b.triangular()) throw DomainError("block must be upper triangular");
  }

  std::vector<TropMatrix> blocks_;
};

inline BlockDiagMatrix block_mul(BlockDiagMatrix const& x, BlockDiagMatrix const& y) {
  if (x.block_count() != y.block_count()) {
    throw ShapeError("block_mul: block count mismatch " +
                     std::to_string(x.block_count()) + " vs " +
                     std::to_string(y.block_count()));
  }
  std::vector<TropMatrix> out;
  out.reserve(x.block_count());
  for (std::size_t b = 0; b < x.block_count(); ++b)
    out.push_back(mat_mul(x.block(b), y.block(b)));
  return BlockDiagMatrix(std::move(out));
}

}  // namespace tropichinese
