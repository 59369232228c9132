#pragma once

// The faithful block-diagonal representation of Ch_n.
//
// Rank 3 is three explicit 2x2 representations (a, b, c = a1, a2, a3)
// side by side. Rank n > 3 stacks three lifts of the rank n-1
// representation, with lift ell sending a_j to the old image of a_j for
// j <= ell and of a_{j-1} otherwise. The lifts used are ell = 1, 2, n-1,
// in that order, so rank n has 3^(n-2) blocks.
//
// On canonical words the block entries are affine in the exponent tuple;
// AffineExponentMap carries those affine forms, and they are what the
// recovery and minimizer modules invert.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "trop.hpp"
#include "words.hpp"

namespace tropichinese {

class Representation {
 public:
  Representation() = default;

  /// gen_images[j-1] is the image of a_j; lift_order records the ell of
  /// each stacked sub-representation (empty for the rank-3 base).
  Representation(std::size_t rank, std::vector<BlockDiagMatrix> gen_images,
                 std::vector<std::size_t> lift_order = {})
      : rank_(rank), images_(std::move(gen_images)), lift_order_(std::move(lift_order)) {
    if (images_.size() != rank_) throw ShapeError("need one image per generator");
    for (auto const& m : images_)
      if (m.block_count() != images_.front().block_count())
        throw ShapeError("generator images have different block counts");
  }

  std::size_t rank() const noexcept { return rank_; }
  std::size_t block_count() const noexcept {
    return images_.empty() ? 0 : images_.front().block_count();
  }
  /// Side length of the full block-diagonal matrix.
  std::size_t matrix_size() const noexcept { return 2 * block_count(); }

  BlockDiagMatrix const& image(std::size_t j) const {
    Generator::checked(j, rank_);
    return images_[j - 1];
  }
  std::vector<BlockDiagMatrix> const& gen_images() const noexcept { return images_; }
  std::vector<std::size_t> const& lift_order() const noexcept { return lift_order_; }

  friend bool operator==(Representation const&, Representation const&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<BlockDiagMatrix> images_;
  std::vector<std::size_t> lift_order_;
};

/// The three explicit representations of Ch_3 combined, blocks in order
/// I, II, III.
inline Representation base_rep_ch3() {
  auto u = [](std::int64_t a, std::int64_t b, std::int64_t d) {
    return TropMatrix::upper2(a, b, d);
  };
  // a, b, c under representations I, II and III.
  BlockDiagMatrix const a({u(1, 0, 0), u(1, 0, 0), u(1, 1, 0)});
  BlockDiagMatrix const b({u(0, 0, 1), u(1, 0, 0), u(0, 0, 0)});
  BlockDiagMatrix const c({u(0, 0, 1), u(0, 0, 1), u(0, 1, 1)});
  return Representation(3, {a, b, c});
}

/// The rank n+1 representation a_j -> rep(a_j) for j <= ell, else
/// rep(a_{j-1}).
inline Representation lift(Representation const& rep, std::size_t ell) {
  std::size_t const n = rep.rank();
  if (ell < 1 || ell > n)
    throw DomainError("lift: ell=" + std::to_string(ell) + " outside 1.." + std::to_string(n));
  std::vector<BlockDiagMatrix> imgs;
  imgs.reserve(n + 1);
  for (std::size_t j = 1; j <= n + 1; ++j) imgs.push_back(rep.image(j <= ell ? j : j - 1));
  return Representation(n + 1, std::move(imgs), {ell});
}

/// Stack lifts of rep for the given ells into one rank n+1 representation.
inline Representation combine_lifts(Representation const& rep,
                                    std::vector<std::size_t> const& ells) {
  std::size_t const n = rep.rank();
  std::vector<std::vector<TropMatrix>> blocks(n + 1);
  for (auto ell : ells) {
    auto lifted = lift(rep, ell);
    for (std::size_t j = 1; j <= n + 1; ++j) {
      auto const& bs = lifted.image(j).blocks();
      blocks[j - 1].insert(blocks[j - 1].end(), bs.begin(), bs.end());
    }
  }
  std::vector<BlockDiagMatrix> imgs;
  for (auto& bs : blocks) imgs.emplace_back(std::move(bs));
  return Representation(n + 1, std::move(imgs), ells);
}

/// The ells stacked when building rank n from rank n-1.
inline std::array<std::size_t, 3> lift_ells(std::size_t n) { return {1, 2, n - 1}; }

/// Faithful representation of Ch_n, n >= 3, with 3^(n-2) blocks.
inline Representation build_rep(std::size_t n) {
  if (n < 3) throw DomainError("build_rep needs rank >= 3 (embed smaller ranks)");
  Representation rep = base_rep_ch3();
  for (std::size_t r = 4; r <= n; ++r) {
    auto ells = lift_ells(r);
    rep = combine_lifts(rep, {ells.begin(), ells.end()});
  }
  return rep;
}

namespace experimental {

/// Rank n+1 from rank n via an arbitrary triple r < s < t. Only
/// (1, 2, n) is known to be faithful; other triples are unchecked.
inline Representation combine_rst(Representation const& rep, std::size_t r, std::size_t s,
                                  std::size_t t) {
  if (!(r < s && s < t)) throw DomainError("combine_rst needs r < s < t");
  return combine_lifts(rep, {r, s, t});
}

}  // namespace experimental

/// Restriction of rep to the listed blocks, in the listed order.
inline Representation restrict_blocks(Representation const& rep,
                                      std::vector<std::size_t> const& blocks) {
  std::vector<BlockDiagMatrix> imgs;
  for (std::size_t j = 1; j <= rep.rank(); ++j) {
    std::vector<TropMatrix> bs;
    for (auto b : blocks) bs.push_back(rep.image(j).block(b));
    imgs.emplace_back(std::move(bs));
  }
  return Representation(rep.rank(), std::move(imgs), rep.lift_order());
}

/// Image of w; the empty word maps to the tropical identity.
inline BlockDiagMatrix eval_word(Representation const& rep, Word const& w) {
  if (w.rank() != rep.rank())
    throw ShapeError("eval_word: word rank " + std::to_string(w.rank()) +
                     " vs representation rank " + std::to_string(rep.rank()));
  BlockDiagMatrix m = BlockDiagMatrix::identity(rep.block_count());
  for (auto l : w.letters()) m = block_mul(m, rep.image(l));
  return m;
}

/// Dense integer matrix, used for the linear parts of exponent maps.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

  friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> a_;
};

/// The exponent substitution of merging a_{ell+1} into a_ell: maps a
/// rank n+1 tuple kt to the rank n tuple k of the merged canonical word.
///
///   k_ji = kt_ji                                   j < ell
///        = kt_{ell,i} + kt_{ell+1,i}               j = ell > i
///        = kt_{ell,ell} + 2 kt_{ell+1,ell} + kt_{ell+1,ell+1}   j = i = ell
///        = kt_{j+1,i}                              j > ell > i
///        = kt_{j+1,ell} + kt_{j+1,ell+1}           j > i = ell
///        = kt_{j+1,i+1}                            j, i > ell
class SubstMap {
 public:
  SubstMap(std::size_t n, std::size_t ell) : n_(n), ell_(ell), m_(tuple_size(n), tuple_size(n + 1)) {
    if (n < 1 || ell < 1 || ell > n)
      throw DomainError("subst_map: ell=" + std::to_string(ell) + " outside 1.." +
                        std::to_string(n));
    auto add = [&](std::size_t j, std::size_t i, std::size_t jt, std::size_t it, std::int64_t c) {
      m_(tuple_index(j, i), tuple_index(jt, it)) += c;
    };
    for (std::size_t j = 1; j <= n; ++j) {
      for (std::size_t i = 1; i <= j; ++i) {
        if (j < ell) {
          add(j, i, j, i, 1);
        } else if (j == ell && i < ell) {
          add(j, i, ell, i, 1);
          add(j, i, ell + 1, i, 1);
        } else if (j == ell && i == ell) {
          add(j, i, ell, ell, 1);
          add(j, i, ell + 1, ell, 2);
          add(j, i, ell + 1, ell + 1, 1);
        } else if (i < ell) {
          add(j, i, j + 1, i, 1);
        } else if (i == ell) {
          add(j, i, j + 1, ell, 1);
          add(j, i, j + 1, ell + 1, 1);
        } else {
          add(j, i, j + 1, i + 1, 1);
        }
      }
    }
  }

  std::size_t rank() const noexcept { return n_; }
  std::size_t ell() const noexcept { return ell_; }
  /// tuple_size(n) x tuple_size(n+1) integer matrix.
  IntMatrix const& matrix() const noexcept { return m_; }

  ExponentTuple operator()(ExponentTuple const& kt) const {
    if (kt.rank() != n_ + 1) throw ShapeError("subst_map: input must have rank n+1");
    std::vector<std::int64_t> out(m_.rows(), 0);
    for (std::size_t r = 0; r < m_.rows(); ++r)
      for (std::size_t c = 0; c < m_.cols(); ++c) out[r] += m_(r, c) * kt.values()[c];
    return ExponentTuple(n_, std::move(out));
  }

 private:
  std::size_t n_, ell_;
  IntMatrix m_;
};

inline SubstMap subst_map(std::size_t n, std::size_t ell) { return SubstMap(n, ell); }

enum class EntryPos { k11, k12, k22 };

inline char const* to_string(EntryPos p) {
  switch (p) {
    case EntryPos::k11: return "11";
    case EntryPos::k12: return "12";
    case EntryPos::k22: return "22";
  }
  return "?";
}

inline constexpr std::array<EntryPos, 3> kEntryPositions = {EntryPos::k11, EntryPos::k12,
                                                            EntryPos::k22};

struct AffineRow {
  std::size_t block = 0;
  EntryPos pos = EntryPos::k11;
  std::vector<std::int64_t> coeffs;  // over the tuple coordinates, tuple_index order
  std::int64_t constant = 0;

  std::int64_t eval(ExponentTuple const& k) const {
    std::int64_t v = constant;
    for (std::size_t c = 0; c < coeffs.size(); ++c) v += coeffs[c] * k.values()[c];
    return v;
  }

  friend bool operator==(AffineRow const&, AffineRow const&) = default;
};

/// k -> block entries of the image of expand(k). Rows are block-major with
/// positions (1,1), (1,2), (2,2) inside each block.
class AffineExponentMap {
 public:
  AffineExponentMap() = default;
  AffineExponentMap(std::size_t rank, std::vector<AffineRow> rows)
      : rank_(rank), rows_(std::move(rows)) {
    if (rows_.size() % 3 != 0) throw ShapeError("affine map needs three rows per block");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r].block != r / 3 || rows_[r].pos != kEntryPositions[r % 3])
        throw ShapeError("affine rows must be block-major in position order");
      if (rows_[r].coeffs.size() != tuple_size(rank_))
        throw ShapeError("affine row has wrong coefficient count");
    }
  }

  std::size_t rank() const noexcept { return rank_; }
  std::size_t block_count() const noexcept { return rows_.size() / 3; }
  std::vector<AffineRow> const& rows() const noexcept { return rows_; }
  AffineRow const& row(std::size_t block, EntryPos pos) const {
    return rows_.at(3 * block + static_cast<std::size_t>(pos));
  }

  /// Sub-map on the listed blocks, renumbered 0..size-1.
  AffineExponentMap restrict_blocks(std::vector<std::size_t> const& blocks) const {
    std::vector<AffineRow> out;
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (std::size_t p = 0; p < 3; ++p) {
        AffineRow r = rows_.at(3 * blocks[b] + p);
        r.block = b;
        out.push_back(std::move(r));
      }
    return AffineExponentMap(rank_, std::move(out));
  }

  friend bool operator==(AffineExponentMap const&, AffineExponentMap const&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<AffineRow> rows_;
};

namespace detail {

inline AffineExponentMap affine_ch3() {
  // Coordinates: k11 k21 k22 k31 k32 k33.
  using C = std::vector<std::int64_t>;
  auto row = [](std::size_t b, EntryPos p, C c, std::int64_t k) {
    return AffineRow{b, p, std::move(c), k};
  };
  using P = EntryPos;
  return AffineExponentMap(
      3, {
             row(0, P::k11, {1, 1, 0, 1, 0, 0}, 0),
             row(0, P::k12, {1, 1, 1, 1, 2, 1}, -1),
             row(0, P::k22, {0, 1, 1, 1, 2, 1}, 0),
             row(1, P::k11, {1, 2, 1, 1, 1, 0}, 0),
             row(1, P::k12, {1, 2, 1, 1, 1, 1}, -1),
             row(1, P::k22, {0, 0, 0, 1, 1, 1}, 0),
             row(2, P::k11, {1, 1, 0, 1, 0, 0}, 0),
             row(2, P::k12, {1, 1, 0, 1, 1, 1}, 0),
             row(2, P::k22, {0, 0, 0, 1, 1, 1}, 0),
         });
}

}  // namespace detail

/// Affine exponent map of build_rep(n): the rank-3 closed forms, then for
/// each higher rank the previous map composed with subst_map(n-1, ell) for
/// ell = 1, 2, n-1, stacked in that order.
inline AffineExponentMap affine_of_rep(std::size_t n) {
  if (n < 3) throw DomainError("affine_of_rep needs rank >= 3");
  AffineExponentMap map = detail::affine_ch3();
  for (std::size_t r = 4; r <= n; ++r) {
    std::vector<AffineRow> rows;
    std::size_t const prev_blocks = map.block_count();
    std::size_t t = 0;
    for (auto ell : lift_ells(r)) {
      IntMatrix const s = subst_map(r - 1, ell).matrix();
      for (auto const& old : map.rows()) {
        AffineRow nr{t * prev_blocks + old.block, old.pos,
                     std::vector<std::int64_t>(s.cols(), 0), old.constant};
        for (std::size_t c = 0; c < s.rows(); ++c) {
          if (old.coeffs[c] == 0) continue;
          for (std::size_t ct = 0; ct < s.cols(); ++ct) nr.coeffs[ct] += old.coeffs[c] * s(c, ct);
        }
        rows.push_back(std::move(nr));
      }
      ++t;
    }
    map = AffineExponentMap(r, std::move(rows));
  }
  return map;
}

/// The entry vector (three per block) of map at k.
inline std::vector<std::int64_t> affine_entries(AffineExponentMap const& map,
                                                ExponentTuple const& k) {
  if (k.rank() != map.rank())
    throw ShapeError("eval_affine: tuple rank " + std::to_string(k.rank()) + " vs map rank " +
                     std::to_string(map.rank()));
  std::vector<std::int64_t> out;
  out.reserve(map.rows().size());
  for (auto const& r : map.rows()) out.push_back(r.eval(k));
  return out;
}

/// Block entries of a block-diagonal matrix, three per block.
inline std::vector<TropScalar> block_entries(BlockDiagMatrix const& m) {
  std::vector<TropScalar> out;
  out.reserve(3 * m.block_count());
  for (auto const& b : m.blocks()) {
    out.push_back(b(0, 0));
    out.push_back(b(0, 1));
    out.push_back(b(1, 1));
  }
  return out;
}

/// map evaluated at k, assembled as upper-triangular blocks. At the zero
/// tuple this gives the semigroup identity blocks (e.g. [[0,-1],[-inf,0]]),
/// not the tropical identity.
inline BlockDiagMatrix eval_affine(AffineExponentMap const& map, ExponentTuple const& k) {
  auto e = affine_entries(map, k);
  std::vector<TropMatrix> blocks;
  blocks.reserve(map.block_count());
  for (std::size_t b = 0; b < map.block_count(); ++b)
    blocks.push_back(TropMatrix::upper2(e[3 * b], e[3 * b + 1], e[3 * b + 2]));
  return BlockDiagMatrix(std::move(blocks));
}

/// All (i, j, k) with 1 <= i <= j <= k <= n.
inline std::vector<std::array<std::size_t, 3>> relation_triples(std::size_t n) {
  std::vector<std::array<std::size_t, 3>> out;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j)
      for (std::size_t k = j; k <= n; ++k) out.push_back({i, j, k});
  return out;
}

/// The three words a_j a_k a_i, a_k a_j a_i, a_k a_i a_j of a relation.
inline std::array<Word, 3> relation_words(std::size_t n, std::array<std::size_t, 3> t) {
  auto [i, j, k] = t;
  auto w = [n](std::size_t x, std::size_t y, std::size_t z) {
    return Word(n, {static_cast<Letter>(x), static_cast<Letter>(y), static_cast<Letter>(z)});
  };
  return {w(j, k, i), w(k, j, i), w(k, i, j)};
}

}  // namespace tropichinese
