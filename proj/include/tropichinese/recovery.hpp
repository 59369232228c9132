#pragma once

// Canonical forms through the representation.
//
// At rank 3 the nine block entries of a canonical word's image form an
// affine system in (k11, k21, k22, k31, k32, k33) with a unique solution,
// solved here in closed form. A rank n tuple is reassembled from the three
// rank n-1 tuples of its letter-merged words (ell = 1, 2, n-1), so a word
// of rank n costs 3^(n-3) rank-3 evaluations, each linear in its length.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "representation.hpp"
#include "trop.hpp"
#include "words.hpp"

namespace tropichinese {

/// The three rank-3 block images X, Y, Z (representations I, II, III) of a
/// canonical word, under the affine convention (the empty word gives the
/// semigroup identity blocks). Throws InconsistentImage when no
/// non-negative integer tuple reproduces all nine entries.
inline ExponentTuple recover_ch3(TropMatrix const& x, TropMatrix const& y, TropMatrix const& z) {
  for (auto const* m : {&x, &y, &z}) {
    if (m->dim() != 2 || !m->is_upper_triangular())
      throw InconsistentImage("recover_ch3: blocks must be 2x2 upper triangular");
    if (m->operator()(0, 0).is_bottom() || m->operator()(0, 1).is_bottom() ||
        m->operator()(1, 1).is_bottom())
      throw InconsistentImage("recover_ch3: image of a word has no -inf on or above the diagonal");
  }
  auto v = [](TropMatrix const& m, std::size_t p, std::size_t q) { return m(p, q).value(); };
  std::int64_t const x11 = v(x, 0, 0), x12 = v(x, 0, 1), x22 = v(x, 1, 1);
  std::int64_t const y11 = v(y, 0, 0), y12 = v(y, 0, 1), y22 = v(y, 1, 1);
  std::int64_t const z11 = v(z, 0, 0), z12 = v(z, 0, 1), z22 = v(z, 1, 1);

  // Z12 - X11 = k3 + k32 and Y22 = k3 + k31 + k32 isolate k31; the (1,2)
  // minus (2,2) gaps of X and (1,2) minus (1,1) of Y give k1 and k3.
  std::int64_t const k31 = x11 + y22 - z12;
  std::int64_t const k1 = x12 - x22 + 1;
  std::int64_t const k3 = y12 - y11 + 1;
  std::int64_t const k21 = x11 - k1 - k31;
  std::int64_t const k32 = y22 - k3 - k31;
  std::int64_t const k2 = x22 - k21 - k3 - k31 - 2 * k32;

  std::vector<std::int64_t> sol{k1, k21, k2, k31, k32, k3};
  for (auto s : sol)
    if (s < 0) throw InconsistentImage("recover_ch3: negative exponent in solution");
  ExponentTuple k(3, sol);

  auto const e = affine_entries(detail::affine_ch3(), k);
  std::vector<std::int64_t> const given{x11, x12, x22, y11, y12, y22, z11, z12, z22};
  if (e != given) throw InconsistentImage("recover_ch3: blocks are not the image of a canonical word");
  return k;
}

/// Reassemble a rank n tuple (n >= 4) from its images under subst_map(n-1, ell)
/// for ell = 1, 2, n-1. Throws InconsistentImage if the three inputs have no
/// common preimage.
inline ExponentTuple recover(std::size_t n, ExponentTuple const& from1, ExponentTuple const& from2,
                             ExponentTuple const& from_last) {
  if (n < 4) throw DomainError("recover needs rank >= 4; rank 3 is recover_ch3");
  std::size_t const m = n - 1;
  for (auto const* t : {&from1, &from2, &from_last})
    if (t->rank() != m) throw ShapeError("recover: inputs must have rank n-1");

  std::vector<std::int64_t> kt(tuple_size(n), 0);
  std::vector<bool> known(tuple_size(n), false);
  auto put = [&](std::size_t j, std::size_t i, std::int64_t val) {
    if (val < 0) throw InconsistentImage("recover: negative exponent");
    kt[tuple_index(j, i)] = val;
    known[tuple_index(j, i)] = true;
  };
  auto get = [&](std::size_t j, std::size_t i) {
    if (!known[tuple_index(j, i)]) throw InternalError("recover: exponent used before known");
    return kt[tuple_index(j, i)];
  };

  // ell = n-1 fixes every k_ji with j < n-1.
  for (std::size_t j = 1; j < m; ++j)
    for (std::size_t i = 1; i <= j; ++i) put(j, i, from_last.at(j, i));
  // ell = 1 fixes every k_ji with i, j > 2 (stored at (j-1, i-1)).
  for (std::size_t j = 3; j <= n; ++j)
    for (std::size_t i = 3; i <= j; ++i) put(j, i, from1.at(j - 1, i - 1));

  // Four unknowns remain: k_{m1}, k_{m2}, k_{n1}, k_{n2}.
  //   from_last: k_{m1} + k_{n1},  k_{m2} + k_{n2}
  //   from1:     k_{m1} + k_{m2},  k_{n1} + k_{n2}
  //   from2:     k_{n2} + k_{n3}
  std::int64_t const n2 = from2.at(m, 2) - get(n, 3);
  std::int64_t const n1 = from1.at(m, 1) - n2;
  std::int64_t const m2 = from_last.at(m, 2) - n2;
  std::int64_t const m1 = from_last.at(m, 1) - n1;
  put(n, 2, n2);
  put(n, 1, n1);
  put(m, 2, m2);
  put(m, 1, m1);

  ExponentTuple result(n, kt);
  if (subst_map(m, 1)(result) != from1 || subst_map(m, 2)(result) != from2 ||
      subst_map(m, m)(result) != from_last)
    throw InconsistentImage("recover: inputs have no common preimage");
  return result;
}

namespace detail {

inline ExponentTuple canonical_rank3(Representation const& base, Word const& w) {
  if (w.empty()) return ExponentTuple(3);
  auto img = eval_word(base, w);
  return recover_ch3(img.block(0), img.block(1), img.block(2));
}

inline ExponentTuple canonical_recursive(Representation const& base, Word const& w) {
  if (w.rank() == 3) return canonical_rank3(base, w);
  std::size_t const n = w.rank();
  auto const k1 = canonical_recursive(base, merge_letters(w, 1));
  auto const k2 = canonical_recursive(base, merge_letters(w, 2));
  auto const kl = canonical_recursive(base, merge_letters(w, n - 1));
  return recover(n, k1, k2, kl);
}

}  // namespace detail

/// Canonical form of w computed through the representation. Ranks 1 and 2
/// are embedded into rank 3 and the absent exponents stripped.
inline ExponentTuple canonical_via_rep(Word const& w) {
  static Representation const base = base_rep_ch3();
  if (w.rank() >= 3) return detail::canonical_recursive(base, w);

  auto const k3 = detail::canonical_rank3(base, w.embed(3));
  ExponentTuple k(w.rank());
  for (std::size_t j = 1; j <= 3; ++j)
    for (std::size_t i = 1; i <= j; ++i) {
      if (j <= w.rank())
        k.set(j, i, k3.at(j, i));
      else if (k3.at(j, i) != 0)
        throw InternalError("embedded canonical form uses an absent generator");
    }
  return k;
}

/// The tuple whose canonical word has image `img` under build_rep(n),
/// n >= 3. The tropical identity is the image of the empty word.
inline ExponentTuple recover_image(std::size_t n, BlockDiagMatrix const& img) {
  if (n < 3) throw DomainError("recover_image needs rank >= 3");
  std::size_t blocks = 1;
  for (std::size_t r = 3; r <= n; ++r) blocks *= 3;
  if (img.block_count() != blocks)
    throw ShapeError("recover_image: expected " + std::to_string(blocks) + " blocks, got " +
                     std::to_string(img.block_count()));
  if (img == BlockDiagMatrix::identity(blocks)) return ExponentTuple(n);
  if (n == 3) return recover_ch3(img.block(0), img.block(1), img.block(2));
  std::size_t const third = blocks / 3;
  std::vector<ExponentTuple> parts;
  for (std::size_t t = 0; t < 3; ++t) {
    std::vector<TropMatrix> sub(img.blocks().begin() + static_cast<std::ptrdiff_t>(t * third),
                                img.blocks().begin() + static_cast<std::ptrdiff_t>((t + 1) * third));
    parts.push_back(recover_image(n - 1, BlockDiagMatrix(std::move(sub))));
  }
  return recover(n, parts[0], parts[1], parts[2]);
}

/// Canonical word of w, via canonical_via_rep.
inline Word canonical_word(Word const& w) { return expand(canonical_via_rep(w)); }

}  // namespace tropichinese
