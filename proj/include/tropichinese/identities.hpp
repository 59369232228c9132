#pragma once

// Semigroup identities u = v and evidence gathering for them.
//
// check_in_chn substitutes random nonempty words of Ch_n and compares
// canonical forms; a mismatch is a proof that the identity fails, and is
// transferred to a concrete pair of 2x2 triangular tropical matrices via
// the faithful representation. check_in_tropical substitutes random upper
// triangular tropical matrices and can only refute.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "recovery.hpp"
#include "representation.hpp"
#include "trop.hpp"
#include "words.hpp"

namespace tropichinese {

inline constexpr std::string_view kIdentityLetters = "xyzw";

/// A pair of nonempty words over letters 0..alphabet_size-1.
struct Identity {
  std::size_t alphabet_size = 0;
  std::vector<std::size_t> lhs;
  std::vector<std::size_t> rhs;

  static Identity make(std::vector<std::size_t> lhs, std::vector<std::size_t> rhs) {
    if (lhs.empty() || rhs.empty()) throw DomainError("identity sides must be nonempty");
    std::size_t a = 0;
    for (auto l : lhs) a = std::max(a, l + 1);
    for (auto l : rhs) a = std::max(a, l + 1);
    return Identity{a, std::move(lhs), std::move(rhs)};
  }

  /// "x y y x = x y x" with letters x, y, z, w; spaces are optional.
  static Identity parse(std::string_view text) {
    auto eq = text.find('=');
    if (eq == std::string_view::npos || text.find('=', eq + 1) != std::string_view::npos)
      throw ParseError("identity must have the form 'u = v'");
    auto side = [](std::string_view s) {
      std::vector<std::size_t> out;
      for (char c : s) {
        if (c == ' ' || c == '\t') continue;
        auto p = kIdentityLetters.find(c);
        if (p == std::string_view::npos)
          throw ParseError(std::string("bad identity letter '") + c + "' (use x, y, z, w)");
        out.push_back(p);
      }
      if (out.empty()) throw ParseError("identity sides must be nonempty");
      return out;
    };
    return make(side(text.substr(0, eq)), side(text.substr(eq + 1)));
  }

  std::string to_string() const {
    auto side = [](std::vector<std::size_t> const& s) {
      std::string out;
      for (std::size_t p = 0; p < s.size(); ++p) {
        if (p) out += ' ';
        out += kIdentityLetters[s[p]];
      }
      return out;
    };
    return side(lhs) + " = " + side(rhs);
  }
};

/// The Adjan identity ab^2a ab ab^2a = ab^2a ba ab^2a with a = x, b = y.
inline Identity adjan() {
  std::vector<std::size_t> const abba{0, 1, 1, 0};
  std::vector<std::size_t> lhs = abba, rhs = abba;
  lhs.insert(lhs.end(), {0, 1});
  rhs.insert(rhs.end(), {1, 0});
  lhs.insert(lhs.end(), abba.begin(), abba.end());
  rhs.insert(rhs.end(), abba.begin(), abba.end());
  return Identity::make(std::move(lhs), std::move(rhs));
}

/// Substitute one value per letter into a side and multiply out.
template <class T, class Mul>
T substitute(std::vector<std::size_t> const& side, std::vector<T> const& values, Mul mul) {
  T acc = values.at(side.front());
  for (std::size_t p = 1; p < side.size(); ++p) acc = mul(acc, values.at(side[p]));
  return acc;
}

namespace detail {

inline std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t sample) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(sample), static_cast<std::uint32_t>(sample >> 32)};
  return std::mt19937_64(seq);
}

inline Word concat(std::vector<std::size_t> const& side, std::vector<Word> const& values) {
  return substitute(side, values, [](Word const& a, Word const& b) { return a * b; });
}

}  // namespace detail

struct ChnCounterexample {
  std::vector<Word> substitution;  // one word per identity letter
  ExponentTuple lhs_form, rhs_form;
  // The same failure inside U_2(T): block `block` of the faithful
  // representation, the images of the substituted words there, and the
  // two differing products.
  std::size_t block = 0;
  std::vector<TropMatrix> letter_blocks;
  TropMatrix lhs_block, rhs_block;
};

struct ChnVerdict {
  bool holds = true;  // no counterexample among the samples
  std::size_t samples = 0;
  std::optional<ChnCounterexample> counterexample;
};

/// Transfer a Ch_n counterexample to a pair of distinct 2x2 block products.
/// Throws InternalError if the representation does not separate the two
/// sides, which would contradict faithfulness.
inline void transfer_to_blocks(Identity const& id, ChnCounterexample& cex) {
  std::size_t const n = cex.substitution.front().rank();
  std::size_t const rn = std::max<std::size_t>(n, 3);
  auto const rep = build_rep(rn);
  std::vector<BlockDiagMatrix> imgs;
  for (auto const& w : cex.substitution) imgs.push_back(eval_word(rep, w.embed(rn)));
  auto const lhs = substitute(id.lhs, imgs, block_mul);
  auto const rhs = substitute(id.rhs, imgs, block_mul);
  for (std::size_t b = 0; b < lhs.block_count(); ++b) {
    if (lhs.block(b) == rhs.block(b)) continue;
    cex.block = b;
    cex.letter_blocks.clear();
    for (auto const& m : imgs) cex.letter_blocks.push_back(m.block(b));
    cex.lhs_block = substitute(id.lhs, cex.letter_blocks, mat_mul);
    cex.rhs_block = substitute(id.rhs, cex.letter_blocks, mat_mul);
    if (cex.lhs_block == cex.rhs_block)
      throw InternalError("block products disagree with the block-diagonal product");
    return;
  }
  throw InternalError("faithful representation does not separate distinct canonical forms");
}

/// Random substitution test of id in Ch_n: per sample, each letter gets an
/// independent word of uniform length 1..maxlen with uniform letters.
/// Sample s draws from a generator seeded by (seed, s).
inline ChnVerdict check_in_chn(Identity const& id, std::size_t n, std::size_t samples,
                               std::size_t maxlen, std::uint64_t seed) {
  if (n == 0) throw DomainError("rank must be at least 1");
  if (maxlen == 0) throw DomainError("maxlen must be at least 1");
  ChnVerdict verdict;
  for (std::size_t s = 0; s < samples; ++s) {
    auto rng = detail::sample_rng(seed, s);
    std::uniform_int_distribution<std::size_t> len(1, maxlen);
    std::uniform_int_distribution<std::size_t> letter(1, n);
    std::vector<Word> sub;
    for (std::size_t a = 0; a < id.alphabet_size; ++a) {
      Word w(n);
      for (std::size_t p = len(rng); p > 0; --p) w.push_back(Generator{letter(rng)});
      sub.push_back(std::move(w));
    }
    ++verdict.samples;
    auto lf = canonical_via_rep(detail::concat(id.lhs, sub));
    auto rf = canonical_via_rep(detail::concat(id.rhs, sub));
    if (lf != rf) {
      ChnCounterexample cex{std::move(sub), std::move(lf), std::move(rf), 0, {}, {}, {}};
      transfer_to_blocks(id, cex);
      verdict.holds = false;
      verdict.counterexample = std::move(cex);
      return verdict;
    }
  }
  return verdict;
}

struct TropCounterexample {
  std::vector<TropMatrix> substitution;
  TropMatrix lhs, rhs;
};

struct TropVerdict {
  bool refuted = false;
  std::size_t samples = 0;
  std::optional<TropCounterexample> counterexample;
};

struct EntryRange {
  std::int64_t lo = -3;
  std::int64_t hi = 3;
};

/// Random upper-triangular dim x dim matrix; each entry on or above the
/// diagonal is uniform over [lo, hi] plus -inf.
inline TropMatrix random_upper(std::mt19937_64& rng, std::size_t dim, EntryRange range) {
  std::uniform_int_distribution<std::int64_t> pick(range.lo, range.hi + 1);
  TropMatrix m(dim, true);
  for (std::size_t p = 0; p < dim; ++p)
    for (std::size_t q = p; q < dim; ++q) {
      auto v = pick(rng);
      m(p, q) = v > range.hi ? kBottom : TropScalar(v);
    }
  return m;
}

/// Random substitution test of id in U_dim(T). Refutation only.
inline TropVerdict check_in_tropical(Identity const& id, std::size_t dim, std::size_t samples,
                                     EntryRange range, std::uint64_t seed) {
  if (dim == 0) throw DomainError("dim must be at least 1");
  if (range.lo > range.hi) throw DomainError("empty entry range");
  TropVerdict verdict;
  for (std::size_t s = 0; s < samples; ++s) {
    auto rng = detail::sample_rng(seed, s);
    std::vector<TropMatrix> sub;
    for (std::size_t a = 0; a < id.alphabet_size; ++a) sub.push_back(random_upper(rng, dim, range));
    ++verdict.samples;
    auto lhs = substitute(id.lhs, sub, mat_mul);
    auto rhs = substitute(id.rhs, sub, mat_mul);
    if (lhs != rhs) {
      verdict.refuted = true;
      verdict.counterexample = TropCounterexample{std::move(sub), std::move(lhs), std::move(rhs)};
      return verdict;
    }
  }
  return verdict;
}

/// Exhaustive test of id over every substitution of 2x2 upper-triangular
/// matrices with entries from `values`. Returns the first counterexample.
inline std::optional<TropCounterexample> refute_over_grid(Identity const& id,
                                                          std::vector<TropScalar> const& values) {
  std::vector<TropMatrix> grid;
  for (auto a : values)
    for (auto b : values)
      for (auto d : values) grid.push_back(TropMatrix::upper2(a, b, d));
  std::vector<std::size_t> idx(id.alphabet_size, 0);
  while (true) {
    std::vector<TropMatrix> sub;
    for (auto i : idx) sub.push_back(grid[i]);
    auto lhs = substitute(id.lhs, sub, mat_mul);
    auto rhs = substitute(id.rhs, sub, mat_mul);
    if (lhs != rhs) return TropCounterexample{std::move(sub), std::move(lhs), std::move(rhs)};
    std::size_t p = 0;
    while (p < idx.size() && ++idx[p] == grid.size()) idx[p++] = 0;
    if (p == idx.size()) return std::nullopt;
  }
}

}  // namespace tropichinese
