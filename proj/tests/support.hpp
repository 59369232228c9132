#pragma once

// Test-only generators and independent reference implementations. Nothing
// here calls into the code paths it is used to check.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <tropichinese/trop.hpp>
#include <tropichinese/words.hpp>

namespace tropichinese::testing {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline ExponentTuple random_tuple(std::mt19937_64& g, std::size_t rank, std::int64_t max_entry) {
  std::uniform_int_distribution<std::int64_t> d(0, max_entry);
  std::vector<std::int64_t> v(tuple_size(rank));
  for (auto& x : v) x = d(g);
  return ExponentTuple(rank, std::move(v));
}

inline ExponentTuple random_nonzero_tuple(std::mt19937_64& g, std::size_t rank,
                                          std::int64_t max_entry) {
  while (true) {
    auto k = random_tuple(g, rank, max_entry);
    if (!k.is_zero()) return k;
  }
}

inline Word random_word(std::mt19937_64& g, std::size_t rank, std::size_t min_len,
                        std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<std::size_t> letter(1, rank);
  std::vector<Letter> a(len(g));
  for (auto& l : a) l = static_cast<Letter>(letter(g));
  return Word(rank, std::move(a));
}

/// Every word of the given rank and length, in lexicographic order.
inline std::vector<Word> all_words(std::size_t rank, std::size_t len) {
  std::vector<Word> out;
  std::vector<Letter> a(len, 1);
  while (true) {
    out.emplace_back(rank, a);
    std::size_t p = len;
    while (p > 0 && a[p - 1] == rank) a[--p] = 1;
    if (p == 0) return out;
    ++a[p - 1];
  }
}

/// Max-plus matrices as nested vectors with nullopt for -inf, multiplied
/// by the textbook triple loop.
using NaiveMatrix = std::vector<std::vector<std::optional<std::int64_t>>>;

inline NaiveMatrix naive(TropMatrix const& m) {
  NaiveMatrix out(m.dim(), std::vector<std::optional<std::int64_t>>(m.dim()));
  for (std::size_t p = 0; p < m.dim(); ++p)
    for (std::size_t q = 0; q < m.dim(); ++q)
      if (m(p, q).is_finite()) out[p][q] = m(p, q).value();
  return out;
}

inline NaiveMatrix naive_mul(NaiveMatrix const& a, NaiveMatrix const& b) {
  std::size_t const d = a.size();
  NaiveMatrix c(d, std::vector<std::optional<std::int64_t>>(d));
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q)
      for (std::size_t r = 0; r < d; ++r)
        if (a[p][r] && b[r][q]) {
          std::int64_t v = *a[p][r] + *b[r][q];
          if (!c[p][q] || v > *c[p][q]) c[p][q] = v;
        }
  return c;
}

/// Shorthand for a 2x2 upper-triangular matrix.
inline TropMatrix U(std::int64_t a, std::int64_t b, std::int64_t d) {
  return TropMatrix::upper2(a, b, d);
}

}  // namespace tropichinese::testing
