#pragma once

// Words over the generators a_1..a_n of the Chinese monoid Ch_n, the
// defining relations
//
//   a_j a_k a_i = a_k a_j a_i = a_k a_i a_j      (i <= j <= k),
//
// and the canonical form b_1 b_2 ... b_n with
//
//   b_j = (a_j a_1)^{k_j1} (a_j a_2)^{k_j2} ... (a_j a_{j-1})^{k_j(j-1)} a_j^{k_jj}.
//
// Everything named *_oracle or equiv_class works by brute-force closure
// under the relations. It is exponential and meant for desk-scale
// cross-checks only. canonical_search also uses nothing but the relations
// and scales further.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace tropichinese {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultClassCap = 1'000'000;

/// Number of exponents k_ji (1 <= i <= j <= n) of a rank-n canonical form.
constexpr std::size_t tuple_size(std::size_t rank) noexcept {
  return rank * (rank + 1) / 2;
}

/// Position of k_ji in the listing k_11, k_21, k_22, k_31, ...
constexpr std::size_t tuple_index(std::size_t j, std::size_t i) noexcept {
  return j * (j - 1) / 2 + (i - 1);
}

using Letter = std::uint16_t;

/// A generator a_index of Ch_rank.
struct Generator {
  std::size_t index = 1;

  static Generator checked(std::size_t index, std::size_t rank) {
    if (index < 1 || index > rank) {
      throw DomainError("generator a" + std::to_string(index) +
                        " outside rank " + std::to_string(rank));
    }
    return Generator{index};
  }
};

class Word {
 public:
  Word() = default;
  explicit Word(std::size_t rank) : rank_(rank) {
    if (rank == 0) throw DomainError("rank must be at least 1");
  }
  Word(std::size_t rank, std::vector<Letter> letters) : Word(rank) {
    letters_ = std::move(letters);
    for (auto l : letters_) Generator::checked(l, rank_);
  }

  std::size_t rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::vector<Letter> const& letters() const noexcept { return letters_; }
  Letter operator[](std::size_t p) const { return letters_[p]; }

  void push_back(Generator g) {
    Generator::checked(g.index, rank_);
    letters_.push_back(static_cast<Letter>(g.index));
  }

  /// Concatenation; ranks must agree.
  friend Word operator*(Word const& u, Word const& v) {
    if (u.rank_ != v.rank_) throw ShapeError("concatenating words of different rank");
    Word w = u;
    w.letters_.insert(w.letters_.end(), v.letters_.begin(), v.letters_.end());
    return w;
  }

  /// The same letters read as a word of a larger rank.
  Word embed(std::size_t rank) const {
    if (rank < rank_) throw DomainError("cannot embed into a smaller rank");
    return Word(rank, letters_);
  }

  /// Parse "a3 a1 a2" or, for rank <= 9, the compact form "312".
  static Word parse(std::string_view text, std::size_t rank) {
    Word w(rank);
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
      if (tok[0] == 'a' || tok[0] == 'A') {
        if (tok.size() < 2 || !std::all_of(tok.begin() + 1, tok.end(), ::isdigit))
          throw ParseError("bad generator token '" + tok + "'");
        std::size_t idx = 0;
        try {
          idx = std::stoul(tok.substr(1));
        } catch (std::exception const&) {
          throw ParseError("bad generator token '" + tok + "'");
        }
        if (idx < 1 || idx > rank)
          throw ParseError("generator " + tok + " outside rank " + std::to_string(rank));
        w.letters_.push_back(static_cast<Letter>(idx));
      } else if (std::all_of(tok.begin(), tok.end(), ::isdigit)) {
        if (rank > 9) throw ParseError("compact digit words need rank <= 9");
        for (char c : tok) {
          std::size_t idx = static_cast<std::size_t>(c - '0');
          if (idx < 1 || idx > rank)
            throw ParseError(std::string("digit '") + c + "' outside rank " +
                             std::to_string(rank));
          w.letters_.push_back(static_cast<Letter>(idx));
        }
      } else {
        throw ParseError("bad word token '" + tok + "'");
      }
    }
    return w;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t p = 0; p < letters_.size(); ++p) {
      if (p) s += ' ';
      s += 'a';
      s += std::to_string(letters_[p]);
    }
    return s;
  }

  friend bool operator==(Word const&, Word const&) = default;
  friend auto operator<=>(Word const&, Word const&) = default;

  friend std::ostream& operator<<(std::ostream& os, Word const& w) {
    return os << '"' << w.to_string() << '"';
  }

 private:
  std::size_t rank_ = 1;
  std::vector<Letter> letters_;
};

/// Relabel a_j -> a_{j-1} for j > ell, giving a word of rank n-1.
inline Word merge_letters(Word const& w, std::size_t ell) {
  if (w.rank() < 2 || ell < 1 || ell >= w.rank())
    throw DomainError("merge_letters: ell=" + std::to_string(ell) +
                      " invalid for rank " + std::to_string(w.rank()));
  std::vector<Letter> out(w.letters());
  for (auto& l : out)
    if (l > ell) --l;
  return Word(w.rank() - 1, std::move(out));
}

/// The exponents k_ji of a canonical form, in tuple_index order.
class ExponentTuple {
 public:
  ExponentTuple() = default;
  explicit ExponentTuple(std::size_t rank)
      : rank_(rank), k_(tuple_size(rank), 0) {
    if (rank == 0) throw DomainError("rank must be at least 1");
  }
  ExponentTuple(std::size_t rank, std::vector<std::int64_t> values)
      : rank_(rank), k_(std::move(values)) {
    if (rank == 0) throw DomainError("rank must be at least 1");
    if (k_.size() != tuple_size(rank)) throw ShapeError("exponent tuple has wrong length");
    for (auto v : k_)
      if (v < 0) throw DomainError("exponents must be non-negative");
  }

  /// Tuple with the listed k_ji = value entries, all others zero.
  static ExponentTuple from_entries(
      std::size_t rank,
      std::initializer_list<std::tuple<std::size_t, std::size_t, std::int64_t>> entries) {
    ExponentTuple t(rank);
    for (auto [j, i, v] : entries) t.set(j, i, v);
    return t;
  }

  std::size_t rank() const noexcept { return rank_; }
  std::vector<std::int64_t> const& values() const noexcept { return k_; }

  std::int64_t at(std::size_t j, std::size_t i) const {
    check(j, i);
    return k_[tuple_index(j, i)];
  }
  void set(std::size_t j, std::size_t i, std::int64_t v) {
    check(j, i);
    if (v < 0) throw DomainError("exponents must be non-negative");
    k_[tuple_index(j, i)] = v;
  }

  bool is_zero() const {
    return std::all_of(k_.begin(), k_.end(), [](auto v) { return v == 0; });
  }

  /// Letter length of the canonical word.
  std::int64_t weight() const {
    std::int64_t w = 0;
    for (std::size_t j = 1; j <= rank_; ++j)
      for (std::size_t i = 1; i <= j; ++i) w += (i == j ? 1 : 2) * at(j, i);
    return w;
  }

  /// "k11=1 k31=2"; "0" for the identity.
  std::string to_string() const {
    std::string s;
    for (std::size_t j = 1; j <= rank_; ++j)
      for (std::size_t i = 1; i <= j; ++i)
        if (auto v = at(j, i); v != 0) {
          if (!s.empty()) s += ' ';
          s += "k" + std::to_string(j) + (rank_ > 9 ? "," : "") + std::to_string(i) +
               "=" + std::to_string(v);
        }
    return s.empty() ? "0" : s;
  }

  friend bool operator==(ExponentTuple const&, ExponentTuple const&) = default;
  friend auto operator<=>(ExponentTuple const&, ExponentTuple const&) = default;

  friend std::ostream& operator<<(std::ostream& os, ExponentTuple const& t) {
    return os << "{rank " << t.rank_ << ": " << t.to_string() << '}';
  }

 private:
  void check(std::size_t j, std::size_t i) const {
    if (i < 1 || i > j || j > rank_)
      throw DomainError("exponent index k" + std::to_string(j) + "," +
                        std::to_string(i) + " outside rank " + std::to_string(rank_));
  }

  std::size_t rank_ = 1;
  std::vector<std::int64_t> k_;
};

/// The canonical word of k.
inline Word expand(ExponentTuple const& k) {
  std::size_t const n = k.rank();
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(k.weight()));
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t i = 1; i < j; ++i)
      for (std::int64_t r = 0; r < k.at(j, i); ++r) {
        out.push_back(static_cast<Letter>(j));
        out.push_back(static_cast<Letter>(i));
      }
    out.insert(out.end(), static_cast<std::size_t>(k.at(j, j)), static_cast<Letter>(j));
  }
  return Word(n, std::move(out));
}

/// The exponent tuple if w is literally a canonical word, else nullopt.
inline std::optional<ExponentTuple> is_canonical(Word const& w) {
  std::size_t const n = w.rank();
  auto const& a = w.letters();
  ExponentTuple k(n);
  std::size_t p = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    // A letter a_i (i < j) right after a_j can only close an (a_j a_i)
    // pair, so greedy matching is exact.
    for (std::size_t i = 1; i < j; ++i) {
      std::int64_t c = 0;
      while (p + 1 < a.size() && a[p] == j && a[p + 1] == i) {
        ++c;
        p += 2;
      }
      if (c) k.set(j, i, c);
    }
    std::int64_t c = 0;
    while (p < a.size() && a[p] == j) {
      ++c;
      ++p;
    }
    if (c) k.set(j, j, c);
  }
  if (p != a.size()) return std::nullopt;
  return k;
}

/// Words reachable from w by one application of a relation. A factor
/// x y z is rewritten iff it is one of a_j a_k a_i, a_k a_j a_i,
/// a_k a_i a_j for some i <= j <= k; self-loops are excluded.
inline std::set<Word> rewrite_neighbors(Word const& w) {
  std::set<Word> out;
  auto const& a = w.letters();
  if (a.size() < 3) return out;

  auto add = [&](std::size_t p, Letter x, Letter y, Letter z) {
    if (x == a[p] && y == a[p + 1] && z == a[p + 2]) return;
    std::vector<Letter> v(a);
    v[p] = x;
    v[p + 1] = y;
    v[p + 2] = z;
    out.insert(Word(w.rank(), std::move(v)));
  };

  for (std::size_t p = 0; p + 2 < a.size(); ++p) {
    Letter const x = a[p], y = a[p + 1], z = a[p + 2];
    // The factor is a member of class (i, j, k) with i <= j <= k in at most
    // three ways; collect every matching (i, j, k) and emit its class.
    std::vector<std::array<Letter, 3>> triples;
    if (z <= x && x <= y) triples.push_back({z, x, y});  // a_j a_k a_i
    if (z <= y && y <= x) triples.push_back({z, y, x});  // a_k a_j a_i
    if (y <= z && z <= x) triples.push_back({y, z, x});  // a_k a_i a_j
    for (auto [i, j, k] : triples) {
      add(p, j, k, i);
      add(p, k, j, i);
      add(p, k, i, j);
    }
  }
  return out;
}

/// Breadth-first closure of w under the relations. Throws CapExceeded once
/// more than cap words have been discovered.
inline std::vector<Word> equiv_class(Word const& w, std::size_t cap = kDefaultClassCap) {
  struct Hash {
    std::size_t operator()(std::vector<Letter> const& v) const noexcept {
      std::size_t h = 1469598103934665603ull;
      for (auto l : v) h = (h ^ l) * 1099511628211ull;
      return h;
    }
  };
  std::unordered_set<std::vector<Letter>, Hash> seen{w.letters()};
  std::deque<Word> queue{w};
  std::vector<Word> out;
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    for (auto& nb : rewrite_neighbors(cur)) {
      if (seen.insert(nb.letters()).second) {
        if (seen.size() > cap)
          throw CapExceeded("equivalence class exceeds cap " + std::to_string(cap));
        queue.push_back(nb);
      }
    }
    out.push_back(std::move(cur));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

inline ExponentTuple unique_canonical(std::vector<Word> const& cls, Word const& w) {
  std::optional<ExponentTuple> found;
  for (auto const& v : cls) {
    if (auto k = is_canonical(v)) {
      if (found)
        throw InternalError("two canonical words in the class of " + w.to_string());
      found = std::move(k);
    }
  }
  if (!found) throw InternalError("no canonical word in the class of " + w.to_string());
  return *found;
}

}  // namespace detail

/// Canonical form by enumeration: the unique member of the class matching
/// the canonical pattern. Zero or several matches throw InternalError since
/// either would contradict uniqueness of the canonical form.
inline ExponentTuple canonical_oracle(Word const& w, std::size_t cap = kDefaultClassCap) {
  return detail::unique_canonical(equiv_class(w, cap), w);
}

namespace detail {

inline ExponentTuple best_first_canonical(Word const& w, std::size_t cap) {
  std::set<Word> frontier{w};
  std::set<Word> seen{w};
  while (!frontier.empty()) {
    Word cur = *frontier.begin();
    frontier.erase(frontier.begin());
    if (auto k = is_canonical(cur)) return *k;
    for (auto& nb : rewrite_neighbors(cur)) {
      if (seen.insert(nb).second) {
        if (seen.size() > cap)
          throw CapExceeded("canonical search exceeds cap " + std::to_string(cap));
        frontier.insert(std::move(nb));
      }
    }
  }
  throw InternalError("no canonical word in the class of " + w.to_string());
}

}  // namespace detail

/// Canonical form by search instead of enumeration. Letters are appended
/// one at a time; after each, the words reachable from
/// expand(current) * letter are visited smallest first until one is
/// canonical. Canonical forms are unique, so the first hit is the answer.
/// Reaches words whose classes are far too large for canonical_oracle.
/// Throws CapExceeded when one step visits more than cap words.
inline ExponentTuple canonical_search(Word const& w, std::size_t cap = kDefaultClassCap) {
  ExponentTuple k(w.rank());
  for (auto l : w.letters()) {
    Word next = expand(k);
    next.push_back(Generator{l});
    k = detail::best_first_canonical(next, cap);
  }
  return k;
}

/// Number of elements of Ch_n of length m: exponent tuples of weight m,
/// where diagonal k_jj weigh 1 and off-diagonal k_ji weigh 2.
inline BigInt growth_count(std::size_t n, std::size_t m) {
  if (n == 0) throw DomainError("rank must be at least 1");
  std::vector<BigInt> ways(m + 1, 0);
  ways[0] = 1;
  auto add_part = [&](std::size_t weight) {
    for (std::size_t s = weight; s <= m; ++s) ways[s] += ways[s - weight];
  };
  for (std::size_t j = 1; j <= n; ++j) {
    add_part(1);
    for (std::size_t i = 1; i < j; ++i) add_part(2);
  }
  return ways[m];
}

/// Number of equivalence classes among all n^m words of length m, found by
/// enumerating the words and grouping them through canonical_oracle.
/// cap bounds both n^m and each class size.
inline BigInt growth_oracle(std::size_t n, std::size_t m, std::size_t cap = kDefaultClassCap) {
  if (n == 0) throw DomainError("rank must be at least 1");
  std::size_t total = 1;
  for (std::size_t r = 0; r < m; ++r) {
    if (total > cap / n) throw CapExceeded("n^m exceeds cap " + std::to_string(cap));
    total *= n;
  }
  std::set<ExponentTuple> canon;
  std::set<std::vector<Letter>> visited;
  std::vector<Letter> letters(m, 1);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t p = m; p-- > 0;) {
      letters[p] = static_cast<Letter>(1 + c % n);
      c /= n;
    }
    if (visited.count(letters)) continue;
    Word w(n, letters);
    auto cls = equiv_class(w, cap);
    auto k = detail::unique_canonical(cls, w);
    if (!canon.insert(k).second)
      throw InternalError("distinct classes share canonical form " + k.to_string());
    for (auto const& v : cls) visited.insert(v.letters());
  }
  return BigInt(canon.size());
}

}  // namespace tropichinese
