#include <gtest/gtest.h>

#include <map>
#include <vector>

#include <tropichinese/representation.hpp>

#include "reference_tables.hpp"
#include "support.hpp"

using namespace tropichinese;
using tropichinese::testing::abc_word;
using tropichinese::testing::U;

namespace {

Word w(std::string const& s, std::size_t rank) { return Word::parse(s, rank); }

TropMatrix expected(tropichinese::testing::ReferenceProduct const& d) {
  return U(d.entries[0], d.entries[1], d.entries[2]);
}

}  // namespace

TEST(BaseRep, GeneratorImages) {
  auto const rep = base_rep_ch3();
  EXPECT_EQ(rep.block_count(), 3u);
  EXPECT_EQ(rep.image(2).block(0), U(0, 0, 1));
  EXPECT_EQ(rep.image(1).block(2), U(1, 1, 0));
  EXPECT_EQ(rep.image(3).block(1), U(0, 0, 1));
  EXPECT_EQ(rep.image(1).block(0), U(1, 0, 0));
  EXPECT_EQ(rep.image(2).block(1), U(1, 0, 0));
  EXPECT_EQ(rep.image(3).block(2), U(0, 1, 1));
}

TEST(BaseRep, ReferenceTripleProducts) {
  auto const rep = base_rep_ch3();
  for (auto const& d : tropichinese::testing::reference_triples())
    for (auto const& s : d.words)
      EXPECT_EQ(eval_word(rep, abc_word(s)).block(d.rep), expected(d))
          << "representation " << d.rep + 1 << " word " << s;
}

TEST(BaseRep, PairProducts) {
  auto const rep = base_rep_ch3();
  auto ev = [&](char const* s, std::size_t b) { return eval_word(rep, abc_word(s)).block(b); };
  // I and III agree with the reference table.
  for (auto const& d : tropichinese::testing::reference_pairs())
    if (d.rep != 1) {
      EXPECT_EQ(ev(d.words[0].c_str(), d.rep), expected(d)) << d.words[0];
    }
  // II by hand: A = B = [[1,0],[-inf,0]], C = [[0,0],[-inf,1]].
  EXPECT_EQ(ev("ba", 1), U(2, 1, 0));
  EXPECT_EQ(ev("ca", 1), U(1, 0, 1));
  EXPECT_EQ(ev("cb", 1), U(1, 0, 1));
}

TEST(BaseRep, PowerClosedForms) {
  auto const rep = base_rep_ch3();
  for (std::int64_t k = 1; k <= 6; ++k) {
    auto const K = static_cast<std::uint64_t>(k);
    auto pw = [&](char const* s, std::size_t b) {
      return mat_pow(eval_word(rep, abc_word(s)).block(b), K);
    };
    EXPECT_EQ(pw("a", 0), U(k, k - 1, 0));
    EXPECT_EQ(pw("b", 0), U(0, k - 1, k));
    EXPECT_EQ(pw("ba", 0), U(k, k - 1, k));
    EXPECT_EQ(pw("cb", 0), U(0, 2 * k - 1, 2 * k));
    EXPECT_EQ(pw("ba", 1), U(2 * k, 2 * k - 1, 0));
    EXPECT_EQ(pw("cb", 1), U(k, k - 1, k));
    EXPECT_EQ(pw("a", 2), U(k, k, 0));
    EXPECT_EQ(pw("b", 2), U(0, 0, 0));
    EXPECT_EQ(pw("cb", 2), U(0, k, k));
  }
}

TEST(BaseRep, DocumentedEqualitiesAndInequalities) {
  auto const rep = base_rep_ch3();
  auto blk = [&](char const* s, std::size_t b) { return eval_word(rep, abc_word(s)).block(b); };
  EXPECT_NE(blk("bac", 0), blk("abc", 0));
  EXPECT_EQ(blk("bac", 1), blk("abc", 1));
  EXPECT_NE(blk("abc", 1), blk("acb", 1));
  EXPECT_EQ(blk("bac", 2), blk("abc", 2));
  EXPECT_EQ(blk("abc", 2), blk("acb", 2));
  // Combined, the three words are pairwise distinct.
  auto full = [&](char const* s) { return eval_word(rep, abc_word(s)); };
  EXPECT_NE(full("bac"), full("abc"));
  EXPECT_NE(full("abc"), full("acb"));
  EXPECT_NE(full("bac"), full("acb"));
}

TEST(Lift, GeneratorMapping) {
  auto const base = base_rep_ch3();
  auto const l1 = lift(base, 1);
  EXPECT_EQ(l1.rank(), 4u);
  EXPECT_EQ(l1.image(2), base.image(1));
  EXPECT_EQ(l1.image(4), base.image(3));
  auto const l3 = lift(base, 3);
  EXPECT_EQ(l3.image(4), base.image(3));
  EXPECT_EQ(l3.image(3), base.image(3));
  auto const l2 = lift(base, 2);
  EXPECT_EQ(l2.image(2), base.image(2));
  EXPECT_EQ(l2.image(3), base.image(2));
  EXPECT_THROW(lift(base, 0), DomainError);
  EXPECT_THROW(lift(base, 4), DomainError);
}

TEST(Lift, EvaluatesMergedWords) {
  auto const rep4 = build_rep(4);
  auto g = tropichinese::testing::rng(21);
  for (std::size_t ell = 1; ell <= 4; ++ell) {
    auto const lifted = lift(rep4, ell);
    for (int t = 0; t < 40; ++t) {
      auto u = tropichinese::testing::random_word(g, 5, 0, 12);
      ASSERT_EQ(eval_word(lifted, u), eval_word(rep4, merge_letters(u, ell)));
    }
  }
}

TEST(BuildRep, BlockCounts) {
  EXPECT_EQ(build_rep(3), base_rep_ch3());
  EXPECT_EQ(build_rep(4).block_count(), 9u);
  EXPECT_EQ(build_rep(5).block_count(), 27u);
  EXPECT_EQ(build_rep(6).block_count(), 81u);
  EXPECT_EQ(build_rep(6).lift_order(), (std::vector<std::size_t>{1, 2, 5}));
  EXPECT_THROW(build_rep(2), DomainError);
}

TEST(BuildRep, StackingOrder) {
  auto const rep3 = build_rep(3);
  auto const rep4 = build_rep(4);
  std::vector<Representation> parts{lift(rep3, 1), lift(rep3, 2), lift(rep3, 3)};
  for (std::size_t j = 1; j <= 4; ++j)
    for (std::size_t t = 0; t < 3; ++t)
      for (std::size_t b = 0; b < 3; ++b)
        EXPECT_EQ(rep4.image(j).block(3 * t + b), parts[t].image(j).block(b));
}

TEST(BuildRep, RelationCompatibility) {
  for (std::size_t n = 3; n <= 6; ++n) {
    auto const rep = build_rep(n);
    for (auto const& t : relation_triples(n)) {
      auto const ws = relation_words(n, t);
      auto const img = eval_word(rep, ws[0]);
      ASSERT_EQ(eval_word(rep, ws[1]), img) << "n=" << n;
      ASSERT_EQ(eval_word(rep, ws[2]), img) << "n=" << n;
    }
  }
}

TEST(EvalWord, Examples) {
  auto const rep = build_rep(3);
  auto const img = eval_word(rep, w("a2 a3 a1", 3));
  EXPECT_EQ(img.block(0), U(1, 1, 2));
  EXPECT_EQ(img.block(1), U(2, 1, 1));
  EXPECT_EQ(img.block(2), U(1, 1, 1));
  EXPECT_EQ(eval_word(rep, Word(3)), BlockDiagMatrix::identity(3));
  EXPECT_THROW(eval_word(rep, w("a1", 4)), ShapeError);
}

TEST(EvalWord, Homomorphism) {
  auto g = tropichinese::testing::rng(9);
  for (std::size_t n = 3; n <= 5; ++n) {
    auto const rep = build_rep(n);
    for (int t = 0; t < 40; ++t) {
      auto u = tropichinese::testing::random_word(g, n, 0, 15);
      auto v = tropichinese::testing::random_word(g, n, 0, 15);
      ASSERT_EQ(eval_word(rep, u * v), block_mul(eval_word(rep, u), eval_word(rep, v)));
    }
  }
}

TEST(SubstMap, Examples) {
  EXPECT_EQ(subst_map(3, 1)(ExponentTuple::from_entries(4, {{2, 1, 1}})),
            ExponentTuple::from_entries(3, {{1, 1, 2}}));
  EXPECT_EQ(subst_map(3, 3)(ExponentTuple::from_entries(4, {{4, 1, 1}})),
            ExponentTuple::from_entries(3, {{3, 1, 1}}));
  EXPECT_EQ(subst_map(3, 2)(ExponentTuple::from_entries(4, {{4, 3, 1}})),
            ExponentTuple::from_entries(3, {{3, 2, 1}}));
  EXPECT_THROW(subst_map(3, 0), DomainError);
  EXPECT_THROW(subst_map(3, 4), DomainError);
  EXPECT_THROW(subst_map(3, 1)(ExponentTuple(3)), ShapeError);
}

TEST(SubstMap, PreservesWeight) {
  auto g = tropichinese::testing::rng(4);
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t ell = 1; ell <= n; ++ell)
      for (int t = 0; t < 30; ++t) {
        auto kt = tropichinese::testing::random_tuple(g, n + 1, 5);
        ASSERT_EQ(subst_map(n, ell)(kt).weight(), kt.weight());
      }
}

TEST(SubstMap, MatchesOracleOnMergedWords) {
  auto g = tropichinese::testing::rng(14);
  for (std::size_t n = 2; n <= 3; ++n)
    for (std::size_t ell = 1; ell <= n; ++ell)
      for (int t = 0; t < 40; ++t) {
        auto kt = tropichinese::testing::random_tuple(g, n + 1, 1);
        auto merged = merge_letters(expand(kt), ell);
        ASSERT_EQ(subst_map(n, ell)(kt), canonical_oracle(merged))
            << "n=" << n << " ell=" << ell << " kt=" << kt;
      }
}

TEST(SubstMap, MatchesSearchOnMergedWords) {
  auto g = tropichinese::testing::rng(15);
  for (std::size_t n = 3; n <= 5; ++n)
    for (std::size_t ell = 1; ell <= n; ++ell)
      for (int t = 0; t < 40; ++t) {
        auto kt = tropichinese::testing::random_tuple(g, n + 1, 2);
        auto merged = merge_letters(expand(kt), ell);
        ASSERT_EQ(subst_map(n, ell)(kt), canonical_search(merged))
            << "n=" << n << " ell=" << ell << " kt=" << kt;
      }
}

TEST(AffineOfRep, Ch3Rows) {
  auto const map = affine_of_rep(3);
  EXPECT_EQ(map.rows().size(), 9u);
  // Coordinates k11 k21 k22 k31 k32 k33.
  auto const& r1 = map.row(0, EntryPos::k12);
  EXPECT_EQ(r1.coeffs, (std::vector<std::int64_t>{1, 1, 1, 1, 2, 1}));
  EXPECT_EQ(r1.constant, -1);
  auto const& r3 = map.row(2, EntryPos::k12);
  EXPECT_EQ(r3.coeffs, (std::vector<std::int64_t>{1, 1, 0, 1, 1, 1}));
  EXPECT_EQ(r3.constant, 0);
  auto const& r2 = map.row(1, EntryPos::k22);
  EXPECT_EQ(r2.coeffs, (std::vector<std::int64_t>{0, 0, 0, 1, 1, 1}));
  EXPECT_EQ(r2.constant, 0);
  EXPECT_EQ(map.row(0, EntryPos::k11).coeffs, (std::vector<std::int64_t>{1, 1, 0, 1, 0, 0}));
}

TEST(AffineOfRep, RowCounts) {
  for (std::size_t n = 3; n <= 6; ++n) {
    auto const map = affine_of_rep(n);
    EXPECT_EQ(map.block_count(), build_rep(n).block_count());
    EXPECT_EQ(map.rows().size(), 3 * map.block_count());
  }
  EXPECT_THROW(affine_of_rep(2), DomainError);
}

TEST(EvalAffine, Examples) {
  auto const map = affine_of_rep(3);
  EXPECT_EQ(eval_affine(map, ExponentTuple::from_entries(3, {{2, 2, 1}, {3, 1, 1}})).block(0),
            U(1, 1, 2));
  EXPECT_EQ(eval_affine(map, ExponentTuple(3)).block(0), U(0, -1, 0));
  EXPECT_EQ(eval_affine(map, ExponentTuple(3)).block(1), U(0, -1, 0));
  EXPECT_EQ(eval_affine(map, ExponentTuple(3)).block(2), U(0, 0, 0));
  EXPECT_EQ(eval_affine(map, ExponentTuple::from_entries(3, {{1, 1, 2}})).block(0), U(2, 1, 0));
  EXPECT_THROW(eval_affine(map, ExponentTuple(4)), ShapeError);
}

TEST(EvalAffine, ExhaustiveRank3MatchesProducts) {
  // Every nonzero tuple with entries <= 3.
  auto const map = affine_of_rep(3);
  auto const rep = build_rep(3);
  std::vector<std::int64_t> v(6, 0);
  while (true) {
    std::size_t p = 0;
    while (p < v.size() && ++v[p] == 4) v[p++] = 0;
    if (p == v.size()) break;
    ExponentTuple k(3, v);
    ASSERT_EQ(eval_affine(map, k), eval_word(rep, expand(k))) << k;
  }
}

TEST(EvalAffine, MatchesProductsHigherRank) {
  auto g = tropichinese::testing::rng(33);
  for (std::size_t n = 4; n <= 5; ++n) {
    auto const map = affine_of_rep(n);
    auto const rep = build_rep(n);
    for (int t = 0; t < 100; ++t) {
      auto k = tropichinese::testing::random_nonzero_tuple(g, n, 4);
      ASSERT_EQ(eval_affine(map, k), eval_word(rep, expand(k))) << k;
    }
  }
}

TEST(EvalAffine, DistinctTuplesDistinctImages) {
  auto g = tropichinese::testing::rng(8);
  for (std::size_t n = 3; n <= 5; ++n) {
    auto const map = affine_of_rep(n);
    std::map<std::vector<std::int64_t>, ExponentTuple> seen;
    for (int t = 0; t < 500; ++t) {
      auto k = tropichinese::testing::random_tuple(g, n, 3);
      auto [it, fresh] = seen.emplace(affine_entries(map, k), k);
      if (!fresh) {
        ASSERT_EQ(it->second, k);
      }
    }
  }
}

TEST(Experimental, CombineRst) {
  auto const base = base_rep_ch3();
  EXPECT_EQ(experimental::combine_rst(base, 1, 2, 3), build_rep(4));
  EXPECT_EQ(experimental::combine_rst(build_rep(4), 1, 3, 4).block_count(), 27u);
  EXPECT_THROW(experimental::combine_rst(base, 2, 2, 3), DomainError);
}
