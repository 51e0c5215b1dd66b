#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"
#include "wlab/constructions.hpp"

using namespace wlab;
using testutil::random_nonempty;
using testutil::random_problem;

namespace {

// Q answering all-zeros everywhere admits the drop/append witness for
// P x Q <= P regardless of P.
Problem with_zero_value(Problem q) {
  std::map<Seq, std::set<Seq>> g = q.graph;
  for (auto& [x, vals] : g) vals.insert(zeros(q.out_sp));
  return make_problem(q.in_sp, q.out_sp, std::move(g));
}

Witness drop_append_witness(const Problem& P, const Problem& Q) {
  int dip = P.in_sp.depth, dop = P.out_sp.depth, doq = Q.out_sp.depth;
  int a = Q.out_sp.alphabet;
  return Witness{
      [dip](const Seq& x) { return trunc_seq(unpair_seq(x).first, dip); },
      [doq, a, dop](const Seq&, const Seq& r) {
        return pair_pad(pad_seq(r, dop), zeros({a, doq}));
      }};
}

}  // namespace

TEST(Axiom8, ZeroBudgetBaseCase) {
  Problem P = identity_problem({3, 1});
  Problem Q = with_zero_value(identity_problem({3, 1}));
  Witness w = drop_append_witness(P, Q);
  ASSERT_TRUE(check_reduction(times(P, Q), P, w).holds);
  Witness w8 = witness_axiom8(P, Q, w, 0);
  Problem src = times(P, star_bounded(Q, 0));
  EXPECT_TRUE(check_reduction(src, P, w8).holds);
  // The base clause returns the pair of the given answer and zeros.
  Seq r = zeros(P.out_sp);
  Seq got = w8.H(src.graph.begin()->first, r);
  EXPECT_EQ(got, pair_pad(r, zeros(star_bounded(Q, 0).out_sp)));
}

TEST(Axiom8, RandomInstances) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    Problem P = random_nonempty(rng, {4, 1}, {4, 1});
    Problem Q = with_zero_value(random_nonempty(rng, {4, 1}, {4, 1}));
    Witness w = drop_append_witness(P, Q);
    ASSERT_TRUE(check_reduction(times(P, Q), P, w).holds);
    for (int n = 0; n <= 2; ++n) {
      Witness w8 = witness_axiom8(P, Q, w, n);
      EXPECT_TRUE(check_reduction(times(P, star_bounded(Q, n)), P, w8).holds)
          << "trial " << trial << " n " << n;
    }
  }
}

TEST(Axiom8, DeeperSpaces) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 5; ++trial) {
    Problem P = random_nonempty(rng, {3, 2}, {3, 2});
    Problem Q = with_zero_value(random_nonempty(rng, {3, 1}, {3, 1}));
    Witness w = drop_append_witness(P, Q);
    ASSERT_TRUE(check_reduction(times(P, Q), P, w).holds);
    Witness w8 = witness_axiom8(P, Q, w, 2);
    EXPECT_TRUE(check_reduction(times(P, star_bounded(Q, 2)), P, w8).holds) << trial;
  }
}

TEST(Axiom8, HypothesisViolationThrows) {
  Problem P = identity_problem({3, 1});
  // Shifted identity: the drop/append pair cannot witness P x Q <= P.
  std::map<Seq, std::set<Seq>> g;
  for (const Seq& x : all_points({3, 1})) g[x] = {Seq{3, {(x.sym[0] + 1) % 3}}};
  Problem Q = make_problem({3, 1}, {3, 1}, std::move(g));
  Witness w = drop_append_witness(P, Q);
  EXPECT_THROW(witness_axiom8(P, Q, w, 1), WitnessError);
}

TEST(Axiom8, BottomStarHoldsOnZeroSlice) {
  Problem P = identity_problem({3, 1});
  Problem B = bottom_problem({3, 1}, {3, 1});
  // Pre holds vacuously: times(P, bottom) has empty domain.
  Witness w = drop_append_witness(P, B);
  Witness w8 = witness_axiom8(P, B, w, 2);
  EXPECT_TRUE(check_reduction(times(P, star_bounded(B, 2)), P, w8).holds);
}

TEST(OplusStar, ForwardDirection) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    Problem P = random_problem(rng, {3, 1}, {3, 1});
    Problem Q = random_problem(rng, {3, 1}, {3, 1});
    for (int n = 1; n <= 2; ++n) {
      auto [src, tgt] = oplus_star_instance(P, Q, n, StarDirection::LE);
      Witness w = witness_oplus_star(P, Q, n, StarDirection::LE);
      EXPECT_TRUE(check_reduction(src, tgt, w).holds) << "trial " << trial << " n " << n;
    }
  }
}

TEST(OplusStar, ForwardDeeper) {
  std::mt19937_64 rng(53);
  Problem P = random_nonempty(rng, {3, 2}, {3, 1});
  Problem Q = random_nonempty(rng, {3, 1}, {3, 2});
  auto [src, tgt] = oplus_star_instance(P, Q, 2, StarDirection::LE);
  Witness w = witness_oplus_star(P, Q, 2, StarDirection::LE);
  EXPECT_TRUE(check_reduction(src, tgt, w).holds);
}

TEST(OplusStar, GridDirection) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 10; ++trial) {
    Problem P = random_problem(rng, {5, 1}, {5, 1}, 2);
    Problem Q = random_problem(rng, {5, 1}, {5, 1}, 2);
    for (int n = 1; n <= 2; ++n) {
      auto [src, tgt] = oplus_star_instance(P, Q, n, StarDirection::GE);
      Witness w = witness_oplus_star(P, Q, n, StarDirection::GE);
      EXPECT_TRUE(check_reduction(src, tgt, w).holds) << "trial " << trial << " n " << n;
    }
  }
}

TEST(OplusStar, GridDegenerateSides) {
  Problem P = identity_problem({5, 1});
  Problem B = bottom_problem({5, 1}, {5, 1});
  auto [src, tgt] = oplus_star_instance(P, B, 2, StarDirection::GE);
  Witness w = witness_oplus_star(P, B, 2, StarDirection::GE);
  EXPECT_TRUE(check_reduction(src, tgt, w).holds);
}

TEST(CoprodStar, SplitDirection) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    Problem P = random_problem(rng, {3, 1}, {3, 1});
    Problem Q = random_problem(rng, {3, 1}, {3, 1});
    for (int n = 1; n <= 2; ++n) {
      auto [src, tgt] = coprod_star_instance(P, Q, n, StarDirection::LE);
      Witness w = witness_coprod_star(P, Q, n, StarDirection::LE);
      EXPECT_TRUE(check_reduction(src, tgt, w).holds) << "trial " << trial << " n " << n;
    }
  }
}

TEST(CoprodStar, SplitDeeper) {
  std::mt19937_64 rng(67);
  Problem P = random_nonempty(rng, {3, 2}, {3, 2});
  Problem Q = random_nonempty(rng, {3, 1}, {3, 1});
  auto [src, tgt] = coprod_star_instance(P, Q, 2, StarDirection::LE);
  Witness w = witness_coprod_star(P, Q, 2, StarDirection::LE);
  EXPECT_TRUE(check_reduction(src, tgt, w).holds);
}

TEST(CoprodStar, ConcatDirection) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    Problem P = random_problem(rng, {5, 1}, {5, 1}, 2);
    Problem Q = random_problem(rng, {5, 1}, {5, 1}, 2);
    for (int n = 1; n <= 2; ++n) {
      auto [src, tgt] = coprod_star_instance(P, Q, n, StarDirection::GE);
      Witness w = witness_coprod_star(P, Q, n, StarDirection::GE);
      EXPECT_TRUE(check_reduction(src, tgt, w).holds) << "trial " << trial << " n " << n;
    }
  }
}

TEST(Distributivity, AllItemsRandomTriples) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 30; ++trial) {
    SpaceSpec deep{2, 1 + static_cast<int>(rng() % 2)};
    Problem P = random_problem(rng, deep, {2, 1});
    Problem Q = random_problem(rng, {2, 1}, deep);
    Problem R = random_problem(rng, {2, 1}, {2, 1});
    for (int item = 1; item <= 4; ++item) {
      auto [src, tgt] = distributivity_instance(item, P, Q, R);
      Witness w = witness_distributivity(item, P, Q, R);
      EXPECT_TRUE(check_reduction(src, tgt, w).holds) << "trial " << trial << " item " << item;
    }
  }
}

TEST(Distributivity, ItemThreeSymbolLevel) {
  Problem P = identity_problem({2, 1});
  Problem Q = identity_problem({2, 1});
  Problem R = make_problem({2, 1}, {2, 1}, {{Seq{2, {0}}, {Seq{2, {1}}}}});
  Witness w = witness_distributivity(3, P, Q, R);
  auto [src, tgt] = distributivity_instance(3, P, Q, R);
  ASSERT_TRUE(check_reduction(src, tgt, w).holds);
  // H on a 0-tagged product answer keeps the first component and re-tags the
  // second: y = tag(0, pair(1, 0)) maps to pair(1, tag(0, 0)).
  Seq y = tag_seq(0, pair_seq(Seq{2, {1}}, Seq{2, {0}}));
  Seq got = w.H(zeros(src.in_sp), y);
  EXPECT_EQ(got, pair_pad(Seq{2, {1}}, tag_seq(0, Seq{2, {0}})));
}

TEST(Distributivity, ItemOutOfRange) {
  Problem P = identity_problem({2, 1});
  EXPECT_THROW(witness_distributivity(0, P, P, P), DimensionError);
  EXPECT_THROW(witness_distributivity(5, P, P, P), DimensionError);
  EXPECT_THROW(distributivity_instance(7, P, P, P), DimensionError);
}
