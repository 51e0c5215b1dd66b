#include <gtest/gtest.h>

#include <random>

#include "wlab/ops.hpp"
#include "wlab/problem.hpp"
#include "wlab/space.hpp"

using namespace wlab;

TEST(Space, IndexRoundTrip) {
  SpaceSpec sp{3, 4};
  EXPECT_EQ(sp.size(), 81u);
  for (std::uint64_t i = 0; i < sp.size(); ++i) {
    Seq s = seq_at(sp, i);
    EXPECT_TRUE(s.in_space(sp));
    EXPECT_EQ(index_of(s), i);
  }
  // sym[0] is the most significant digit.
  EXPECT_EQ(seq_at(sp, 27).sym, (std::vector<int>{1, 0, 0, 0}));
  EXPECT_EQ(seq_at(sp, 80).sym, (std::vector<int>{2, 2, 2, 2}));
}

TEST(Space, AllPointsLexOrder) {
  auto pts = all_points({2, 3});
  ASSERT_EQ(pts.size(), 8u);
  EXPECT_EQ(pts.front().sym, (std::vector<int>{0, 0, 0}));
  EXPECT_EQ(pts[1].sym, (std::vector<int>{0, 0, 1}));
  EXPECT_EQ(pts.back().sym, (std::vector<int>{1, 1, 1}));
  EXPECT_THROW(all_points({2, 40}), BudgetExceeded);
}

TEST(Space, PairInterleaves) {
  Seq p{2, {0, 1, 0}}, q{2, {1, 1, 0}};
  Seq r = pair_seq(p, q);
  EXPECT_EQ(r.sym, (std::vector<int>{0, 1, 1, 1, 0, 0}));
  auto [a, b] = unpair_seq(r);
  EXPECT_EQ(a, p);
  EXPECT_EQ(b, q);
}

TEST(Space, TupleLayout) {
  Seq a{3, {0, 1}}, b{3, {2, 0}}, c{3, {1, 2}};
  Seq r = tuple_seq({a, b, c});
  // r[i*w + j] = parts[j][i]
  EXPECT_EQ(r.sym, (std::vector<int>{0, 2, 1, 1, 0, 2}));
  auto parts = untuple_seq(r, 3);
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0], a);
  EXPECT_EQ(parts[1], b);
  EXPECT_EQ(parts[2], c);
}

TEST(Space, TagShiftPadTrunc) {
  Seq p{3, {1, 2}};
  Seq t = tag_seq(2, p);
  EXPECT_EQ(t.sym, (std::vector<int>{2, 1, 2}));
  EXPECT_EQ(shift_seq(t), p);
  EXPECT_EQ(pad_seq(p, 4).sym, (std::vector<int>{1, 2, 0, 0}));
  EXPECT_EQ(trunc_seq(pad_seq(p, 4), 2), p);
  EXPECT_EQ(pad_seq(p, 2), p);
  EXPECT_THROW(tag_seq(3, p), AlphabetError);
  EXPECT_THROW(trunc_seq(p, 3), DimensionError);
  EXPECT_EQ(show_seq(t), "2.1.2");
}

TEST(Problem, Validation) {
  SpaceSpec sp{2, 1};
  EXPECT_THROW(make_problem(sp, sp, {{Seq{2, {0, 1}}, {Seq{2, {0}}}}}), DimensionError);
  EXPECT_THROW(make_problem(sp, sp, {{Seq{2, {0}}, {}}}), EmptyValueError);
  EXPECT_THROW(make_problem(sp, sp, {{Seq{2, {0}}, {Seq{2, {0, 1}}}}}), DimensionError);
  EXPECT_THROW(make_problem({0, 1}, sp, {}), AlphabetError);
  EXPECT_THROW(make_problem({2, 0}, sp, {}), DimensionError);

  Problem bot = bottom_problem(sp, sp);
  EXPECT_TRUE(bot.is_bottom());
  EXPECT_FALSE(is_pointed(bot));
  EXPECT_TRUE(is_pointed(identity_problem(sp)));
  EXPECT_TRUE(is_pointed(Problem::make_top()));
  EXPECT_FALSE(Problem::make_top().is_bottom());
}

TEST(Problem, ChoiceFunction) {
  Problem id2 = identity_problem({2, 1});
  EXPECT_TRUE(is_choice_function([](const Seq& x) { return x; }, id2));
  EXPECT_FALSE(is_choice_function([](const Seq& x) { return Seq{2, {1 - x.sym[0]}}; }, id2));
  EXPECT_THROW(is_choice_function([](const Seq& x) { return x; }, Problem::make_top()),
               TopError);
}

TEST(Reduction, TopConventions) {
  Problem top = Problem::make_top();
  Problem id2 = identity_problem({2, 1});
  Witness w{[](const Seq& x) { return x; }, [](const Seq&, const Seq& y) { return y; }};
  EXPECT_TRUE(check_reduction(id2, top, w).holds);
  auto r = check_reduction(top, id2, w);
  EXPECT_FALSE(r.holds);
  EXPECT_FALSE(r.counterexample.has_value());
  EXPECT_TRUE(check_reduction(top, top, w).holds);
}

TEST(Reduction, CounterexampleReasons) {
  SpaceSpec sp{2, 1};
  Problem half = make_problem(sp, sp, {{Seq{2, {0}}, {Seq{2, {0}}}}});
  Problem id2 = identity_problem(sp);
  // K maps into a point outside dom(half).
  Witness w1{[](const Seq&) { return Seq{2, {1}}; },
             [](const Seq&, const Seq& y) { return y; }};
  auto r1 = check_reduction(id2, half, w1);
  ASSERT_FALSE(r1.holds);
  ASSERT_TRUE(r1.counterexample.has_value());
  EXPECT_EQ(r1.counterexample->reason, Counterexample::K_OUTSIDE_DOMAIN);
  EXPECT_EQ(r1.counterexample->y, (Seq{2, {1}}));

  Witness w2{[](const Seq&) { return Seq{2, {0}}; },
             [](const Seq&, const Seq&) { return Seq{2, {0}}; }};
  auto r2 = check_reduction(id2, half, w2);
  ASSERT_FALSE(r2.holds);
  ASSERT_TRUE(r2.counterexample.has_value());
  EXPECT_EQ(r2.counterexample->reason, Counterexample::H_ANSWER_WRONG);
  EXPECT_EQ(r2.counterexample->x, (Seq{2, {1}}));

  Witness w3{[](const Seq&) { return Seq{2, {0, 1}}; },
             [](const Seq&, const Seq& y) { return y; }};
  EXPECT_THROW(check_reduction(id2, half, w3), DimensionError);
}

namespace {

// Independent restatement of the contract: a witness works iff composing K
// with every choice function of Q and translating back lands in P's values.
bool oracle_holds(const Problem& P, const Problem& Q, const Witness& w) {
  std::vector<Seq> qdom;
  std::vector<std::vector<Seq>> qvals;
  for (const auto& [x, ys] : Q.graph) {
    qdom.push_back(x);
    qvals.emplace_back(ys.begin(), ys.end());
  }
  std::vector<size_t> pick(qdom.size(), 0);
  while (true) {
    for (const auto& [x, vals] : P.graph) {
      Seq kx = w.K(x);
      size_t at = qdom.size();
      for (size_t i = 0; i < qdom.size(); ++i)
        if (qdom[i] == kx) at = i;
      if (at == qdom.size()) return false;
      Seq y = qvals[at][pick[at]];
      if (!vals.count(w.H(x, y))) return false;
    }
    size_t pos = 0;
    for (; pos < pick.size(); ++pos) {
      if (++pick[pos] < qvals[pos].size()) break;
      pick[pos] = 0;
    }
    if (pos == pick.size()) break;
  }
  return true;
}

Problem random_problem(std::mt19937_64& rng, SpaceSpec in_sp, SpaceSpec out_sp) {
  std::map<Seq, std::set<Seq>> g;
  auto ins = all_points(in_sp);
  auto outs = all_points(out_sp);
  for (const Seq& x : ins) {
    if (rng() % 4 == 0) continue;
    std::set<Seq> vals;
    int n = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < n; ++i) vals.insert(outs[rng() % outs.size()]);
    g[x] = std::move(vals);
  }
  return make_problem(in_sp, out_sp, std::move(g));
}

}  // namespace

TEST(Reduction, MatchesChoiceFunctionOracle) {
  std::mt19937_64 rng(20260822);
  SpaceSpec a{2, 2}, b{2, 1};
  int agreements = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Problem P = random_problem(rng, a, b);
    Problem Q = random_problem(rng, b, a);
    if (P.is_bottom()) continue;
    auto qin = all_points(Q.in_sp);
    auto pout = all_points(P.out_sp);
    // Random total tables in the declared spaces.
    std::map<Seq, Seq> kt;
    for (const Seq& x : all_points(P.in_sp)) kt[x] = qin[rng() % qin.size()];
    std::map<std::pair<Seq, Seq>, Seq> ht;
    for (const Seq& x : all_points(P.in_sp))
      for (const Seq& y : all_points(Q.out_sp))
        ht[{x, y}] = pout[rng() % pout.size()];
    Witness w{[kt](const Seq& x) { return kt.at(x); },
              [ht](const Seq& x, const Seq& y) { return ht.at({x, y}); }};
    bool got = check_reduction(P, Q, w).holds;
    EXPECT_EQ(got, oracle_holds(P, Q, w)) << "trial " << trial;
    agreements += got ? 1 : 0;
  }
  // The random tables should land on both sides at least once.
  EXPECT_GT(agreements, 0);
}

TEST(Ops, OplusIdentity) {
  Problem id2 = identity_problem({2, 1});
  Problem s = oplus(id2, id2);
  EXPECT_EQ(s.in_sp, (SpaceSpec{2, 2}));
  EXPECT_EQ(s.out_sp, (SpaceSpec{2, 2}));
  ASSERT_EQ(s.graph.size(), 4u);
  const auto& vals = s.at(Seq{2, {0, 1}});
  std::set<Seq> want{Seq{2, {0, 0}}, Seq{2, {1, 1}}};
  EXPECT_EQ(vals, want);
}

TEST(Ops, OplusTopUnit) {
  Problem id2 = identity_problem({2, 1});
  Problem top = Problem::make_top();
  EXPECT_EQ(oplus(id2, top), id2);
  EXPECT_EQ(oplus(top, id2), id2);
}

TEST(Ops, CoprodTags) {
  Problem id2 = identity_problem({2, 1});
  Problem c = coprod(id2, id2);
  EXPECT_EQ(c.in_sp, (SpaceSpec{2, 2}));
  ASSERT_EQ(c.graph.size(), 4u);
  EXPECT_EQ(c.at(Seq{2, {0, 1}}), (std::set<Seq>{Seq{2, {0, 1}}}));
  EXPECT_EQ(c.at(Seq{2, {1, 0}}), (std::set<Seq>{Seq{2, {1, 0}}}));
  EXPECT_TRUE(coprod(id2, Problem::make_top()).top);
}

TEST(Ops, TimesPairs) {
  Problem id2 = identity_problem({2, 1});
  Problem t = times(id2, id2);
  EXPECT_EQ(t.in_sp, (SpaceSpec{2, 2}));
  EXPECT_EQ(t.out_sp, (SpaceSpec{2, 2}));
  EXPECT_EQ(t.at(Seq{2, {0, 1}}), (std::set<Seq>{Seq{2, {0, 1}}}));
  EXPECT_TRUE(times(Problem::make_top(), id2).top);

  Problem both = make_problem({2, 1}, {2, 1},
                              {{Seq{2, {0}}, {Seq{2, {0}}, Seq{2, {1}}}}});
  Problem tb = times(both, both);
  EXPECT_EQ(tb.at(Seq{2, {0, 0}}).size(), 4u);
}

TEST(Ops, StarLevels) {
  Problem id3 = identity_problem({3, 1});
  Problem s = star_bounded(id3, 2);
  EXPECT_EQ(s.in_sp, (SpaceSpec{3, 3}));
  EXPECT_EQ(s.out_sp, (SpaceSpec{3, 3}));
  // 9 zero-tagged points + 3 singles + 9 pairs.
  EXPECT_EQ(s.graph.size(), 21u);
  EXPECT_EQ(s.at(Seq{3, {0, 2, 1}}), (std::set<Seq>{Seq{3, {0, 0, 0}}}));
  EXPECT_EQ(s.at(Seq{3, {1, 2, 0}}), (std::set<Seq>{Seq{3, {1, 2, 0}}}));
  EXPECT_EQ(s.at(Seq{3, {2, 1, 2}}), (std::set<Seq>{Seq{3, {2, 1, 2}}}));
  EXPECT_THROW(star_bounded(identity_problem({2, 1}), 2), AlphabetError);
  EXPECT_TRUE(star_bounded(Problem::make_top(), 2).top);
}

TEST(Ops, StarZeroBudget) {
  Problem id3 = identity_problem({3, 1});
  Problem s = star_bounded(id3, 0);
  EXPECT_EQ(s.in_sp, (SpaceSpec{3, 2}));
  // Only the zero slice of the width-1 placeholder tuple space.
  EXPECT_EQ(s.graph.size(), 3u);
  for (const auto& [x, vals] : s.graph) {
    EXPECT_EQ(x.sym[0], 0);
    EXPECT_EQ(vals, (std::set<Seq>{Seq{3, {0, 0}}}));
  }
}

TEST(Ops, ParallelTuples) {
  Problem id2 = identity_problem({2, 1});
  Problem p3 = parallel_w(id2, 3);
  EXPECT_EQ(p3.in_sp, (SpaceSpec{2, 3}));
  EXPECT_EQ(p3.graph.size(), 8u);
  EXPECT_EQ(p3.at(Seq{2, {1, 0, 1}}), (std::set<Seq>{Seq{2, {1, 0, 1}}}));
  EXPECT_THROW(parallel_w(id2, 0), DimensionError);
}

TEST(Ops, StarDecodeRoundTrip) {
  Seq a{3, {1, 0}}, b{3, {2, 1}};
  Seq x = star_encode(3, 2, 3, {a, b});
  EXPECT_EQ(x.depth(), 7);
  EXPECT_EQ(x.sym[0], 2);
  StarPoint sp = star_decode(x, 2);
  EXPECT_EQ(sp.level, 2);
  ASSERT_EQ(sp.parts.size(), 2u);
  EXPECT_EQ(sp.parts[0], a);
  EXPECT_EQ(sp.parts[1], b);
}
