#include "wlab/transducer.hpp"

#include <gtest/gtest.h>

#include <set>

#include "wlab/space.hpp"

using namespace wlab;

namespace {

// Reference count: total maps between the spaces whose output position k
// depends only on input positions 0..min(k+modulus, depth-1), found by
// filtering the full function space.
std::uint64_t dependence_count(SpaceSpec in_sp, SpaceSpec out_sp, int modulus) {
  auto ins = all_points(in_sp);
  auto outs = all_points(out_sp);
  std::uint64_t hits = 0;
  std::vector<size_t> pick(ins.size(), 0);
  for (;;) {
    bool ok = true;
    for (int k = 0; k < out_sp.depth && ok; ++k) {
      int seen = std::min(k + modulus, in_sp.depth - 1);
      for (size_t a = 0; a < ins.size() && ok; ++a)
        for (size_t b = a + 1; b < ins.size() && ok; ++b) {
          bool same_prefix = true;
          for (int t = 0; t <= seen; ++t)
            if (ins[a].sym[static_cast<size_t>(t)] != ins[b].sym[static_cast<size_t>(t)]) {
              same_prefix = false;
              break;
            }
          if (same_prefix &&
              outs[pick[a]].sym[static_cast<size_t>(k)] != outs[pick[b]].sym[static_cast<size_t>(k)])
            ok = false;
        }
    }
    if (ok) ++hits;
    size_t i = 0;
    while (i < pick.size() && ++pick[i] == outs.size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return hits;
}

TEST(TransducerCount, DepthOneBinary) {
  EXPECT_EQ(transducer_count({2, 1}, {2, 1}, 0), 4u);
}

TEST(TransducerCount, DepthTwoBinaryMatchesFilteredCount) {
  EXPECT_EQ(transducer_count({2, 2}, {2, 2}, 0), 64u);
  EXPECT_EQ(dependence_count({2, 2}, {2, 2}, 0), 64u);
  EXPECT_EQ(transducer_count({2, 2}, {2, 1}, 0), dependence_count({2, 2}, {2, 1}, 0));
  EXPECT_EQ(transducer_count({3, 2}, {2, 2}, 1), dependence_count({3, 2}, {2, 2}, 1));
  EXPECT_EQ(transducer_count({2, 3}, {2, 2}, 0), dependence_count({2, 3}, {2, 2}, 0));
}

TEST(TransducerCount, LargeModulusGivesAllTotalMaps) {
  SpaceSpec in{2, 2}, out{2, 2};
  std::uint64_t all_maps = 1;
  for (std::uint64_t i = 0; i < in.size(); ++i) all_maps *= out.size();
  EXPECT_EQ(transducer_count(in, out, in.depth - 1), all_maps);
  EXPECT_EQ(transducer_count(in, out, 7), all_maps);
}

TEST(TransducerCount, NegativeModulusRejected) {
  EXPECT_THROW(transducer_count({2, 1}, {2, 1}, -1), DimensionError);
}

TEST(TransducerEnum, DistinctLexOrderedAndDependenceHolds) {
  SpaceSpec in{2, 2}, out{2, 2};
  auto ts = enumerate_transducers(in, out, 0);
  ASSERT_EQ(ts.size(), 64u);
  std::set<std::vector<int>> images;
  std::vector<std::vector<int>> tables;
  auto ins = all_points(in);
  for (const auto& t : ts) {
    std::vector<int> image;
    for (const Seq& x : ins) {
      Seq y = t.apply(x);
      EXPECT_TRUE(y.in_space(out));
      image.insert(image.end(), y.sym.begin(), y.sym.end());
    }
    images.insert(image);
    std::vector<int> flat;
    for (const auto& row : t.table) flat.insert(flat.end(), row.begin(), row.end());
    tables.push_back(flat);
    // dependence: same prefix up to k forces same output symbol at k
    for (const Seq& a : ins)
      for (const Seq& b : ins)
        for (int k = 0; k < out.depth; ++k) {
          int seen = std::min(k + 0, in.depth - 1);
          bool same = true;
          for (int p = 0; p <= seen; ++p)
            if (a.sym[static_cast<size_t>(p)] != b.sym[static_cast<size_t>(p)]) same = false;
          if (same) EXPECT_EQ(t.apply(a).sym[static_cast<size_t>(k)], t.apply(b).sym[static_cast<size_t>(k)]);
        }
  }
  EXPECT_EQ(images.size(), 64u);
  for (size_t i = 0; i + 1 < tables.size(); ++i) EXPECT_LT(tables[i], tables[i + 1]);
}

TEST(TransducerEnum, IdentityIsAMemberAtModulusZero) {
  SpaceSpec sp{2, 2};
  auto ts = enumerate_transducers(sp, sp, 0);
  auto ins = all_points(sp);
  bool found = false;
  for (const auto& t : ts) {
    bool is_id = true;
    for (const Seq& x : ins)
      if (t.apply(x) != x) is_id = false;
    if (is_id) found = true;
  }
  EXPECT_TRUE(found);
}

TEST(TransducerEnum, BudgetGuard) {
  EXPECT_THROW(enumerate_transducers({2, 4}, {2, 4}, 3, 10), BudgetExceeded);
}

TEST(TwoTape, ApplyReadsBothPrefixes) {
  TwoTapeTransducer t;
  t.x_sp = {2, 2};
  t.y_sp = {2, 2};
  t.out_sp = {2, 2};
  t.modulus = 0;
  // out[k] = x[k] XOR y[0..k-th reachable symbol]; fill by rule out = x[pos] ^ y[pos]
  t.table.resize(2);
  for (int k = 0; k < 2; ++k) {
    int nx = 1, ny = 1;
    for (int i = 0; i < t.x_len(k); ++i) nx *= 2;
    for (int i = 0; i < t.y_len(k); ++i) ny *= 2;
    t.table[static_cast<size_t>(k)].resize(static_cast<size_t>(nx * ny));
    for (int xi = 0; xi < nx; ++xi)
      for (int yi = 0; yi < ny; ++yi) {
        int xlast = xi % 2, ylast = yi % 2;  // least digit is the deepest visible symbol
        t.table[static_cast<size_t>(k)][static_cast<size_t>(xi * ny + yi)] = xlast ^ ylast;
      }
  }
  for (const Seq& x : all_points(t.x_sp))
    for (const Seq& y : all_points(t.y_sp)) {
      Seq r = t.apply(x, y);
      for (int k = 0; k < 2; ++k)
        EXPECT_EQ(r.sym[static_cast<size_t>(k)],
                  x.sym[static_cast<size_t>(k)] ^ y.sym[static_cast<size_t>(k)]);
    }
}

}  // namespace
