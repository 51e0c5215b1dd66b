#ifndef WLAB_TEST_UTIL_HPP
#define WLAB_TEST_UTIL_HPP

#include <random>

#include "wlab/problem.hpp"

namespace wlab::testutil {

// Reinterpret a sequence inside a larger ambient alphabet.
inline Seq lift(const Seq& s, int alphabet) { return Seq{alphabet, s.sym}; }

// Random finite problem. When content > 0, every symbol is drawn from
// {0, ..., content-1} even though the spaces use the ambient alphabet.
inline Problem random_problem(std::mt19937_64& rng, SpaceSpec in_sp, SpaceSpec out_sp,
                              int content = 0, int max_values = 2) {
  int cin = content > 0 ? content : in_sp.alphabet;
  int cout = content > 0 ? content : out_sp.alphabet;
  auto ins = all_points({cin, in_sp.depth});
  auto outs = all_points({cout, out_sp.depth});
  std::map<Seq, std::set<Seq>> g;
  for (const Seq& x : ins) {
    if (rng() % 4 == 0) continue;
    std::set<Seq> vals;
    int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_values));
    for (int i = 0; i < n; ++i) vals.insert(lift(outs[rng() % outs.size()], out_sp.alphabet));
    g[lift(x, in_sp.alphabet)] = std::move(vals);
  }
  return make_problem(in_sp, out_sp, std::move(g));
}

inline Problem random_nonempty(std::mt19937_64& rng, SpaceSpec in_sp, SpaceSpec out_sp,
                               int content = 0, int max_values = 2) {
  for (;;) {
    Problem p = random_problem(rng, in_sp, out_sp, content, max_values);
    if (!p.graph.empty()) return p;
  }
}

}  // namespace wlab::testutil

#endif
