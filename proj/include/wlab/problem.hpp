#ifndef WLAB_PROBLEM_HPP
#define WLAB_PROBLEM_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "wlab/space.hpp"

namespace wlab {

// A partial multivalued function between two finite spaces, stored as its
// graph, plus a symbolic absorbing Top. Bottom is the empty graph.
struct Problem {
  bool top = false;
  SpaceSpec in_sp{2, 1};
  SpaceSpec out_sp{2, 1};
  std::map<Seq, std::set<Seq>> graph;

  static Problem make_top() {
    Problem p;
    p.top = true;
    return p;
  }

  bool is_bottom() const { return !top && graph.empty(); }

  const std::set<Seq>& at(const Seq& x) const {
    auto it = graph.find(x);
    if (it == graph.end()) throw PreconditionError("point outside domain");
    return it->second;
  }

  friend bool operator==(const Problem& a, const Problem& b) {
    if (a.top || b.top) return a.top == b.top;
    return a.in_sp == b.in_sp && a.out_sp == b.out_sp && a.graph == b.graph;
  }
};

inline Problem make_problem(SpaceSpec in_sp, SpaceSpec out_sp, std::map<Seq, std::set<Seq>> graph) {
  in_sp.validate();
  out_sp.validate();
  for (const auto& [x, ys] : graph) {
    if (!x.in_space(in_sp)) throw DimensionError("domain point outside declared input space");
    if (ys.empty()) throw EmptyValueError("empty value set at " + show_seq(x));
    for (const Seq& y : ys)
      if (!y.in_space(out_sp)) throw DimensionError("value outside declared output space");
  }
  Problem p;
  p.in_sp = in_sp;
  p.out_sp = out_sp;
  p.graph = std::move(graph);
  return p;
}

inline Problem bottom_problem(SpaceSpec in_sp, SpaceSpec out_sp) {
  return make_problem(in_sp, out_sp, {});
}

// The identity problem on a space.
inline Problem identity_problem(const SpaceSpec& sp) {
  std::map<Seq, std::set<Seq>> g;
  for (const Seq& x : all_points(sp)) g[x] = {x};
  return make_problem(sp, sp, std::move(g));
}

inline bool is_pointed(const Problem& p) { return p.top || !p.graph.empty(); }

// A reduction witness: K re-codes inputs, H translates answers back while
// consulting the original input.
struct Witness {
  std::function<Seq(const Seq&)> K;
  std::function<Seq(const Seq&, const Seq&)> H;
};

struct Counterexample {
  enum Reason { K_OUTSIDE_DOMAIN, H_ANSWER_WRONG };
  Seq x;
  Seq y;  // the offending K-image for K_OUTSIDE_DOMAIN, the answer for H_ANSWER_WRONG
  Reason reason = K_OUTSIDE_DOMAIN;
};

struct ReductionReport {
  bool holds = false;
  std::optional<Counterexample> counterexample;
};

// Pointwise contract: for every x in dom(P), K(x) lands in dom(Q) and every
// answer of Q there is translated by H into an answer of P at x. Quantifying
// pointwise over answers is equivalent to quantifying over the finitely many
// choice functions of Q.
inline ReductionReport check_reduction(const Problem& P, const Problem& Q, const Witness& w) {
  if (Q.top) return {true, std::nullopt};
  if (P.top) return {false, std::nullopt};  // Top reduces only to Top
  for (const auto& [x, vals] : P.graph) {
    Seq kx = w.K(x);
    if (!kx.in_space(Q.in_sp)) throw DimensionError("K image outside target input space");
    auto it = Q.graph.find(kx);
    if (it == Q.graph.end())
      return {false, Counterexample{x, kx, Counterexample::K_OUTSIDE_DOMAIN}};
    for (const Seq& y : it->second) {
      Seq back = w.H(x, y);
      if (!back.in_space(P.out_sp)) throw DimensionError("H image outside source output space");
      if (!vals.count(back))
        return {false, Counterexample{x, y, Counterexample::H_ANSWER_WRONG}};
    }
  }
  return {true, std::nullopt};
}

inline bool is_choice_function(const std::function<Seq(const Seq&)>& f, const Problem& P) {
  if (P.top) throw TopError("choice function of Top is undefined");
  for (const auto& [x, vals] : P.graph)
    if (!vals.count(f(x))) return false;
  return true;
}

}  // namespace wlab

#endif
