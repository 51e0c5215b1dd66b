#ifndef WLAB_OPS_HPP
#define WLAB_OPS_HPP

#include <algorithm>
#include <vector>

#include "wlab/problem.hpp"

namespace wlab {

// Cap on materialized graphs and slice spaces (points), keeping the closed
// operations total in practice while refusing degenerate blowups.
inline constexpr std::uint64_t kOpPointCap = UINT64_C(1) << 22;

// Pair coding with trailing-zero padding of the shorter side.
inline Seq pair_pad(const Seq& p, const Seq& q) {
  int d = std::max(p.depth(), q.depth());
  return pair_seq(pad_seq(p, d), pad_seq(q, d));
}

inline std::pair<Seq, Seq> unpair_trunc(const Seq& x, int da, int db) {
  auto [a, b] = unpair_seq(x);
  return {trunc_seq(a, da), trunc_seq(b, db)};
}

namespace detail {
inline void require_same_alphabet(const Problem& p, const Problem& q) {
  if (p.in_sp.alphabet != q.in_sp.alphabet || p.out_sp.alphabet != q.out_sp.alphabet ||
      p.in_sp.alphabet != p.out_sp.alphabet)
    throw DimensionError("operands must share one alphabet");
}
inline void require_tags(const Problem& p) {
  if (p.in_sp.alphabet < 2) throw AlphabetError("tagging needs alphabet >= 2");
}
}  // namespace detail

// P (+) Q: both questions asked, one answer chosen (the infimum shape).
inline Problem oplus(const Problem& P, const Problem& Q) {
  if (P.top) return Q;
  if (Q.top) return P;
  detail::require_same_alphabet(P, Q);
  detail::require_tags(P);
  int a = P.in_sp.alphabet;
  int din = std::max(P.in_sp.depth, Q.in_sp.depth);
  int dout = std::max(P.out_sp.depth, Q.out_sp.depth);
  std::map<Seq, std::set<Seq>> g;
  for (const auto& [p, pv] : P.graph)
    for (const auto& [q, qv] : Q.graph) {
      std::set<Seq> vals;
      for (const Seq& y : pv) vals.insert(tag_seq(0, pad_seq(y, dout)));
      for (const Seq& y : qv) vals.insert(tag_seq(1, pad_seq(y, dout)));
      g[pair_pad(p, q)] = std::move(vals);
    }
  return make_problem({a, 2 * din}, {a, dout + 1}, std::move(g));
}

// P (|_|) Q: tagged disjoint union (the supremum shape).
inline Problem coprod(const Problem& P, const Problem& Q) {
  if (P.top || Q.top) return Problem::make_top();
  detail::require_same_alphabet(P, Q);
  detail::require_tags(P);
  int a = P.in_sp.alphabet;
  int din = std::max(P.in_sp.depth, Q.in_sp.depth);
  int dout = std::max(P.out_sp.depth, Q.out_sp.depth);
  std::map<Seq, std::set<Seq>> g;
  for (const auto& [p, pv] : P.graph) {
    std::set<Seq> vals;
    for (const Seq& y : pv) vals.insert(tag_seq(0, pad_seq(y, dout)));
    g[tag_seq(0, pad_seq(p, din))] = std::move(vals);
  }
  for (const auto& [q, qv] : Q.graph) {
    std::set<Seq> vals;
    for (const Seq& y : qv) vals.insert(tag_seq(1, pad_seq(y, dout)));
    g[tag_seq(1, pad_seq(q, din))] = std::move(vals);
  }
  return make_problem({a, din + 1}, {a, dout + 1}, std::move(g));
}

// P (x) Q: both questions, both answers.
inline Problem times(const Problem& P, const Problem& Q) {
  if (P.top || Q.top) return Problem::make_top();
  detail::require_same_alphabet(P, Q);
  int a = P.in_sp.alphabet;
  int din = std::max(P.in_sp.depth, Q.in_sp.depth);
  int dout = std::max(P.out_sp.depth, Q.out_sp.depth);
  if (static_cast<std::uint64_t>(P.graph.size()) * std::max<std::uint64_t>(Q.graph.size(), 1) > kOpPointCap)
    throw DimensionError("product graph exceeds cap");
  std::map<Seq, std::set<Seq>> g;
  for (const auto& [p, pv] : P.graph)
    for (const auto& [q, qv] : Q.graph) {
      std::set<Seq> vals;
      for (const Seq& y1 : pv)
        for (const Seq& y2 : qv) vals.insert(pair_seq(pad_seq(y1, dout), pad_seq(y2, dout)));
      g[pair_pad(p, q)] = std::move(vals);
    }
  return make_problem({a, 2 * din}, {a, 2 * dout}, std::move(g));
}

// Level coding of the bounded star: tag(k, tuple_k(parts) zero-padded to the
// full n-tuple width). The 0-tagged slice is the whole slice, mapped to the
// all-zeros answer.
inline Seq star_encode(int n, int component_depth, int alphabet, const std::vector<Seq>& parts) {
  int k = static_cast<int>(parts.size());
  int body_depth = std::max(1, n * component_depth);
  Seq body = k == 0 ? zeros({alphabet, body_depth}) : pad_seq(tuple_seq(parts), body_depth);
  return tag_seq(k, body);
}

struct StarPoint {
  int level = 0;
  std::vector<Seq> parts;
};

inline StarPoint star_decode(const Seq& x, int component_depth) {
  StarPoint sp;
  sp.level = x.sym.empty() ? 0 : x.sym[0];
  if (sp.level > 0) {
    Seq body = shift_seq(x);
    sp.parts = untuple_seq(trunc_seq(body, sp.level * component_depth), sp.level);
  }
  return sp;
}

// P*: all runs of at most n questions. Needs alphabet > n for the level tag.
inline Problem star_bounded(const Problem& P, int n) {
  if (P.top) return Problem::make_top();
  if (n < 0) throw DimensionError("star budget must be >= 0");
  int a = P.in_sp.alphabet;
  if (P.out_sp.alphabet != a) throw DimensionError("star operand must share one alphabet");
  if (a <= n) throw AlphabetError("level tags 0..n need alphabet > n");
  int din = P.in_sp.depth, dout = P.out_sp.depth;
  SpaceSpec tuple_in{a, std::max(1, n * din)}, tuple_out{a, std::max(1, n * dout)};
  if (tuple_in.size() > kOpPointCap) throw DimensionError("star slice exceeds cap");

  std::map<Seq, std::set<Seq>> g;
  // Whole 0-slice: every 0-tagged point answers all-zeros.
  for (const Seq& r : all_points(tuple_in, kOpPointCap))
    g[tag_seq(0, r)] = {zeros({a, tuple_out.depth + 1})};

  std::vector<Seq> dom_pts;
  for (const auto& [x, _] : P.graph) dom_pts.push_back(x);

  std::vector<std::vector<Seq>> level{{}};
  for (int k = 1; k <= n; ++k) {
    std::vector<std::vector<Seq>> next;
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i) {
      count *= std::max<std::uint64_t>(dom_pts.size(), 1);
      if (count > kOpPointCap) throw DimensionError("star graph exceeds cap");
    }
    // Enumerate k-tuples of domain points in canonical order.
    std::vector<size_t> idx(static_cast<size_t>(k), 0);
    if (!dom_pts.empty()) {
      while (true) {
        std::vector<Seq> parts;
        parts.reserve(idx.size());
        for (size_t i : idx) parts.push_back(dom_pts[i]);
        Seq key = star_encode(n, din, a, parts);
        std::set<Seq> vals;
        // Cartesian product of the component value sets.
        std::vector<const std::set<Seq>*> vsets;
        for (const Seq& p : parts) vsets.push_back(&P.graph.at(p));
        std::vector<std::set<Seq>::const_iterator> its;
        for (auto* vs : vsets) its.push_back(vs->begin());
        while (true) {
          std::vector<Seq> ys;
          ys.reserve(its.size());
          for (auto it : its) ys.push_back(*it);
          vals.insert(star_encode(n, dout, a, ys));
          int pos = k - 1;
          while (pos >= 0) {
            ++its[static_cast<size_t>(pos)];
            if (its[static_cast<size_t>(pos)] != vsets[static_cast<size_t>(pos)]->end()) break;
            its[static_cast<size_t>(pos)] = vsets[static_cast<size_t>(pos)]->begin();
            --pos;
          }
          if (pos < 0) break;
        }
        g[key] = std::move(vals);
        int pos = k - 1;
        while (pos >= 0) {
          ++idx[static_cast<size_t>(pos)];
          if (idx[static_cast<size_t>(pos)] < dom_pts.size()) break;
          idx[static_cast<size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
      }
    }
    (void)next;
  }
  return make_problem({a, tuple_in.depth + 1}, {a, tuple_out.depth + 1}, std::move(g));
}

// w-fold product of P with itself under the tuple_w coding.
inline Problem parallel_w(const Problem& P, int w) {
  if (P.top) return Problem::make_top();
  if (w < 1) throw DimensionError("parallelization width must be >= 1");
  int a = P.in_sp.alphabet;
  if (P.out_sp.alphabet != a) throw DimensionError("parallelization operand must share one alphabet");
  std::uint64_t count = 1;
  for (int i = 0; i < w; ++i) {
    count *= std::max<std::uint64_t>(P.graph.size(), 1);
    if (count > kOpPointCap) throw DimensionError("parallelization graph exceeds cap");
  }
  std::vector<Seq> dom_pts;
  for (const auto& [x, _] : P.graph) dom_pts.push_back(x);
  std::map<Seq, std::set<Seq>> g;
  if (!dom_pts.empty()) {
    std::vector<size_t> idx(static_cast<size_t>(w), 0);
    while (true) {
      std::vector<Seq> parts;
      for (size_t i : idx) parts.push_back(dom_pts[i]);
      std::vector<const std::set<Seq>*> vsets;
      for (const Seq& p : parts) vsets.push_back(&P.graph.at(p));
      std::set<Seq> vals;
      std::vector<std::set<Seq>::const_iterator> its;
      for (auto* vs : vsets) its.push_back(vs->begin());
      while (true) {
        std::vector<Seq> ys;
        for (auto it : its) ys.push_back(*it);
        vals.insert(tuple_seq(ys));
        int pos = w - 1;
        while (pos >= 0) {
          ++its[static_cast<size_t>(pos)];
          if (its[static_cast<size_t>(pos)] != vsets[static_cast<size_t>(pos)]->end()) break;
          its[static_cast<size_t>(pos)] = vsets[static_cast<size_t>(pos)]->begin();
          --pos;
        }
        if (pos < 0) break;
      }
      g[tuple_seq(parts)] = std::move(vals);
      int pos = w - 1;
      while (pos >= 0) {
        ++idx[static_cast<size_t>(pos)];
        if (idx[static_cast<size_t>(pos)] < dom_pts.size()) break;
        idx[static_cast<size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return make_problem({a, w * P.in_sp.depth}, {a, w * P.out_sp.depth}, std::move(g));
}

}  // namespace wlab

#endif
